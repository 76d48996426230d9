#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsplus/graph.hpp"
#include "lsplus/numerics.hpp"
#include "lsplus/polytope.hpp"

namespace lsplus {

// Integer witness of positive semidefiniteness:
// W^T (U^T U + V) W = k Y with V symmetric diagonally dominant, k > 0.
struct UVWCertificate {
    IntMatrix u, v, w;
};

// e_i / f_i column tag, 1-based vertex index. In file names f_i is written
// with the numeric code n+i so names stay plain ASCII.
struct Tag {
    bool f = false;
    int i = 1;

    auto operator<=>(const Tag&) const = default;
    std::string name() const { return (f ? "f_" : "e_") + std::to_string(i); }
    int file_code(int n) const { return f ? n + i : i; }
    static std::optional<Tag> from_file_code(int code, int n);
};

struct CertificatePackage {
    int level = 1;  // 1, 2 or 3
    IntMatrix y;    // (n+1) x (n+1)
    std::map<Tag, IntMatrix> m1;                       // levels >= 2
    std::map<std::pair<Tag, Tag>, IntMatrix> m2;       // level 3; absent entry = zero matrix
    std::map<std::string, UVWCertificate> uvw;         // keyed by matrix id ("Y", "M1_e_3", "M2_3_12")

    int n() const { return static_cast<int>(y.rows()) - 1; }
    std::string m1_id(const Tag& t) const { return "M1_" + t.name(); }
    std::string m2_id(const Tag& p, const Tag& q) const;
};

enum class FailCode {
    malformed,
    missing_matrix,
    not_symmetric,
    diag_mismatch,
    cone_membership,
    dominance,
    uvw_not_diag_dominant,
    uvw_product,
    ineq_not_valid,
    no_violation,
};

std::string to_string(FailCode c);

struct Failure {
    FailCode code;
    std::string where;   // matrix id / tag the condition failed on
    std::string detail;
};

struct VerificationReport {
    bool accepted = false;
    std::vector<Failure> failures;          // sorted by (code, where, detail)
    std::map<std::string, Int> k_values;    // per verified UVW triple
    RatVector witness;                      // (1/Y00) * tail of Ye0, when Y00 > 0
    std::optional<Rat> violation_value;     // a^T witness
    std::optional<Rat> ratio_bound;         // a^T witness / max a^T x over STAB

    void fail(FailCode code, std::string where, std::string detail = {});
    void finalize();                        // sorts failures, sets accepted
};

struct UvwOutcome {
    bool accepted = false;
    Int k;                 // valid when accepted
    FailCode code{};       // valid when rejected
    std::string detail;
};

UvwOutcome verify_uvw(const IntMatrix& y, const UVWCertificate& cert);

VerificationReport verify_package(const Graph& g, const CertificatePackage& pkg);

VerificationReport verify_rank_certificate(const Graph& g, const Inequality& ineq,
                                           const CertificatePackage& pkg);

// ---------------------------------------------------------------------------
// bundle IO: a directory with manifest.json, Y.csv, M1_<tag>.csv,
// M2_<code>_<code>.csv and UVW_<id>_{U,V,W}.csv, all integer CSV.

class BundleError : public std::runtime_error {
public:
    explicit BundleError(const std::string& what) : std::runtime_error(what) {}
};

struct Bundle {
    CertificatePackage package;
    Graph graph;
    std::optional<Inequality> inequality;
};

Bundle load_package(const std::filesystem::path& dir);
void save_package(const std::filesystem::path& dir, const Graph& g, const CertificatePackage& pkg,
                  const std::optional<Inequality>& ineq);

}  // namespace lsplus
