#include "lsplus/certify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lsplus/csv.hpp"

namespace lsplus {

using nlohmann::json;

std::optional<Tag> Tag::from_file_code(int code, int n) {
    if (code >= 1 && code <= n) return Tag{false, code};
    if (code >= n + 1 && code <= 2 * n) return Tag{true, code - n};
    return std::nullopt;
}

std::string CertificatePackage::m2_id(const Tag& p, const Tag& q) const {
    return "M2_" + std::to_string(p.file_code(n())) + "_" + std::to_string(q.file_code(n()));
}

std::string to_string(FailCode c) {
    switch (c) {
        case FailCode::malformed: return "MALFORMED";
        case FailCode::missing_matrix: return "MISSING_MATRIX";
        case FailCode::not_symmetric: return "NOT_SYMMETRIC";
        case FailCode::diag_mismatch: return "DIAG_MISMATCH";
        case FailCode::cone_membership: return "CONE_MEMBERSHIP";
        case FailCode::dominance: return "DOMINANCE";
        case FailCode::uvw_not_diag_dominant: return "UVW_V_NOT_DIAG_DOMINANT";
        case FailCode::uvw_product: return "UVW_PRODUCT";
        case FailCode::ineq_not_valid: return "INEQ_NOT_VALID";
        case FailCode::no_violation: return "NO_VIOLATION";
    }
    return "UNKNOWN";
}

void VerificationReport::fail(FailCode code, std::string where, std::string detail) {
    failures.push_back({code, std::move(where), std::move(detail)});
}

void VerificationReport::finalize() {
    std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
        if (a.code != b.code) return a.code < b.code;
        if (a.where != b.where) return a.where < b.where;
        return a.detail < b.detail;
    });
    accepted = failures.empty();
}

UvwOutcome verify_uvw(const IntMatrix& y, const UVWCertificate& cert) {
    UvwOutcome out;
    if (!y.is_square() || !y.is_symmetric()) {
        out.code = FailCode::not_symmetric;
        out.detail = "Y must be square and symmetric";
        return out;
    }
    if (cert.u.cols() != cert.v.rows() || !cert.v.is_square() || cert.w.rows() != cert.v.rows() ||
        cert.w.cols() != y.rows()) {
        out.code = FailCode::malformed;
        out.detail = "U/V/W dimensions are inconsistent with Y";
        return out;
    }
    if (!is_diag_dominant(cert.v)) {
        out.code = FailCode::uvw_not_diag_dominant;
        out.detail = "V is not symmetric diagonally dominant";
        return out;
    }

    IntMatrix inner = mat_mul(cert.u.transpose(), cert.u);
    for (std::size_t i = 0; i < inner.rows(); ++i)
        for (std::size_t j = 0; j < inner.cols(); ++j) inner.at(i, j) += cert.v.at(i, j);
    const IntMatrix product = mat_mul(mat_mul(cert.w.transpose(), inner), cert.w);

    if (y.is_zero()) {
        if (product.is_zero()) {
            out.accepted = true;
            out.k = 1;
        } else {
            out.code = FailCode::uvw_product;
            out.detail = "Y is zero but the certified product is not";
        }
        return out;
    }

    // k from the first nonzero coordinate of Y, then confirmed everywhere
    Int k = 0;
    for (std::size_t i = 0; i < y.rows() && k == 0; ++i)
        for (std::size_t j = 0; j < y.cols() && k == 0; ++j)
            if (y.at(i, j) != 0) {
                const Int& p = product.at(i, j);
                if (p % y.at(i, j) != 0) {
                    out.code = FailCode::uvw_product;
                    out.detail = "product is not an integer multiple of Y";
                    return out;
                }
                k = p / y.at(i, j);
            }
    if (k <= 0) {
        out.code = FailCode::uvw_product;
        out.detail = "scale factor k is not a positive integer";
        return out;
    }
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            if (product.at(i, j) != k * y.at(i, j)) {
                out.code = FailCode::uvw_product;
                out.detail = "product differs from k*Y at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                return out;
            }
    out.accepted = true;
    out.k = k;
    return out;
}

namespace {

std::vector<Int> column_for(const IntMatrix& m, const Tag& t) {
    auto col = m.column(static_cast<std::size_t>(t.i));
    if (!t.f) return col;
    auto c0 = m.column(0);
    for (std::size_t r = 0; r < col.size(); ++r) c0[r] -= col[r];
    return c0;
}

bool column_is_zero(const std::vector<Int>& c) {
    return std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
}

// symmetry + Me0 = diag(M) + shape
void check_moment_shape(VerificationReport& rep, const std::string& id, const IntMatrix& m,
                        std::size_t dim) {
    if (m.rows() != dim || m.cols() != dim) {
        rep.fail(FailCode::malformed, id, "expected a " + std::to_string(dim) + "x" +
                                              std::to_string(dim) + " matrix");
        return;
    }
    if (!m.is_symmetric()) rep.fail(FailCode::not_symmetric, id);
    for (std::size_t i = 0; i < dim; ++i)
        if (m.at(i, 0) != m.at(i, i)) {
            rep.fail(FailCode::diag_mismatch, id, "column 0 differs from the diagonal");
            break;
        }
}

void check_uvw_for(VerificationReport& rep, const CertificatePackage& pkg, const std::string& id,
                   const IntMatrix& m) {
    if (m.is_zero()) return;  // zero matrices are trivially PSD, no triple needed
    auto it = pkg.uvw.find(id);
    if (it == pkg.uvw.end()) {
        rep.fail(FailCode::missing_matrix, id, "no UVW certificate");
        return;
    }
    const auto outcome = verify_uvw(m, it->second);
    if (outcome.accepted)
        rep.k_values[id] = outcome.k;
    else
        rep.fail(outcome.code, id, outcome.detail);
}

std::vector<Tag> all_tags(int n) {
    std::vector<Tag> tags;
    for (int i = 1; i <= n; ++i) tags.push_back(Tag{false, i});
    for (int i = 1; i <= n; ++i) tags.push_back(Tag{true, i});
    return tags;
}

}  // namespace

VerificationReport verify_package(const Graph& g, const CertificatePackage& pkg) {
    VerificationReport rep;
    const int n = g.n();
    const std::size_t dim = static_cast<std::size_t>(n) + 1;

    if (pkg.level < 1 || pkg.level > 3) {
        rep.fail(FailCode::malformed, "package", "level must be 1, 2 or 3");
        rep.finalize();
        return rep;
    }
    if (pkg.y.rows() != dim) {
        rep.fail(FailCode::malformed, "Y", "Y dimension does not match the graph");
        rep.finalize();
        return rep;
    }
    if (pkg.level < 3 && !pkg.m2.empty())
        rep.fail(FailCode::malformed, "package", "M2 matrices are only part of level-3 packages");
    if (pkg.level < 2 && !pkg.m1.empty())
        rep.fail(FailCode::malformed, "package", "M1 matrices are only part of level-2/3 packages");

    const auto tags = all_tags(n);

    // required M1 tags at levels 2 and 3
    if (pkg.level >= 2)
        for (const Tag& t : tags)
            if (!pkg.m1.count(t)) rep.fail(FailCode::missing_matrix, pkg.m1_id(t));
    for (const auto& [t, m] : pkg.m1)
        if (t.i < 1 || t.i > n) rep.fail(FailCode::malformed, pkg.m1_id(t), "tag out of range");
    for (const auto& [pq, m] : pkg.m2)
        if (pq.first.i < 1 || pq.first.i > n || pq.second.i < 1 || pq.second.i > n)
            rep.fail(FailCode::malformed, pkg.m2_id(pq.first, pq.second), "tag out of range");
    if (!rep.failures.empty()) {
        rep.finalize();
        return rep;
    }

    // (a) shape, symmetry, diagonal consistency for every stored matrix
    check_moment_shape(rep, "Y", pkg.y, dim);
    for (const auto& [t, m] : pkg.m1) check_moment_shape(rep, pkg.m1_id(t), m, dim);
    for (const auto& [pq, m] : pkg.m2)
        check_moment_shape(rep, pkg.m2_id(pq.first, pq.second), m, dim);
    if (!rep.failures.empty()) {
        rep.finalize();
        return rep;
    }

    // (b) cone(FRAC) membership for the innermost family's columns
    auto check_cone = [&](const std::string& id, const IntMatrix& m) {
        for (const Tag& t : tags)
            if (!cone_frac_member(g, column_for(m, t)))
                rep.fail(FailCode::cone_membership, id, t.name());
    };
    if (pkg.level == 1) {
        check_cone("Y", pkg.y);
    } else if (pkg.level == 2) {
        for (const auto& [t, m] : pkg.m1) check_cone(pkg.m1_id(t), m);
    } else {
        for (const auto& [pq, m] : pkg.m2) check_cone(pkg.m2_id(pq.first, pq.second), m);
    }

    // (c) domination between consecutive layers
    if (pkg.level >= 2) {
        for (const Tag& t : tags) {
            const auto& m = pkg.m1.at(t);
            if (!dominates(m.column(0), column_for(pkg.y, t)))
                rep.fail(FailCode::dominance, pkg.m1_id(t), "e0 column does not dominate Y" + t.name());
        }
    }
    if (pkg.level == 3) {
        const IntMatrix zero = IntMatrix::zero(dim, dim);
        for (const Tag& p : tags) {
            const auto& mp = pkg.m1.at(p);
            for (const Tag& q : tags) {
                auto it = pkg.m2.find({p, q});
                const IntMatrix& outer = it == pkg.m2.end() ? zero : it->second;
                if (!dominates(outer.column(0), column_for(mp, q)))
                    rep.fail(FailCode::dominance, pkg.m2_id(p, q),
                             "e0 column does not dominate " + pkg.m1_id(p) + " " + q.name());
            }
        }
    }

    // (d) a UVW certificate for every required nonzero matrix
    check_uvw_for(rep, pkg, "Y", pkg.y);
    for (const auto& [t, m] : pkg.m1) check_uvw_for(rep, pkg, pkg.m1_id(t), m);
    for (const auto& [pq, m] : pkg.m2) check_uvw_for(rep, pkg, pkg.m2_id(pq.first, pq.second), m);

    // witness point
    if (pkg.y.at(0, 0) > 0) {
        rep.witness = RatVector(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            rep.witness[static_cast<std::size_t>(i - 1)] =
                make_rat(pkg.y.at(static_cast<std::size_t>(i), 0), pkg.y.at(0, 0));
    }

    rep.finalize();
    return rep;
}

VerificationReport verify_rank_certificate(const Graph& g, const Inequality& ineq,
                                           const CertificatePackage& pkg) {
    VerificationReport rep = verify_package(g, pkg);

    if (ineq.a.size() != static_cast<std::size_t>(g.n())) {
        rep.fail(FailCode::malformed, "inequality", "dimension mismatch");
        rep.finalize();
        return rep;
    }
    if (!is_valid_for_stab(g, ineq)) rep.fail(FailCode::ineq_not_valid, "inequality");

    const std::size_t dim = static_cast<std::size_t>(g.n()) + 1;
    if (pkg.y.rows() == dim && pkg.y.cols() == dim) {
        // (-beta, a^T) Ye0 > 0
        Int lhs = -ineq.beta * pkg.y.at(0, 0);
        for (std::size_t i = 1; i < dim; ++i) lhs += ineq.a[i - 1] * pkg.y.at(i, 0);
        if (lhs <= 0) rep.fail(FailCode::no_violation, "inequality", "(-beta, a)^T Ye0 <= 0");
    }

    if (pkg.y.at(0, 0) > 0 && rep.witness.dim() == static_cast<std::size_t>(g.n())) {
        Rat value = 0;
        for (std::size_t i = 0; i < rep.witness.dim(); ++i)
            value += Rat(ineq.a[i]) * rep.witness[i];
        rep.violation_value = value;
        const Int opt = max_stable_value(g, ineq.a);
        if (opt > 0) rep.ratio_bound = value / Rat(opt);
    }

    rep.finalize();
    return rep;
}

// ---------------------------------------------------------------------------
// bundle IO

namespace {

void load_uvw_files(const std::filesystem::path& dir, const std::string& id,
                    CertificatePackage& pkg, std::set<std::string>& expected) {
    UVWCertificate cert;
    const std::string stem = "UVW_" + id + "_";
    cert.u = read_int_csv(dir / (stem + "U.csv"));
    cert.v = read_int_csv(dir / (stem + "V.csv"));
    cert.w = read_int_csv(dir / (stem + "W.csv"));
    expected.insert(stem + "U.csv");
    expected.insert(stem + "V.csv");
    expected.insert(stem + "W.csv");
    pkg.uvw[id] = std::move(cert);
}

json read_manifest(const std::filesystem::path& dir) {
    std::ifstream in(dir / "manifest.json");
    if (!in) throw BundleError("bundle has no manifest.json: " + dir.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw BundleError("malformed manifest: " + std::string(e.what()));
    }
    return j;
}

}  // namespace

Bundle load_package(const std::filesystem::path& dir) {
    const json manifest = read_manifest(dir);
    Bundle b;
    try {
        b.package.level = manifest.at("level").get<int>();
        const std::string g6 = manifest.at("graph6").get<std::string>();
        b.graph = graph6_decode(g6);
        if (manifest.contains("inequality")) {
            auto as_int = [](const json& v) {
                return v.is_string() ? Int(v.get<std::string>()) : Int(static_cast<long>(v.get<long long>()));
            };
            Inequality q;
            for (const auto& c : manifest.at("inequality").at("a")) q.a.push_back(as_int(c));
            q.beta = as_int(manifest.at("inequality").at("beta"));
            b.inequality = std::move(q);
        }
    } catch (const json::exception& e) {
        throw BundleError("malformed manifest: " + std::string(e.what()));
    }

    const int n = b.graph.n();
    std::set<std::string> expected{"manifest.json"};
    CertificatePackage& pkg = b.package;

    pkg.y = read_int_csv(dir / "Y.csv");
    expected.insert("Y.csv");

    if (!manifest.contains("matrices")) throw BundleError("manifest lacks a matrix inventory");
    for (const auto& entry : manifest.at("matrices")) {
        const std::string name = entry.get<std::string>();
        if (name == "Y.csv") continue;
        expected.insert(name);
        std::istringstream ss(name);
        std::string kind;
        std::getline(ss, kind, '_');
        if (kind == "M1") {
            // M1_e_<i>.csv / M1_f_<i>.csv
            std::string ef, idx;
            std::getline(ss, ef, '_');
            std::getline(ss, idx, '.');
            if ((ef != "e" && ef != "f") || idx.empty())
                throw BundleError("bad M1 file name: " + name);
            Tag t{ef == "f", std::stoi(idx)};
            if (t.i < 1 || t.i > n) throw BundleError("tag out of range in " + name);
            if (pkg.m1.count(t)) throw BundleError("duplicate tag in " + name);
            pkg.m1[t] = read_int_csv(dir / name);
        } else if (kind == "M2") {
            std::string p, q;
            std::getline(ss, p, '_');
            std::getline(ss, q, '.');
            const auto tp = Tag::from_file_code(std::stoi(p), n);
            const auto tq = Tag::from_file_code(std::stoi(q), n);
            if (!tp || !tq) throw BundleError("tag out of range in " + name);
            if (pkg.m2.count({*tp, *tq})) throw BundleError("duplicate tag in " + name);
            pkg.m2[{*tp, *tq}] = read_int_csv(dir / name);
        } else {
            throw BundleError("unknown matrix file in manifest: " + name);
        }
    }

    if (!manifest.contains("uvw")) throw BundleError("manifest lacks a UVW inventory");
    for (const auto& entry : manifest.at("uvw"))
        load_uvw_files(dir, entry.get<std::string>(), pkg, expected);

    for (const auto& f : std::filesystem::directory_iterator(dir)) {
        const std::string name = f.path().filename().string();
        if (!expected.count(name)) throw BundleError("unexpected file in bundle: " + name);
    }

    // dimension consistency
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    if (pkg.y.rows() != dim || pkg.y.cols() != dim)
        throw BundleError("Y.csv dimensions do not match the graph");
    for (const auto& [t, m] : pkg.m1)
        if (m.rows() != dim || m.cols() != dim)
            throw BundleError("M1 matrix dimensions do not match the graph");
    for (const auto& [pq, m] : pkg.m2)
        if (m.rows() != dim || m.cols() != dim)
            throw BundleError("M2 matrix dimensions do not match the graph");
    return b;
}

void save_package(const std::filesystem::path& dir, const Graph& g, const CertificatePackage& pkg,
                  const std::optional<Inequality>& ineq) {
    std::filesystem::create_directories(dir);
    json manifest;
    manifest["level"] = pkg.level;
    manifest["n"] = g.n();
    manifest["graph6"] = graph6_encode(g);
    if (ineq) {
        json q;
        for (const Int& c : ineq->a) q["a"].push_back(c.get_str());
        q["beta"] = ineq->beta.get_str();
        manifest["inequality"] = std::move(q);
    }

    std::vector<std::string> files{"Y.csv"};
    write_int_csv(dir / "Y.csv", pkg.y);
    for (const auto& [t, m] : pkg.m1) {
        const std::string name = pkg.m1_id(t) + ".csv";
        write_int_csv(dir / name, m);
        files.push_back(name);
    }
    for (const auto& [pq, m] : pkg.m2) {
        const std::string name = pkg.m2_id(pq.first, pq.second) + ".csv";
        write_int_csv(dir / name, m);
        files.push_back(name);
    }
    manifest["matrices"] = files;

    std::vector<std::string> ids;
    for (const auto& [id, cert] : pkg.uvw) {
        write_int_csv(dir / ("UVW_" + id + "_U.csv"), cert.u);
        write_int_csv(dir / ("UVW_" + id + "_V.csv"), cert.v);
        write_int_csv(dir / ("UVW_" + id + "_W.csv"), cert.w);
        ids.push_back(id);
    }
    manifest["uvw"] = ids;

    std::ofstream out(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
}

}  // namespace lsplus
