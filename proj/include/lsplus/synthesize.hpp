#pragma once

#include <optional>
#include <string>

#include "lsplus/certify.hpp"
#include "lsplus/numerics.hpp"

namespace lsplus {

struct SynthesisOptions {
    // Largest denominator allowed in rational approximations (rationalize and
    // the truncated Cholesky factor).
    Int denominator_bound = Int(1) << 32;
    // Fraction of the eigenvalue budget left to absorb truncation residue.
    Rat slack = Rat(1, 4);
    // Cap on the bit length of the integer scale k cleared into the output.
    unsigned max_scale_bits = 1u << 16;
};

struct SynthFailure {
    enum class Kind { not_psd, bound_too_small, scale_too_large, structure };
    Kind kind;
    std::string detail;
};

std::string to_string(SynthFailure::Kind k);

struct UvwSynthResult {
    std::optional<UVWCertificate> cert;
    std::optional<SynthFailure> failure;
    bool ok() const { return cert.has_value(); }
};

struct PackageSynthResult {
    std::optional<CertificatePackage> package;
    std::optional<SynthFailure> failure;
    bool ok() const { return package.has_value(); }
};

// Entrywise best rational approximation with denominator <= bound; square
// inputs are symmetrized by averaging with the transpose first.
RatMatrix rationalize(const RatMatrix& m, const SynthesisOptions& opts);
Rat best_rational_approx(const Rat& x, const Int& max_den);

// Constructive converse of the UVW check: factor an integer PSD matrix into
// an integer certificate. Fails (never fabricates) when Y is not PSD or the
// bounds do not leave room for the truncation.
UvwSynthResult uvw_synthesize(const IntMatrix& y, const SynthesisOptions& opts);

// Assembles a structurally checked package from caller-supplied integer
// layers, synthesizing every required UVW triple. The failure names the
// first violated condition so the caller can repair upstream.
PackageSynthResult assemble_package(const Graph& g, int level, IntMatrix y,
                                    std::map<Tag, IntMatrix> m1,
                                    std::map<std::pair<Tag, Tag>, IntMatrix> m2,
                                    const SynthesisOptions& opts);

}  // namespace lsplus
