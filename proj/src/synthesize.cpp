#include "lsplus/synthesize.hpp"

#include <algorithm>
#include <numeric>

namespace lsplus {

std::string to_string(SynthFailure::Kind k) {
    switch (k) {
        case SynthFailure::Kind::not_psd: return "NOT_PSD";
        case SynthFailure::Kind::bound_too_small: return "BOUND_TOO_SMALL";
        case SynthFailure::Kind::scale_too_large: return "SCALE_TOO_LARGE";
        case SynthFailure::Kind::structure: return "STRUCTURE";
    }
    return "UNKNOWN";
}

Rat best_rational_approx(const Rat& x, const Int& max_den) {
    if (max_den < 1) throw std::invalid_argument("denominator bound must be positive");
    if (x.get_den() <= max_den) return x;

    // continued-fraction convergents h/k; the best approximation under the
    // bound is the last convergent that fits or a semiconvergent of the next
    Int h0 = 0, k0 = 1, h1 = 1, k1 = 0;
    Int num = x.get_num(), den = x.get_den();
    while (den != 0) {
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        const Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) {
            const Int t = (max_den - k0) / k1;
            const Rat semi = make_rat(h0 + t * h1, k0 + t * k1);
            const Rat conv = make_rat(h1, k1);
            const Rat ds = abs(x - semi), dc = abs(x - conv);
            if (ds != dc) return ds < dc ? semi : conv;
            return semi.get_den() < conv.get_den() ? semi : conv;
        }
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
        const Int r = num - a * den;
        num = den;
        den = r;
    }
    return make_rat(h1, k1);
}

RatMatrix rationalize(const RatMatrix& m, const SynthesisOptions& opts) {
    RatMatrix sym = m;
    if (m.is_square()) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                sym.at(i, j) = (m.at(i, j) + m.at(j, i)) / 2;
    }
    RatMatrix out(sym.rows(), sym.cols());
    for (std::size_t i = 0; i < sym.rows(); ++i)
        for (std::size_t j = 0; j < sym.cols(); ++j)
            out.at(i, j) = best_rational_approx(sym.at(i, j), opts.denominator_bound);
    return out;
}

namespace {

// Exact positive-definiteness test via elimination pivots.
bool is_positive_definite(RatMatrix m) {
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (m.at(k, k) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            const Rat f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return true;
}

// Solve A X = B for X with A square nonsingular, exact.
RatMatrix solve(RatMatrix a, RatMatrix b) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) throw std::invalid_argument("singular system");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(k, j));
            }
        if (piv != k)
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(k, j));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            const Rat f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) -= f * b.at(k, j);
        }
    }
    RatMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = b.at(i, j) / a.at(i, i);
    return x;
}

// LDL^T of a positive definite rational matrix: unit lower L, positive D.
void ldlt(const RatMatrix& m, RatMatrix& l, std::vector<Rat>& d) {
    const std::size_t n = m.rows();
    l = RatMatrix::identity(n);
    d.assign(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rat dj = m.at(j, j);
        for (std::size_t k = 0; k < j; ++k) dj -= l.at(j, k) * l.at(j, k) * d[k];
        d[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat v = m.at(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= l.at(i, k) * l.at(j, k) * d[k];
            l.at(i, j) = v / dj;
        }
    }
}

// floor(sqrt(x * 4^bits)) / 2^bits, a lower rational approximation of sqrt(x).
Rat approx_sqrt(const Rat& x, unsigned bits) {
    Int scale = Int(1) << (2 * bits);
    Int scaled = (x.get_num() * scale) / x.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return make_rat(root, Int(1) << bits);
}

Rat round_to_den(const Rat& x, const Int& den_pow2) {
    // nearest multiple of 1/den_pow2
    Int num = x.get_num() * den_pow2 * 2 + x.get_den();
    Int q = num / (x.get_den() * 2);
    if (num < 0 && num % (x.get_den() * 2) != 0) q -= 1;
    return make_rat(q, den_pow2);
}

bool rat_diag_dominant(const RatMatrix& v) {
    if (!v.is_symmetric()) return false;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        Rat off = 0;
        for (std::size_t j = 0; j < v.cols(); ++j)
            if (j != i) off += abs(v.at(i, j));
        if (off > v.at(i, i)) return false;
    }
    return true;
}

Int lcm_of_denominators(const RatMatrix& m) {
    Int l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
    return l;
}

}  // namespace

UvwSynthResult uvw_synthesize(const IntMatrix& y, const SynthesisOptions& opts) {
    UvwSynthResult res;
    auto fail = [&](SynthFailure::Kind k, std::string detail) {
        res.failure = SynthFailure{k, std::move(detail)};
        return res;
    };

    if (!y.is_square() || !y.is_symmetric())
        throw std::invalid_argument("uvw_synthesize expects a symmetric matrix");
    const std::size_t n = y.rows();

    if (y.is_zero()) {
        res.cert = UVWCertificate{IntMatrix::zero(n, n), IntMatrix::zero(n, n), IntMatrix::identity(n)};
        return res;
    }

    // greedy diagonal pivoting: rank detection plus PSD screening
    RatMatrix s = RatMatrix::from_int(y);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> pivots;
    for (;;) {
        bool all_zero = true;
        std::size_t best = n;
        for (std::size_t i = 0; i < n && all_zero; ++i) {
            if (used[i]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j] && s.at(i, j) != 0) { all_zero = false; break; }
        }
        if (all_zero) break;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || s.at(i, i) <= 0) continue;
            if (best == n || s.at(i, i) > s.at(best, best)) best = i;
        }
        if (best == n)
            return fail(SynthFailure::Kind::not_psd,
                        "residual has no positive diagonal entry");
        used[best] = true;
        pivots.push_back(best);
        const Rat piv = s.at(best, best);
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || s.at(i, best) == 0) continue;
            const Rat f = s.at(i, best) / piv;
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j]) s.at(i, j) -= f * s.at(best, j);
        }
        // clear the pivot row/column in the residual view
        for (std::size_t j = 0; j < n; ++j) {
            s.at(best, j) = 0;
            s.at(j, best) = 0;
        }
    }
    std::sort(pivots.begin(), pivots.end());
    const std::size_t d = pivots.size();

    // Y' = Y[I,I] and W1 with Y = W1^T Y' W1
    RatMatrix yp(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) yp.at(i, j) = Rat(y.at(pivots[i], pivots[j]));
    RatMatrix rhs(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs.at(i, j) = Rat(y.at(pivots[i], j));
    RatMatrix w1 = solve(yp, rhs);

    {
        const RatMatrix probe = mat_mul(mat_mul(w1.transpose(), yp), w1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (probe.at(i, j) != Rat(y.at(i, j)))
                    return fail(SynthFailure::Kind::not_psd,
                                "rank factorization does not reproduce Y");
    }
    if (!is_positive_definite(yp))
        return fail(SynthFailure::Kind::not_psd, "pivot submatrix is not positive definite");

    // rational lower bound on the least eigenvalue of Y' by bisection on
    // positive definiteness of Y' - tI
    Rat t_bad = Rat(y.at(pivots[0], pivots[0]));
    for (std::size_t i = 1; i < d; ++i) t_bad = std::min(t_bad, Rat(y.at(pivots[i], pivots[i])));
    Rat t_good = 0;
    auto pd_at = [&](const Rat& t) {
        RatMatrix m = yp;
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) -= t;
        return is_positive_definite(m);
    };
    while (t_good == 0 || t_bad - t_good > t_good / 4) {
        const Rat mid = (t_good + t_bad) / 2;
        (pd_at(mid) ? t_good : t_bad) = mid;
    }
    const Rat lambda_hat = t_good;

    // LDL^T of Y' - (lambda/2) I, then truncated square roots
    RatMatrix shifted = yp;
    for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= lambda_hat / 2;
    RatMatrix l;
    std::vector<Rat> diag;
    ldlt(shifted, l, diag);

    const RatMatrix lt = l.transpose();
    RatMatrix u1;
    bool dominant = false;
    RatMatrix v1;
    for (unsigned bits = 8;; bits *= 2) {
        if ((Int(1) << bits) > opts.denominator_bound)
            return fail(SynthFailure::Kind::bound_too_small,
                        "denominator bound too small for a diagonally dominant residual; "
                        "increase it");
        u1 = RatMatrix(d, d);
        const Int den = Int(1) << bits;
        for (std::size_t i = 0; i < d; ++i) {
            const Rat ri = approx_sqrt(diag[i], bits);
            for (std::size_t j = 0; j < d; ++j)
                u1.at(i, j) = round_to_den(ri * lt.at(i, j), den);
        }
        v1 = yp;
        const RatMatrix utu = mat_mul(u1.transpose(), u1);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) v1.at(i, j) -= utu.at(i, j);
        if (rat_diag_dominant(v1)) { dominant = true; break; }
    }
    if (!dominant) return fail(SynthFailure::Kind::bound_too_small, "unreachable");

    // clear denominators
    const Int cu = lcm_of_denominators(u1);
    const Int cw = lcm_of_denominators(w1);
    const Int k = cu * cu * cw * cw;
    if (mpz_sizeinbase(k.get_mpz_t(), 2) > opts.max_scale_bits)
        return fail(SynthFailure::Kind::scale_too_large, "integer scale exceeds the exponent cap");

    UVWCertificate cert;
    cert.u = IntMatrix(d, d);
    cert.v = IntMatrix(d, d);
    cert.w = IntMatrix(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rat su = u1.at(i, j) * cu;
            Rat sv = v1.at(i, j) * cu * cu;
            cert.u.at(i, j) = su.get_num();  // denominators divide cu
            cert.v.at(i, j) = sv.get_num();
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) cert.w.at(i, j) = Rat(w1.at(i, j) * cw).get_num();

    const auto outcome = verify_uvw(y, cert);
    if (!outcome.accepted)
        return fail(SynthFailure::Kind::structure,
                    "internal: synthesized certificate failed verification (" + outcome.detail + ")");
    res.cert = std::move(cert);
    return res;
}

PackageSynthResult assemble_package(const Graph& g, int level, IntMatrix y,
                                    std::map<Tag, IntMatrix> m1,
                                    std::map<std::pair<Tag, Tag>, IntMatrix> m2,
                                    const SynthesisOptions& opts) {
    PackageSynthResult res;
    CertificatePackage pkg;
    pkg.level = level;
    pkg.y = std::move(y);
    pkg.m1 = std::move(m1);
    pkg.m2 = std::move(m2);

    // structural screening: everything except the UVW triples
    VerificationReport rep = verify_package(g, pkg);
    for (const auto& f : rep.failures) {
        if (f.code == FailCode::missing_matrix && f.detail == "no UVW certificate") continue;
        res.failure = SynthFailure{SynthFailure::Kind::structure,
                                   to_string(f.code) + " at " + f.where +
                                       (f.detail.empty() ? "" : ": " + f.detail)};
        return res;
    }

    auto synth_for = [&](const std::string& id, const IntMatrix& m) -> bool {
        if (m.is_zero()) return true;
        auto r = uvw_synthesize(m, opts);
        if (!r.ok()) {
            res.failure = SynthFailure{r.failure->kind, id + ": " + r.failure->detail};
            return false;
        }
        pkg.uvw[id] = std::move(*r.cert);
        return true;
    };

    if (!synth_for("Y", pkg.y)) return res;
    for (const auto& [t, m] : pkg.m1)
        if (!synth_for(pkg.m1_id(t), m)) return res;
    for (const auto& [pq, m] : pkg.m2)
        if (!synth_for(pkg.m2_id(pq.first, pq.second), m)) return res;

    res.package = std::move(pkg);
    return res;
}

}  // namespace lsplus
