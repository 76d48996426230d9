#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsplus {

// Arbitrary-precision scalars. All arithmetic in this library is exact; there
// is no floating-point fallback anywhere on a certified path.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational: positive denominator, gcd(num, den) = 1.
Rat make_rat(const Int& num, const Int& den);

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return e_; }

    IntMatrix transpose() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// Dense row-major rational matrix, entries kept canonical.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatMatrix transpose() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// Rational vector; entries canonical like RatMatrix.
struct RatVector {
    std::vector<Rat> e;

    RatVector() = default;
    explicit RatVector(std::size_t dim) : e(dim) {}
    explicit RatVector(std::vector<Rat> entries) : e(std::move(entries)) {}

    std::size_t dim() const { return e.size(); }
    Rat& operator[](std::size_t i) { return e[i]; }
    const Rat& operator[](std::size_t i) const { return e[i]; }

    friend bool operator==(const RatVector& a, const RatVector& b) = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

// V symmetric with sum_{j != i} |V_ij| <= V_ii on every row.
bool is_diag_dominant(const IntMatrix& v);

// Rank over Q by fraction-exact Gaussian elimination.
std::size_t rational_rank(RatMatrix m);
std::size_t rational_rank(const IntMatrix& m);

// Exact LP: maximize objective^T x subject to a^T x <= b for each constraint
// row. Variable bounds, when wanted, are supplied by the caller as ordinary
// rows. Rational two-phase simplex with Bland's rule, so runs are
// deterministic and terminating.
struct LpResult {
    enum class Status { optimal, unbounded };
    Status status = Status::optimal;
    Rat value;         // meaningful when optimal
    RatVector point;   // a maximizer when optimal
};

class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError() : std::runtime_error("constraint system is infeasible") {}
};

LpResult lp_max_exact(const std::vector<std::pair<RatVector, Rat>>& constraints,
                      const RatVector& objective);

}  // namespace lsplus
