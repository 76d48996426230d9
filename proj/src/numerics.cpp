#include "lsplus/numerics.hpp"

#include <algorithm>

namespace lsplus {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw std::invalid_argument("entry count does not match matrix shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (long x : r) e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimensions differ");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

bool is_diag_dominant(const IntMatrix& v) {
    if (!v.is_square() || !v.is_symmetric()) return false;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        Int off = 0;
        for (std::size_t j = 0; j < v.cols(); ++j)
            if (j != i) off += abs(v.at(i, j));
        if (off > v.at(i, i)) return false;
    }
    return true;
}

std::size_t rational_rank(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const Rat p = m.at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col) / p;
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::size_t rational_rank(const IntMatrix& m) { return rational_rank(RatMatrix::from_int(m)); }

namespace {

// Dense simplex tableau. Column layout: n "plus" parts, n "minus" parts (free
// variables split as x = u - v), m slacks, then artificials as needed.
class Simplex {
public:
    Simplex(const std::vector<std::pair<RatVector, Rat>>& constraints, const RatVector& objective)
        : n_(objective.dim()), m_(constraints.size()) {
        for (const auto& [a, b] : constraints)
            if (a.dim() != n_) throw std::invalid_argument("lp_max_exact: constraint dimension mismatch");

        cols_ = 2 * n_ + m_;
        tab_.assign(m_, std::vector<Rat>(cols_));
        rhs_.assign(m_, Rat(0));
        basis_.assign(m_, 0);

        std::vector<std::size_t> artificial_rows;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& [a, b] = constraints[i];
            const bool flip = sign(b) < 0;
            for (std::size_t j = 0; j < n_; ++j) {
                Rat coeff = flip ? Rat(-a[j]) : a[j];
                tab_[i][j] = coeff;
                tab_[i][n_ + j] = -coeff;
            }
            tab_[i][2 * n_ + i] = flip ? Rat(-1) : Rat(1);
            rhs_[i] = flip ? Rat(-b) : b;
            if (flip)
                artificial_rows.push_back(i);
            else
                basis_[i] = 2 * n_ + i;
        }

        if (!artificial_rows.empty()) {
            for (std::size_t k = 0; k < artificial_rows.size(); ++k) {
                for (auto& row : tab_) row.emplace_back(0);
                tab_[artificial_rows[k]][cols_ + k] = 1;
                basis_[artificial_rows[k]] = cols_ + k;
            }
            const std::size_t art_begin = cols_;
            cols_ += artificial_rows.size();

            // Phase 1: minimize the artificial sum.
            std::vector<Rat> cost(cols_);
            for (std::size_t j = art_begin; j < cols_; ++j) cost[j] = -1;
            run(cost);
            if (sign(objective_value_) < 0) throw InfeasibleError();
            // Pivot residual artificials out of the basis; a row with no
            // eligible pivot is redundant and harmless.
            for (std::size_t i = 0; i < m_; ++i) {
                if (basis_[i] < art_begin) continue;
                for (std::size_t j = 0; j < art_begin; ++j)
                    if (tab_[i][j] != 0) { pivot(i, j); break; }
            }
            for (auto& row : tab_) row.resize(art_begin);
            cols_ = art_begin;
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] >= art_begin) basis_[i] = 0;  // redundant zero row
        }

        std::vector<Rat> cost(cols_);
        for (std::size_t j = 0; j < n_; ++j) {
            cost[j] = objective[j];
            cost[n_ + j] = -objective[j];
        }
        unbounded_ = !run(cost);
    }

    bool unbounded() const { return unbounded_; }

    Rat value() const { return objective_value_; }

    RatVector point() const {
        RatVector x(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            const std::size_t b = basis_[i];
            if (b < n_)
                x[b] += rhs_[i];
            else if (b < 2 * n_)
                x[b - n_] -= rhs_[i];
        }
        return x;
    }

private:
    // Bland's rule; returns false when unbounded.
    bool run(const std::vector<Rat>& cost) {
        recompute_objective(cost);
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sign(reduced_[j]) > 0) { enter = j; break; }
            if (enter == cols_) return true;

            std::size_t leave = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sign(tab_[i][enter]) <= 0) continue;
                Rat ratio = rhs_[i] / tab_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
            recompute_objective(cost);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rat p = tab_[row][col];
        for (auto& x : tab_[row]) x /= p;
        rhs_[row] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            const Rat f = tab_[i][col];
            for (std::size_t j = 0; j < cols_; ++j) tab_[i][j] -= f * tab_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    void recompute_objective(const std::vector<Rat>& cost) {
        reduced_.assign(cols_, Rat(0));
        for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = j < cost.size() ? cost[j] : Rat(0);
        objective_value_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat cb = basis_[i] < cost.size() ? cost[basis_[i]] : Rat(0);
            if (cb == 0) continue;
            objective_value_ += cb * rhs_[i];
            for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= cb * tab_[i][j];
        }
    }

    std::size_t n_, m_, cols_ = 0;
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> rhs_;
    std::vector<Rat> reduced_;
    std::vector<std::size_t> basis_;
    Rat objective_value_;
    bool unbounded_ = false;
};

}  // namespace

LpResult lp_max_exact(const std::vector<std::pair<RatVector, Rat>>& constraints,
                      const RatVector& objective) {
    Simplex s(constraints, objective);
    LpResult r;
    if (s.unbounded()) {
        r.status = LpResult::Status::unbounded;
        return r;
    }
    r.status = LpResult::Status::optimal;
    r.point = s.point();
    r.value = 0;
    for (std::size_t j = 0; j < objective.dim(); ++j) r.value += objective[j] * r.point[j];
    return r;
}

}  // namespace lsplus
