#pragma once

#include <stdexcept>
#include <vector>

#include "ggr/laurent.hpp"
#include "ggr/ratpoly.hpp"

namespace ggr {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
void require_square(const Matrix<T>& m) {
    if (m.empty()) throw std::invalid_argument("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("matrix is not square");
}

// Laplace expansion along the first row. Exponential; callers cap n.
template <class T, class Ops>
T cofactor_det(const Matrix<T>& m, const Ops& ops) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    T acc = ops.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (ops.is_zero(m[0][j])) continue;
        Matrix<T> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            minor[r - 1].reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(m[r][c]);
        }
        T term = ops.mul(m[0][j], cofactor_det(minor, ops));
        acc = (j % 2 == 0) ? ops.add(acc, term) : ops.sub(acc, term);
    }
    return acc;
}

// Fraction-free elimination (Bareiss). Works over any integral domain where
// the recurring division by the previous pivot is exact.
template <class T, class Ops>
T bareiss_det(Matrix<T> m, const Ops& ops) {
    const std::size_t n = m.size();
    T prev = ops.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && ops.is_zero(m[pivot][k])) ++pivot;
        if (pivot == n) return ops.zero();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = ops.sub(ops.mul(m[k][k], m[i][j]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = ops.div_exact(num, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return negate ? ops.neg(d) : d;
}

struct LaurentOps {
    long q;
    LaurentPoly zero() const { return LaurentPoly::zero(q); }
    LaurentPoly one() const { return LaurentPoly::one(q); }
    bool is_zero(const LaurentPoly& x) const { return x.is_zero(); }
    LaurentPoly add(const LaurentPoly& x, const LaurentPoly& y) const { return x + y; }
    LaurentPoly sub(const LaurentPoly& x, const LaurentPoly& y) const { return x - y; }
    LaurentPoly mul(const LaurentPoly& x, const LaurentPoly& y) const { return x * y; }
    LaurentPoly neg(const LaurentPoly& x) const { return -x; }
    LaurentPoly div_exact(const LaurentPoly& x, const LaurentPoly& y) const {
        return LaurentPoly::divide_exact(x, y);
    }
};

struct RatPolyOps {
    RatPoly zero() const { return RatPoly(); }
    RatPoly one() const { return RatPoly::constant(1); }
    bool is_zero(const RatPoly& x) const { return x.is_zero(); }
    RatPoly add(const RatPoly& x, const RatPoly& y) const { return x + y; }
    RatPoly sub(const RatPoly& x, const RatPoly& y) const { return x - y; }
    RatPoly mul(const RatPoly& x, const RatPoly& y) const { return x * y; }
    RatPoly neg(const RatPoly& x) const { return -x; }
    RatPoly div_exact(const RatPoly& x, const RatPoly& y) const {
        return RatPoly::divide_exact(x, y);
    }
};

struct IntOps {
    Int zero() const { return 0; }
    Int one() const { return 1; }
    bool is_zero(const Int& x) const { return x == 0; }
    Int add(const Int& x, const Int& y) const { return x + y; }
    Int sub(const Int& x, const Int& y) const { return x - y; }
    Int mul(const Int& x, const Int& y) const { return x * y; }
    Int neg(const Int& x) const { return -x; }
    Int div_exact(const Int& x, const Int& y) const { return x / y; }
};

}  // namespace detail

// Exact determinant of a matrix of Laurent polynomials: cofactor expansion
// for n <= 6, fraction-free elimination beyond.
LaurentPoly laurent_det(const Matrix<LaurentPoly>& m);

// Exact determinant of a matrix of rational polynomials. `degree_bound`, when
// nonnegative, enables evaluation/interpolation at degree_bound+1 points,
// which is much faster than symbolic elimination for large n.
RatPoly ratpoly_det(const Matrix<RatPoly>& m, int degree_bound = -1);

// Exact determinant of a rational scalar matrix.
Rat rational_det(const Matrix<Rat>& m);

}  // namespace ggr
