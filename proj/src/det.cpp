#include "ggr/det.hpp"

namespace ggr {

namespace {

// det of an integer matrix, fraction-free.
Int int_det(Matrix<Int> m) { return detail::bareiss_det(std::move(m), detail::IntOps{}); }

}  // namespace

LaurentPoly laurent_det(const Matrix<LaurentPoly>& m) {
    detail::require_square(m);
    const long q = m[0][0].q();
    detail::LaurentOps ops{q};
    if (m.size() <= 6) return detail::cofactor_det(m, ops);
    return detail::bareiss_det(m, ops);
}

Rat rational_det(const Matrix<Rat>& m) {
    detail::require_square(m);
    const std::size_t n = m.size();
    // Clear denominators row by row so the elimination runs over the integers.
    Matrix<Int> im(n, std::vector<Int>(n));
    Rat scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (const auto& x : m[i]) l = lcm(l, denominator(x));
        for (std::size_t j = 0; j < n; ++j)
            im[i][j] = numerator(m[i][j]) * (l / denominator(m[i][j]));
        scale /= l;
    }
    return Rat(int_det(std::move(im))) * scale;
}

RatPoly ratpoly_det(const Matrix<RatPoly>& m, int degree_bound) {
    detail::require_square(m);
    const std::size_t n = m.size();
    detail::RatPolyOps ops;
    if (degree_bound < 0) {
        if (n <= 6) return detail::cofactor_det(m, ops);
        return detail::bareiss_det(m, ops);
    }

    // Evaluate at degree_bound+1 rational points and interpolate (Lagrange).
    const int npts = degree_bound + 1;
    std::vector<Rat> xs(npts), ys(npts);
    for (int s = 0; s < npts; ++s) {
        Rat x = Rat((s % 2 == 0) ? (s / 2 + 1) : -(s / 2 + 1));
        if (s == npts - 1) x = 0;
        Matrix<Rat> mv(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mv[i][j] = m[i][j].eval_exact(x);
        xs[s] = x;
        ys[s] = rational_det(mv);
    }

    // Newton's divided differences, then expand to the monomial basis.
    std::vector<Rat> dd = ys;
    for (int level = 1; level < npts; ++level)
        for (int i = npts - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RatPoly acc = RatPoly::constant(dd[npts - 1]);
    for (int i = npts - 2; i >= 0; --i) {
        RatPoly lin({-xs[i], 1});
        acc = acc * lin + RatPoly::constant(dd[i]);
    }
    return acc;
}

}  // namespace ggr
