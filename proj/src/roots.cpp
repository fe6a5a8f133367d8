#include "ggr/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

namespace ggr {

namespace {

using cd = std::complex<double>;

std::vector<cd> companion_eigenvalues(const std::vector<double>& monic) {
    // monic[i] is the coefficient of x^i, with monic.back() == 1 implied gone:
    // the vector holds the d non-leading coefficients.
    const int d = static_cast<int>(monic.size());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -monic[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, /*computeEigenvectors=*/false);
    std::vector<cd> out(d);
    for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()[i];
    return out;
}

cd horner(const std::vector<double>& coeffs, cd x) {
    cd s = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) s = s * x + coeffs[i];
    return s;
}

cd newton_polish(const std::vector<double>& coeffs, const std::vector<double>& dcoeffs, cd x0) {
    cd x = x0;
    for (int it = 0; it < 60; ++it) {
        cd f = horner(coeffs, x);
        cd df = horner(dcoeffs, x);
        if (std::abs(df) == 0.0) break;
        cd step = f / df;
        x -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    // Keep the polished value only if it did not wander off.
    return (std::abs(horner(coeffs, x)) <= std::abs(horner(coeffs, x0))) ? x : x0;
}

std::vector<double> to_doubles(const RatPoly& p) {
    std::vector<double> c(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) c[i] = to_double(p.coeff(i));
    return c;
}

}  // namespace

std::vector<RootMult> poly_roots(const RatPoly& p, double tol) {
    if (tol <= 0) throw std::invalid_argument("poly_roots: tol must be positive");
    if (p.deg() < 1) throw std::invalid_argument("poly_roots: degree must be >= 1");

    std::vector<RootMult> roots;
    for (const auto& [factor, mult] : RatPoly::squarefree_decomposition(p)) {
        std::vector<double> coeffs = to_doubles(factor);
        std::vector<double> dcoeffs = to_doubles(factor.derivative());
        std::vector<double> monic(coeffs.begin(), coeffs.end() - 1);
        const double lead = coeffs.back();
        for (auto& c : monic) c /= lead;
        for (cd z : companion_eigenvalues(monic))
            roots.push_back({newton_polish(coeffs, dcoeffs, z), mult});
    }

    // Merge clusters within the relative tolerance.
    std::sort(roots.begin(), roots.end(), [](const RootMult& a, const RootMult& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    std::vector<RootMult> merged;
    for (const auto& r : roots) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (std::abs(m.value - r.value) <= tol * std::max(1.0, std::abs(m.value))) {
                m.multiplicity += r.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(r);
    }

    int total = 0;
    for (const auto& r : merged) total += r.multiplicity;
    if (total != p.deg()) throw std::runtime_error("poly_roots: multiplicity bookkeeping failed");
    return merged;
}

bool divides(const RatPoly& d, const RatPoly& p) {
    if (d.is_zero()) throw std::invalid_argument("divides: zero divisor");
    if (p.is_zero()) return true;
    return RatPoly::divmod(p, d).second.is_zero();
}

}  // namespace ggr
