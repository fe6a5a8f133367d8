#include "ggr/to_lambda.hpp"

#include <stdexcept>
#include <vector>

namespace ggr {

LambdaForm to_lambda(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("to_lambda: zero polynomial");
    const long q = p.q();
    const int k = p.min_exp();
    const int degree = p.max_exp() - k;

    // d_m = coeff(mu^(m+k)) / sqrt(q)^m. After this step every coefficient
    // must be purely rational or purely a rational multiple of sqrt(q),
    // uniformly over m; otherwise the input was not a lambda-monomial form.
    const SqrtQ inv_sqrt = (perfect_sqrt(q) != 0)
                               ? SqrtQ::rational(Rat(1, perfect_sqrt(q)), q)
                               : SqrtQ::root(1, q).inverse();
    std::vector<SqrtQ> d(degree + 1, SqrtQ::rational(0, q));
    {
        SqrtQ pw = SqrtQ::rational(1, q);
        for (int m = 0; m <= degree; ++m) {
            d[m] = p.coeff(m + k) * pw;
            pw = pw * inv_sqrt;
        }
    }
    bool all_rational = true, all_root = true;
    for (const auto& c : d) {
        if (c.b != 0) all_rational = false;
        if (c.a != 0) all_root = false;
    }
    if (!all_rational && !all_root)
        throw std::runtime_error("to_lambda: residual sqrt(q) irrationality");

    std::vector<Rat> coeffs(degree + 1);
    for (int m = 0; m <= degree; ++m) coeffs[m] = all_rational ? d[m].a : d[m].b;

    // Strip lambda^j factors into the mu-power bookkeeping.
    int strip = 0;
    while (strip <= degree && coeffs[strip] == 0) ++strip;
    coeffs.erase(coeffs.begin(), coeffs.begin() + strip);

    LambdaForm out;
    out.mu_power = k + strip;
    out.P = RatPoly(std::move(coeffs)).primitive();
    return out;
}

}  // namespace ggr
