#include "ggr/laurent.hpp"

#include <sstream>

namespace ggr {

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& x, const LaurentPoly& y) {
    check(x, y);
    if (y.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (x.is_zero()) return zero(x.q_);

    // Shift both operands into ordinary polynomials and divide there; the
    // exponent offset moves into the quotient.
    const int xs = x.min_exp(), ys = y.min_exp();
    const int dx = x.max_exp() - xs, dy = y.max_exp() - ys;
    if (dx < dy) throw std::domain_error("LaurentPoly: inexact division");

    std::vector<SqrtQ> a(dx + 1, SqrtQ::rational(0, x.q_));
    std::vector<SqrtQ> b(dy + 1, SqrtQ::rational(0, x.q_));
    for (const auto& [e, c] : x.coeffs_) a[e - xs] = c;
    for (const auto& [e, c] : y.coeffs_) b[e - ys] = c;

    const SqrtQ lead_inv = b[dy].inverse();
    std::vector<SqrtQ> quot(dx - dy + 1, SqrtQ::rational(0, x.q_));
    for (int i = dx - dy; i >= 0; --i) {
        SqrtQ f = a[i + dy] * lead_inv;
        quot[i] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dy; ++j) a[i + j] = a[i + j] - f * b[j];
    }
    for (const auto& r : a)
        if (!r.is_zero()) throw std::domain_error("LaurentPoly: inexact division");

    LaurentPoly res(x.q_);
    for (int i = 0; i <= dx - dy; ++i) res.set(i + xs - ys, quot[i]);
    return res;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (it->first != 0) os << "*mu^" << it->first;
    }
    return os.str();
}

}  // namespace ggr
