#include "ggr/ratpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ggr {

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * s;
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("RatPoly: division by zero");
    if (a.deg() < b.deg()) return {RatPoly(), a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot(a.deg() - b.deg() + 1);
    const Rat lead = b.leading();
    for (int i = a.deg() - b.deg(); i >= 0; --i) {
        Rat f = rem[i + b.deg()] / lead;
        quot[i] = f;
        if (f == 0) continue;
        for (int j = 0; j <= b.deg(); ++j) rem[i + j] -= f * b.c_[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::divide_exact(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("RatPoly: inexact division");
    return q;
}

RatPoly RatPoly::derivative() const {
    if (deg() < 1) return RatPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(int(i));
    return RatPoly(std::move(c));
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    auto make_monic = [](RatPoly p) {
        return p.is_zero() ? p : p.scaled(Rat(1) / p.leading());
    };
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

std::vector<std::pair<RatPoly, int>> RatPoly::squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly f = p.scaled(Rat(1) / p.leading());
    if (f.deg() == 0) return out;
    RatPoly fp = f.derivative();
    RatPoly g = gcd(f, fp);
    RatPoly w = divide_exact(f, g);
    RatPoly y = divide_exact(fp, g);
    RatPoly z = y - w.derivative();
    int i = 1;
    while (w.deg() > 0) {
        RatPoly gi = gcd(w, z);
        if (gi.deg() > 0) out.emplace_back(gi, i);
        w = divide_exact(w, gi);
        y = divide_exact(z, gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

RatPoly RatPoly::primitive() const {
    if (is_zero()) return RatPoly();
    Int den_lcm = 1;
    for (const auto& c : c_) den_lcm = lcm(den_lcm, denominator(c));
    Int num_gcd = 0;
    for (const auto& c : c_) num_gcd = gcd(num_gcd, Int(numerator(c) * (den_lcm / denominator(c))));
    Rat scale(den_lcm, num_gcd);
    if (leading() < 0) scale = -scale;
    return scaled(scale);
}

bool RatPoly::is_integral() const {
    for (const auto& c : c_)
        if (denominator(c) != 1) return false;
    return true;
}

RatPoly RatPoly::compose_scale(const Rat& r) const {
    std::vector<Rat> c(c_.size());
    Rat pw = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * pw;
        pw *= r;
    }
    return RatPoly(std::move(c));
}

double RatPoly::coeff_norm1() const {
    double s = 0;
    for (const auto& c : c_) s += std::abs(to_double(c));
    return s;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1) && i > 0;
        if (!unit) {
            os << numerator(mag).str();
            if (denominator(mag) != 1) os << "/" << denominator(mag).str();
        }
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace ggr
