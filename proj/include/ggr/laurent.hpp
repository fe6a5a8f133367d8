#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggr/sqrtq.hpp"

namespace ggr {

// Laurent polynomial in mu with coefficients in Q[sqrt(q)].
// Zero coefficients are never stored; an empty map is the zero polynomial.
class LaurentPoly {
public:
    explicit LaurentPoly(long q = 1) : q_(q) {}

    static LaurentPoly zero(long q) { return LaurentPoly(q); }
    static LaurentPoly one(long q) {
        return term(SqrtQ::rational(1, q), 0);
    }
    static LaurentPoly term(SqrtQ c, int exp) {
        LaurentPoly p(c.q);
        p.set(exp, std::move(c));
        return p;
    }

    long q() const { return q_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, SqrtQ>& coeffs() const { return coeffs_; }

    SqrtQ coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? SqrtQ::rational(0, q_) : it->second;
    }
    void set(int exp, SqrtQ c) {
        if (c.is_zero())
            coeffs_.erase(exp);
        else
            coeffs_[exp] = std::move(c);
    }

    int min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
        return x.q_ == y.q_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) {
        return !(x == y);
    }

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
        check(x, y);
        LaurentPoly r = x;
        for (const auto& [e, c] : y.coeffs_) r.set(e, r.coeff(e) + c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
        check(x, y);
        LaurentPoly r = x;
        for (const auto& [e, c] : y.coeffs_) r.set(e, r.coeff(e) - c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& x) {
        LaurentPoly r(x.q_);
        for (const auto& [e, c] : x.coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
        check(x, y);
        LaurentPoly r(x.q_);
        for (const auto& [ex, cx] : x.coeffs_)
            for (const auto& [ey, cy] : y.coeffs_)
                r.set(ex + ey, r.coeff(ex + ey) + cx * cy);
        return r;
    }
    LaurentPoly scaled(const SqrtQ& s) const {
        LaurentPoly r(q_);
        for (const auto& [e, c] : coeffs_) r.set(e, c * s);
        return r;
    }
    LaurentPoly shifted(int k) const {
        LaurentPoly r(q_);
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
        return r;
    }

    // Exact quotient x / y in the Laurent ring; throws when y == 0 or the
    // division leaves a remainder.
    static LaurentPoly divide_exact(const LaurentPoly& x, const LaurentPoly& y);

    std::complex<double> eval(std::complex<double> mu) const {
        std::complex<double> s = 0;
        for (const auto& [e, c] : coeffs_) s += c.eval() * std::pow(mu, e);
        return s;
    }

    std::string str() const;

private:
    static void check(const LaurentPoly& x, const LaurentPoly& y) {
        if (x.q_ != y.q_) throw std::invalid_argument("LaurentPoly: mismatched q");
    }

    long q_;
    std::map<int, SqrtQ> coeffs_;
};

}  // namespace ggr
