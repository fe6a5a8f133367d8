#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "ggr/rational.hpp"

namespace ggr {

// Exact scalar a + b*sqrt(q) over the rationals. When q is a perfect square
// the sqrt(q) part is folded into the rational part, so b == 0 canonically.
struct SqrtQ {
    Rat a;
    Rat b;
    long q = 0;

    SqrtQ() = default;
    SqrtQ(Rat a_, Rat b_, long q_) : a(std::move(a_)), b(std::move(b_)), q(q_) {
        if (q <= 0) throw std::invalid_argument("SqrtQ: q must be positive");
        if (long s = perfect_sqrt(q); s != 0 && b != 0) {
            a += b * s;
            b = 0;
        }
    }
    static SqrtQ rational(Rat a, long q) { return SqrtQ(std::move(a), 0, q); }
    static SqrtQ root(Rat b, long q) { return SqrtQ(0, std::move(b), q); }

    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const SqrtQ& x, const SqrtQ& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const SqrtQ& x, const SqrtQ& y) { return !(x == y); }

    friend SqrtQ operator+(const SqrtQ& x, const SqrtQ& y) {
        check(x, y);
        return SqrtQ(x.a + y.a, x.b + y.b, x.q);
    }
    friend SqrtQ operator-(const SqrtQ& x, const SqrtQ& y) {
        check(x, y);
        return SqrtQ(x.a - y.a, x.b - y.b, x.q);
    }
    friend SqrtQ operator-(const SqrtQ& x) { return SqrtQ(-x.a, -x.b, x.q); }
    friend SqrtQ operator*(const SqrtQ& x, const SqrtQ& y) {
        check(x, y);
        return SqrtQ(x.a * y.a + x.b * y.b * x.q, x.a * y.b + x.b * y.a, x.q);
    }

    // Multiplicative inverse in the field Q(sqrt(q)).
    SqrtQ inverse() const {
        Rat n = a * a - b * b * q;
        if (n == 0) throw std::domain_error("SqrtQ: inverse of zero");
        return SqrtQ(a / n, -b / n, q);
    }
    friend SqrtQ operator/(const SqrtQ& x, const SqrtQ& y) {
        return x * y.inverse();
    }

    std::complex<double> eval() const {
        return {to_double(a) + to_double(b) * std::sqrt(double(q)), 0.0};
    }
    double eval_real() const {
        return to_double(a) + to_double(b) * std::sqrt(double(q));
    }

    std::string str() const {
        if (b == 0) return format_rational(a);
        return format_rational(a) + " + " + format_rational(b) + "*sqrt(" +
               std::to_string(q) + ")";
    }

private:
    static void check(const SqrtQ& x, const SqrtQ& y) {
        if (x.q != y.q) throw std::invalid_argument("SqrtQ: mismatched q");
    }
};

}  // namespace ggr
