#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ggr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Parses "num/den" or a bare integer; den must be positive.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("invalid rational literal: '" + s + "'");
    };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    std::string num = s.substr(0, slash == std::string::npos ? s.size() : slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    Int d(den);
    if (d == 0) throw bad();
    return Rat(Int(num), d);
}

// Lowest terms, always with an explicit positive denominator.
inline std::string format_rational(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

// Returns s > 0 with s*s == q, or 0 when q is not a perfect square.
inline long perfect_sqrt(long q) {
    if (q < 0) return 0;
    Int s = isqrt(Int(q));
    return (s * s == q) ? s.convert_to<long>() : 0;
}

}  // namespace ggr
