#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ggr/rational.hpp"

namespace ggr {

// Dense polynomial over Q. coeffs[i] is the coefficient of x^i; the leading
// coefficient is nonzero and the zero polynomial has an empty list.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(Rat v) { return RatPoly({std::move(v)}); }
    static RatPoly monomial(Rat v, int deg) {
        std::vector<Rat> c(deg + 1);
        c[deg] = std::move(v);
        return RatPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    Rat leading() const {
        if (is_zero()) throw std::domain_error("leading of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly scaled(const Rat& s) const;

    // Euclidean division over Q: a = q*b + r with deg r < deg b.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
    // Quotient when the division is exact; throws otherwise.
    static RatPoly divide_exact(const RatPoly& a, const RatPoly& b);

    RatPoly derivative() const;
    // Monic gcd over Q (gcd(0,0) == 0).
    static RatPoly gcd(RatPoly a, RatPoly b);

    // Yun's square-free decomposition: returns (factor, multiplicity) pairs
    // with each factor monic, square-free and pairwise coprime, and
    // prod factor^multiplicity == p / leading(p).
    static std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

    // Integer-primitive normalization with positive leading coefficient.
    RatPoly primitive() const;
    // True when all coefficients are integers.
    bool is_integral() const;

    template <class T>
    T eval(const T& x) const {
        T s{};
        for (int i = deg(); i >= 0; --i) s = s * x + T(to_double(c_[i]));
        return s;
    }
    Rat eval_exact(const Rat& x) const {
        Rat s = 0;
        for (int i = deg(); i >= 0; --i) s = s * x + c_[i];
        return s;
    }
    // Substitutes x -> r*x (used for changes of variable).
    RatPoly compose_scale(const Rat& r) const;

    // 1-norm of the coefficients as a double.
    double coeff_norm1() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace ggr
