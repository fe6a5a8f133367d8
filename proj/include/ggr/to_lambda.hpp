#pragma once

#include "ggr/laurent.hpp"
#include "ggr/ratpoly.hpp"

namespace ggr {

// Normal form of a Laurent polynomial p(mu) under lambda = sqrt(q)*mu:
//   p(mu) = unit * mu^mu_power * P(sqrt(q)*mu)
// with P primitive over the integers, positive leading coefficient and
// P(0) != 0; `unit` is a positive rational times a power of sqrt(q) and is
// dropped. Throws when the sqrt(q) parts fail to align (which cannot happen
// for determinants of 2*q*mu*H(mu)).
struct LambdaForm {
    int mu_power = 0;
    RatPoly P;
};

LambdaForm to_lambda(const LaurentPoly& p);

}  // namespace ggr
