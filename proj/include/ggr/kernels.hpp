#pragma once

#include <complex>
#include <stdexcept>

namespace ggr {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Radial resolvent kernel of A/(2*sqrt(q)) - z(mu) on the (q+1)-regular tree:
//   k_mu(d) = -2/(mu - mu^{-1}/q) * (1/(mu*sqrt(q)))^d.
// Meromorphic in mu on C^x minus {+-1/sqrt(q)}.
std::complex<double> tree_kernel(int q, std::complex<double> mu, int d);

// Resolvent kernel on the idealized parabolic cylinder (vertices Z, vertex k
// of stabilizer weight q^k):
//   K_mu(k1,k2) = -2/(mu - mu^{-1}) * (sqrt(q)/mu)^{|k1-k2|} * q^{min(k1,k2)}.
// Meromorphic in mu on C^x minus {+-1}.
std::complex<double> cusp_kernel(int q, std::complex<double> mu, int k1, int k2);

// Builds the radial kernel column on a depth-D truncation of the tree,
// applies A/(2*sqrt(q)) - z(mu), and returns the maximum deviation from
// delta_o over the shells 0..D-1.
double verify_tree_identity(int q, std::complex<double> mu, int depth);

inline std::complex<double> satake_z(std::complex<double> mu) {
    return (mu + 1.0 / mu) / 2.0;
}

}  // namespace ggr
