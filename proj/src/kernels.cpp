#include "ggr/kernels.hpp"

#include <cmath>
#include <vector>

namespace ggr {

namespace {

using cd = std::complex<double>;

void require_nonzero(cd mu) {
    if (mu == cd(0.0, 0.0)) throw PoleError("mu = 0 is outside the domain");
}

}  // namespace

cd tree_kernel(int q, cd mu, int d) {
    if (q < 1) throw std::invalid_argument("tree_kernel: q must be >= 1");
    if (d < 0) throw std::invalid_argument("tree_kernel: d must be >= 0");
    require_nonzero(mu);
    cd den = mu - 1.0 / (double(q) * mu);
    if (den == cd(0.0, 0.0)) throw PoleError("tree kernel pole at mu = +-1/sqrt(q)");
    return -2.0 / den * std::pow(1.0 / (mu * std::sqrt(double(q))), d);
}

cd cusp_kernel(int q, cd mu, int k1, int k2) {
    if (q < 1) throw std::invalid_argument("cusp_kernel: q must be >= 1");
    require_nonzero(mu);
    cd den = mu - 1.0 / mu;
    if (den == cd(0.0, 0.0)) throw PoleError("cusp kernel pole at mu = +-1");
    double rootq = std::sqrt(double(q));
    return -2.0 / den * std::pow(rootq / mu, std::abs(k1 - k2)) *
           std::pow(double(q), std::min(k1, k2));
}

double verify_tree_identity(int q, cd mu, int depth) {
    if (depth < 2) throw std::invalid_argument("verify_tree_identity: depth must be >= 2");
    std::vector<cd> k(depth + 1);
    for (int d = 0; d <= depth; ++d) k[d] = tree_kernel(q, mu, d);

    const double rootq = std::sqrt(double(q));
    const cd z = satake_z(mu);
    double worst = 0.0;
    // shell 0: all q+1 neighbours sit at distance 1
    worst = std::abs((double(q + 1) / (2.0 * rootq)) * k[1] - z * k[0] - 1.0);
    // shell d: one neighbour inward, q outward
    for (int d = 1; d <= depth - 1; ++d) {
        cd r = (k[d - 1] + double(q) * k[d + 1]) / (2.0 * rootq) - z * k[d];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace ggr
