#pragma once

#include "l1approx/detail/constants.hpp"

#include <cmath>
#include <vector>

namespace l1approx::detail {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

inline GaussRule compute_gauss_legendre(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

// Magic-static initialization keeps these safe under concurrent first use.
inline const GaussRule& gauss_legendre_16() {
    static const GaussRule r = compute_gauss_legendre(16);
    return r;
}

inline const GaussRule& gauss_legendre_32() {
    static const GaussRule r = compute_gauss_legendre(32);
    return r;
}

} // namespace l1approx::detail
