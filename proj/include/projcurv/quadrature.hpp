#pragma once

#include <vector>

namespace projcurv {

/// Gauss-Legendre rule on [a, b].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    GaussLegendre(int n, double a, double b);

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

}  // namespace projcurv
