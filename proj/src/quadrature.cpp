#include "projcurv/quadrature.hpp"

#include <cmath>

#include "projcurv/errors.hpp"
#include "projcurv/vec.hpp"

namespace projcurv {

GaussLegendre::GaussLegendre(int n, double a, double b) {
    if (n < 1) throw InvalidParameter("Gauss-Legendre order must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration from the Chebyshev-like initial guess; symmetric pairs.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        nodes[i] = mid - half * x;
        nodes[n - 1 - i] = mid + half * x;
        weights[i] = weights[n - 1 - i] = w * half;
    }
}

}  // namespace projcurv
