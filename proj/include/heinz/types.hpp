#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace heinz {

// A computed value paired with a rigorous truncation/statistical error bound.
struct EvalResult {
    double value = 0.0;
    double error_bound = 0.0; // upper bound on |value - true value|
    long terms_used = 1;      // series terms or integrand/sample evaluations
};

struct BallPoint {
    std::vector<double> coords;

    int dim() const { return static_cast<int>(coords.size()); }

    double norm() const {
        double s = 0.0;
        for (double c : coords) s += c * c;
        return std::sqrt(s);
    }

    // r*N with N = (0,...,0,1)
    static BallPoint axis(int n, double r) {
        BallPoint p;
        p.coords.assign(n, 0.0);
        p.coords[n - 1] = r;
        return p;
    }
};

// Boundary data depending only on the last coordinate zeta_n = t.
// `corners` lists t-values where h has kinks or jumps; the quadrature
// seeds panel boundaries there.
struct AxisymProfile {
    int n = 2;
    std::function<double(double)> h;
    std::vector<double> corners;
};

// General measurable map S^{n-1} -> closed unit ball, evaluable pointwise.
struct BoundaryMap {
    int n = 2;
    std::function<std::vector<double>(const std::vector<double>&)> f;
};

} // namespace heinz
