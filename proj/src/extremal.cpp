#include "heinz/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace heinz::verify {

double h_m(int m, double x) {
    if (m < 2) throw std::invalid_argument("h_m: m >= 2");
    if (!(x >= -1.0 && x <= 1.0)) throw std::invalid_argument("h_m: x in [-1,1]");
    const double mm = m;
    if (x > 1.0 / mm) return 1.0 - x / mm;
    if (x >= -1.0 / mm) return (mm - 1.0) * x;
    return -1.0 - x / mm;
}

BoundaryMap f_m(int m, int n) {
    if (m < 2) throw std::invalid_argument("f_m: m >= 2");
    if (n < 2) throw std::invalid_argument("f_m: n >= 2");
    auto f = [m, n](const std::vector<double>& zeta) {
        const double t = zeta[n - 1];
        const double h = h_m(m, t);
        std::vector<double> out(n, 0.0);
        const double denom = 1.0 - t * t;
        if (denom > 0.0) {
            const double scale = std::sqrt(std::max(0.0, 1.0 - h * h) / denom);
            for (int j = 0; j + 1 < n; ++j) out[j] = scale * zeta[j];
        }
        out[n - 1] = h;
        return out;
    };
    return BoundaryMap{n, f};
}

AxisymProfile h_m_profile(int m, int n) {
    if (m < 2) throw std::invalid_argument("h_m_profile: m >= 2");
    const double corner = 1.0 / static_cast<double>(m);
    return AxisymProfile{n, [m](double t) { return h_m(m, t); }, {-corner, corner}};
}

AxisymProfile sign_profile(int n) {
    auto sgn = [](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); };
    return AxisymProfile{n, sgn, {0.0}};
}

BoundaryMap sign_map(int n) {
    if (n < 2) throw std::invalid_argument("sign_map: n >= 2");
    auto f = [n](const std::vector<double>& zeta) {
        std::vector<double> out(n, 0.0);
        const double t = zeta[n - 1];
        out[n - 1] = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
        return out;
    };
    return BoundaryMap{n, f};
}

} // namespace heinz::verify
