#pragma once

#include "heinz/types.hpp"

namespace heinz::verify {

// Piecewise boundary profile of the sharpness sequence:
//   1 - x/m   on (1/m, 1],
//   (m-1) x   on [-1/m, 1/m],
//  -1 - x/m   on [-1, -1/m).
double h_m(int m, double x);

// f_m(x) = sqrt(1-h_m(x_n)^2)/sqrt(1-x_n^2) (x_1,...,x_{n-1},0)
//          + (0,...,0,h_m(x_n)); unit norm away from the poles.
BoundaryMap f_m(int m, int n);

// h_m as axisym boundary data, kinks seeded at +-1/m.
AxisymProfile h_m_profile(int m, int n);

// Limit profile sign(t) with sign(0) = 0.
AxisymProfile sign_profile(int n);

// Boundary data of the extremal map (0,...,0,sign(zeta_n)).
BoundaryMap sign_map(int n);

} // namespace heinz::verify
