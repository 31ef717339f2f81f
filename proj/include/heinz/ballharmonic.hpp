#pragma once

#include <cstdint>
#include <vector>

#include "heinz/types.hpp"

namespace heinz::ball {

// P(x,zeta) = (1-||x||^2)/||x-zeta||^n. zeta is normalized internally
// when its norm is off unit by more than 1e-12.
double poisson_kernel(const BallPoint& x, std::vector<double> zeta);

// P[h(zeta_n)](rN) = c_n Int_0^pi (1-r^2) sin^(n-2)(t) h(cos t)
//                    / (1+r^2-2r cos t)^(n/2) dt,
// c_n = Gamma(n/2)/(sqrt(pi) Gamma((n-1)/2)).
EvalResult axisym_extension(const AxisymProfile& profile, double r, double tol);

// d/dr of the above, differentiated under the integral sign.
EvalResult axisym_radial_derivative(const AxisymProfile& profile, double r, double tol);

// Monte Carlo estimate of P[f](x): componentwise mean of P(x,zeta_i) f(zeta_i)
// over uniform sphere points, with 3-sigma statistical error bounds.
// Samples are consumed in fixed 4096-sample chunks whose partial sums are
// combined in chunk order, so the result is bit-identical for any worker
// count. Guards: ||x|| <= 0.95, samples >= 1000.
std::vector<EvalResult> mc_extension(const BoundaryMap& map, const BallPoint& x,
                                     long samples, std::uint64_t seed);

// Straight-loop reference estimator (no chunking); kept for testing the
// parallel kernel within the 1e-13 reassociation tolerance.
std::vector<EvalResult> mc_extension_serial(const BoundaryMap& map, const BallPoint& x,
                                            long samples, std::uint64_t seed);

} // namespace heinz::ball
