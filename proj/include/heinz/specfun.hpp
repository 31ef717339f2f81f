#pragma once

#include <vector>

#include "heinz/report.hpp"
#include "heinz/types.hpp"

namespace heinz::specfun {

// Parameter vectors (a; b) and argument x for a pFq evaluation.
struct HypergeomSpec {
    std::vector<double> upper;
    std::vector<double> lower;
    double arg = 0.0;
};

inline constexpr long kMaxTerms = 100000;
inline constexpr double kTolFloor = 1e-13;

// Rising factorial (y)_k. Exact product for k <= 64, log-gamma
// accumulation with sign tracking beyond.
double pochhammer(double y, long k);

// Term-recursive summation with a certified truncation rule:
//  x > 0: geometric tail bound once the term ratio is < 1 and has been
//         non-increasing for three steps (bound ratio also capped by |x|);
//  x < 0: alternating bound |tail| <= |first omitted term| after three
//         consecutive |term| decreases.
// error_bound additionally carries the rounding slack of the summed terms.
EvalResult pfq(const HypergeomSpec& spec, double tol);

// 2F1 at x in [-1,0]; for x < -1/2 applies the Pfaff transform
// 2F1(a,b;c;x) = (1-x)^(-a) 2F1(a,c-b;c;x/(x-1)) so the inner argument
// lands in [0,1/2].
EvalResult gauss2f1_neg(double a, double b, double c, double x, double tol);

// |LHS - RHS| for G(r)(1-r^2) = (1+r^2)^(1+n/2) 4F3[...](-r^2) where
// G(r) = 3F2[1,(2+n)/4,(4+n)/4; 3/2,(1+n)/2; 4r^2/(1+r^2)^2].
report::PointRecord check_transform_3f2_to_4f3(int n, double r, double tol);

// |LHS - RHS| for the two closed forms of dU(rN)/dr related by the
// Kummer quadratic transformation.
report::PointRecord check_kummer_quadratic(int n, double r, double tol);

} // namespace heinz::specfun
