#pragma once

#include <vector>

#include "heinz/report.hpp"
#include "heinz/types.hpp"

namespace heinz {

enum class Which { U, V };

// Power series U(rN) = leading*r + sum c_k r^(2k+1).
struct ProfileCoefficients {
    int n = 2;

    // 2 Gamma(1+n/2) / (sqrt(pi) Gamma((1+n)/2))
    double leading() const;

    // c_k = 2 (-1)^k (4k+n) Gamma(k+n/2)
    //       / ((1+2k)(-1+2k+n) sqrt(pi) Gamma(1+k) Gamma((n-1)/2)), k >= 1
    double c(long k) const;
};

// a(m) = (1+m) Gamma(1/2+m) Gamma((3+n)/2) / (sqrt(pi) Gamma(3/2+m+n/2))
struct MonotoneCoefficients {
    int n = 2;
    double a(long m) const;
    // (1+m)(3+2m+n) / ((2+m)(1+2m)), the exact value of a(m)/a(m+1)
    double ratio(long m) const;
};

// U(rN). Series route (4F3 at -r^2) where it is well conditioned; otherwise
// U(r0) + Int_{r0}^{r} V(t) dt with the closed-form V, which covers r = 1
// and large n (the alternating series loses all precision there).
EvalResult u_profile(int n, double r, double tol);

// Raw alternating partial sum of the coefficient series; cross-check path
// for r <= 0.9.
EvalResult u_series(int n, double r, double tol);

// V(r) = Gamma(1+n/2)(1+r^2)^(-n/2)(1+n-(n-2)r^2 2F1[1/2,1,(3+n)/2,-r^2])
//        / (sqrt(pi) Gamma((3+n)/2)); V(0) = leading coefficient exactly.
EvalResult v_profile(int n, double r, double tol);

// C_n = n!(1+n-(n-2) 2F1[1/2,1,(3+n)/2,-1]) / (2^(3n/2) G((1+n)/2) G((3+n)/2))
EvalResult heinz_constant(int n, double tol);

// The six closed forms for n in {2,3,4}; removable singularities at r = 0
// handled by three-term Taylor limits below r = 1e-4.
double closed_form_oracle(int n, Which which, double r);

// V non-increasing on the grid and V(r) >= C_n - 2 tol everywhere.
report::Report check_monotone_v(int n, const std::vector<double>& grid, double tol);

// Coefficient-split identity, relative discrepancy per k = 1..k_max.
report::Report check_coefficient_split(int n, long k_max);

// (i) a(m)/a(m+1) > 1 for m = 0..100 (formula vs direct gammas);
// (ii) 2F1[1/2,2,(3+n)/2,-y] > 0 on the grid.
report::Report check_positivity_2f1(int n, const std::vector<double>& y_grid);

} // namespace heinz
