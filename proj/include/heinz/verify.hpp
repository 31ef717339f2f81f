#pragma once

#include <cstdint>
#include <vector>

#include "heinz/extremal.hpp"
#include "heinz/report.hpp"
#include "heinz/types.hpp"

namespace heinz::verify {

// (1-r^2)/(1+r^2)^(n/2)
double schwarz_centering_factor(int n, double r);

// ||u(x) - factor(r) u(0)|| <= U(rN) with u = P[f] by Monte Carlo.
// One record per grid point; budgets fold the 3-sigma componentwise
// bounds of u(x) and u(0) plus the U evaluation bound.
report::Report verify_generalized_schwarz(const BoundaryMap& map,
                                          const std::vector<BallPoint>& grid,
                                          long samples, std::uint64_t seed);

// (1-||u(r zeta)||)/(1-r) >= C_n for maps with u(0) = 0; the sampled
// u(0) must vanish within its own statistical budget (CenterNotZero).
report::Report verify_ratio_bound(const BoundaryMap& map,
                                  const std::vector<double>& r_grid,
                                  const std::vector<double>& direction,
                                  long samples, std::uint64_t seed);

// ||d/dr u(rN)|| >= d/dr ||u(rN)|| for a map whose components have
// axisym boundary data; left side by quadrature of the differentiated
// kernel, right side by centered finite difference (step 1e-5).
report::PointRecord verify_norm_derivative_inequality(
    const std::vector<AxisymProfile>& components, double r, double tol);

struct SharpnessRow {
    int m = 0; // 0 encodes the limit profile sign(t)
    double r = 0.0;
    double quotient = 0.0; // (1 - P[h_m](rN))/(1 - r), the Heinz quotient
    double quotient_budget = 0.0;
    double deriv = 0.0;    // d/dr P[h_m](rN)
    double deriv_budget = 0.0;
};

// Sweep of the extremal sequence u_m along the axis. The quotient column
// carries the guaranteed bounds (>= C_n, non-increasing in m); the raw
// derivative column converges to V(r) as m grows and its limit-profile
// extrapolation to r = 1 recovers C_n. Record x convention: m + r
// (r in [0.9,1) keeps it unambiguous); extrapolation records sit at x = 1.
struct SharpnessTable {
    int n = 2;
    double c_n = 0.0;
    double c_n_budget = 0.0;
    std::vector<SharpnessRow> rows;     // finite m first, then limit rows
    double deriv_near_one = 0.0;        // limit profile at r = 1 - 1e-6
    double quotient_extrapolated = 0.0; // linear in (1-r), two largest r
    double deriv_extrapolated = 0.0;
    report::Report rep;                 // assertion records
};

SharpnessTable sharpness_sweep(int n, const std::vector<int>& m_list,
                               const std::vector<double>& r_list, double tol);

std::string sharpness_table_text(const SharpnessTable& t);

// Antisymmetrized trigonometric polynomial boundary map, sup-norm scaled
// to <= 1/1.05 by grid estimation; u(0) = 0 exactly by oddness.
BoundaryMap random_odd_map(int n, std::uint64_t seed);

// Random orthogonal matrix (row-major), modified Gram-Schmidt on a
// seeded gaussian matrix.
std::vector<std::vector<double>> random_orthogonal(int n, std::uint64_t seed);

std::vector<double> random_unit_vector(int n, std::uint64_t seed);

} // namespace heinz::verify
