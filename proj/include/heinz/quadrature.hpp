#pragma once

#include <functional>
#include <vector>

#include "heinz/types.hpp"

namespace heinz::quad {

// Adaptive Gauss-Kronrod 15|7 with interval bisection. Panel error is
// |K15 - G7|; refinement always splits the worst panel. `breaks` seeds
// extra panel boundaries (kinks, kernel peaks). Throws QuadratureFailure
// if the budget (or representable panel width) is exhausted before the
// total error estimate certifies `tol`.
EvalResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol, const std::vector<double>& breaks = {});

} // namespace heinz::quad
