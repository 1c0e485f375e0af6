// Reference implementations used only to check the jet engine: a small
// standalone symbolic differentiator and a central-difference quotient.
// Nothing here touches the algebra or jet code paths.
#pragma once

#include "weil/expr.hpp"

namespace weil::oracle {

// f^(j)(x0)/j! for j = 0..k, computed by repeated symbolic differentiation of
// an independent term representation and evaluation in double precision.
std::vector<double> taylor_by_symbolic_diff(const Expr& f, double x0, uint32_t k);

// (f(x0+h) - f(x0-h)) / 2h on the plain double evaluator.
double central_difference(const Expr& f, double x0, double h = 1e-5);

} // namespace weil::oracle
