// Weil prolongation of R^n and evaluation of expression trees on W-points:
// arithmetic nodes run inside the algebra, an elementary function g applied
// to a0 + h (h nilpotent) becomes the finite Taylor sum
//   sum_{j < nu} g^(j)(a0)/j! h^j,   nu = nilpotency index of h,
// which is a higher-order forward-mode derivative computation.  Exact mode
// refuses irrational Taylor coefficients instead of approximating.
#pragma once

#include <map>

#include "weil/algebra.hpp"
#include "weil/expr.hpp"

namespace weil {

enum class ScalarMode { exact, floating };

// Default relative tolerance for float-mode comparisons.
inline constexpr double kFloatRelTol = 1e-9;

struct WPoint {
    AlgebraPtr alg;
    std::vector<Element> coords; // an element of R^n (x) W

    size_t arity() const { return coords.size(); }
};

// Assembles a W-point from its base point and its nilpotent parts, keyed by
// basis monomial (e.g. {"x": (1,0)}).  Unknown or unit monomial keys and
// length mismatches are errors.
WPoint w_point(const AlgebraPtr& W, const RatVec& base,
               const std::map<std::string, RatVec>& infinitesimal = {});

// Coordinatewise augmentation: the base point in R^n.
RatVec base_point(const WPoint& p);

Element eval_jet(const Expr& f, const WPoint& p);

// Float mode: coordinates of the arguments and of the result are given per
// basis monomial of the algebra.
std::vector<double> eval_jet_float(const Expr& f, const AlgebraPtr& W,
                                   const std::vector<std::vector<double>>& coords);

// The functor action of (.) (x) W on a map R^m -> R^n given as n expressions.
struct ProlongedMap {
    std::vector<Expr> components;
    AlgebraPtr W;

    WPoint operator()(const WPoint& p) const;
};

ProlongedMap prolong_map(std::vector<Expr> components, AlgebraPtr W);

// The jet line R[X]/(X^{k+1}); basis 1, x, ..., x^k.
AlgebraPtr jet_line(uint32_t k);

// Taylor coefficients of f at x0 to order k: coefficient j equals
// f^(j)(x0)/j!.  The exact variant throws ModeError when a coefficient is
// irrational.
std::vector<Rat> taylor_coefficients(const Expr& f, const Rat& x0, uint32_t k);
std::vector<double> taylor_coefficients_float(const Expr& f, double x0, uint32_t k);

// Descriptor of R^n (x) W together with its product structure.
struct ProlongationSpace {
    size_t n = 0;
    AlgebraPtr W;
    size_t linear_dim = 0;

    RatVec project(const WPoint& p) const; // canonical projection to R^n
    std::vector<WPoint> split(const WPoint& p) const; // R^n (x) W = (R (x) W)^n
    WPoint join(const std::vector<WPoint>& parts) const;
};

ProlongationSpace prolongation_space(size_t n, AlgebraPtr W);

bool approx_equal(double a, double b, double rel_tol = kFloatRelTol);

} // namespace weil
