// Relative Weil prolongation on trivial-bundle models pi: R^n x R^b -> R^n.
// For a trivial bundle the equivalence classes of maps with constant base
// component collapse to a base point plus a fiber W-point, so E (x)_M W is
// R^n x (R^b (x) W).  On top of that sit the model-level mirrors of the
// category results: the iterated-prolongation equalizer, the Euclidean law
// for the tangent functor, relative microlinearity and Weil exponentiability.
#pragma once

#include "weil/category.hpp"
#include "weil/jet.hpp"

namespace weil {

struct TrivialBundle {
    size_t base_dim = 0;
    size_t fiber_dim = 0;
};

struct FiberedProlongation {
    TrivialBundle bundle;
    AlgebraPtr W;
    size_t total_linear_dim = 0; // n + b * dim W
};

FiberedProlongation fibered_prolong(const TrivialBundle& bundle, const AlgebraPtr& W);

// A point of E (x)_M W: the base component is W-constant by construction.
struct FiberedPoint {
    RatVec base;   // in R^n
    WPoint fiber;  // b coordinates over W
};

FiberedPoint fibered_point(const FiberedProlongation& fp, const RatVec& base, WPoint fiber);
RatVec bundle_projection(const FiberedPoint& p);

// Fiberwise linear structure (the fibers are linear, the base is shared).
FiberedPoint fiber_add(const FiberedPoint& p, const FiberedPoint& q);
FiberedPoint fiber_scale(const Rat& c, const FiberedPoint& p);

// Applies a bundle map over the identity of the base, given fiberwise by
// expressions R^b -> R^c, through the jet engine.
FiberedPoint apply_fiber_map(const std::vector<Expr>& fiber_map, const FiberedPoint& p);

// ----- the thm-3-4 law at model level -----

struct IteratedProlongation {
    size_t n = 0;
    TensorProduct tensor;      // W1 (x) W2
    LinSubspace carrier;       // equalizer subspace of R^n (x) (W1 (x) W2)
    FiberedTensor ft;          // W1 (x)~ W2
    size_t expected_dim = 0;   // n * dim(W1 (x)~ W2)
    bool dimension_ok = false;
    bool comparison_bijective = false; // against R^n (x) (W1 (x)~ W2)

    bool pass() const { return dimension_ok && comparison_bijective; }
};

// (R^n (x) W1) (x)_M W2 as the blockwise equalizer of the two coordinatewise
// induced homs, compared with the prolongation space of the fibered tensor.
IteratedProlongation iterated_prolongation(size_t n, const AlgebraPtr& W1, const AlgebraPtr& W2);

// ----- Section 6: the Euclidean / vector-bundle law -----

struct EuclideanReport {
    size_t n = 0;
    size_t dim_left = 0;   // (R^n (x) W_D) (x)_M W_D
    size_t dim_right = 0;  // (R^n (x) W_D) x_M (R^n (x) W_D)
    bool comparison_bijective = false;
    bool projection_compatible = false; // comparison commutes with the bundle projection

    bool pass() const {
        return dim_left == dim_right && comparison_bijective && projection_compatible;
    }
};

EuclideanReport euclidean_check(size_t n);

// ----- the thm-5-6 law at model level -----

struct MicrolinearityReport {
    size_t dim_left = 0;  // Lim of the prolonged diagram, computed by kernels
    size_t dim_right = 0; // (R^n (x) W) (x)_M Lim D
    bool bijective = false;

    bool pass() const { return bijective; }
};

// Lim((R^n (x) W) (x)_M D) versus (R^n (x) W) (x)_M Lim D; the functor is
// applied to the augmented diagram, matching the category-level convention.
MicrolinearityReport m_microlinearity_check(size_t n, const AlgebraPtr& W, const Diagram& d);

// ----- the thm-4-7 law at model level -----

struct ExponentiabilityReport {
    bool step_iterated_W1 = false;    // (R^n(x)W)(x)_M W1 has the thm-3-4 shape
    bool step_iterated_W2 = false;    // ((..) (x)_M W1) (x)_M W2 likewise
    bool step_assoc = false;          // (W (x)~ W1) (x)~ W2 = W (x)~ (W1 (x) W2)
    bool step_final = false;          // right-hand side has the thm-3-4 shape
    size_t dim_left = 0, dim_right = 0;

    bool pass() const {
        return step_iterated_W1 && step_iterated_W2 && step_assoc && step_final &&
               dim_left == dim_right;
    }
};

ExponentiabilityReport weil_exponentiability_check(size_t n, const AlgebraPtr& W,
                                                   const AlgebraPtr& W1, const AlgebraPtr& W2);

// ----- the thm-3-1 law: prolongation preserves fibered products -----

struct ProductPreservationReport {
    size_t dim_product_then_prolong = 0;
    size_t dim_prolong_then_product = 0;
    bool point_checks = false; // sampled points respect the projections

    bool pass() const {
        return dim_product_then_prolong == dim_prolong_then_product && point_checks;
    }
};

ProductPreservationReport check_prolong_preserves_fibered_product(size_t n, size_t b, size_t c,
                                                                  const AlgebraPtr& W,
                                                                  uint64_t seed);

} // namespace weil
