// The category of Weil algebras as a computational object: diagrams,
// equalizers, fibered products over Q (which are the categorical products,
// since every hom preserves augmentation), general finite limits, and the
// fibered tensor product with its universal property.
//
// Limit objects are genuine Weil algebras: a limit subspace is computed in
// reduced echelon form inside its ambient algebra and then re-presented, with
// one generator per non-unit echelon basis vector and the multiplication
// table as relations.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weil/tensor.hpp"

namespace weil {

// The one-dimensional algebra Q, terminal in the category.
AlgebraPtr terminal();

// ----- subalgebras -----

struct SubalgebraView {
    AlgebraPtr algebra;   // re-presented subalgebra (the ambient itself when full)
    AlgebraHom inclusion; // algebra -> ambient
    LinSubspace space;    // echelon rows against the ambient basis
    AlgebraPtr ambient;
};

// Re-presents a unital, multiplicatively closed subspace as a Weil algebra.
// Throws NotWeilError when the subspace misses 1 or is not closed.
SubalgebraView as_subalgebra(const AlgebraPtr& ambient, const LinSubspace& V);

// The whole algebra as a view of itself.
SubalgebraView full_view(const AlgebraPtr& W);

// The hom induced between two subalgebras by an ambient hom that maps the
// first subspace into the second; throws MismatchError when it does not.
AlgebraHom restrict_hom(const SubalgebraView& src, const SubalgebraView& dst,
                        const AlgebraHom& ambient_hom);

// ----- diagrams, cones, limits -----

struct DiagramEdge {
    std::string from, to;
    AlgebraHom hom;
};

struct Diagram {
    std::map<std::string, AlgebraPtr> nodes;
    std::vector<DiagramEdge> edges;

    void validate() const;
};

struct Cone {
    AlgebraPtr apex;
    std::map<std::string, AlgebraHom> legs;
};

// Checks that every leg exists and commutes with every edge.
void validate_cone(const Diagram& d, const Cone& c);

struct ProductW {
    AlgebraPtr algebra;
    std::vector<AlgebraPtr> factors;
    std::vector<AlgebraHom> projections;
    // emb_idx[f][i] = product basis index of factor f's basis element i >= 1
    std::vector<std::vector<uint32_t>> emb_idx;
};

// Fibered product over Q of any number of factors, assembled directly:
// basis 1 (+) m_1 (+) ... (+) m_n with cross products zero.
ProductW product_of(const std::vector<AlgebraPtr>& factors);

// The pairing <legs> : src -> product; legs must share a source.
AlgebraHom pair_into_product(const ProductW& P, const std::vector<AlgebraHom>& legs);

struct LimitResult {
    AlgebraPtr algebra;
    Cone cone;
    AlgebraHom embedding; // into the ambient (the product of the nodes)
    LinSubspace space;    // inside `ambient`
    AlgebraPtr ambient;
    std::shared_ptr<const ProductW> product; // set for products and finite limits
    std::vector<std::string> node_order;     // factor order used by `product`
};

// Equalizer of a parallel pair: the subspace {w : f(w) = g(w)}, which always
// contains 1 and is closed under multiplication, re-presented as an algebra.
// Cone legs are keyed "src" and "dst"; the ambient is f's source.
LimitResult equalizer(const AlgebraHom& f, const AlgebraHom& g);

// Unique factorization through an equalizer of a hom h with f.h = g.h.
AlgebraHom factor_equalizer(const LimitResult& eq, const AlgebraHom& h);

// Binary product in the category; cone legs keyed "0" and "1".
LimitResult product_w(const AlgebraPtr& W1, const AlgebraPtr& W2);

// Limit of a finite diagram: iterated fibered product over the nodes, then
// one equalizer condition per edge.  The empty diagram yields the terminal
// algebra.
LimitResult finite_limit(const Diagram& d);

// Unique factorization of a cone through a finite limit.
AlgebraHom factor_cone(const LimitResult& lim, const Cone& c);

// ----- the fibered tensor -----

struct FiberedTensor {
    TensorProduct tensor;   // the ambient W1 (x) W2
    AlgebraPtr algebra;     // the equalizer subalgebra, re-presented
    AlgebraHom inclusion;   // algebra -> tensor.algebra
    LinSubspace space;
    AlgebraHom proj_like;   // W1-generators -> 0, W2-generators -> themselves
    AlgebraHom constant;    // every generator -> 0

    SubalgebraView view() const { return {algebra, inclusion, space, tensor.algebra}; }
};

// W1 (x)~ W2: the equalizer of the two induced homs W1 (x) W2 => W2.
FiberedTensor fibered_tensor(const AlgebraPtr& W1, const AlgebraPtr& W2);

// ----- whole-proposition checks at the category level -----

struct AssocReport {
    size_t dim_left = 0, dim_right = 0;
    bool bijective = false; // echelon bases coincide in the shared ambient
    bool pass() const { return bijective; }
};

// (W1 (x)~ W2) (x)~ W3 versus W1 (x)~ (W2 (x) W3), both cut out of the triple
// tensor: the left side as ker(a-b) /\ ker(b-c), the right as ker(a-c), for
// the three induced homs onto W2 (x) W3.
AssocReport check_fibered_assoc(const AlgebraPtr& W1, const AlgebraPtr& W2, const AlgebraPtr& W3);

struct ComparisonReport {
    size_t dim_left = 0, dim_right = 0;
    bool bijective = false;
    bool pass() const { return bijective; }
};

// Lim (W (x)~ D) versus W (x)~ (Lim D).  The functor is applied to the
// augmented diagram (terminal node plus augmentation edges adjoined), which
// leaves limits in the category unchanged but is what makes the identity
// hold for disconnected diagrams.
ComparisonReport check_limit_fibered_tensor_swap(const AlgebraPtr& W, const Diagram& d);

// Tensoring with W preserves equalizers: compares W (x) Eq(f,g) with
// Eq(id (x) f, id (x) g) inside W (x) src.
ComparisonReport check_tensor_preserves_equalizer(const AlgebraPtr& W, const AlgebraHom& f,
                                                  const AlgebraHom& g);

// Adjoins the terminal node (id "__R") and one augmentation edge per node.
Diagram augmented(const Diagram& d);

} // namespace weil
