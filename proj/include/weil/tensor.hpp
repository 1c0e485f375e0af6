// The tensor product of Weil algebras: juxtaposed presentation on disjoint
// variables, basis the pairwise products of the factor bases, nilpotency
// bound k1 + k2 - 1.  Functorial in both arguments.
#pragma once

#include "weil/hom.hpp"

namespace weil {

struct TensorProduct {
    AlgebraPtr algebra;
    AlgebraPtr left, right;
    AlgebraHom inj1, inj2; // canonical unit-tensor injections
    std::vector<std::vector<uint32_t>> pair_index;        // [i][j] -> basis index
    std::vector<std::pair<uint32_t, uint32_t>> factor_of; // basis index -> (i, j)
};

TensorProduct tensor_infinity(const AlgebraPtr& W1, const AlgebraPtr& W2);

// The juxtaposed presentation the tensor algebra carries; exposed so the
// quotient route can be run against the assembled table.
Presentation tensor_presentation(const AlgebraPtr& W1, const AlgebraPtr& W2);

// f1 (x) f2 between two assembled tensor products.
AlgebraHom tensor_hom(const TensorProduct& S, const TensorProduct& T, const AlgebraHom& f1,
                      const AlgebraHom& f2);

// Keeps `a`, renames members of `b` that collide by appending _2, _3, ...
std::vector<std::string> disjoint_names(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

} // namespace weil
