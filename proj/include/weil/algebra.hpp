// Finite-dimensional Weil algebras over exact rationals: a monomial basis
// with the unit first, a structure-constant table, and the augmentation that
// reads off the coefficient of 1.  Algebras are immutable and shared by
// pointer; compatibility of elements and homs is structural (two algebras
// built from the same normalized presentation are interchangeable).
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weil/matrix.hpp"
#include "weil/presentation.hpp"

namespace weil {

class WeilAlgebra;
using AlgebraPtr = std::shared_ptr<const WeilAlgebra>;

// Sparse coordinate vector over the basis, sorted by index.
using SparseVec = std::vector<std::pair<uint32_t, Rat>>;

struct Element {
    AlgebraPtr alg;
    RatVec c; // one coordinate per basis monomial

    bool is_zero() const { return is_zero_vec(c); }
    std::string str() const;
};

struct BuildOptions {
    // Rebuild the quotient one degree higher and require the same dimension;
    // catches nilpotency bounds that cut the ideal short.
    bool verify_bound = true;
};

class WeilAlgebra : public std::enable_shared_from_this<WeilAlgebra> {
public:
    size_t dim() const { return basis_.size(); }
    uint64_t id() const { return id_; }
    const Presentation& presentation() const { return pres_; }
    const std::string& key() const { return key_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    std::string basis_label(size_t i) const { return basis_[i].str(pres_.vars); }
    std::vector<std::string> basis_labels() const;

    // Product of basis elements i and j, expanded in the basis.
    const SparseVec& product(size_t i, size_t j) const { return table_[i * dim() + j]; }

    // Smallest p with m^p = 0 for the maximal ideal m.
    uint32_t max_ideal_nilpotency() const { return nil_index_; }

    Element zero() const;
    Element one() const;
    Element element(RatVec coords) const;
    Element basis_element(size_t i) const;
    // Image of the i-th presentation variable (its normal form; may be 0 or a
    // combination when relations rewrite it).
    Element generator(size_t i) const;
    // Evaluates a polynomial over this algebra's variables at the generators.
    Element from_poly(const Poly& p) const;
    // Parses a polynomial expression in the algebra's variables.
    Element parse_element(const std::string& text) const;

    RatVec mul_coords(const RatVec& a, const RatVec& b) const;

private:
    WeilAlgebra() = default;
    friend AlgebraPtr build_weil_algebra(const Presentation&, const BuildOptions&);
    friend AlgebraPtr make_algebra_from_table(Presentation, std::vector<Monomial>,
                                              std::vector<SparseVec>, std::vector<RatVec>);

    uint64_t id_ = 0;
    Presentation pres_;
    std::string key_;
    std::vector<Monomial> basis_;       // unit first, graded-lex ascending
    std::vector<SparseVec> table_;      // dim*dim products
    std::vector<RatVec> generators_;    // normal form of each variable
    uint32_t nil_index_ = 1;
};

// Quotient construction by degree-truncated exact row reduction, followed by
// exhaustive verification of the algebra laws.  Throws NotWeilError /
// DegenerateQuotientError / BuildLimitError.
AlgebraPtr build_weil_algebra(const Presentation& pres, const BuildOptions& opts = {});

// Wraps an explicitly assembled multiplication table (tensor products,
// fibered products, subalgebras).  The same law verification runs; the
// nilpotency bound of `pres` is trusted to describe the table, which the
// caller must guarantee (and the tests cross-check against the quotient
// route).
AlgebraPtr make_algebra_from_table(Presentation pres, std::vector<Monomial> basis,
                                   std::vector<SparseVec> table,
                                   std::vector<RatVec> generator_elements);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
void require_same_algebra(const Element& a, const Element& b);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Rat& c, const Element& a);
bool operator==(const Element& a, const Element& b);

Element multiply(const Element& a, const Element& b);
Element element_pow(const Element& a, uint32_t n);
Rat augment(const Element& a);

// Least p with a^p = 0, or nullopt when aug(a) != 0 (not nilpotent).
std::optional<uint32_t> nilpotency_index(const Element& a);

} // namespace weil
