// Algebra homomorphisms in the category of Weil algebras: linear maps that
// send 1 to 1, are multiplicative on the basis, and commute with the
// augmentations (equivalently, carry maximal ideal into maximal ideal).
// Every constructed hom is validated against all three conditions.
#pragma once

#include <vector>

#include "weil/algebra.hpp"

namespace weil {

class AlgebraHom {
public:
    AlgebraHom() = default;

    // Validates the three homomorphism laws; throws NotWeilError on failure.
    static AlgebraHom make(AlgebraPtr src, AlgebraPtr dst, RatMatrix matrix);

    static AlgebraHom identity(const AlgebraPtr& W);

    const AlgebraPtr& src() const { return src_; }
    const AlgebraPtr& dst() const { return dst_; }
    const RatMatrix& matrix() const { return m_; }

    Element apply(const Element& a) const;
    RatVec apply_coords(const RatVec& a) const { return m_.apply(a); }

    bool is_bijective() const { return src_->dim() == dst_->dim() && m_.rank() == src_->dim(); }

    bool operator==(const AlgebraHom& o) const {
        return same_algebra(src_, o.src_) && same_algebra(dst_, o.dst_) && m_ == o.m_;
    }

private:
    AlgebraPtr src_, dst_;
    RatMatrix m_; // dst.dim x src.dim
};

// The unique hom extending generator -> image; images must lie in the
// maximal ideal of dst and must kill every relation of src.
AlgebraHom hom_from_generator_images(const AlgebraPtr& src, const AlgebraPtr& dst,
                                     const std::vector<Element>& images);

// Convenience: images given as polynomial expressions in dst's variables.
AlgebraHom hom_from_image_strings(const AlgebraPtr& src, const AlgebraPtr& dst,
                                  const std::vector<std::string>& images);

// g after f; requires dst(f) = src(g).
AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f);

// The augmentation as a hom onto the given one-dimensional algebra.
AlgebraHom augmentation_hom(const AlgebraPtr& W, const AlgebraPtr& terminal);

} // namespace weil
