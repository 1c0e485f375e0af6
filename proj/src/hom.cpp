#include "weil/hom.hpp"

#include "weil/errors.hpp"

namespace weil {

AlgebraHom AlgebraHom::make(AlgebraPtr src, AlgebraPtr dst, RatMatrix matrix) {
    size_t ds = src->dim(), dd = dst->dim();
    if (matrix.rows() != dd || matrix.cols() != ds)
        throw MismatchError("hom matrix shape does not match the algebras");

    // 1 -> 1
    for (size_t i = 0; i < dd; ++i)
        if (matrix.at(i, 0) != ((i == 0) ? Rat(1) : Rat(0)))
            throw NotWeilError("hom does not map 1 to 1");

    // aug_dst(phi(e_j)) = aug_src(e_j): first row must be the unit row, which
    // is exactly preservation of the maximal ideal.
    for (size_t j = 1; j < ds; ++j)
        if (matrix.at(0, j) != 0)
            throw NotWeilError("hom does not preserve the maximal ideal");

    // multiplicativity on all basis pairs (exact)
    std::vector<RatVec> cols(ds, RatVec(dd, Rat(0)));
    for (size_t j = 0; j < ds; ++j)
        for (size_t i = 0; i < dd; ++i) cols[j][i] = matrix.at(i, j);
    for (size_t i = 0; i < ds; ++i)
        for (size_t j = i; j < ds; ++j) {
            RatVec lhs(dd, Rat(0));
            for (const auto& [t, v] : src->product(i, j))
                for (size_t r = 0; r < dd; ++r) lhs[r] += v * cols[t][r];
            RatVec rhs = dst->mul_coords(cols[i], cols[j]);
            if (lhs != rhs)
                throw NotWeilError("hom is not multiplicative on basis pair (" +
                                   src->basis_label(i) + ", " + src->basis_label(j) + ")");
        }

    AlgebraHom h;
    h.src_ = std::move(src);
    h.dst_ = std::move(dst);
    h.m_ = std::move(matrix);
    return h;
}

AlgebraHom AlgebraHom::identity(const AlgebraPtr& W) {
    return make(W, W, RatMatrix::identity(W->dim()));
}

Element AlgebraHom::apply(const Element& a) const {
    if (!same_algebra(a.alg, src_)) throw MismatchError("element is not in the hom's source");
    return Element{dst_, m_.apply(a.c)};
}

AlgebraHom hom_from_generator_images(const AlgebraPtr& src, const AlgebraPtr& dst,
                                     const std::vector<Element>& images) {
    const Presentation& pres = src->presentation();
    if (images.size() != pres.nvars())
        throw MismatchError("expected one image per generator of the source");
    for (const Element& im : images) {
        if (!same_algebra(im.alg, dst)) throw MismatchError("image lies in the wrong algebra");
        if (augment(im) != 0)
            throw NotInMaximalIdealError("generator image '" + im.str() +
                                         "' has nonzero augmentation");
    }

    // the map descends to the quotient iff every relation dies
    for (const Poly& rel : pres.relations) {
        Element value = dst->zero();
        for (const auto& [m, coeff] : rel.terms()) {
            Element term = dst->one();
            for (size_t v = 0; v < m.nvars(); ++v)
                for (uint32_t e = 0; e < m.e[v]; ++e) term = multiply(term, images[v]);
            value = value + coeff * term;
        }
        if (!value.is_zero())
            throw RelationViolatedError("generator images do not kill the relation '" +
                                            rel.str(pres.vars) + "'",
                                        rel.str(pres.vars));
    }

    // column for each basis monomial = product of images
    RatMatrix m(dst->dim(), src->dim());
    for (size_t j = 0; j < src->dim(); ++j) {
        const Monomial& mono = src->basis()[j];
        Element value = dst->one();
        for (size_t v = 0; v < mono.nvars(); ++v)
            for (uint32_t e = 0; e < mono.e[v]; ++e) value = multiply(value, images[v]);
        for (size_t i = 0; i < dst->dim(); ++i) m.at(i, j) = value.c[i];
    }
    return AlgebraHom::make(src, dst, std::move(m));
}

AlgebraHom hom_from_image_strings(const AlgebraPtr& src, const AlgebraPtr& dst,
                                  const std::vector<std::string>& images) {
    std::vector<Element> elems;
    elems.reserve(images.size());
    for (const std::string& s : images) elems.push_back(dst->parse_element(s));
    return hom_from_generator_images(src, dst, elems);
}

AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) {
    if (!same_algebra(f.dst(), g.src()))
        throw MismatchError("compose: inner hom's target is not the outer hom's source");
    return AlgebraHom::make(f.src(), g.dst(), g.matrix() * f.matrix());
}

AlgebraHom augmentation_hom(const AlgebraPtr& W, const AlgebraPtr& terminal) {
    if (terminal->dim() != 1) throw MismatchError("augmentation target must be one-dimensional");
    RatMatrix m(1, W->dim());
    m.at(0, 0) = 1;
    return AlgebraHom::make(W, terminal, std::move(m));
}

} // namespace weil
