#include "weil/category.hpp"

#include <algorithm>

#include "weil/errors.hpp"

namespace weil {

AlgebraPtr terminal() {
    static AlgebraPtr R = [] {
        Presentation p;
        p.nilpotency_bound = 1;
        return build_weil_algebra(p);
    }();
    return R;
}

namespace {

RatVec dense_unit(size_t dim) {
    RatVec v(dim, Rat(0));
    v[0] = 1;
    return v;
}

// Nilpotency index of the maximal ideal of a subspace's table, computed on
// the subspace coordinates before the algebra object exists.
uint32_t table_nilpotency(size_t r, const std::vector<SparseVec>& table) {
    if (r == 1) return 1;
    std::vector<RatVec> gens;
    for (size_t i = 1; i < r; ++i) {
        RatVec v(r, Rat(0));
        v[i] = 1;
        gens.push_back(std::move(v));
    }
    LinSubspace power = LinSubspace::span(r, gens);
    uint32_t p = 1;
    while (power.dim() > 0) {
        if (p > r) throw NotWeilError("subalgebra maximal ideal is not nilpotent");
        std::vector<RatVec> next;
        for (size_t row = 0; row < power.dim(); ++row) {
            const RatVec& v = power.rows().row(row);
            for (size_t i = 1; i < r; ++i) {
                RatVec out(r, Rat(0));
                for (size_t t = 0; t < r; ++t) {
                    if (v[t] == 0) continue;
                    for (const auto& [u, w] : table[t * r + i]) out[u] += v[t] * w;
                }
                next.push_back(std::move(out));
            }
        }
        power = LinSubspace::span(r, next);
        ++p;
    }
    return p;
}

} // namespace

SubalgebraView as_subalgebra(const AlgebraPtr& ambient, const LinSubspace& V) {
    size_t n = ambient->dim();
    if (V.ambient_dim() != n) throw MismatchError("subspace does not live in the ambient algebra");
    if (!V.contains(dense_unit(n)))
        throw NotWeilError("subspace does not contain 1");

    if (V.dim() == n) {
        return SubalgebraView{ambient, AlgebraHom::identity(ambient), V, ambient};
    }

    size_t r = V.dim();
    // In RREF the unit vector is literally the first row (pivot column 0).
    if (V.pivots().empty() || V.pivots()[0] != 0 || V.rows().row(0) != dense_unit(n))
        throw NotWeilError("echelon basis of a unital subspace must start with 1");

    // closure and structure constants in the echelon basis
    std::vector<SparseVec> table(r * r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            RatVec prod = ambient->mul_coords(V.rows().row(i), V.rows().row(j));
            if (!V.contains(prod))
                throw NotWeilError("subspace is not closed under multiplication");
            RatVec coords = V.coords_of(prod);
            SparseVec row;
            for (size_t t = 0; t < r; ++t)
                if (coords[t] != 0) row.emplace_back(static_cast<uint32_t>(t), coords[t]);
            table[i * r + j] = row;
            table[j * r + i] = std::move(row);
        }

    uint32_t nu = table_nilpotency(r, table);

    Presentation pres;
    for (size_t i = 1; i < r; ++i) pres.vars.push_back("e" + std::to_string(i));
    size_t nv = r - 1;
    for (size_t i = 1; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            Poly rel(nv);
            Monomial m(nv);
            m.e[i - 1] += 1;
            m.e[j - 1] += 1;
            rel.add_term(m, 1);
            for (const auto& [t, c] : table[i * r + j]) {
                if (t == 0) throw NotWeilError("product of maximal-ideal elements has nonzero augmentation");
                rel.add_term(Monomial::var(nv, t - 1), -c);
            }
            if (!rel.is_zero()) pres.relations.push_back(std::move(rel));
        }
    pres.nilpotency_bound = nu;
    if (pres.relations.empty() && !pres.vars.empty()) {
        // every product of generators is a free monomial: cannot happen for a
        // nilpotent table of dimension >= 2, but keep the quotient honest
        throw NotWeilError("subalgebra table produced no relations");
    }

    std::vector<Monomial> basis;
    basis.emplace_back(nv);
    for (size_t i = 1; i < r; ++i) basis.push_back(Monomial::var(nv, i - 1));
    std::vector<RatVec> gens;
    for (size_t i = 1; i < r; ++i) {
        RatVec g(r, Rat(0));
        g[i] = 1;
        gens.push_back(std::move(g));
    }

    AlgebraPtr sub = make_algebra_from_table(std::move(pres), std::move(basis), std::move(table),
                                             std::move(gens));

    RatMatrix inc(n, r);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < n; ++i) inc.at(i, j) = V.rows().at(j, i);
    AlgebraHom inclusion = AlgebraHom::make(sub, ambient, std::move(inc));
    return SubalgebraView{sub, inclusion, V, ambient};
}

SubalgebraView full_view(const AlgebraPtr& W) {
    return SubalgebraView{W, AlgebraHom::identity(W), LinSubspace::full(W->dim()), W};
}

AlgebraHom restrict_hom(const SubalgebraView& src, const SubalgebraView& dst,
                        const AlgebraHom& ambient_hom) {
    if (!same_algebra(ambient_hom.src(), src.ambient) ||
        !same_algebra(ambient_hom.dst(), dst.ambient))
        throw MismatchError("ambient hom does not connect the two ambients");
    size_t rs = src.algebra->dim(), rd = dst.algebra->dim();
    RatMatrix m(rd, rs);
    for (size_t j = 0; j < rs; ++j) {
        RatVec img = ambient_hom.apply_coords(src.space.rows().row(j));
        if (!dst.space.contains(img))
            throw MismatchError("ambient hom does not carry the source subalgebra into the target");
        RatVec coords = dst.space.coords_of(img);
        for (size_t i = 0; i < rd; ++i) m.at(i, j) = coords[i];
    }
    return AlgebraHom::make(src.algebra, dst.algebra, std::move(m));
}

void Diagram::validate() const {
    for (const auto& [id, alg] : nodes)
        if (!alg) throw MismatchError("diagram node '" + id + "' has no algebra");
    for (const DiagramEdge& e : edges) {
        auto fi = nodes.find(e.from), ti = nodes.find(e.to);
        if (fi == nodes.end() || ti == nodes.end())
            throw MismatchError("diagram edge endpoints must be declared nodes");
        if (!same_algebra(e.hom.src(), fi->second) || !same_algebra(e.hom.dst(), ti->second))
            throw MismatchError("diagram edge hom does not match its endpoints");
    }
}

void validate_cone(const Diagram& d, const Cone& c) {
    for (const auto& [id, alg] : d.nodes) {
        auto it = c.legs.find(id);
        if (it == c.legs.end()) throw MismatchError("cone is missing a leg for node '" + id + "'");
        if (!same_algebra(it->second.src(), c.apex) || !same_algebra(it->second.dst(), alg))
            throw MismatchError("cone leg for node '" + id + "' has wrong endpoints");
    }
    for (const DiagramEdge& e : d.edges) {
        AlgebraHom lhs = compose(e.hom, c.legs.at(e.from));
        if (!(lhs.matrix() == c.legs.at(e.to).matrix()))
            throw MismatchError("cone does not commute with edge " + e.from + " -> " + e.to);
    }
}

ProductW product_of(const std::vector<AlgebraPtr>& factors) {
    ProductW P;
    P.factors = factors;

    Presentation pres;
    std::vector<size_t> var_offset;
    for (const AlgebraPtr& f : factors) {
        var_offset.push_back(pres.vars.size());
        for (const std::string& v : disjoint_names(pres.vars, f->presentation().vars))
            pres.vars.push_back(v);
    }
    size_t nv = pres.vars.size();
    uint32_t bound = 1;
    for (size_t f = 0; f < factors.size(); ++f) {
        for (const Poly& r : factors[f]->presentation().relations)
            pres.relations.push_back(r.shifted(nv, var_offset[f]));
        bound = std::max(bound, factors[f]->presentation().nilpotency_bound);
    }
    // cross products of generators from different factors vanish
    for (size_t a = 0; a < factors.size(); ++a)
        for (size_t b = a + 1; b < factors.size(); ++b)
            for (size_t u = 0; u < factors[a]->presentation().nvars(); ++u)
                for (size_t v = 0; v < factors[b]->presentation().nvars(); ++v) {
                    Monomial m(nv);
                    m.e[var_offset[a] + u] += 1;
                    m.e[var_offset[b] + v] += 1;
                    pres.relations.push_back(Poly::monomial(m));
                }
    pres.nilpotency_bound = bound;

    // basis: 1 plus the shifted non-unit basis of each factor, sorted
    struct Entry {
        Monomial m;
        uint32_t factor, idx; // factor basis index >= 1; unit entry uses 0,0
    };
    std::vector<Entry> entries;
    entries.push_back({Monomial(nv), 0, 0});
    for (uint32_t f = 0; f < factors.size(); ++f)
        for (uint32_t i = 1; i < factors[f]->dim(); ++i) {
            Monomial m(nv);
            const Monomial& src = factors[f]->basis()[i];
            for (size_t v = 0; v < src.nvars(); ++v) m.e[var_offset[f] + v] = src.e[v];
            entries.push_back({std::move(m), f, i});
        }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return grlex_less(a.m, b.m); });

    size_t d = entries.size();
    std::vector<Monomial> basis;
    basis.reserve(d);
    P.emb_idx.assign(factors.size(), {});
    for (size_t f = 0; f < factors.size(); ++f)
        P.emb_idx[f].assign(factors[f]->dim(), 0);
    std::vector<std::pair<uint32_t, uint32_t>> origin(d); // (factor, idx) with unit at 0
    for (uint32_t pos = 0; pos < d; ++pos) {
        basis.push_back(entries[pos].m);
        origin[pos] = {entries[pos].factor, entries[pos].idx};
        if (entries[pos].idx >= 1) P.emb_idx[entries[pos].factor][entries[pos].idx] = pos;
    }

    std::vector<SparseVec> table(d * d);
    for (uint32_t aI = 0; aI < d; ++aI)
        for (uint32_t bI = 0; bI < d; ++bI) {
            auto [fa, ia] = origin[aI];
            auto [fb, ib] = origin[bI];
            SparseVec row;
            if (ia == 0) {
                row = {{bI, Rat(1)}};
            } else if (ib == 0) {
                row = {{aI, Rat(1)}};
            } else if (fa == fb) {
                for (const auto& [t, c] : factors[fa]->product(ia, ib)) {
                    if (t == 0)
                        throw NotWeilError("factor table has non-local products");
                    row.emplace_back(P.emb_idx[fa][t], c);
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
            } // different factors: product is zero
            table[aI * d + bI] = std::move(row);
        }

    std::vector<RatVec> gens;
    for (size_t f = 0; f < factors.size(); ++f)
        for (size_t v = 0; v < factors[f]->presentation().nvars(); ++v) {
            Element g = factors[f]->generator(v);
            RatVec vec(d, Rat(0));
            if (g.c[0] != 0) throw NotWeilError("factor generator has nonzero augmentation");
            for (uint32_t i = 1; i < factors[f]->dim(); ++i) vec[P.emb_idx[f][i]] = g.c[i];
            gens.push_back(std::move(vec));
        }

    P.algebra = make_algebra_from_table(std::move(pres), std::move(basis), std::move(table),
                                        std::move(gens));

    for (size_t f = 0; f < factors.size(); ++f) {
        RatMatrix m(factors[f]->dim(), d);
        m.at(0, 0) = 1;
        for (uint32_t i = 1; i < factors[f]->dim(); ++i) m.at(i, P.emb_idx[f][i]) = 1;
        P.projections.push_back(AlgebraHom::make(P.algebra, factors[f], std::move(m)));
    }
    return P;
}

AlgebraHom pair_into_product(const ProductW& P, const std::vector<AlgebraHom>& legs) {
    if (legs.size() != P.factors.size())
        throw MismatchError("pairing needs one leg per product factor");
    for (size_t f = 0; f < legs.size(); ++f) {
        if (!same_algebra(legs[f].dst(), P.factors[f]))
            throw MismatchError("pairing leg targets the wrong factor");
        if (!same_algebra(legs[f].src(), legs[0].src()))
            throw MismatchError("pairing legs do not share a source");
    }
    AlgebraPtr srcAlg = legs.empty() ? terminal() : legs[0].src();
    size_t ds = srcAlg->dim(), d = P.algebra->dim();
    RatMatrix m(d, ds);
    for (size_t j = 0; j < ds; ++j) m.at(0, j) = (j == 0) ? 1 : 0;
    for (size_t f = 0; f < legs.size(); ++f)
        for (uint32_t i = 1; i < P.factors[f]->dim(); ++i)
            for (size_t j = 0; j < ds; ++j) m.at(P.emb_idx[f][i], j) = legs[f].matrix().at(i, j);
    return AlgebraHom::make(srcAlg, P.algebra, std::move(m));
}

LimitResult equalizer(const AlgebraHom& f, const AlgebraHom& g) {
    if (!same_algebra(f.src(), g.src()) || !same_algebra(f.dst(), g.dst()))
        throw MismatchError("equalizer needs a parallel pair");
    const AlgebraPtr& A = f.src();
    RatMatrix diff = f.matrix() - g.matrix();
    LinSubspace K = LinSubspace::span(A->dim(), [&] {
        RatMatrix ker = diff.kernel();
        std::vector<RatVec> rows;
        for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
        return rows;
    }());

    SubalgebraView view = as_subalgebra(A, K);

    LimitResult L;
    L.algebra = view.algebra;
    L.space = view.space;
    L.ambient = A;
    L.cone.apex = view.algebra;
    L.cone.legs.emplace("src", view.inclusion);
    L.cone.legs.emplace("dst", compose(f, view.inclusion));

    auto P = std::make_shared<ProductW>(product_of({A, f.dst()}));
    L.embedding = pair_into_product(*P, {view.inclusion, compose(f, view.inclusion)});
    L.product = P;
    L.node_order = {"src", "dst"};
    return L;
}

AlgebraHom factor_equalizer(const LimitResult& eq, const AlgebraHom& h) {
    const AlgebraHom& incl = eq.cone.legs.at("src");
    if (!same_algebra(h.dst(), incl.dst()))
        throw MismatchError("cone hom does not land in the equalizer's ambient");
    size_t r = eq.algebra->dim(), n = h.src()->dim();
    RatMatrix u(r, n);
    RatMatrix hT = h.matrix().transposed();
    for (size_t j = 0; j < n; ++j) {
        if (!eq.space.contains(hT.row(j)))
            throw MismatchError("cone hom does not equalize the pair");
        RatVec coords = eq.space.coords_of(hT.row(j));
        for (size_t i = 0; i < r; ++i) u.at(i, j) = coords[i];
    }
    AlgebraHom fac = AlgebraHom::make(h.src(), eq.algebra, std::move(u));
    if (!(compose(incl, fac).matrix() == h.matrix()))
        throw MismatchError("factorization failed to reproduce the cone hom");
    return fac;
}

LimitResult product_w(const AlgebraPtr& W1, const AlgebraPtr& W2) {
    auto P = std::make_shared<ProductW>(product_of({W1, W2}));
    LimitResult L;
    L.algebra = P->algebra;
    L.ambient = P->algebra;
    L.space = LinSubspace::full(P->algebra->dim());
    L.embedding = AlgebraHom::identity(P->algebra);
    L.cone.apex = P->algebra;
    L.cone.legs.emplace("0", P->projections[0]);
    L.cone.legs.emplace("1", P->projections[1]);
    L.product = P;
    L.node_order = {"0", "1"};
    return L;
}

LimitResult finite_limit(const Diagram& d) {
    d.validate();
    if (d.nodes.empty()) {
        LimitResult L;
        L.algebra = terminal();
        L.ambient = terminal();
        L.space = LinSubspace::full(1);
        L.embedding = AlgebraHom::identity(terminal());
        L.cone.apex = terminal();
        auto P = std::make_shared<ProductW>(product_of({}));
        L.product = P;
        return L;
    }

    std::vector<std::string> order;
    std::vector<AlgebraPtr> algebras;
    std::map<std::string, size_t> node_pos;
    for (const auto& [id, alg] : d.nodes) {
        node_pos.emplace(id, order.size());
        order.push_back(id);
        algebras.push_back(alg);
    }
    auto P = std::make_shared<ProductW>(product_of(algebras));

    LinSubspace V = LinSubspace::full(P->algebra->dim());
    for (const DiagramEdge& e : d.edges) {
        RatMatrix diff = compose(e.hom, P->projections[node_pos.at(e.from)]).matrix() -
                         P->projections[node_pos.at(e.to)].matrix();
        RatMatrix ker = diff.kernel();
        std::vector<RatVec> rows;
        for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
        V = V.intersect(LinSubspace::span(P->algebra->dim(), rows));
    }

    SubalgebraView view = as_subalgebra(P->algebra, V);

    LimitResult L;
    L.algebra = view.algebra;
    L.space = view.space;
    L.ambient = P->algebra;
    L.embedding = view.inclusion;
    L.cone.apex = view.algebra;
    for (size_t f = 0; f < order.size(); ++f)
        L.cone.legs.emplace(order[f], compose(P->projections[f], view.inclusion));
    L.product = P;
    L.node_order = order;
    validate_cone(d, L.cone);
    return L;
}

AlgebraHom factor_cone(const LimitResult& lim, const Cone& c) {
    if (!lim.product) throw MismatchError("limit carries no product data");
    if (lim.node_order.empty()) return augmentation_hom(c.apex, lim.algebra);
    std::vector<AlgebraHom> legs;
    legs.reserve(lim.node_order.size());
    for (const std::string& id : lim.node_order) legs.push_back(c.legs.at(id));
    AlgebraHom h = pair_into_product(*lim.product, legs);
    size_t r = lim.algebra->dim(), n = h.src()->dim();
    RatMatrix u(r, n);
    RatMatrix hT = h.matrix().transposed();
    for (size_t j = 0; j < n; ++j) {
        if (!lim.space.contains(hT.row(j)))
            throw MismatchError("cone does not factor through the limit subspace");
        RatVec coords = lim.space.coords_of(hT.row(j));
        for (size_t i = 0; i < r; ++i) u.at(i, j) = coords[i];
    }
    AlgebraHom fac = AlgebraHom::make(c.apex, lim.algebra, std::move(u));
    for (const std::string& id : lim.node_order)
        if (!(compose(lim.cone.legs.at(id), fac).matrix() == c.legs.at(id).matrix()))
            throw MismatchError("factorization does not reproduce the cone leg for '" + id + "'");
    return fac;
}

FiberedTensor fibered_tensor(const AlgebraPtr& W1, const AlgebraPtr& W2) {
    FiberedTensor F;
    F.tensor = tensor_infinity(W1, W2);
    size_t n1 = W1->presentation().nvars(), n2 = W2->presentation().nvars();

    std::vector<Element> images_p, images_q;
    for (size_t v = 0; v < n1; ++v) {
        images_p.push_back(W2->zero());
        images_q.push_back(W2->zero());
    }
    for (size_t v = 0; v < n2; ++v) {
        images_p.push_back(W2->generator(v));
        images_q.push_back(W2->zero());
    }
    F.proj_like = hom_from_generator_images(F.tensor.algebra, W2, images_p);
    F.constant = hom_from_generator_images(F.tensor.algebra, W2, images_q);

    RatMatrix diff = F.proj_like.matrix() - F.constant.matrix();
    RatMatrix ker = diff.kernel();
    std::vector<RatVec> rows;
    for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
    LinSubspace K = LinSubspace::span(F.tensor.algebra->dim(), rows);

    SubalgebraView view = as_subalgebra(F.tensor.algebra, K);
    F.algebra = view.algebra;
    F.inclusion = view.inclusion;
    F.space = view.space;
    return F;
}

AssocReport check_fibered_assoc(const AlgebraPtr& W1, const AlgebraPtr& W2,
                                const AlgebraPtr& W3) {
    TensorProduct T12 = tensor_infinity(W1, W2);
    TensorProduct T123 = tensor_infinity(T12.algebra, W3);
    TensorProduct T23 = tensor_infinity(W2, W3);
    const AlgebraPtr& A = T123.algebra;
    const AlgebraPtr& B = T23.algebra;

    size_t n1 = W1->presentation().nvars();
    size_t n2 = W2->presentation().nvars();
    size_t n3 = W3->presentation().nvars();

    std::vector<Element> img_a, img_b, img_c;
    for (size_t v = 0; v < n1; ++v) {
        img_a.push_back(B->zero());
        img_b.push_back(B->zero());
        img_c.push_back(B->zero());
    }
    for (size_t v = 0; v < n2; ++v) {
        img_a.push_back(T23.inj1.apply(W2->generator(v)));
        img_b.push_back(B->zero());
        img_c.push_back(B->zero());
    }
    for (size_t v = 0; v < n3; ++v) {
        img_a.push_back(T23.inj2.apply(W3->generator(v)));
        img_b.push_back(T23.inj2.apply(W3->generator(v)));
        img_c.push_back(B->zero());
    }
    AlgebraHom a = hom_from_generator_images(A, B, img_a);
    AlgebraHom b = hom_from_generator_images(A, B, img_b);
    AlgebraHom c = hom_from_generator_images(A, B, img_c);

    auto kernel_space = [&](const AlgebraHom& u, const AlgebraHom& v) {
        RatMatrix ker = (u.matrix() - v.matrix()).kernel();
        std::vector<RatVec> rows;
        for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
        return LinSubspace::span(A->dim(), rows);
    };

    LinSubspace left = kernel_space(a, b).intersect(kernel_space(b, c));
    LinSubspace right = kernel_space(a, c);

    AssocReport rep;
    rep.dim_left = left.dim();
    rep.dim_right = right.dim();
    rep.bijective = (left == right);
    return rep;
}

Diagram augmented(const Diagram& d) {
    Diagram out = d;
    if (out.nodes.count("__R")) throw MismatchError("node id '__R' is reserved");
    out.nodes.emplace("__R", terminal());
    for (const auto& [id, alg] : d.nodes)
        out.edges.push_back({id, "__R", augmentation_hom(alg, terminal())});
    return out;
}

ComparisonReport check_limit_fibered_tensor_swap(const AlgebraPtr& W, const Diagram& d) {
    // right side: W (x)~ Lim D
    LimitResult L2 = finite_limit(d);
    FiberedTensor R = fibered_tensor(W, L2.algebra);

    // left side: Lim of the fibered-tensored augmented diagram
    Diagram daug = augmented(d);
    std::map<std::string, FiberedTensor> ft;
    for (const auto& [id, alg] : daug.nodes) ft.emplace(id, fibered_tensor(W, alg));

    Diagram dt;
    for (const auto& [id, f] : ft) dt.nodes.emplace(id, f.algebra);
    for (const DiagramEdge& e : daug.edges) {
        const FiberedTensor& fu = ft.at(e.from);
        const FiberedTensor& fv = ft.at(e.to);
        AlgebraHom ambient = tensor_hom(fu.tensor, fv.tensor, AlgebraHom::identity(W), e.hom);
        dt.edges.push_back({e.from, e.to, restrict_hom(fu.view(), fv.view(), ambient)});
    }
    LimitResult L1 = finite_limit(dt);

    // canonical comparison: the cone with apex W (x)~ Lim D whose legs are
    // the fibered-tensored limit legs, factored through L1
    Cone cone;
    cone.apex = R.algebra;
    for (const auto& [id, f] : ft) {
        AlgebraHom base_leg = (id == "__R") ? augmentation_hom(L2.algebra, terminal())
                                            : L2.cone.legs.at(id);
        AlgebraHom ambient = tensor_hom(R.tensor, f.tensor, AlgebraHom::identity(W), base_leg);
        cone.legs.emplace(id, restrict_hom(R.view(), f.view(), ambient));
    }
    validate_cone(dt, cone);
    AlgebraHom u = factor_cone(L1, cone);

    ComparisonReport rep;
    rep.dim_left = L1.algebra->dim();
    rep.dim_right = R.algebra->dim();
    rep.bijective = u.is_bijective();
    return rep;
}

ComparisonReport check_tensor_preserves_equalizer(const AlgebraPtr& W, const AlgebraHom& f,
                                                  const AlgebraHom& g) {
    LimitResult E = equalizer(f, g);
    TensorProduct TA = tensor_infinity(W, f.src());
    TensorProduct TB = tensor_infinity(W, f.dst());
    AlgebraHom F = tensor_hom(TA, TB, AlgebraHom::identity(W), f);
    AlgebraHom G = tensor_hom(TA, TB, AlgebraHom::identity(W), g);
    LimitResult E2 = equalizer(F, G);

    TensorProduct TE = tensor_infinity(W, E.algebra);
    AlgebraHom incl = tensor_hom(TE, TA, AlgebraHom::identity(W), E.cone.legs.at("src"));
    LinSubspace image = LinSubspace::full(TE.algebra->dim()).image_under(incl.matrix());

    ComparisonReport rep;
    rep.dim_left = E2.space.dim();
    rep.dim_right = image.dim();
    rep.bijective = (image == E2.space);
    return rep;
}

} // namespace weil
