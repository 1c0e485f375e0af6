#include "weil/tensor.hpp"

#include <algorithm>
#include <set>

#include "weil/errors.hpp"

namespace weil {

std::vector<std::string> disjoint_names(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
    std::set<std::string> used(a.begin(), a.end());
    std::vector<std::string> out;
    out.reserve(b.size());
    for (const std::string& name : b) {
        std::string candidate = name;
        for (int i = 2; used.count(candidate); ++i) candidate = name + "_" + std::to_string(i);
        used.insert(candidate);
        out.push_back(candidate);
    }
    return out;
}

Presentation tensor_presentation(const AlgebraPtr& W1, const AlgebraPtr& W2) {
    const Presentation& p1 = W1->presentation();
    const Presentation& p2 = W2->presentation();
    size_t n1 = p1.nvars(), n2 = p2.nvars();

    Presentation p;
    p.vars = p1.vars;
    for (const std::string& v : disjoint_names(p1.vars, p2.vars)) p.vars.push_back(v);
    for (const Poly& r : p1.relations) p.relations.push_back(r.shifted(n1 + n2, 0));
    for (const Poly& r : p2.relations) p.relations.push_back(r.shifted(n1 + n2, n1));
    p.nilpotency_bound = p1.nilpotency_bound + p2.nilpotency_bound - 1;
    return p;
}

TensorProduct tensor_infinity(const AlgebraPtr& W1, const AlgebraPtr& W2) {
    Presentation pres = tensor_presentation(W1, W2);
    size_t n1 = W1->presentation().nvars();
    size_t nv = pres.nvars();
    size_t d1 = W1->dim(), d2 = W2->dim(), d = d1 * d2;

    // basis = pairwise products, sorted graded-lex over the joint variables
    struct Entry {
        Monomial m;
        uint32_t i, j;
    };
    std::vector<Entry> entries;
    entries.reserve(d);
    for (uint32_t i = 0; i < d1; ++i)
        for (uint32_t j = 0; j < d2; ++j) {
            Monomial m(nv);
            const Monomial& a = W1->basis()[i];
            const Monomial& b = W2->basis()[j];
            for (size_t v = 0; v < a.nvars(); ++v) m.e[v] = a.e[v];
            for (size_t v = 0; v < b.nvars(); ++v) m.e[n1 + v] = b.e[v];
            entries.push_back({std::move(m), i, j});
        }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return grlex_less(a.m, b.m); });

    TensorProduct T;
    T.left = W1;
    T.right = W2;
    T.pair_index.assign(d1, std::vector<uint32_t>(d2, 0));
    T.factor_of.resize(d);
    std::vector<Monomial> basis;
    basis.reserve(d);
    for (uint32_t idx = 0; idx < d; ++idx) {
        basis.push_back(entries[idx].m);
        T.pair_index[entries[idx].i][entries[idx].j] = idx;
        T.factor_of[idx] = {entries[idx].i, entries[idx].j};
    }

    // table: (i1,j1)*(i2,j2) = (i1*i2) (x) (j1*j2)
    std::vector<SparseVec> table(d * d);
    for (uint32_t a = 0; a < d; ++a)
        for (uint32_t b = 0; b < d; ++b) {
            auto [i1, j1] = T.factor_of[a];
            auto [i2, j2] = T.factor_of[b];
            SparseVec row;
            for (const auto& [t1, c1] : W1->product(i1, i2))
                for (const auto& [t2, c2] : W2->product(j1, j2))
                    row.emplace_back(T.pair_index[t1][t2], c1 * c2);
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            table[a * d + b] = std::move(row);
        }

    // generator elements and injections
    std::vector<RatVec> gens;
    gens.reserve(nv);
    for (size_t v = 0; v < n1; ++v) {
        RatVec g(d, Rat(0));
        Element e = W1->generator(v);
        for (uint32_t i = 0; i < d1; ++i) g[T.pair_index[i][0]] = e.c[i];
        gens.push_back(std::move(g));
    }
    for (size_t v = 0; v < W2->presentation().nvars(); ++v) {
        RatVec g(d, Rat(0));
        Element e = W2->generator(v);
        for (uint32_t j = 0; j < d2; ++j) g[T.pair_index[0][j]] = e.c[j];
        gens.push_back(std::move(g));
    }

    T.algebra = make_algebra_from_table(std::move(pres), std::move(basis), std::move(table),
                                        std::move(gens));

    RatMatrix m1(d, d1);
    for (uint32_t i = 0; i < d1; ++i) m1.at(T.pair_index[i][0], i) = 1;
    T.inj1 = AlgebraHom::make(W1, T.algebra, std::move(m1));
    RatMatrix m2(d, d2);
    for (uint32_t j = 0; j < d2; ++j) m2.at(T.pair_index[0][j], j) = 1;
    T.inj2 = AlgebraHom::make(W2, T.algebra, std::move(m2));
    return T;
}

AlgebraHom tensor_hom(const TensorProduct& S, const TensorProduct& T, const AlgebraHom& f1,
                      const AlgebraHom& f2) {
    if (!same_algebra(f1.src(), S.left) || !same_algebra(f2.src(), S.right) ||
        !same_algebra(f1.dst(), T.left) || !same_algebra(f2.dst(), T.right))
        throw MismatchError("tensor_hom factors do not match the tensor products");
    size_t d = S.algebra->dim();
    RatMatrix m(T.algebra->dim(), d);
    for (uint32_t s = 0; s < d; ++s) {
        auto [i, j] = S.factor_of[s];
        for (size_t p = 0; p < f1.dst()->dim(); ++p) {
            if (f1.matrix().at(p, i) == 0) continue;
            for (size_t q = 0; q < f2.dst()->dim(); ++q) {
                if (f2.matrix().at(q, j) == 0) continue;
                m.at(T.pair_index[p][q], s) += f1.matrix().at(p, i) * f2.matrix().at(q, j);
            }
        }
    }
    return AlgebraHom::make(S.algebra, T.algebra, std::move(m));
}

} // namespace weil
