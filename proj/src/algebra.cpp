#include "weil/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "weil/errors.hpp"

namespace weil {

namespace {

std::atomic<uint64_t> next_algebra_id{1};

constexpr unsigned long long kMonomialLimit = 200000;

// ----- sparse row helpers (rows sorted ascending by column) -----

SparseVec sparse_axpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
    // a + c*b
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = c * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rat v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental Gauss elimination keyed by the largest column of each row.
struct Eliminator {
    std::map<uint32_t, SparseVec> rows; // pivot column -> row, pivot coeff 1

    void insert(SparseVec r) {
        while (!r.empty()) {
            uint32_t p = r.back().first;
            auto it = rows.find(p);
            if (it == rows.end()) {
                Rat inv = 1 / r.back().second;
                for (auto& [idx, v] : r) v *= inv;
                rows.emplace(p, std::move(r));
                return;
            }
            Rat c = -r.back().second;
            r = sparse_axpy(r, c, it->second);
        }
    }
};

struct QuotientData {
    std::vector<Monomial> cols;                       // monomials of degree < k, ascending
    std::map<Monomial, uint32_t, GrlexLess> col_index;
    std::vector<Monomial> basis;                      // non-pivot columns, ascending
    std::vector<int> basis_pos;                       // col -> basis index or -1
    std::vector<SparseVec> subst;                     // col -> expansion over basis indices
};

// Builds the span of {m*g truncated below degree k} and reduces; returns the
// standard monomials and the substitution table.  With basis_only set the
// substitution step is skipped (used by the bound-consistency probe).
QuotientData reduce_presentation(const Presentation& pres, uint32_t k, bool basis_only) {
    size_t n = pres.nvars();
    if (count_monomials(n, k > 0 ? k - 1 : 0) > kMonomialLimit)
        throw BuildLimitError("presentation needs more than " + std::to_string(kMonomialLimit) +
                              " monomials below the nilpotency bound");

    QuotientData q;
    q.cols = enumerate_monomials(n, k - 1);
    for (uint32_t i = 0; i < q.cols.size(); ++i) q.col_index.emplace(q.cols[i], i);

    Eliminator elim;
    for (const Poly& g : pres.relations) {
        uint32_t mind = g.min_degree();
        if (mind >= k) continue; // every multiple is truncated away
        for (const Monomial& m : enumerate_monomials(n, k - 1 - mind)) {
            SparseVec row;
            for (const auto& [gm, gc] : g.terms()) {
                Monomial prod = m * gm;
                if (prod.degree() >= k) continue;
                row.emplace_back(q.col_index.at(prod), gc);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (!row.empty()) elim.insert(std::move(row));
        }
    }

    if (elim.rows.count(0))
        throw NotWeilError("the ideal contains 1; the quotient is the zero ring");

    q.basis_pos.assign(q.cols.size(), -1);
    for (uint32_t c = 0; c < q.cols.size(); ++c) {
        if (!elim.rows.count(c)) {
            q.basis_pos[c] = static_cast<int>(q.basis.size());
            q.basis.push_back(q.cols[c]);
        }
    }
    if (q.basis.empty()) throw DegenerateQuotientError("quotient has dimension zero");
    if (basis_only) return q;

    // Back-substitution in ascending pivot order: afterwards every column
    // expands over basis monomials only.
    q.subst.resize(q.cols.size());
    for (uint32_t c = 0; c < q.cols.size(); ++c)
        if (q.basis_pos[c] >= 0)
            q.subst[c] = {{static_cast<uint32_t>(q.basis_pos[c]), Rat(1)}};
    for (const auto& [p, row] : elim.rows) { // std::map iterates ascending
        SparseVec acc;
        for (const auto& [idx, v] : row) {
            if (idx == p) continue;
            acc = sparse_axpy(acc, -v, q.subst[idx]);
        }
        q.subst[p] = std::move(acc);
    }
    return q;
}

std::string element_coords_str(const std::vector<std::string>& labels, const RatVec& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        bool neg = c[i] < 0;
        Rat a = neg ? Rat(-c[i]) : c[i];
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (labels[i] == "1") {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += labels[i];
        }
    }
    return out.empty() ? "0" : out;
}

RatVec sparse_to_dense(const SparseVec& s, size_t dim) {
    RatVec v(dim, Rat(0));
    for (const auto& [i, q] : s) v[i] = q;
    return v;
}

// Exhaustive law verification: unit, commutativity, associativity, aug
// multiplicative, every non-unit basis element nilpotent.  Returns the
// nilpotency index of the maximal ideal.
uint32_t verify_structure(const WeilAlgebra& A) {
    size_t d = A.dim();
    for (size_t j = 0; j < d; ++j) {
        SparseVec expect{{static_cast<uint32_t>(j), Rat(1)}};
        if (A.product(0, j) != expect || A.product(j, 0) != expect)
            throw NotWeilError("1 is not a unit of the structure table");
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            if (A.product(i, j) != A.product(j, i))
                throw NotWeilError("structure table is not commutative");

    // aug multiplicative: coefficient of 1 in e_i*e_j is delta(i,0)delta(j,0)
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            const SparseVec& p = A.product(i, j);
            Rat c0 = (!p.empty() && p.front().first == 0) ? p.front().second : Rat(0);
            if (c0 != ((i == 0 && j == 0) ? Rat(1) : Rat(0)))
                throw NotWeilError("augmentation is not an algebra homomorphism");
        }

    // associativity on all basis triples, through sparse contraction.  For a
    // commutative table the associator changes sign under reversal and its
    // cyclic sum vanishes, so checking two cyclic shifts per sorted triple
    // covers all six orderings.
    auto mul_row_basis = [&](const SparseVec& s, size_t k) {
        SparseVec acc;
        for (const auto& [t, v] : s) acc = sparse_axpy(acc, v, A.product(t, k));
        return acc;
    };
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j)
            for (size_t k = j; k < d; ++k) {
                SparseVec a1 = mul_row_basis(A.product(i, j), k); // (ij)k
                SparseVec a2 = mul_row_basis(A.product(j, k), i); // i(jk)
                SparseVec a3 = mul_row_basis(A.product(k, i), j); // j(ki)
                if (a1 != a2 || a2 != a3)
                    throw NotWeilError("structure table is not associative");
            }

    // nilpotency of each non-unit basis element
    for (size_t i = 1; i < d; ++i) {
        RatVec p = sparse_to_dense(A.product(i, i), d); // e_i^2
        size_t steps = 2;
        while (!is_zero_vec(p) && steps <= d) {
            RatVec np(d, Rat(0));
            for (size_t t = 0; t < d; ++t) {
                if (p[t] == 0) continue;
                for (const auto& [u, w] : A.product(t, i)) np[u] += p[t] * w;
            }
            p = std::move(np);
            ++steps;
        }
        if (!is_zero_vec(p))
            throw NotWeilError("basis element '" + A.basis_label(i) + "' is not nilpotent");
    }

    // nilpotency index of the maximal ideal via subspace powers
    if (d == 1) return 1;
    std::vector<RatVec> gens;
    for (size_t i = 1; i < d; ++i) {
        RatVec v(d, Rat(0));
        v[i] = 1;
        gens.push_back(std::move(v));
    }
    LinSubspace power = LinSubspace::span(d, gens);
    uint32_t p = 1;
    while (power.dim() > 0) {
        if (p > d) throw NotWeilError("maximal ideal is not nilpotent");
        std::vector<RatVec> next;
        for (size_t r = 0; r < power.dim(); ++r)
            for (size_t i = 1; i < d; ++i)
                next.push_back(A.mul_coords(power.rows().row(r), sparse_to_dense({{(uint32_t)i, Rat(1)}}, d)));
        power = LinSubspace::span(d, next);
        ++p;
    }
    return p;
}

} // namespace

std::vector<std::string> WeilAlgebra::basis_labels() const {
    std::vector<std::string> out;
    out.reserve(dim());
    for (size_t i = 0; i < dim(); ++i) out.push_back(basis_label(i));
    return out;
}

Element WeilAlgebra::zero() const {
    return Element{shared_from_this(), RatVec(dim(), Rat(0))};
}

Element WeilAlgebra::one() const {
    RatVec c(dim(), Rat(0));
    c[0] = 1;
    return Element{shared_from_this(), std::move(c)};
}

Element WeilAlgebra::element(RatVec coords) const {
    if (coords.size() != dim()) throw MismatchError("coordinate vector has the wrong length");
    return Element{shared_from_this(), std::move(coords)};
}

Element WeilAlgebra::basis_element(size_t i) const {
    RatVec c(dim(), Rat(0));
    c.at(i) = 1;
    return Element{shared_from_this(), std::move(c)};
}

Element WeilAlgebra::generator(size_t i) const {
    return Element{shared_from_this(), generators_.at(i)};
}

Element WeilAlgebra::from_poly(const Poly& p) const {
    if (p.nvars() != pres_.nvars()) throw MismatchError("polynomial over the wrong variables");
    Element acc = zero();
    for (const auto& [m, coeff] : p.terms()) {
        Element term = one();
        for (size_t v = 0; v < m.nvars(); ++v)
            for (uint32_t e = 0; e < m.e[v]; ++e) term = multiply(term, generator(v));
        acc = acc + coeff * term;
    }
    return acc;
}

Element WeilAlgebra::parse_element(const std::string& text) const {
    return from_poly(parse_poly(text, pres_.vars));
}

RatVec WeilAlgebra::mul_coords(const RatVec& a, const RatVec& b) const {
    RatVec out(dim(), Rat(0));
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            Rat f = a[i] * b[j];
            for (const auto& [t, v] : product(i, j)) out[t] += f * v;
        }
    }
    return out;
}

std::string Element::str() const { return element_coords_str(alg->basis_labels(), c); }

AlgebraPtr build_weil_algebra(const Presentation& pres, const BuildOptions& opts) {
    validate_presentation(pres);
    uint32_t k = pres.nilpotency_bound;
    QuotientData q = reduce_presentation(pres, k, /*basis_only=*/false);

    if (opts.verify_bound) {
        QuotientData probe = reduce_presentation(pres, k + 1, /*basis_only=*/true);
        if (probe.basis.size() != q.basis.size())
            throw NotWeilError("nilpotency bound " + std::to_string(k) +
                               " is inconsistent: the quotient grows when rebuilt one degree higher");
    }

    size_t d = q.basis.size();
    std::shared_ptr<WeilAlgebra> A(new WeilAlgebra());
    A->id_ = next_algebra_id.fetch_add(1);
    A->pres_ = pres;
    A->key_ = pres.structural_key();
    A->basis_ = q.basis;
    A->table_.assign(d * d, {});
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            Monomial prod = q.basis[i] * q.basis[j];
            SparseVec row;
            if (prod.degree() < k) row = q.subst[q.col_index.at(prod)];
            A->table_[i * d + j] = row;
            A->table_[j * d + i] = std::move(row);
        }
    A->generators_.reserve(pres.nvars());
    for (size_t v = 0; v < pres.nvars(); ++v) {
        Monomial m = Monomial::var(pres.nvars(), v);
        SparseVec s;
        if (m.degree() < k) s = q.subst[q.col_index.at(m)];
        A->generators_.push_back(sparse_to_dense(s, d));
    }
    A->nil_index_ = verify_structure(*A);
    return A;
}

AlgebraPtr make_algebra_from_table(Presentation pres, std::vector<Monomial> basis,
                                   std::vector<SparseVec> table,
                                   std::vector<RatVec> generator_elements) {
    validate_presentation(pres);
    if (basis.empty() || !basis[0].is_unit())
        throw NotWeilError("assembled basis must start with the unit monomial");
    if (table.size() != basis.size() * basis.size())
        throw NotWeilError("assembled table has the wrong shape");
    if (generator_elements.size() != pres.nvars())
        throw NotWeilError("one generator element per variable is required");

    std::shared_ptr<WeilAlgebra> A(new WeilAlgebra());
    A->id_ = next_algebra_id.fetch_add(1);
    A->pres_ = std::move(pres);
    A->key_ = A->pres_.structural_key();
    A->basis_ = std::move(basis);
    A->table_ = std::move(table);
    A->generators_ = std::move(generator_elements);
    A->nil_index_ = verify_structure(*A);
    return A;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && a->key() == b->key());
}

void require_same_algebra(const Element& a, const Element& b) {
    if (!same_algebra(a.alg, b.alg))
        throw MismatchError("elements belong to different algebras");
}

Element operator+(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    return Element{a.alg, add_vec(a.c, b.c)};
}

Element operator-(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    return Element{a.alg, sub_vec(a.c, b.c)};
}

Element operator-(const Element& a) { return Element{a.alg, scale_vec(Rat(-1), a.c)}; }

Element operator*(const Rat& c, const Element& a) { return Element{a.alg, scale_vec(c, a.c)}; }

bool operator==(const Element& a, const Element& b) {
    return same_algebra(a.alg, b.alg) && a.c == b.c;
}

Element multiply(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    return Element{a.alg, a.alg->mul_coords(a.c, b.c)};
}

Element element_pow(const Element& a, uint32_t n) {
    Element acc = a.alg->one();
    for (uint32_t i = 0; i < n; ++i) acc = multiply(acc, a);
    return acc;
}

Rat augment(const Element& a) { return a.c.empty() ? Rat(0) : a.c[0]; }

std::optional<uint32_t> nilpotency_index(const Element& a) {
    if (augment(a) != 0) return std::nullopt;
    Element p = a;
    uint32_t idx = 1;
    while (!p.is_zero()) {
        p = multiply(p, a);
        ++idx;
        if (idx > a.alg->dim() + 1)
            throw NotWeilError("element with zero augmentation fails to be nilpotent");
    }
    return idx;
}

} // namespace weil
