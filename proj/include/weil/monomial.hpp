// Monomials as exponent vectors over a fixed, ordered list of variables,
// compared in graded-lexicographic order (lower total degree first; within a
// degree, earlier-declared variables come first, so x < y and x^2 < x*y < y^2).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weil {

struct Monomial {
    std::vector<uint32_t> e; // one exponent per declared variable

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}

    size_t nvars() const { return e.size(); }
    uint32_t degree() const {
        uint32_t d = 0;
        for (uint32_t x : e) d += x;
        return d;
    }
    bool is_unit() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    static Monomial var(size_t nvars, size_t i, uint32_t p = 1) {
        Monomial m(nvars);
        m.e[i] = p;
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // "1", "x", "x^2*y", ...
    std::string str(const std::vector<std::string>& vars) const;
};

// Graded-lexicographic ordering as described above.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

// All monomials in `nvars` variables of total degree <= max_degree, sorted
// ascending in graded-lex order (so the unit monomial comes first).
std::vector<Monomial> enumerate_monomials(size_t nvars, uint32_t max_degree);

// Number of such monomials; used to refuse absurdly large quotients.
unsigned long long count_monomials(size_t nvars, uint32_t max_degree);

} // namespace weil
