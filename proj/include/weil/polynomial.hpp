// Sparse multivariate polynomials with exact rational coefficients, used for
// presentation relations and for substituting algebra elements into them.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "weil/monomial.hpp"
#include "weil/rational.hpp"

namespace weil {

class Poly {
public:
    Poly() = default;
    explicit Poly(size_t nvars) : nvars_(nvars) {}

    static Poly constant(size_t nvars, const Rat& c);
    static Poly variable(size_t nvars, size_t i);
    static Poly monomial(const Monomial& m, const Rat& c = 1);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }

    Rat constant_term() const;
    uint32_t degree() const;     // 0 for the zero polynomial
    uint32_t min_degree() const; // degree of the graded-lex smallest term; 0 for zero

    void add_term(const Monomial& m, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Rename into a wider variable space: variable i becomes variable
    // offset + i of a polynomial in new_nvars variables.
    Poly shifted(size_t new_nvars, size_t offset) const;

    std::string str(const std::vector<std::string>& vars) const;

private:
    size_t nvars_ = 0;
    std::map<Monomial, Rat, GrlexLess> terms_; // nonzero coefficients only
};

// Parses a polynomial over the given variables.  Grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | identifier | '(' poly ')'
// Positions in errors are 1-based and relative to `text` offset by
// (line0, col0), so callers embedding the text in a larger document report
// honest coordinates.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                int line0 = 1, int col0 = 1);

} // namespace weil
