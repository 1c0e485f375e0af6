// A presentation "vars | relations ; nil k" is the textual source of a Weil
// algebra: the quotient of Q[vars] by the ideal the relations generate,
// truncated at total degree k.
#pragma once

#include <string>
#include <vector>

#include "weil/polynomial.hpp"

namespace weil {

struct Presentation {
    std::vector<std::string> vars;
    std::vector<Poly> relations; // zero constant term, over `vars`
    uint32_t nilpotency_bound = 1;

    size_t nvars() const { return vars.size(); }

    // "x,y | x^2, y^2 ; nil 3"; the empty presentation renders as "| ; nil 1".
    std::string str() const;

    // Canonical form used for structural identity: relations sorted, terms in
    // graded-lex order.  Permuting the relation list does not change the key.
    std::string structural_key() const;
};

// Parses the grammar
//   presentation := vars '|' relations ';' 'nil' nat
//   vars         := empty | ident (',' ident)*
//   relations    := empty | poly (',' poly)*
// An empty relation list is only legal when vars is empty (the algebra Q).
// Errors carry 1-based line/column positions.
Presentation parse_presentation(const std::string& text);

// The checks behind parse_presentation, callable on hand-built values:
// distinct vars, relations over the declared vars with zero constant term,
// bound >= 1.  Throws on violation.
void validate_presentation(const Presentation& p);

} // namespace weil
