#include "weil/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "weil/errors.hpp"

namespace weil {

std::string Presentation::str() const {
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ",";
        out += vars[i];
    }
    out += out.empty() ? "| " : " | ";
    for (size_t i = 0; i < relations.size(); ++i) {
        if (i) out += ", ";
        out += relations[i].str(vars);
    }
    out += " ; nil " + std::to_string(nilpotency_bound);
    return out;
}

std::string Presentation::structural_key() const {
    std::vector<std::string> rels;
    rels.reserve(relations.size());
    for (const Poly& r : relations) rels.push_back(r.str(vars));
    std::sort(rels.begin(), rels.end());
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ",";
        out += vars[i];
    }
    out += "|";
    for (size_t i = 0; i < rels.size(); ++i) {
        if (i) out += ",";
        out += rels[i];
    }
    out += ";" + std::to_string(nilpotency_bound);
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    std::string ident() {
        skip_ws();
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected a variable name");
        std::string name;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            name += text[pos];
            advance();
        }
        return name;
    }

    // Text up to (not including) the next top-level occurrence of one of the
    // stop characters; parentheses nest.
    std::string until_any(const std::string& stops, int& l0, int& c0) {
        skip_ws();
        l0 = line;
        c0 = col;
        std::string out;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (depth == 0 && stops.find(c) != std::string::npos) break;
            if (c == '(') ++depth;
            if (c == ')') --depth;
            out += c;
            advance();
        }
        return out;
    }
};

} // namespace

Presentation parse_presentation(const std::string& text) {
    Cursor cur{text};
    Presentation p;

    // variable list
    if (cur.peek() != '|') {
        p.vars.push_back(cur.ident());
        while (cur.eat(',')) p.vars.push_back(cur.ident());
    }
    if (!cur.eat('|')) cur.fail("expected '|'");

    std::set<std::string> seen(p.vars.begin(), p.vars.end());
    if (seen.size() != p.vars.size()) throw ParseError("duplicate variable name", 1, 1);

    // relation list
    while (cur.peek() != ';') {
        if (cur.at_end()) cur.fail("expected ';'");
        int l0, c0;
        std::string chunk = cur.until_any(",;", l0, c0);
        if (chunk.empty()) cur.fail("expected a relation polynomial");
        Poly rel = parse_poly(chunk, p.vars, l0, c0);
        if (rel.constant_term() != 0)
            throw ParseError("relation has a nonzero constant term", l0, c0);
        if (rel.is_zero()) throw ParseError("relation is identically zero", l0, c0);
        p.relations.push_back(std::move(rel));
        if (cur.peek() == ',') cur.eat(',');
    }
    cur.eat(';');

    // nil clause
    std::string kw = cur.ident();
    if (kw != "nil") cur.fail("expected 'nil'");
    cur.skip_ws();
    if (cur.pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[cur.pos])))
        cur.fail("expected a nilpotency bound");
    unsigned long k = 0;
    while (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.pos]))) {
        k = k * 10 + static_cast<unsigned long>(text[cur.pos] - '0');
        if (k > 64) cur.fail("nilpotency bound too large");
        cur.advance();
    }
    if (k == 0) cur.fail("nilpotency bound must be at least 1");
    p.nilpotency_bound = static_cast<uint32_t>(k);
    if (!cur.at_end()) cur.fail("trailing input after presentation");

    if (p.relations.empty() && !p.vars.empty())
        throw ParseError("empty relation list is only allowed with no variables", 1, 1);

    validate_presentation(p);
    return p;
}

void validate_presentation(const Presentation& p) {
    std::set<std::string> seen(p.vars.begin(), p.vars.end());
    if (seen.size() != p.vars.size()) throw Error("duplicate variable name");
    if (p.nilpotency_bound < 1) throw Error("nilpotency bound must be at least 1");
    for (const Poly& r : p.relations) {
        if (r.nvars() != p.vars.size()) throw Error("relation is over the wrong variable space");
        if (r.constant_term() != 0)
            throw Error("relation has a nonzero constant term: " + r.str(p.vars));
    }
}

} // namespace weil
