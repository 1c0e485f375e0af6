#include "weil/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "weil/errors.hpp"

namespace weil {

Poly Poly::constant(size_t nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(size_t nvars, size_t i) {
    Poly p(nvars);
    p.add_term(Monomial::var(nvars, i), 1);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Monomial(nvars_));
    return it == terms_.end() ? Rat(0) : it->second;
}

uint32_t Poly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

uint32_t Poly::min_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::shifted(size_t new_nvars, size_t offset) const {
    Poly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial mm(new_nvars);
        for (size_t i = 0; i < nvars_; ++i) mm.e[offset + i] = m.e[i];
        r.terms_.emplace(mm, c);
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    // display order: higher degree first, then dictionary order within a degree
    std::vector<const std::pair<const Monomial, Rat>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        uint32_t da = a->first.degree(), db = b->first.degree();
        if (da != db) return da > db;
        return grlex_less(a->first, b->first);
    });
    std::string out;
    for (const auto* it : order) {
        const Rat& c = it->second;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = it->first.str(vars);
        if (ms == "1") {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += ms;
        }
    }
    return out;
}

namespace {

// Recursive-descent parser with position tracking.
class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars, int line0, int col0)
        : text_(text), vars_(vars), line_(line0), col_(col0) {}

    Poly parse() {
        Poly p = parse_sum();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;
    int line_, col_;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly parse_sum() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                acc = acc + parse_term();
            } else if (c == '-') {
                eat('-');
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (peek() == '*') {
            eat('*');
            acc = acc * parse_factor();
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (peek() == '^') {
            eat('^');
            unsigned long p = parse_nat();
            Poly acc = Poly::constant(vars_.size(), 1);
            for (unsigned long i = 0; i < p; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    unsigned long parse_nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an exponent");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1000) fail("exponent too large");
            advance();
        }
        return v;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of polynomial");
        char c = text_[pos_];
        if (c == '(') {
            eat('(');
            Poly p = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Poly parse_rational() {
        std::string num;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            num += text_[pos_];
            advance();
        }
        if (pos_ < text_.size() && text_[pos_] == '/') {
            advance();
            std::string den;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                den += text_[pos_];
                advance();
            }
            if (den.empty()) fail("expected a denominator");
            if (Rat(mpz_class(den)) == 0) fail("zero denominator");
            return Poly::constant(vars_.size(), rat_from_string(num + "/" + den));
        }
        return Poly::constant(vars_.size(), rat_from_string(num));
    }

    Poly parse_identifier() {
        int l0 = line_, c0 = col_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            name += text_[pos_];
            advance();
        }
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ParseError("undeclared variable '" + name + "'", l0, c0);
        return Poly::variable(vars_.size(), static_cast<size_t>(it - vars_.begin()));
    }
};

} // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, int line0, int col0) {
    return PolyParser(text, vars, line0, col0).parse();
}

} // namespace weil
