#include "weil/rational.hpp"

#include "weil/errors.hpp"

namespace weil {

Rat rat_from_string(std::string_view text) {
    std::string s(text);
    // trim
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw Error("empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string intpart = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) throw Error("malformed decimal literal '" + s + "'");
        for (char c : frac)
            if (c < '0' || c > '9') throw Error("malformed decimal literal '" + s + "'");
        bool neg = false;
        if (!intpart.empty() && (intpart[0] == '-' || intpart[0] == '+')) {
            neg = intpart[0] == '-';
            intpart.erase(intpart.begin());
        }
        if (intpart.empty()) intpart = "0";
        mpz_class num(intpart + frac);
        mpz_class den(1);
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rat q(num, den);
        q.canonicalize();
        return neg ? Rat(-q) : q;
    }

    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rat(n);
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw Error("zero denominator in '" + s + "'");
        Rat q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal '" + s + "'");
    }
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_double(const Rat& q) { return q.get_d(); }

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    mpz_class ns, nr, ds, dr;
    mpz_sqrtrem(ns.get_mpz_t(), nr.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrtrem(ds.get_mpz_t(), dr.get_mpz_t(), q.get_den().get_mpz_t());
    if (nr != 0 || dr != 0) return std::nullopt;
    Rat r(ns, ds);
    r.canonicalize();
    return r;
}

Rat rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

Rat rat_binomial(const Rat& r, unsigned j) {
    Rat acc = 1;
    for (unsigned i = 0; i < j; ++i) acc *= r - Rat(static_cast<long>(i));
    return acc / rat_factorial(j);
}

Rat rat_pow_int(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw DomainError("zero base with negative exponent");
        return 1 / rat_pow_int(base, -e);
    }
    Rat acc = 1;
    Rat b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace weil
