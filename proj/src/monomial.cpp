#include "weil/monomial.hpp"

#include <algorithm>

namespace weil {

std::string Monomial::str(const std::vector<std::string>& vars) const {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

static void enumerate_rec(size_t nvars, size_t idx, uint32_t left, Monomial& cur,
                          std::vector<Monomial>& out) {
    if (idx == nvars) {
        out.push_back(cur);
        return;
    }
    for (uint32_t p = 0; p <= left; ++p) {
        cur.e[idx] = p;
        enumerate_rec(nvars, idx + 1, left - p, cur, out);
    }
    cur.e[idx] = 0;
}

std::vector<Monomial> enumerate_monomials(size_t nvars, uint32_t max_degree) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    enumerate_rec(nvars, 0, max_degree, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

unsigned long long count_monomials(size_t nvars, uint32_t max_degree) {
    // C(nvars + max_degree, nvars), saturating
    unsigned long long c = 1;
    for (size_t i = 1; i <= nvars; ++i) {
        c = c * (max_degree + i) / i;
        if (c > (1ull << 62)) return 1ull << 62;
    }
    return c;
}

} // namespace weil
