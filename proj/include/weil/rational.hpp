// Exact rational scalars. All coefficient arithmetic in the library runs on
// arbitrary-precision rationals; floating point appears only in the jet
// engine's float mode.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weil {

using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" and decimal literals like "1.25" or "-0.5".
Rat rat_from_string(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& q);

double rat_double(const Rat& q);

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact square root, when the argument is the square of a rational.
std::optional<Rat> rat_sqrt_exact(const Rat& q);

Rat rat_factorial(unsigned n);

// Generalized binomial coefficient r·(r-1)···(r-j+1)/j!.
Rat rat_binomial(const Rat& r, unsigned j);

Rat rat_pow_int(const Rat& base, long e); // e may be negative when base != 0

} // namespace weil
