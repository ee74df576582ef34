#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace minkdef {

/// Exact arbitrary-precision rational. GMP keeps values canonical
/// (lowest terms, positive denominator), which the field layer relies on
/// for decidable equality.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rat& x) { return sgn(x); }

/// Exact square root of a non-negative integer if it is a perfect square.
std::optional<Int> sqrt_int_exact(const Int& n);

/// Exact square root of a non-negative rational if one exists in Q.
std::optional<Rat> sqrt_rat_exact(const Rat& x);

/// Largest square divisor removed: returns (s, f) with n = s^2 * f and f
/// square-free up to the trial-division bound. Workbench radicands are
/// desk-scale, so plain trial division is enough.
struct SquareFreeSplit {
    Int square_part; // s
    Int free_part;   // f
};
SquareFreeSplit squarefree_split(const Int& n);

/// Square-free d with sqrt(x) = r * sqrt(d) for some rational r, for
/// non-negative rational x. Returns 1 when x is a perfect square.
Int squarefree_kernel(const Rat& x);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& text);

} // namespace minkdef
