#pragma once

// Exact arithmetic scalars. GMP supplies the integer and rational types;
// everything downstream assumes value semantics and canonical rationals.

#include <gmpxx.h>

#include <string>

namespace moonshine {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational from machine integers. mpq_class(24, 36) keeps the
// raw pair as-is, so construction funnels through here.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// True (and fills root >= 0) when n is a perfect square.
bool perfect_square(const Int& n, Int& root);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace moonshine
