#pragma once

#include <gmpxx.h>

#include <string>

#include "tropic/errors.hpp"

namespace tropic {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Reduced decimal form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q". Non-reduced or nonpositive-denominator input is
/// rejected unless `normalize` is set, in which case it is canonicalized.
Rat rat_from_string(const std::string& s, bool normalize = false);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

} // namespace tropic
