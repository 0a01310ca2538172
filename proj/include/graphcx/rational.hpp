// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace graphcx {

// Exact arithmetic throughout: chain coefficients are arbitrary-precision
// rationals, matrix elimination runs fraction-free over arbitrary-precision
// integers.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat half() { return make_rat(1, 2); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Parses "p" or "p/q"; used by the chain/tensor file readers.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace graphcx
