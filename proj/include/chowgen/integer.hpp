#pragma once

#include <gmpxx.h>

#include <string>

namespace chowgen {

using Integer = mpz_class;

/// a / b, throwing InternalError unless b divides a.
Integer exact_div(const Integer& a, const Integer& b);

Integer binomial(long n, long k);

/// Non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace chowgen
