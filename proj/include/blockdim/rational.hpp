#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace blockdim {

using Rational = mpq_class;
using BigInt = mpz_class;

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

/// Accepts "p/q", "p" and an optional leading sign. Throws InputError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Throws InputError when q is not an integer or does not fit.
std::int64_t to_int64(const Rational& q);

/// Exact inverse of a square integer matrix; throws InputError when singular.
std::vector<std::vector<Rational>> inverse(const IntMatrix& m);

} // namespace blockdim
