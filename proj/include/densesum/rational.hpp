#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace densesum {

using bigint = mpz_class;
using rational = mpq_class;

// Parses "3/2", "1.5", "42480" into an exact rational.
rational parse_rational(const std::string& s);

bigint floor_to_int(const rational& q);
bigint ceil_to_int(const rational& q);

bool fits_u64(const bigint& z);
std::uint64_t to_u64(const bigint& z); // throws invalid_input if negative or too large

// Smallest dyadic L/256 with L/256 >= log2(x), for x >= 1. Exact whenever x
// is a power of two; otherwise an upper bound within 1/256.
rational log2_upper(std::uint64_t x);

std::string to_string(const rational& q);

} // namespace densesum
