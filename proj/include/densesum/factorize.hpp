#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "densesum/errors.hpp"
#include "densesum/rational.hpp"

namespace densesum {

struct PrimeTable {
    std::uint64_t limit;
    std::vector<std::uint64_t> primes;
};

struct FactorPower {
    std::uint64_t prime;
    std::uint32_t exp;
    bool operator==(const FactorPower&) const = default;
};

struct Factorization {
    std::uint64_t value;
    std::vector<FactorPower> factors; // primes strictly increasing
};

// Instrumentation for the recursive search: per recursion level, how often
// each m shows up across the calls of that level.
struct SearchStats {
    // level -> list of (m, occurrences)
    std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> per_level;
};

PrimeTable sieve_primes(std::uint64_t limit);

// {m in M : gcd(m, prod(P)) > 1}, via a product tree over M and the modulus
// prod(P) pushed down as remainders. Input order preserved.
std::vector<std::uint64_t> divisible_subset(std::span<const std::uint64_t> m,
                                            std::span<const std::uint64_t> p);

// {(m, p) : p in P divides m in M}, via balanced recursive splitting of P
// with divisible_subset as the filter. Pairs are grouped by m in input order,
// primes ascending within a group.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
prime_factors_among(std::span<const std::uint64_t> m, std::span<const std::uint64_t> p,
                    SearchStats* stats = nullptr);

// Full factorizations of all m_i in [1, s]; small primes (<= sqrt(s)) found
// batch-wise, the at-most-one residual prime > sqrt(s) by exact division.
std::vector<Factorization> factorize_batch(std::span<const std::uint64_t> m, std::uint64_t s,
                                           SearchStats* stats = nullptr);

std::uint64_t isqrt_u64(std::uint64_t x);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t x);

} // namespace densesum
