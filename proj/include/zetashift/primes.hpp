#pragma once

#include <cstdint>
#include <vector>

namespace zetashift::primes {

// All primes up to `limit`, strictly increasing. Immutable after
// construction; safe to share read-only across scan workers.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    // number of primes <= x (x within the table limit)
    std::size_t count_below(double x) const;
};

// Segmented sieve of Eratosthenes; limit >= 2 or an empty-table error.
PrimeTable sieve_up_to(std::uint64_t limit);

// p_m, 1-indexed as in the usual p_1 = 2 convention.
std::uint64_t nth_prime(const PrimeTable& table, std::size_t m);

bool is_prime(std::uint64_t n);

}  // namespace zetashift::primes
