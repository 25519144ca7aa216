#include "zetashift/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetashift/errors.hpp"

namespace zetashift::primes {

namespace {
constexpr std::uint64_t kSegmentSize = 1u << 20;
}

std::size_t PrimeTable::count_below(double x) const {
    if (x < 2.0) return 0;
    const auto bound = static_cast<std::uint64_t>(x);
    auto it = std::upper_bound(primes.begin(), primes.end(), bound);
    return static_cast<std::size_t>(it - primes.begin());
}

PrimeTable sieve_up_to(std::uint64_t limit) {
    if (limit < 2)
        throw usage_error("sieve_up_to: limit " + std::to_string(limit) +
                          " < 2 would produce an empty table");

    PrimeTable table;
    table.limit = limit;

    // base primes up to sqrt(limit)
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<char> base(root + 1, 1);
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
    }

    const double dl = static_cast<double>(limit);
    table.primes.reserve(static_cast<std::size_t>(dl / std::log(std::max(3.0, dl)) * 1.2) + 16);

    std::vector<char> segment(kSegmentSize);
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegmentSize) {
        const std::uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
        std::fill(segment.begin(), segment.begin() + (hi - lo + 1), 1);
        for (std::uint64_t p : base_primes) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= hi; j += p) segment[j - lo] = 0;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (segment[n - lo]) table.primes.push_back(n);
    }
    return table;
}

std::uint64_t nth_prime(const PrimeTable& table, std::size_t m) {
    if (m == 0 || m > table.primes.size())
        throw usage_error("nth_prime: index " + std::to_string(m) + " out of range (table holds " +
                          std::to_string(table.primes.size()) + " primes)");
    return table.primes[m - 1];
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace zetashift::primes
