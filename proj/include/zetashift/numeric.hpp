#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace zetashift {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// e(x) = exp(2*pi*i*x)
inline cplx unit_phase(double x) {
    const double a = two_pi * x;
    return {std::cos(a), std::sin(a)};
}

// distance to the nearest integer
inline double dist_to_int(double x) {
    return std::abs(x - std::nearbyint(x));
}

// fractional part in [0,1)
inline double frac(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;  // guards against floor rounding at negative epsilons
    return f;
}

// Kahan compensated accumulator for complex terms.
class KahanSum {
  public:
    void add(cplx term) {
        add_part(re_, cre_, term.real());
        add_part(im_, cim_, term.imag());
    }
    cplx value() const { return {re_, im_}; }

  private:
    static void add_part(double& sum, double& comp, double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double re_ = 0.0, im_ = 0.0, cre_ = 0.0, cim_ = 0.0;
};

// Runs fn(chunk_index) for chunk_index in [0, chunk_count) on `workers`
// threads. The chunk decomposition is caller-fixed, so results are identical
// for any worker count; fn must write only to its own chunk's slot.
inline void for_each_chunk(std::size_t chunk_count, unsigned workers,
                           const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || chunk_count <= 1) {
        for (std::size_t i = 0; i < chunk_count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= chunk_count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(workers, chunk_count);
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

}  // namespace zetashift
