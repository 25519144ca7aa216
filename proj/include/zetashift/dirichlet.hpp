#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "zetashift/numeric.hpp"
#include "zetashift/primes.hpp"

namespace zetashift::dirichlet {

// Strictly increasing positive shifts d_1 < ... < d_n. `integral` is derived
// from the values at construction.
struct ShiftVector {
    std::vector<double> shifts;
    bool integral = false;

    explicit ShiftVector(std::vector<double> values);
    std::size_t size() const { return shifts.size(); }
    double max_shift() const { return shifts.back(); }
};

// Sum over primes p <= cutoff with the listed primes excluded.
struct PrimeSumSpec {
    double cutoff = 0.0;
    std::vector<std::uint64_t> exclude;  // sorted, all prime

    PrimeSumSpec() = default;
    PrimeSumSpec(double cutoff_x, std::vector<std::uint64_t> excluded);
    bool excludes(std::uint64_t p) const;
};

struct TauGrid {
    double tau0 = 0.0;
    double dtau = 0.0;
    std::size_t count = 0;
};

// Row-major n_shifts x grid.count matrix of complex sums.
struct EvalMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<cplx> data;

    cplx at(std::size_t k, std::size_t j) const { return data[k * cols + j]; }
    cplx& at(std::size_t k, std::size_t j) { return data[k * cols + j]; }
};

// sum_{p <= X, p not excluded} p^{-(s + i d tau)}, compensated summation
cplx prime_sum(cplx s, const PrimeSumSpec& spec, double shift, double tau,
               const primes::PrimeTable& table);

// prime_sum over an arithmetic tau-grid for each shift, via per-prime phase
// rotation re-anchored to direct evaluation every `anchor_interval` steps.
EvalMatrix multi_eval(cplx s, const ShiftVector& shifts, const PrimeSumSpec& spec,
                      const TauGrid& grid, const primes::PrimeTable& table,
                      std::size_t anchor_interval = 1024);

// Numerical mean value (1/T) int_T^{2T} |sum_p a_p p^{-i tau}|^2 dtau against
// the Montgomery-Vaughan prediction sum_p |a_p|^2. Composite midpoint rule.
struct MeanValuePair {
    double lhs = 0.0;
    double rhs = 0.0;
};
MeanValuePair mv_meanvalue_check(const std::map<std::uint64_t, cplx>& coefficients, double T,
                                 double grid_step);

// int over [lo,hi] of |sum_{p<=X, p not in spec.exclude} p^{-(s+i d tau)}|^2
// dtau, composite midpoint at the given step. Used for the tail energy over
// window sets.
double windowed_energy(cplx s, double shift, const PrimeSumSpec& spec, double lo, double hi,
                       double step, const primes::PrimeTable& table);

}  // namespace zetashift::dirichlet
