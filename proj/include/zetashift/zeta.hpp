#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zetashift/dirichlet.hpp"
#include "zetashift/numeric.hpp"

namespace zetashift::zeta {

// The fixed evaluation point s = sigma + it of the shift experiments.
struct EvalPoint {
    double sigma;
    double t;

    EvalPoint(double sigma_, double t_);
    cplx as_complex() const { return {sigma, t}; }
};

struct ZetaValue {
    cplx value;
    double error;  // truncation bound of the Euler-Maclaurin tail plus roundoff
};

// Euler-Maclaurin evaluation of zeta(s) for Re(s) > 0, s != 1.
//   sum_{k<N} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Bernoulli corrections.
// If `tolerance` is given and the error estimate exceeds it, throws
// accuracy_error carrying the best value.
ZetaValue zeta_eval(cplx point, std::size_t n_terms, std::size_t n_corrections,
                    double tolerance = 0.0);

// zeta_eval with n_terms = max(50, ceil(2|Im|)), n_corrections = 8.
ZetaValue zeta_auto(cplx point);

std::size_t auto_terms(double t);

// log zeta on the branch fixed by horizontal continuation from Re = 3.
struct LogZetaValue {
    cplx value;
    long winding;    // count of 2*pi adjustments relative to the principal log
    double quality;  // estimated absolute error; exp(value) matches zeta within 10x
};

LogZetaValue log_zeta(cplx point, double tolerance);

// zeta along the vertical grid sigma + i(t0 + j dt), j in [0, count);
// phasor-rotation kernel re-anchored to direct evaluation every
// `anchor_interval` steps.
std::vector<ZetaValue> zeta_grid(double sigma, double t0, double dt, std::size_t count,
                                 std::size_t anchor_interval = 512);

// Branch-continuous log zeta over the same vertical grid, anchored by
// horizontal continuation at the first unflagged node. Nodes where
// |zeta| < zero_floor are flagged and excluded; the branch re-anchors after
// each flagged stretch.
struct LogZetaGrid {
    std::vector<cplx> values;     // undefined where flagged
    std::vector<char> zero_flag;  // 1 = |zeta| below floor, node excluded
    double max_quality = 0.0;
};

LogZetaGrid log_zeta_grid(double sigma, double t0, double dt, std::size_t count,
                          double zero_floor);

// tau-windows where some shifted evaluation came within `threshold` of a zero
struct ZeroProximityReport {
    std::vector<std::pair<double, double>> tau_windows;  // disjoint, sorted
    double threshold = 0.0;

    double total_measure() const;
};

ZeroProximityReport zero_proximity_scan(const EvalPoint& s, const dirichlet::ShiftVector& shifts,
                                        double tau_lo, double tau_hi, double grid_step,
                                        double floor);

}  // namespace zetashift::zeta
