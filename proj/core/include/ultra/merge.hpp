#ifndef ULTRA_MERGE_HPP
#define ULTRA_MERGE_HPP

#include <span>
#include <vector>

#include "ultra/series.hpp"
#include "ultra/solver.hpp"

namespace ultra {

/// Multi-core series parameters: one shared (m, a) and per-core (b_i, x_i).
struct MergedParams {
    Complex m, a;
    std::vector<Complex> bs;
    std::vector<Complex> xs;
};

/// Multi-term equation p*y^a = q + sum_i x_i * y^(b_i).
struct MultiTermEq {
    Complex p, a, q;
    std::vector<std::pair<Complex, Complex>> terms;  ///< (x_i, b_i)
};

struct MergeOptions {
    int max_total_order = 60;  ///< truncation on sum(l_i)
    double rel_tol = 1e-16;
    int divergence_window = 50;
    int u_max = 16;
};

/// Merged master number
///   <m; a; b_1..b_K; l_1..l_K> = prod_{g=1}^{sum(l)-1} (m - a*g + sum b_i*l_i).
/// A single entry reduces to master_number; invariant under paired swaps of
/// (b_i, l_i).
Complex merged_master_number(Complex m, Complex a, std::span<const Complex> bs,
                             std::span<const int> ells);

/// Multi-index series
///   sum over (l_1..l_K) of [prod x_i^(l_i)/l_i!] * <m;a;b..;l..>,
/// with the zero multi-index handled by the add-one/subtract-one rule so the
/// constant term is m. Blocks are summed by total order; the usual
/// three-consecutive relative test applies to per-order block sums.
SeriesEval merged_series(const MergedParams& params, const MergeOptions& opts = {});

/// Root n of a multi-term equation via the merged series:
///   y = v * <1; a; b_1..; x_1 v^(b_1)/(a q), ...>,
///   v = |q/p|^(1/a) e^(i(arg(q/p) + 2 pi n)/a).
/// No continuation fallback: outside convergence the report carries the
/// non-converged status.
RootReport solve_multiterm(int n, const MultiTermEq& eq, const MergeOptions& opts = {});

/// Residual of a multi-term equation under u-branch powers.
double verify_multiterm_root(const MultiTermEq& eq, Complex Y, int u);

} // namespace ultra

#endif
