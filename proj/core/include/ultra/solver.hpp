#ifndef ULTRA_SOLVER_HPP
#define ULTRA_SOLVER_HPP

#include <optional>
#include <utility>

#include "ultra/continuation.hpp"
#include "ultra/rational.hpp"
#include "ultra/series.hpp"

namespace ultra {

/// Three-term equation A*Y^a + B*Y^b + C = 0 with complex exponents.
struct TrinomialEq {
    Complex A, a, B, b, C;
};

/// General two-term problem p*Y^alpha = q + X*Y^beta fed to the series
/// solution Y(N) = v * M(1;alpha;beta;Z).
struct PqProblem {
    Complex p, alpha, q, X, beta;
};

enum class Transform { AB, BC, CA };

const char* to_string(Transform t);

struct SolverOptions {
    SeriesOptions series{};
    int u_max = 16;
    double verify_tol = 1e-9;
    /// Exact exponents, when the caller has them as ratios. Enables exact
    /// period detection and the full root count for rational exponents.
    std::optional<Rational> a_ratio;
    std::optional<Rational> b_ratio;
};

struct PqSolution {
    Complex Y{}, f{}, v{}, V{}, Z{};
    SeriesEval eval{};
    bool z_inside_radius = false;  ///< |Z| < R(alpha, beta) held
};

/// Solve p*Y^alpha = q + X*Y^beta for index N via the series solution.
/// Convergence is checked both against |Z| < R(alpha,beta) and numerically.
PqSolution solve_pq(const PqProblem& prob, int N, const SeriesOptions& opts = {});

/// Equivalent equation with Re(a) > Re(b) > 0, reached by multiplying through
/// by Y^shift and relabeling terms. Root set is unchanged. Exact rational
/// exponents, when supplied, are carried along.
struct NormalizedTrinomial {
    TrinomialEq eq{};
    Complex shift{};
    std::optional<Rational> a_ratio;
    std::optional<Rational> b_ratio;
};

NormalizedTrinomial normalize(const TrinomialEq& eq,
                              std::optional<Rational> a_ratio = std::nullopt,
                              std::optional<Rational> b_ratio = std::nullopt);

/// Root-distribution criterion T = |b/A|^b * |B/a|^a * |(a-b)/C|^(a-b) for a
/// normalized equation with real a > b > 0. T < 1: every root converges via
/// the AB rewriting; T >= 1: roots split between BC and CA.
double t_criterion(const TrinomialEq& eq);

/// One root of a trinomial equation with full verification data. residual is
/// evaluated against the original (pre-normalization) equation with powers on
/// logarithm branch u.
struct RootReport {
    Complex Y{};
    int n = 0;
    Transform transform = Transform::AB;
    int N = 0;
    int u = 0;
    Complex f{};
    double residual = 0.0;
    SeriesEval eval{};
    Complex canonical_x{};      ///< canonical-form argument (solver_aabbc)
    bool via_canonical = false; ///< produced by the canonical-reduction pipeline
};

/// Root n via the substitution-list pipeline: normalize, pick AB/BC/CA by the
/// T criterion, evaluate the pq series, find the verification branch u.
/// For exact rational exponents (a = a'/d, b = b'/d over the common
/// denominator) indices n in [0, a') enumerate the complete root set.
RootReport solver_abc(int n, const TrinomialEq& eq, const SolverOptions& opts = {});

/// Root n via canonical reduction: rewrite as y^r = 1 + r*x0*y^s, evaluate the
/// ultra-radical there, and map back. Recommended entry point; branch
/// conjugation outside the radius follows the sector criterion.
RootReport solver_aabbc(int n, const TrinomialEq& eq, const SolverOptions& opts = {});

/// Substitution reducing p*u^a = q + z*u^b to canonical form. Returns the
/// canonical x and the prefactor (q/p)^(1/a) (principal branch) such that
/// u = prefactor * y with y^a = 1 + a*x*y^b.
std::pair<Complex, Complex> reduce_general(Complex p, Complex a, Complex q,
                                           Complex z, Complex b);

/// Residual |A*e^(a*L) + B*e^(b*L) + C| with L = ln|Y| + i(arg Y + 2*pi*u).
double verify_root(const TrinomialEq& eq, Complex Y, int u);

/// Smallest-|u| argmin of verify_root over u in [-u_max, u_max]; the window
/// widens once to 64 if the best residual stays above tolerance. Residuals
/// below the roundoff floor of the evaluated terms count as ties.
std::pair<int, double> find_u(const TrinomialEq& eq, Complex Y, int u_max = 16);

} // namespace ultra

#endif
