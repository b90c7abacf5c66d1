#ifndef ULTRA_SERIES_HPP
#define ULTRA_SERIES_HPP

#include <limits>

#include "ultra/complex_ops.hpp"
#include "ultra/errors.hpp"

namespace ultra {

/// Parameter triple (m, a, b) of a master series
///   M(m;a;b;x) = m + x + sum_{l>=2} x^l/l! * prod_{g=1}^{l-1} (m - a*g + b*l).
struct MasterParams {
    Complex m, a, b;
};

struct SeriesOptions {
    int max_terms = 5000;
    double rel_tol = 1e-16;
    int divergence_window = 50;

    void validate() const {
        if (max_terms < 2) throw DomainError("SeriesOptions: max_terms must be >= 2");
        if (!(rel_tol > 0.0)) throw DomainError("SeriesOptions: rel_tol must be > 0");
        if (divergence_window < 2) throw DomainError("SeriesOptions: divergence_window must be >= 2");
    }
};

enum class SeriesStatus { converged, truncated, diverged };

const char* to_string(SeriesStatus s);

/// Partial sum plus diagnostics. status == converged means the last term
/// magnitude stayed below rel_tol * |value| for three consecutive terms.
struct SeriesEval {
    Complex value{};
    int terms_used = 0;
    SeriesStatus status = SeriesStatus::truncated;
    double last_term_mag = 0.0;

    bool converged() const { return status == SeriesStatus::converged; }
};

/// Finite product N(m;a;b;l) = prod_{g=1}^{l-1} (m - a*g + b*l).
/// Returns 1 for l < 2 (empty product).
Complex master_number(Complex m, Complex a, Complex b, int ell);

/// Series coefficient k_l = N(m;a;b;l)/l!, computed with interleaved scaling
/// so the product and the factorial never overflow separately.
/// Throws EvaluationError if the coefficient itself is not representable.
Complex series_coefficient(Complex m, Complex a, Complex b, int ell);

/// Evaluate the master series. d shifts the series through the calculus
/// family: d = 0 is the series itself, d > 0 integrates d times (all
/// integration constants zero), d < 0 differentiates |d| times. |d| <= 8.
SeriesEval master_series(const MasterParams& params, Complex x, int d = 0,
                         const SeriesOptions& opts = {});

/// Generalized series S(m;a;b;x;c) = m + c*(x + sum x^l/l! prod (c*m - a*g + b*l)).
/// S(m;a;b;x;1) coincides with M for m in {0,1}; S(0;a;b;x;c) = c*M(0;a;b;x).
SeriesEval super_master(Complex m, Complex a, Complex b, Complex x, Complex c,
                        const SeriesOptions& opts = {});

enum class ParityKind { odd, even };

/// Odd/even part of the series in x: (M(x) -+ M(-x))/2.
SeriesEval series_parity_part(ParityKind kind, const MasterParams& params, Complex x,
                              const SeriesOptions& opts = {});

enum class RadiusKind {
    finite,           ///< R from the closed-form radius expression
    infinite,         ///< a = b = 0: entire series
    equal_exponents,  ///< b = a: radius formula undefined, closed form applies
};

struct Radius {
    double value = 0.0;
    RadiusKind kind = RadiusKind::finite;

    /// True when x is strictly inside the disc of convergence.
    /// The boundary |x| = R counts as outside.
    bool strictly_inside(double abs_x) const {
        if (kind == RadiusKind::infinite) return true;
        if (kind == RadiusKind::equal_exponents) return false;
        return abs_x < value;
    }
};

/// Radius of convergence of M(m;a;b;x):
///   |1 - a/b|^(b/a) / |b - a|  for a,b nonzero and distinct (principal power,
///   modulus taken for complex b/a), 1/|b·e| for a = 0, 1/|a| for b = 0.
Radius convergence_radius(Complex a, Complex b);

} // namespace ultra

#endif
