#ifndef ULTRA_RADICAL_HPP
#define ULTRA_RADICAL_HPP

#include <utility>

#include "ultra/continuation.hpp"
#include "ultra/series.hpp"

namespace ultra {

struct RadicalOptions {
    SeriesOptions series{};
    int u_max = 16;            ///< search window for the verification log branch
    double verify_tol = 1e-9;  ///< residual tolerance, scaled by max(1, |y|^Re(a))
    int search_bound = -1;     ///< candidate window for select_conjugate (-1: default)
};

/// One branch value of the ultra-radical y^a = 1 + a*x*y^b, together with the
/// representation that produced it and its verification data. residual is
/// |y^a - 1 - a*x*y^b| with powers taken on logarithm branch u.
struct BranchValue {
    Complex y{};
    BranchSpec spec{};
    Complex f{};
    int u = 0;
    double residual = 0.0;
    SeriesEval eval{};
    bool closed_form = false;  ///< b = a handled by (1 - a*x)^(-1/a)
};

/// Branch n of the ultra-radical y^a = 1 + a*x*y^b. Dispatches on |x| vs the convergence
/// radius: direct series inside, sector-selected conjugate series outside.
/// Requires a != 0 (the a = 0 limits live in ultralog / the plain series).
BranchValue ultra_radical(int n, Complex a, Complex b, Complex x,
                  const RadicalOptions& opts = {});

/// dy/dx = y^(b-a+1) / (1 - b*x*y^(b-a)), evaluated on the branch's u-powers.
/// Throws EvaluationError at the branch point (vanishing denominator).
Complex ultra_derivative(int n, Complex a, Complex b, Complex x,
                         const RadicalOptions& opts = {});

/// Indefinite integral of branch n with C = 0:
///   x*y - (1/a)[ y^(a-b+1)/(a-b+1) - y^(1-b)/(1-b) ]        (b != 1)
///   x*y - (1/a)[ y^a/a - ln y ]                              (b = 1)
/// normalized = true gives the antiderivative vanishing at x = 0 (branch 0
/// only, where y(0) = 1). Requires a - b + 1 != 0.
Complex ultra_integral(int n, Complex a, Complex b, Complex x, bool normalized,
                       const RadicalOptions& opts = {});

/// Branch n of the ultralogarithm: u_n = 2*pi*i*n/a + M(0;a;b;x*V_n) with
/// V_n = e^(2*pi*i*b*n/a). exp(a*u_n) solves e^(a*u) = 1 + a*x*e^(b*u).
/// a = 0 is allowed and drops the phase (Lambert-type row).
Complex ultralog(int n, Complex a, Complex b, Complex x,
                 const SeriesOptions& opts = {});

/// d/dx of the b-logarithm M(0;1;b;x), through u = M(1;1;b;x):
///   u^b / (b + (1-b)*u).   Reduces to 1/(1+x) at b = 0.
Complex ulog_derivative(Complex b, Complex x, const SeriesOptions& opts = {});

/// Parameters (a, b) such that ultra_radical(0, a, b, .) solves
/// y' = y^(c+1)/(1 - b*x*y^c), y(0) = 1; i.e. a = b - c.
std::pair<Complex, Complex> ultra_from_ode(Complex c, Complex b);

} // namespace ultra

#endif
