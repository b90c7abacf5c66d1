#ifndef ULTRA_CONTINUATION_HPP
#define ULTRA_CONTINUATION_HPP

#include "ultra/complex_ops.hpp"
#include "ultra/errors.hpp"
#include "ultra/series.hpp"

namespace ultra {

/// Which master-series representation of a root is in play: the direct
/// expansion (converges for |x| < R) or one of the two conjugate series
/// h, k that take over for |x| >= R.
enum class Rep { direct, h, k };

const char* to_string(Rep r);

/// Row of the conjugate-representation table. The associated equation is
/// p*Y^alpha = q + X*Y^beta, solved by Y = v*M(1;alpha;beta;X*V/(alpha*q)).
struct TransformRow {
    Rep J;
    Complex alpha, beta, p, q, X;
};

/// direct -> (a, b, 1, 1, a*x);  h -> (b-a, -a, -a*x, -1, 1);
/// k -> (-b, a-b, -1, a*x, -1).  Exact for exact inputs.
TransformRow transform_row(Rep J, Complex a, Complex b, Complex x);

/// Phase data of representation (J, N):
///   f = [ln|q/p| + i(arg(q/p) + 2*pi*N)]/alpha,  v = e^f,  V = e^(beta*f),
///   Z = X*V/(alpha*q).   arg is principal, in (-pi, pi].
struct BranchPhase {
    Complex f, v, V, Z;
};

BranchPhase branch_phase(Rep J, int N, Complex a, Complex b, Complex x);
BranchPhase branch_phase(const TransformRow& row, int N);

/// Angular sector owned by branch n in arg(v)-space. center is reported in
/// [0, 2*pi); lo/hi = center -+ half-width may extend outside that range.
struct SectorInterval {
    double lo = 0.0;
    double hi = 0.0;
    double center = 0.0;
};

/// center = 2*pi*n*Re(1/a) mod 2*pi, half-width pi*|Re(1/a)|.
/// For real a this is the sector [2*pi*n/a - pi/a, 2*pi*n/a + pi/a].
SectorInterval sector_bounds(int n, Complex a);

/// arg(v) of candidate (J, N), reduced into [0, 2*pi). J must be h or k.
double candidate_angle(Rep J, int N, Complex a, Complex b, Complex x);

/// Diagnostic form of the selection coordinate, Im(b*f). For real a, b it is
/// proportional to arg(v) and selects the same sectors.
double criterion_im_bf(Rep J, int N, Complex a, Complex b, Complex x);

/// Which (J, N) continues branch n for |x| >= R.
struct BranchSpec {
    int n = 0;
    Rep J = Rep::direct;
    int N = 0;
};

/// Scan N in [-search_bound, search_bound] for J in {h, k} and return the
/// candidate whose angle falls in branch n's sector. A candidate landing on a
/// shared sector boundary (within 1e-12 rad) is resolved by the pairing
/// convention: the h-candidate continues the lower branch index, the
/// k-candidate the higher one. search_bound < 0 selects the default
/// ceil(|a|) + |n| + 2. Throws EvaluationError if nothing matches.
BranchSpec select_conjugate(int n, Complex a, Complex b, Complex x,
                            int search_bound = -1);

/// Representation choice for the principal branch: direct inside the radius;
/// outside, h when |arg x| <= pi*|b-a|/|a| and k otherwise.
Rep principal_rule(Complex a, Complex b, Complex x);

} // namespace ultra

#endif
