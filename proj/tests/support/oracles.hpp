#ifndef ULTRA_TESTS_ORACLES_HPP
#define ULTRA_TESTS_ORACLES_HPP

#include <complex>
#include <functional>
#include <vector>

// Independent reference computations for the test suites. Nothing in here
// calls into the library's series or solver paths.
namespace oracles {

using C = std::complex<double>;

/// All roots of c[0] + c[1] z + ... + c[n] z^n by Durand-Kerner iteration.
std::vector<C> poly_roots(std::vector<C> coeffs, int max_iters = 400,
                          double tol = 1e-15);

/// Principal Lambert W on [-1/e, inf) by Newton iteration on w e^w = x.
double lambert_w0(double x);

/// Central finite difference of f along the real direction.
C central_diff(const std::function<C(double)>& f, double x, double h = 1e-6);

/// Hausdorff-style distance between two root sets (greedy pairing).
double set_distance(std::vector<C> a, std::vector<C> b);

} // namespace oracles

#endif
