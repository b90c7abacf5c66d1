#ifndef ULTRA_COMPLEX_OPS_HPP
#define ULTRA_COMPLEX_OPS_HPP

#include <cmath>
#include <complex>
#include <numbers>

namespace ultra {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Principal argument in (-pi, pi]. Negative reals map to +pi even when the
/// imaginary part is a negative zero (complex division produces -0.0 easily,
/// and atan2 would then return -pi).
inline double principal_arg(Complex z) {
    double im = z.imag();
    if (im == 0.0) im = 0.0; // -0.0 -> +0.0
    return std::atan2(im, z.real());
}

/// log|z| + i*arg(z) with arg on the branch u: arg in (-pi,pi] shifted by 2*pi*u.
inline Complex branch_log(Complex z, int u = 0) {
    return {std::log(std::abs(z)), principal_arg(z) + kTwoPi * u};
}

/// z^w on logarithm branch u; principal branch for u = 0.
inline Complex branch_pow(Complex z, Complex w, int u = 0) {
    return std::exp(w * branch_log(z, u));
}

inline Complex principal_pow(Complex z, Complex w) { return branch_pow(z, w, 0); }

/// Reduce an angle into [0, 2*pi).
inline double wrap_two_pi(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t == kTwoPi) t = 0.0;
    return t + 0.0;  // clears -0.0
}

} // namespace ultra

#endif
