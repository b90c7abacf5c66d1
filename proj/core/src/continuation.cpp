#include "ultra/continuation.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace ultra {

namespace {

constexpr double kBoundaryTol = 1e-12;  // radians; sector tie-break band

// Candidate membership in an (unwrapped) sector, with the boundary pairing
// convention: an h-candidate sitting on the upper bound belongs to this
// sector, a k-candidate sitting on the lower bound belongs to this sector.
bool in_sector(double angle, const SectorInterval& sec, Rep J) {
    // shift angle into the period window centered on the sector
    double t = angle;
    while (t < sec.center - kPi) t += kTwoPi;
    while (t >= sec.center + kPi) t -= kTwoPi;

    const double d_lo = std::abs(t - sec.lo);
    const double d_hi = std::abs(t - sec.hi);
    if (d_lo <= kBoundaryTol) return J == Rep::k;
    if (d_hi <= kBoundaryTol) return J == Rep::h;
    return t > sec.lo && t < sec.hi;
}

} // namespace

const char* to_string(Rep r) {
    switch (r) {
        case Rep::direct: return "direct";
        case Rep::h: return "h";
        case Rep::k: return "k";
    }
    return "?";
}

TransformRow transform_row(Rep J, Complex a, Complex b, Complex x) {
    switch (J) {
        case Rep::direct: return {J, a, b, {1.0, 0.0}, {1.0, 0.0}, a * x};
        case Rep::h: return {J, b - a, -a, -a * x, {-1.0, 0.0}, {1.0, 0.0}};
        case Rep::k: return {J, -b, a - b, {-1.0, 0.0}, a * x, {-1.0, 0.0}};
    }
    throw DomainError("transform_row: bad representation tag");
}

BranchPhase branch_phase(const TransformRow& row, int N) {
    if (row.p == Complex{} || row.q == Complex{})
        throw DomainError("branch_phase: degenerate transform (p or q is zero)");
    if (row.alpha == Complex{})
        throw DomainError("branch_phase: degenerate transform (alpha is zero)");
    const Complex qp = row.q / row.p;
    const Complex f =
        Complex(std::log(std::abs(qp)), principal_arg(qp) + kTwoPi * N) / row.alpha;
    BranchPhase ph;
    ph.f = f;
    ph.v = std::exp(f);
    ph.V = std::exp(row.beta * f);
    ph.Z = row.X * ph.V / (row.alpha * row.q);
    return ph;
}

BranchPhase branch_phase(Rep J, int N, Complex a, Complex b, Complex x) {
    return branch_phase(transform_row(J, a, b, x), N);
}

SectorInterval sector_bounds(int n, Complex a) {
    if (a == Complex{})
        throw DomainError("sector_bounds: a = 0 has no sector structure (exponential limit)");
    // arg(v) of the direct row is Im(2*pi*i*n/a) = 2*pi*n*Re(1/a)
    const double inv_re = (Complex(1.0) / a).real();
    const double center = wrap_two_pi(kTwoPi * n * inv_re);
    const double half = std::abs(kPi * inv_re);
    return {center - half, center + half, center};
}

double candidate_angle(Rep J, int N, Complex a, Complex b, Complex x) {
    if (J == Rep::direct)
        throw DomainError("candidate_angle: candidates are the h and k representations");
    return wrap_two_pi(branch_phase(J, N, a, b, x).f.imag());
}

double criterion_im_bf(Rep J, int N, Complex a, Complex b, Complex x) {
    return (b * branch_phase(J, N, a, b, x).f).imag();
}

BranchSpec select_conjugate(int n, Complex a, Complex b, Complex x, int search_bound) {
    const SectorInterval sec = sector_bounds(n, a);
    if (search_bound < 0)
        search_bound = static_cast<int>(std::ceil(std::abs(a))) + std::abs(n) + 2;

    // deterministic scan, non-negative indices first (candidates repeat with
    // the representation's period, so these carry the conventional labels)
    std::vector<int> order;
    for (int k = 0; k <= search_bound; ++k) order.push_back(k);
    for (int k = 1; k <= search_bound; ++k) order.push_back(-k);
    for (int N : order)
        for (Rep J : {Rep::h, Rep::k})
            if (in_sector(candidate_angle(J, N, a, b, x), sec, J))
                return {n, J, N};

    throw EvaluationError(
        "select_conjugate: no candidate angle falls in the sector of branch n=" +
        std::to_string(n) + " (widen search_bound, or |x| < R was passed)");
}

Rep principal_rule(Complex a, Complex b, Complex x) {
    const Radius R = convergence_radius(a, b);
    if (R.kind != RadiusKind::finite || std::abs(x) < R.value) return Rep::direct;
    const double cut = kPi * std::abs(b - a) / std::abs(a);
    return std::abs(principal_arg(x)) <= cut ? Rep::h : Rep::k;
}

} // namespace ultra
