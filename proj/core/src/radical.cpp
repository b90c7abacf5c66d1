#include "ultra/radical.hpp"

#include <cmath>
#include <string>

#include "ultra/solver.hpp"

namespace ultra {

namespace {

TrinomialEq defining_equation(Complex a, Complex b, Complex x) {
    return {Complex(1.0), a, -a * x, b, Complex(-1.0)};
}

void attach_verification(BranchValue& bv, Complex a, Complex b, Complex x, int u_max) {
    auto [u, res] = find_u(defining_equation(a, b, x), bv.y, u_max);
    bv.u = u;
    bv.residual = res;
}

} // namespace

BranchValue ultra_radical(int n, Complex a, Complex b, Complex x, const RadicalOptions& opts) {
    if (a == Complex{})
        throw DomainError("ultra: a = 0 (use ultralog or the plain series for the exponential limit)");
    if (!is_finite(a) || !is_finite(b) || !is_finite(x))
        throw DomainError("ultra: non-finite input");

    const Radius R = convergence_radius(a, b);

    BranchValue bv;
    bv.spec.n = n;

    if (R.kind == RadiusKind::equal_exponents) {
        // y^a = 1/(1 - a*x); principal branch with the n-th phase attached
        const Complex phase = std::exp(Complex(0.0, kTwoPi * n) / a);
        bv.y = principal_pow(Complex(1.0) - a * x, Complex(-1.0) / a) * phase;
        bv.spec.J = Rep::direct;
        bv.spec.N = n;
        bv.f = Complex(0.0, kTwoPi * n) / a;
        bv.eval.status = SeriesStatus::converged;
        bv.closed_form = true;
        attach_verification(bv, a, b, x, opts.u_max);
        return bv;
    }

    if (R.strictly_inside(std::abs(x))) {
        bv.spec.J = Rep::direct;
        bv.spec.N = n;
    } else {
        bv.spec = select_conjugate(n, a, b, x, opts.search_bound);
    }

    const BranchPhase ph = branch_phase(bv.spec.J, bv.spec.N, a, b, x);
    const TransformRow row = transform_row(bv.spec.J, a, b, x);
    bv.f = ph.f;
    bv.eval = master_series({Complex(1.0), row.alpha, row.beta}, ph.Z, 0, opts.series);
    bv.y = ph.v * bv.eval.value;
    attach_verification(bv, a, b, x, opts.u_max);
    return bv;
}

Complex ultra_derivative(int n, Complex a, Complex b, Complex x,
                         const RadicalOptions& opts) {
    const BranchValue bv = ultra_radical(n, a, b, x, opts);
    const Complex denom = Complex(1.0) - b * x * branch_pow(bv.y, b - a, bv.u);
    if (std::abs(denom) < 1e-14)
        throw EvaluationError("ultra_derivative: branch point (1 - b*x*y^(b-a) vanishes)");
    return branch_pow(bv.y, b - a + Complex(1.0), bv.u) / denom;
}

Complex ultra_integral(int n, Complex a, Complex b, Complex x, bool normalized,
                       const RadicalOptions& opts) {
    const Complex abp1 = a - b + Complex(1.0);
    if (std::abs(abp1) < 1e-14)
        throw DomainError("ultra_integral: a - b + 1 = 0 is outside the closed form");
    if (normalized && n != 0)
        throw DomainError("ultra_integral: the normalized form is defined for branch 0");

    const BranchValue bv = ultra_radical(n, a, b, x, opts);
    const Complex y = bv.y;
    const bool b_is_one = b == Complex(1.0);

    if (normalized) {
        if (b_is_one) {
            // limit b -> 1 of the zero-normalized form
            const Complex ya = branch_pow(y, a, bv.u);
            return ((a - Complex(1.0)) / a * (ya - Complex(1.0)) + branch_log(y, bv.u)) / a;
        }
        const Complex t1 = (a - b) / abp1 * (branch_pow(y, abp1, bv.u) - Complex(1.0));
        const Complex t2 = b / (Complex(1.0) - b) *
                           (branch_pow(y, Complex(1.0) - b, bv.u) - Complex(1.0));
        return (t1 + t2) / a;
    }

    if (b_is_one) {
        const Complex ya = branch_pow(y, a, bv.u);
        return x * y - (ya / a - branch_log(y, bv.u)) / a;
    }
    const Complex t1 = branch_pow(y, abp1, bv.u) / abp1;
    const Complex t2 = branch_pow(y, Complex(1.0) - b, bv.u) / (Complex(1.0) - b);
    return x * y - (t1 - t2) / a;
}

Complex ultralog(int n, Complex a, Complex b, Complex x, const SeriesOptions& opts) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(x))
        throw DomainError("ultralog: non-finite input");
    if (a == Complex{}) {
        if (n != 0) throw DomainError("ultralog: branch phase needs a != 0");
        SeriesEval ev = master_series({Complex(0.0), a, b}, x, 0, opts);
        if (ev.status == SeriesStatus::diverged)
            throw EvaluationError("ultralog: series diverged");
        return ev.value;
    }
    const Complex ln_v = Complex(0.0, kTwoPi * n) / a;
    const Complex Vn = std::exp(b * ln_v);
    SeriesEval ev = master_series({Complex(0.0), a, b}, x * Vn, 0, opts);
    if (ev.status == SeriesStatus::diverged)
        throw EvaluationError("ultralog: series diverged for branch n=" + std::to_string(n));
    return ln_v + ev.value;
}

Complex ulog_derivative(Complex b, Complex x, const SeriesOptions& opts) {
    SeriesEval ev = master_series({Complex(1.0), Complex(1.0), b}, x, 0, opts);
    if (ev.status == SeriesStatus::diverged)
        throw EvaluationError("ulog_derivative: series diverged");
    const Complex u = ev.value;
    const Complex denom = b + (Complex(1.0) - b) * u;
    if (std::abs(denom) < 1e-14)
        throw EvaluationError("ulog_derivative: singular denominator b + (1-b)u");
    return principal_pow(u, b) / denom;
}

std::pair<Complex, Complex> ultra_from_ode(Complex c, Complex b) {
    return {b - c, b};
}

} // namespace ultra
