#include "ultra/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ultra/radical.hpp"

namespace ultra {

namespace {

void check_finite_eq(const TrinomialEq& eq) {
    for (Complex z : {eq.A, eq.a, eq.B, eq.b, eq.C})
        if (!is_finite(z)) throw DomainError("trinomial: non-finite input");
}

PqProblem pq_from(Transform t, const TrinomialEq& eq) {
    switch (t) {
        case Transform::AB: return {eq.A, eq.a, -eq.C, -eq.B, eq.b};
        case Transform::BC: return {eq.B, eq.b - eq.a, -eq.A, -eq.C, -eq.a};
        case Transform::CA: return {eq.C, -eq.b, -eq.B, -eq.A, eq.a - eq.b};
    }
    throw DomainError("bad transform tag");
}

// residual together with the roundoff floor of the evaluated terms
std::pair<double, double> residual_with_floor(const TrinomialEq& eq, Complex Y, int u) {
    const Complex L = branch_log(Y, u);
    const Complex ta = eq.A * std::exp(eq.a * L);
    const Complex tb = eq.B * std::exp(eq.b * L);
    const double scale = std::abs(ta) + std::abs(tb) + std::abs(eq.C);
    // exp of a large imaginary part loses ~|Im| ulps to argument reduction
    const double angle = std::max({1.0, std::abs((eq.a * L).imag()), std::abs((eq.b * L).imag())});
    const double floor = 32.0 * 2.22e-16 * scale * angle;
    return {std::abs(ta + tb + eq.C), floor};
}

// exact exponent when supplied as a ratio, or snapped from an integral double
std::optional<Rational> ratio_or_snap(const std::optional<Rational>& given, Complex expo) {
    if (given) return given;
    if (expo.imag() != 0.0) return std::nullopt;
    return Rational::from_integral(expo.real());
}

// canonical-form argument of a normalized equation; |x0| >= R exactly when
// T >= 1, so the sector criterion is applicable on this argument
Complex canonical_argument(const TrinomialEq& eq) {
    return eq.B / (eq.a * eq.C) * principal_pow(-eq.C / eq.A, eq.b / eq.a);
}

// Integer N of the row's phase family v(N) = exp((w + 2*pi*i*N)/alpha)
// closest to target_v. Used to carry the canonical sector assignment over to
// the substitution-list representation of the same root.
int align_index(const PqProblem& row, Complex target_v) {
    const Complex qp = row.q / row.p;
    const Complex w{std::log(std::abs(qp)), principal_arg(qp)};
    const Complex num = row.alpha * std::log(target_v) - w;
    const int guess = static_cast<int>(std::lround((num / Complex(0.0, kTwoPi)).real()));
    int best = guess;
    double best_d = std::numeric_limits<double>::infinity();
    for (int dN = -2; dN <= 2; ++dN) {
        const int N = guess + dN;
        const Complex v = std::exp((w + Complex(0.0, kTwoPi * N)) / row.alpha);
        const double d = std::abs(v - target_v);
        if (d < best_d) {
            best_d = d;
            best = N;
        }
    }
    return best;
}

RootReport closed_form_report(Complex base, Complex expo_inv, int n,
                              const TrinomialEq& eq0, const SolverOptions& opts) {
    // Y = base^(1/expo_inv) on branch n
    RootReport rep;
    rep.n = n;
    rep.transform = Transform::AB;
    rep.N = n;
    rep.f = branch_log(base, n) / expo_inv;
    rep.Y = std::exp(rep.f);
    rep.eval.status = SeriesStatus::converged;
    auto [u, res] = find_u(eq0, rep.Y, opts.u_max);
    rep.u = u;
    rep.residual = res;
    return rep;
}

} // namespace

const char* to_string(Transform t) {
    switch (t) {
        case Transform::AB: return "AB";
        case Transform::BC: return "BC";
        case Transform::CA: return "CA";
    }
    return "?";
}

PqSolution solve_pq(const PqProblem& prob, int N, const SeriesOptions& opts) {
    if (prob.p == Complex{} || prob.q == Complex{})
        throw DomainError("solve_pq: p and q must be nonzero");
    if (prob.alpha == Complex{}) throw DomainError("solve_pq: alpha must be nonzero");

    const Complex qp = prob.q / prob.p;
    PqSolution sol;
    sol.f = Complex(std::log(std::abs(qp)), principal_arg(qp) + kTwoPi * N) / prob.alpha;
    sol.v = std::exp(sol.f);
    sol.V = std::exp(prob.beta * sol.f);
    sol.Z = prob.X * sol.V / (prob.alpha * prob.q);

    const Radius rc = convergence_radius(prob.alpha, prob.beta);
    sol.z_inside_radius = rc.strictly_inside(std::abs(sol.Z));
    sol.eval = master_series({Complex(1.0), prob.alpha, prob.beta}, sol.Z, 0, opts);
    sol.Y = sol.v * sol.eval.value;
    return sol;
}

NormalizedTrinomial normalize(const TrinomialEq& eq, std::optional<Rational> a_ratio,
                              std::optional<Rational> b_ratio) {
    check_finite_eq(eq);
    struct Term {
        Complex expo, coeff;
        std::optional<Rational> ratio;
    };
    std::array<Term, 3> terms{{{eq.a, eq.A, a_ratio},
                               {eq.b, eq.B, b_ratio},
                               {Complex{}, eq.C, Rational::integer(0)}}};
    const double r0 = terms[0].expo.real(), r1 = terms[1].expo.real(), r2 = 0.0;
    if (r0 == r1 || r0 == r2 || r1 == r2)
        throw DomainError("normalize: exponent real parts coincide, equation is degenerate");
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.expo.real() > y.expo.real(); });

    NormalizedTrinomial out;
    out.shift = -terms[2].expo;
    out.eq = {terms[0].coeff, terms[0].expo + out.shift,
              terms[1].coeff, terms[1].expo + out.shift, terms[2].coeff};
    if (terms[0].ratio && terms[1].ratio && terms[2].ratio) {
        out.a_ratio = *terms[0].ratio - *terms[2].ratio;
        out.b_ratio = *terms[1].ratio - *terms[2].ratio;
    }
    return out;
}

double t_criterion(const TrinomialEq& eq) {
    if (eq.a.imag() != 0.0 || eq.b.imag() != 0.0)
        throw DomainError("t_criterion: needs real exponents");
    const double a = eq.a.real(), b = eq.b.real();
    if (!(a > b && b > 0.0)) throw DomainError("t_criterion: needs a > b > 0 (normalize first)");
    return std::pow(b / std::abs(eq.A), b) * std::pow(std::abs(eq.B) / a, a) *
           std::pow((a - b) / std::abs(eq.C), a - b);
}

double verify_root(const TrinomialEq& eq, Complex Y, int u) {
    if (Y == Complex{}) throw DomainError("verify_root: Y = 0");
    return residual_with_floor(eq, Y, u).first;
}

std::pair<int, double> find_u(const TrinomialEq& eq, Complex Y, int u_max) {
    if (Y == Complex{}) throw DomainError("find_u: Y = 0");
    if (u_max < 0) throw DomainError("find_u: u_max must be >= 0");

    auto scan = [&](int w) {
        int best_u = 0;
        auto [r0, fl0] = residual_with_floor(eq, Y, 0);
        double best_raw = r0;
        double best_clamped = std::max(r0, fl0);
        for (int k = 1; k <= w; ++k) {
            for (int u : {k, -k}) {
                auto [r, fl] = residual_with_floor(eq, Y, u);
                const double clamped = std::max(r, fl);
                if (clamped < best_clamped * (1.0 - 1e-7)) {
                    best_u = u;
                    best_raw = r;
                    best_clamped = clamped;
                }
            }
        }
        return std::pair<int, double>{best_u, best_raw};
    };

    auto best = scan(u_max);
    // one automatic widening if the residual is still poor
    const double lY = std::abs(Y);
    const double scale =
        std::max(1.0, std::exp(std::min(230.0, eq.a.real() * std::log(std::max(lY, 1e-300)))));
    if (best.second > 1e-9 * scale && u_max < 64) {
        auto wide = scan(64);
        if (wide.second < best.second) best = wide;
    }
    return best;
}

RootReport solver_abc(int n, const TrinomialEq& eq0, const SolverOptions& opts) {
    check_finite_eq(eq0);

    // degenerate coefficients route to closed forms
    const bool az = eq0.A == Complex{}, bz = eq0.B == Complex{}, cz = eq0.C == Complex{};
    if ((az && bz) || (az && cz) || (bz && cz))
        throw DomainError("solver_abc: at most one of A, B, C may vanish");
    if (bz) {
        if (eq0.a == Complex{}) throw DomainError("solver_abc: B = 0 needs a != 0");
        return closed_form_report(-eq0.C / eq0.A, eq0.a, n, eq0, opts);
    }
    if (cz) {
        if (eq0.a == eq0.b) throw DomainError("solver_abc: C = 0 needs a != b");
        return closed_form_report(-eq0.B / eq0.A, eq0.a - eq0.b, n, eq0, opts);
    }
    if (az) {
        if (eq0.b == Complex{}) throw DomainError("solver_abc: A = 0 needs b != 0");
        return closed_form_report(-eq0.C / eq0.B, eq0.b, n, eq0, opts);
    }

    const NormalizedTrinomial norm = normalize(eq0, ratio_or_snap(opts.a_ratio, eq0.a),
                                               ratio_or_snap(opts.b_ratio, eq0.b));

    if (norm.a_ratio && norm.b_ratio) {
        const CommonNumerators cn = common_numerators(*norm.a_ratio, *norm.b_ratio);
        if (n < 0 || n >= cn.a_num)
            throw DomainError("solver_abc: no root for index n=" + std::to_string(n) +
                              "; the root set has period " + std::to_string(cn.a_num));
    }

    const bool real_exponents = norm.eq.a.imag() == 0.0 && norm.eq.b.imag() == 0.0;
    std::vector<std::pair<Transform, int>> plan;
    if (real_exponents && t_criterion(norm.eq) >= 1.0) {
        // T >= 1 means the canonical argument sits outside the radius; the
        // sector criterion on it assigns branch n to the h- or k-family, and
        // the matching index of the substitution row is recovered by phase
        const Complex x0 = canonical_argument(norm.eq);
        const BranchSpec spec = select_conjugate(n, norm.eq.a, norm.eq.b, x0);
        const Transform tr = spec.J == Rep::h ? Transform::BC : Transform::CA;
        const Complex pref = principal_pow(-norm.eq.C / norm.eq.A, Complex(1.0) / norm.eq.a);
        const Complex target_v =
            pref * branch_phase(spec.J, spec.N, norm.eq.a, norm.eq.b, x0).v;
        const int N = align_index(pq_from(tr, norm.eq), target_v);
        plan = {{tr, N},
                {Transform::AB, n},
                {tr == Transform::BC ? Transform::CA : Transform::BC, n}};
    } else {
        plan = {{Transform::AB, n}, {Transform::BC, n}, {Transform::CA, n}};
    }

    std::string failures;
    for (auto [tr, N] : plan) {
        const PqSolution sol = solve_pq(pq_from(tr, norm.eq), N, opts.series);
        if (sol.eval.status == SeriesStatus::converged) {
            RootReport rep;
            rep.Y = sol.Y;
            rep.n = n;
            rep.transform = tr;
            rep.N = N;
            rep.f = sol.f;
            rep.eval = sol.eval;
            auto [u, res] = find_u(eq0, sol.Y, opts.u_max);
            rep.u = u;
            rep.residual = res;
            return rep;
        }
        failures += std::string(failures.empty() ? "" : ", ") + to_string(tr) + "(N=" +
                    std::to_string(N) + "): " + to_string(sol.eval.status);
    }
    throw EvaluationError("solver_abc: all transforms failed for n=" + std::to_string(n) +
                          " [" + failures + "]");
}

RootReport solver_aabbc(int n, const TrinomialEq& eq0, const SolverOptions& opts) {
    check_finite_eq(eq0);
    if (eq0.A == Complex{} || eq0.B == Complex{} || eq0.C == Complex{})
        return solver_abc(n, eq0, opts);  // closed forms need no canonical reduction

    const NormalizedTrinomial norm = normalize(eq0, ratio_or_snap(opts.a_ratio, eq0.a),
                                               ratio_or_snap(opts.b_ratio, eq0.b));
    const Complex r = norm.eq.a, s = norm.eq.b;
    const Complex A = norm.eq.A, C = norm.eq.C;

    if (norm.a_ratio && norm.b_ratio) {
        const CommonNumerators cn = common_numerators(*norm.a_ratio, *norm.b_ratio);
        if (n < 0 || n >= cn.a_num)
            throw DomainError("solver_aabbc: no root for index n=" + std::to_string(n) +
                              "; the root set has period " + std::to_string(cn.a_num));
    }

    const Complex x0 = canonical_argument(norm.eq);
    RadicalOptions ropts;
    ropts.series = opts.series;
    ropts.u_max = opts.u_max;
    ropts.verify_tol = opts.verify_tol;
    const BranchValue bv = ultra_radical(n, r, s, x0, ropts);

    RootReport rep;
    rep.Y = principal_pow(-C / A, Complex(1.0) / r) * bv.y;
    rep.n = n;
    switch (bv.spec.J) {
        case Rep::direct: rep.transform = Transform::AB; break;
        case Rep::h: rep.transform = Transform::BC; break;
        case Rep::k: rep.transform = Transform::CA; break;
    }
    rep.N = bv.spec.N;
    rep.f = bv.f;
    rep.eval = bv.eval;
    rep.canonical_x = x0;
    rep.via_canonical = true;
    auto [u, res] = find_u(eq0, rep.Y, opts.u_max);
    rep.u = u;
    rep.residual = res;
    return rep;
}

std::pair<Complex, Complex> reduce_general(Complex p, Complex a, Complex q, Complex z,
                                           Complex b) {
    if (p == Complex{} || q == Complex{})
        throw DomainError("reduce_general: p and q must be nonzero");
    if (a == Complex{}) throw DomainError("reduce_general: a must be nonzero");
    const Complex x = z * principal_pow(q / p, b / a) / (a * q);
    return {x, principal_pow(q / p, Complex(1.0) / a)};
}

} // namespace ultra
