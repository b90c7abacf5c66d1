#include "ultra/merge.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace ultra {

namespace {

// Scaled product, as in series.cpp but kept local: merged terms interleave
// the shared master factors with the per-core x_i/j factors.
struct Scaled {
    Complex t{1.0, 0.0};
    int e = 0;
    void mul(Complex f) {
        t *= f;
        const double m = std::abs(t);
        if (m > 1e200) {
            t *= 1e-200;
            ++e;
        } else if (m != 0.0 && m < 1e-200) {
            t *= 1e200;
            --e;
        }
    }
    bool finish(Complex& out) const {
        Complex r = t;
        int k = e;
        while (k > 0) {
            if (std::abs(r) > 1e108) return false;
            r *= 1e200;
            --k;
        }
        while (k < 0) {
            r *= 1e-200;
            ++k;
        }
        out = r;
        return true;
    }
};

// One term of the merged sum for multi-index ells (total order t >= 1).
bool merged_term(Complex m, Complex a, std::span<const Complex> bs,
                 std::span<const Complex> xs, std::span<const int> ells, Complex& out) {
    const int total = [&] {
        int s = 0;
        for (int l : ells) s += l;
        return s;
    }();
    Complex S{};
    for (size_t i = 0; i < bs.size(); ++i) S += bs[i] * Complex(ells[i]);

    // flatten the x_i/j factor list
    std::vector<Complex> xf;
    xf.reserve(total);
    for (size_t i = 0; i < xs.size(); ++i)
        for (int j = 1; j <= ells[i]; ++j) xf.push_back(xs[i] / Complex(j));

    Scaled prod;
    for (int g = 1; g < total; ++g) {
        prod.mul(m - a * Complex(g) + S);
        prod.mul(xf[g - 1]);
    }
    if (total >= 1) prod.mul(xf[total - 1]);
    return prod.finish(out);
}

// graded enumeration: all multi-indices with the given total order
void for_each_composition(int total, int parts, std::vector<int>& idx, int pos,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == 0) {
        idx[0] = total;
        fn(idx);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        idx[pos] = v;
        for_each_composition(total - v, parts, idx, pos - 1, fn);
    }
}

std::pair<double, double> multiterm_residual_floor(const MultiTermEq& eq, Complex Y, int u) {
    const Complex L = branch_log(Y, u);
    Complex acc = eq.p * std::exp(eq.a * L) - eq.q;
    double scale = std::abs(eq.p * std::exp(eq.a * L)) + std::abs(eq.q);
    double angle = std::max(1.0, std::abs((eq.a * L).imag()));
    for (const auto& [xi, bi] : eq.terms) {
        const Complex ti = xi * std::exp(bi * L);
        acc -= ti;
        scale += std::abs(ti);
        angle = std::max(angle, std::abs((bi * L).imag()));
    }
    return {std::abs(acc), 32.0 * 2.22e-16 * scale * angle};
}

} // namespace

Complex merged_master_number(Complex m, Complex a, std::span<const Complex> bs,
                             std::span<const int> ells) {
    if (bs.size() != ells.size())
        throw DomainError("merged_master_number: bs and ells must have equal length");
    int total = 0;
    for (int l : ells) {
        if (l < 0) throw DomainError("merged_master_number: orders must be >= 0");
        total += l;
    }
    Complex S{};
    for (size_t i = 0; i < bs.size(); ++i) S += bs[i] * Complex(ells[i]);
    Complex p{1.0, 0.0};
    for (int g = 1; g < total; ++g) p *= m - a * Complex(g) + S;
    return p;
}

SeriesEval merged_series(const MergedParams& params, const MergeOptions& opts) {
    const size_t K = params.bs.size();
    if (K == 0 || params.xs.size() != K)
        throw DomainError("merged_series: need equally many bs and xs, at least one core");
    if (opts.max_total_order < 1) throw DomainError("merged_series: max_total_order >= 1");

    SeriesEval ev{};
    Complex sum{1.0, 0.0};  // zero multi-index, the temporary w0 = 1
    ev.terms_used = 1;
    int consec_small = 0;
    int rises = 0;
    double prev_mag = -1.0;
    bool overflowed = false;

    std::vector<int> idx(K);
    for (int t = 1; t <= opts.max_total_order; ++t) {
        Complex block{};
        for_each_composition(t, static_cast<int>(K), idx, static_cast<int>(K) - 1,
                             [&](const std::vector<int>& ells) {
                                 Complex term;
                                 if (!merged_term(params.m, params.a, params.bs, params.xs,
                                                  ells, term) ||
                                     !is_finite(term))
                                     overflowed = true;
                                 else
                                     block += term;
                             });
        if (overflowed) {
            ev.status = SeriesStatus::diverged;
            ev.last_term_mag = std::numeric_limits<double>::max();
            break;
        }
        sum += block;
        ev.terms_used = t + 1;
        const double mag = std::abs(block);
        ev.last_term_mag = mag;
        if (mag <= opts.rel_tol * std::abs(sum)) {
            if (++consec_small >= 3) {
                ev.status = SeriesStatus::converged;
                break;
            }
        } else {
            consec_small = 0;
        }
        if (prev_mag >= 0.0 && mag > prev_mag) {
            if (++rises >= opts.divergence_window) {
                ev.status = SeriesStatus::diverged;
                break;
            }
        } else if (prev_mag >= 0.0) {
            rises = 0;
        }
        prev_mag = mag;
    }
    // undo the temporary zero term: constant term of the series is m
    ev.value = sum - Complex(1.0) + params.m;
    return ev;
}

double verify_multiterm_root(const MultiTermEq& eq, Complex Y, int u) {
    if (Y == Complex{}) throw DomainError("verify_multiterm_root: Y = 0");
    return multiterm_residual_floor(eq, Y, u).first;
}

RootReport solve_multiterm(int n, const MultiTermEq& eq, const MergeOptions& opts) {
    if (eq.p == Complex{} || eq.q == Complex{})
        throw DomainError("solve_multiterm: p and q must be nonzero");
    if (eq.a == Complex{}) throw DomainError("solve_multiterm: a must be nonzero");
    if (eq.terms.empty()) throw DomainError("solve_multiterm: no power terms");

    const Complex qp = eq.q / eq.p;
    const Complex f =
        Complex(std::log(std::abs(qp)), principal_arg(qp) + kTwoPi * n) / eq.a;
    const Complex v = std::exp(f);

    MergedParams mp;
    mp.m = Complex(1.0);
    mp.a = eq.a;
    for (const auto& [xi, bi] : eq.terms) {
        mp.bs.push_back(bi);
        mp.xs.push_back(xi * std::exp(bi * f) / (eq.a * eq.q));
    }

    RootReport rep;
    rep.eval = merged_series(mp, opts);
    rep.Y = v * rep.eval.value;
    rep.n = n;
    rep.transform = Transform::AB;
    rep.N = n;
    rep.f = f;

    if (rep.Y != Complex{}) {
        int best_u = 0;
        auto [r0, fl0] = multiterm_residual_floor(eq, rep.Y, 0);
        double best_raw = r0, best_clamped = std::max(r0, fl0);
        for (int k = 1; k <= opts.u_max; ++k) {
            for (int u : {k, -k}) {
                auto [r, fl] = multiterm_residual_floor(eq, rep.Y, u);
                if (std::max(r, fl) < best_clamped * (1.0 - 1e-7)) {
                    best_u = u;
                    best_raw = r;
                    best_clamped = std::max(r, fl);
                }
            }
        }
        rep.u = best_u;
        rep.residual = best_raw;
    }
    return rep;
}

} // namespace ultra
