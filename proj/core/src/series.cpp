#include "ultra/series.hpp"

#include <cmath>
#include <cstdlib>

namespace ultra {

namespace {

// Running product with a power-of-1e200 exponent carry. The interleaved
// factor ordering keeps the product representable for moderate term counts,
// but near the convergence boundary the partial product can still sweep
// through ~1e(0.4*l) before collapsing to a small term, so the carry is
// needed for long evaluations.
template <class T>
struct ScaledProduct {
    T t;
    int e = 0;

    explicit ScaledProduct(T init) : t(init) {}

    void mul(T f) {
        t *= f;
        double m = std::abs(t);
        if (m > 1e200) {
            t *= 1e-200;
            ++e;
        } else if (m != 0.0 && m < 1e-200) {
            t *= 1e200;
            --e;
        }
    }

    // Recombine mantissa and carry. Returns false on overflow.
    bool finish(T& out) const {
        T r = t;
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

// Coefficient of x^l in the underlying series: m for l = 0, 1 for l = 1,
// N(m;a;b;l)/l! otherwise. The shifted family (d-fold integral/derivative)
// reindexes the power and factorial; see term() below.
//
// term(l) for shift d:
//   d >= 0:  N_l * x^(l+d) / (l+d)!
//   d <  0:  N_l * x^(l-k) / (l-k)!  with k = -d, summed over l >= k.
template <class T>
bool term_value(T c0, T m_prod, T a, T b, T x, int l, int d, T& out) {
    const int nx = l + d;  // count of x/j factors
    ScaledProduct<T> prod(T(1));
    if (l == 0) {
        prod.mul(c0);
    } else if (l >= 2) {
        for (int g = 1; g < l; ++g) {
            prod.mul(m_prod - a * T(g) + b * T(l));
            if (g <= nx) prod.mul(x / T(g));
        }
    }
    // x-factors not consumed by the interleave
    int j0 = (l >= 2) ? l : 1;
    for (int j = j0; j <= nx; ++j) prod.mul(x / T(j));
    return prod.finish(out);
}

template <class T>
SeriesEval sum_master(T c0, T scale, T m_prod, T a, T b, T x, int d,
                      const SeriesOptions& opts) {
    opts.validate();
    if (d < -8 || d > 8) throw DomainError("series shift d out of range [-8, 8]");

    const int l_start = d >= 0 ? 0 : -d;
    SeriesEval ev{};
    T sum{};
    int consec_small = 0;
    int rises = 0;
    double prev_mag = -1.0;

    for (int count = 0; count < opts.max_terms; ++count) {
        const int l = l_start + count;
        T t;
        if (!term_value(c0, m_prod, a, b, x, l, d, t) || !is_finite(Complex(t))) {
            ev.status = SeriesStatus::diverged;
            ev.last_term_mag = std::numeric_limits<double>::max();
            ev.terms_used = count;
            ev.value = Complex(sum);
            return ev;
        }
        if (l >= 1) t *= scale;
        sum += t;
        const double mag = std::abs(t);
        ev.last_term_mag = mag;
        ev.terms_used = count + 1;

        if (mag <= opts.rel_tol * std::abs(sum)) {
            if (++consec_small >= 3) {
                ev.status = SeriesStatus::converged;
                ev.value = Complex(sum);
                return ev;
            }
        } else {
            consec_small = 0;
        }
        if (prev_mag >= 0.0) {
            if (mag > prev_mag) {
                if (++rises >= opts.divergence_window) {
                    ev.status = SeriesStatus::diverged;
                    ev.value = Complex(sum);
                    return ev;
                }
            } else {
                rises = 0;
            }
        }
        prev_mag = mag;
    }
    ev.status = SeriesStatus::truncated;
    ev.value = Complex(sum);
    return ev;
}

bool all_real(const Complex& m, const Complex& a, const Complex& b, const Complex& x) {
    return m.imag() == 0.0 && a.imag() == 0.0 && b.imag() == 0.0 && x.imag() == 0.0;
}

void check_finite(std::initializer_list<Complex> zs, const char* where) {
    for (const Complex& z : zs)
        if (!is_finite(z)) throw DomainError(std::string(where) + ": non-finite input");
}

} // namespace

const char* to_string(SeriesStatus s) {
    switch (s) {
        case SeriesStatus::converged: return "converged";
        case SeriesStatus::truncated: return "truncated";
        case SeriesStatus::diverged: return "diverged";
    }
    return "?";
}

Complex master_number(Complex m, Complex a, Complex b, int ell) {
    if (ell < 0) throw DomainError("master_number: ell must be >= 0");
    check_finite({m, a, b}, "master_number");
    Complex p{1.0, 0.0};
    for (int g = 1; g < ell; ++g) p *= m - a * Complex(g) + b * Complex(ell);
    return p;
}

Complex series_coefficient(Complex m, Complex a, Complex b, int ell) {
    if (ell < 1) throw DomainError("series_coefficient: ell must be >= 1");
    check_finite({m, a, b}, "series_coefficient");
    // N_l / l! with the product factors and 1/gamma interleaved
    ScaledProduct<Complex> prod(Complex(1.0, 0.0));
    for (int g = 1; g < ell; ++g)
        prod.mul((m - a * Complex(g) + b * Complex(ell)) / Complex(g));
    prod.mul(Complex(1.0) / Complex(ell));
    Complex k;
    if (!prod.finish(k) || !is_finite(k))
        throw EvaluationError("series_coefficient: coefficient exceeds representable range");
    return k;
}

SeriesEval master_series(const MasterParams& params, Complex x, int d,
                         const SeriesOptions& opts) {
    check_finite({params.m, params.a, params.b, x}, "master_series");
    if (all_real(params.m, params.a, params.b, x))
        return sum_master<double>(params.m.real(), 1.0, params.m.real(),
                                  params.a.real(), params.b.real(), x.real(), d, opts);
    return sum_master<Complex>(params.m, Complex(1.0), params.m, params.a, params.b,
                               x, d, opts);
}

SeriesEval super_master(Complex m, Complex a, Complex b, Complex x, Complex c,
                        const SeriesOptions& opts) {
    check_finite({m, a, b, x, c}, "super_master");
    if (all_real(m, a, b, x) && c.imag() == 0.0)
        return sum_master<double>(m.real(), c.real(), c.real() * m.real(), a.real(),
                                  b.real(), x.real(), 0, opts);
    return sum_master<Complex>(m, c, c * m, a, b, x, 0, opts);
}

SeriesEval series_parity_part(ParityKind kind, const MasterParams& params, Complex x,
                              const SeriesOptions& opts) {
    SeriesEval plus = master_series(params, x, 0, opts);
    SeriesEval minus = master_series(params, -x, 0, opts);
    SeriesEval out;
    out.value = kind == ParityKind::odd ? (plus.value - minus.value) / 2.0
                                        : (plus.value + minus.value) / 2.0;
    out.terms_used = std::max(plus.terms_used, minus.terms_used);
    out.last_term_mag = std::max(plus.last_term_mag, minus.last_term_mag);
    out.status = SeriesStatus::converged;
    for (SeriesStatus s : {plus.status, minus.status}) {
        if (s == SeriesStatus::diverged) out.status = SeriesStatus::diverged;
        else if (s == SeriesStatus::truncated && out.status != SeriesStatus::diverged)
            out.status = SeriesStatus::truncated;
    }
    return out;
}

Radius convergence_radius(Complex a, Complex b) {
    check_finite({a, b}, "convergence_radius");
    if (a == Complex{} && b == Complex{})
        return {std::numeric_limits<double>::infinity(), RadiusKind::infinite};
    if (a == Complex{}) return {1.0 / (std::abs(b) * std::exp(1.0)), RadiusKind::finite};
    if (b == Complex{}) return {1.0 / std::abs(a), RadiusKind::finite};
    if (a == b) return {0.0, RadiusKind::equal_exponents};
    // |1 - a/b|^(b/a) / |b - a|, principal power, modulus for complex b/a
    const double base = std::abs(Complex(1.0) - a / b);
    const Complex expo = b / a;
    const double mag = std::exp((expo * std::log(base)).real());
    return {mag / std::abs(b - a), RadiusKind::finite};
}

} // namespace ultra
