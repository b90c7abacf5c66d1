#include "ultra/hypermaster.hpp"

#include <cmath>
#include <string>

namespace ultra {

namespace {

bool nonpositive_integer(Complex c) {
    return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::floor(c.real());
}

} // namespace

SeriesEval hyper_master(const HyperParams& params, Complex x, const SeriesOptions& opts) {
    opts.validate();
    if (params.constant_term != 0 && params.constant_term != 1)
        throw DomainError("hyper_master: constant_term must be 0 or 1");
    for (const auto& fs : {params.numerator, params.denominator})
        for (const FactorTriple& f : fs)
            if (!is_finite(f.m) || !is_finite(f.a) || !is_finite(f.b))
                throw DomainError("hyper_master: non-finite factor triple");
    if (!is_finite(x)) throw DomainError("hyper_master: non-finite argument");

    SeriesEval ev{};
    Complex sum = Complex(params.constant_term) + x;
    ev.terms_used = 2;
    ev.last_term_mag = std::abs(x);
    int consec_small = 0;
    int rises = 0;
    double prev_mag = std::abs(x);

    for (int l = 2; l < opts.max_terms; ++l) {
        Complex t = x / Complex(l);
        int carry = 0;
        for (int g = 1; g < l; ++g) {
            for (const FactorTriple& fj : params.numerator)
                t *= fj.m - fj.a * Complex(g) + fj.b * Complex(l);
            for (size_t k = 0; k < params.denominator.size(); ++k) {
                const FactorTriple& fk = params.denominator[k];
                const Complex den = fk.m - fk.a * Complex(g) + fk.b * Complex(l);
                if (den == Complex{})
                    throw DomainError("hyper_master: denominator factor " + std::to_string(k) +
                                      " vanishes at (gamma=" + std::to_string(g) +
                                      ", l=" + std::to_string(l) + ")");
                t /= den;
            }
            t *= x / Complex(g);
            const double m = std::abs(t);
            if (m > 1e200) {
                t *= 1e-200;
                ++carry;
            } else if (m != 0.0 && m < 1e-200) {
                t *= 1e200;
                --carry;
            }
        }
        while (carry > 0 && std::abs(t) <= 1e108) {
            t *= 1e200;
            --carry;
        }
        while (carry < 0) {
            t *= 1e-200;
            ++carry;
        }
        if (carry != 0 || !is_finite(t)) {
            ev.status = SeriesStatus::diverged;
            ev.last_term_mag = std::numeric_limits<double>::max();
            ev.value = sum;
            return ev;
        }
        sum += t;
        ev.terms_used = l + 1;
        const double mag = std::abs(t);
        ev.last_term_mag = mag;
        if (mag <= opts.rel_tol * std::abs(sum)) {
            if (++consec_small >= 3) {
                ev.status = SeriesStatus::converged;
                ev.value = sum;
                return ev;
            }
        } else {
            consec_small = 0;
        }
        if (mag > prev_mag) {
            if (++rises >= opts.divergence_window) {
                ev.status = SeriesStatus::diverged;
                ev.value = sum;
                return ev;
            }
        } else {
            rises = 0;
        }
        prev_mag = mag;
    }
    ev.status = SeriesStatus::truncated;
    ev.value = sum;
    return ev;
}

SeriesEval gauss_2f1(Complex a, Complex b, Complex c, Complex x, const SeriesOptions& opts) {
    if (nonpositive_integer(c))
        throw DomainError("gauss_2f1: c is a non-positive integer (pole)");
    if (std::abs(x) >= 1.0)
        throw DomainError("gauss_2f1: needs |x| < 1");
    if (a == Complex{} || b == Complex{}) {
        SeriesEval ev;
        ev.value = Complex(1.0);
        ev.terms_used = 1;
        ev.status = SeriesStatus::converged;
        return ev;
    }
    HyperParams hp;
    hp.numerator = {{Complex(1.0), -Complex(1.0) / a, Complex{}},
                    {Complex(1.0), -Complex(1.0) / b, Complex{}}};
    hp.denominator = {{Complex(1.0), -Complex(1.0) / c, Complex{}}};
    hp.constant_term = 1;
    return hyper_master(hp, a * b / c * x, opts);
}

Complex pochhammer_2f1_reference(Complex a, Complex b, Complex c, Complex x, int terms) {
    if (terms < 1) throw DomainError("pochhammer_2f1_reference: terms must be >= 1");
    if (nonpositive_integer(c))
        throw DomainError("pochhammer_2f1_reference: c is a non-positive integer (pole)");
    Complex sum{1.0, 0.0};
    Complex t{1.0, 0.0};
    for (int k = 0; k < terms - 1; ++k) {
        t *= (a + Complex(k)) * (b + Complex(k)) / ((c + Complex(k)) * Complex(k + 1)) * x;
        sum += t;
    }
    return sum;
}

} // namespace ultra
