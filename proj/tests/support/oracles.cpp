#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oracles {

std::vector<C> poly_roots(std::vector<C> coeffs, int max_iters, double tol) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) throw std::invalid_argument("poly_roots: degree < 1");
    const int n = static_cast<int>(coeffs.size()) - 1;
    const C lead = coeffs.back();
    for (C& c : coeffs) c /= lead;

    auto eval = [&](C z) {
        C acc = 0.0;
        for (int i = n; i >= 0; --i) acc = acc * z + coeffs[i];
        return acc;
    };

    std::vector<C> r(n);
    C p{1.0, 0.0};
    const C seed{0.4, 0.9};
    for (int i = 0; i < n; ++i) {
        p *= seed;
        r[i] = p;
    }
    for (int it = 0; it < max_iters; ++it) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            C denom{1.0, 0.0};
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= r[i] - r[j];
            const C step = eval(r[i]) / denom;
            r[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < tol) break;
    }
    return r;
}

double lambert_w0(double x) {
    if (x < -std::exp(-1.0)) throw std::invalid_argument("lambert_w0: x < -1/e");
    double w = x < 1.0 ? x : std::log(1.0 + x);
    for (int i = 0; i < 200; ++i) {
        const double e = std::exp(w);
        const double step = (w * e - x) / (e * (1.0 + w));
        w -= step;
        if (std::abs(step) < 1e-17 * (1.0 + std::abs(w))) break;
    }
    return w;
}

C central_diff(const std::function<C(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double set_distance(std::vector<C> a, std::vector<C> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const C& x : a) {
        int best = -1;
        double bd = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < bd) {
                bd = d;
                best = static_cast<int>(j);
            }
        }
        used[best] = true;
        worst = std::max(worst, bd);
    }
    return worst;
}

} // namespace oracles
