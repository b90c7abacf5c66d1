#ifndef ULTRA_HYPERMASTER_HPP
#define ULTRA_HYPERMASTER_HPP

#include <vector>

#include "ultra/series.hpp"

namespace ultra {

/// One (m, a, b) factor triple of a hyper-master kernel.
struct FactorTriple {
    Complex m, a, b;
};

/// Kernel with ratio-of-products coefficients:
///   H(x) = constant_term + x + sum_{l>=2} x^l/l! *
///          prod_{g=1}^{l-1} [ prod_j (m_j - a_j g + b_j l) / prod_k (M_k - A_k g + B_k l) ].
/// Empty numerator and denominator give e^x - 1 + constant_term.
struct HyperParams {
    std::vector<FactorTriple> numerator;
    std::vector<FactorTriple> denominator;
    int constant_term = 1;  ///< 0 or 1
};

/// Evaluate the kernel. A vanishing denominator factor is a hard error
/// naming the offending (k, gamma, l).
SeriesEval hyper_master(const HyperParams& params, Complex x,
                        const SeriesOptions& opts = {});

/// Gauss hypergeometric 2F1(a,b;c;x) through the hyper-master embedding:
/// numerator triples (1,-1/a,0),(1,-1/b,0), denominator (1,-1/c,0), argument
/// scaled by a*b/c. Requires |x| < 1 and c not a non-positive integer.
SeriesEval gauss_2f1(Complex a, Complex b, Complex c, Complex x,
                     const SeriesOptions& opts = {});

/// Truncated direct Pochhammer sum sum_k (a)_k (b)_k / ((c)_k k!) x^k — the
/// independent reference for gauss_2f1.
Complex pochhammer_2f1_reference(Complex a, Complex b, Complex c, Complex x,
                                 int terms);

} // namespace ultra

#endif
