#ifndef ULTRA_TOOLS_SCALAR_PARSE_HPP
#define ULTRA_TOOLS_SCALAR_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "ultra/complex_ops.hpp"
#include "ultra/errors.hpp"
#include "ultra/rational.hpp"

namespace ultra::cli {

struct ParsedScalar {
    Complex value{};
    std::optional<Rational> ratio;  ///< set when given as p/q (or an integer)
    std::string text;               ///< original argument, echoed in output
};

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

inline bool parse_ll(const std::string& s, long long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtoll(s.c_str(), &end, 10);
    return end == s.c_str() + s.size();
}

/// Accepts "1.5", "-2", "2/3", "1+2i", "-0.5-0.25i", "2i", "i", "1e-3+2e2i".
/// Whitespace is ignored. Rationals "p/q" stay exact.
inline ParsedScalar parse_scalar(const std::string& raw) {
    ParsedScalar out;
    out.text = raw;
    const std::string s = strip_spaces(raw);
    if (s.empty()) throw DomainError("empty numeric argument");

    if (s.find('/') != std::string::npos) {
        const auto pos = s.find('/');
        long long num = 0, den = 1;
        if (!parse_ll(s.substr(0, pos), num) || !parse_ll(s.substr(pos + 1), den))
            throw DomainError("bad rational '" + raw + "' (expected p/q with integers)");
        Rational r(num, den);
        out.ratio = r;
        out.value = Complex(r.value(), 0.0);
        return out;
    }

    if (s.back() == 'i' || s.back() == 'I') {
        const std::string body = s.substr(0, s.size() - 1);
        auto parse_imag_unit = [&](const std::string& t) -> double {
            if (t.empty() || t == "+") return 1.0;
            if (t == "-") return -1.0;
            double v;
            if (!parse_double(t, v)) throw DomainError("bad complex number '" + raw + "'");
            return v;
        };
        // find the sign splitting real and imaginary parts (not an exponent
        // sign, not a leading sign)
        size_t split = std::string::npos;
        for (size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') &&
                body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            out.value = Complex(0.0, parse_imag_unit(body));
        } else {
            double re;
            if (!parse_double(body.substr(0, split), re))
                throw DomainError("bad complex number '" + raw + "'");
            out.value = Complex(re, parse_imag_unit(body.substr(split)));
        }
        return out;
    }

    double re;
    if (!parse_double(s, re)) throw DomainError("bad number '" + raw + "'");
    out.value = Complex(re, 0.0);
    out.ratio = Rational::from_integral(re);
    return out;
}

/// Branch lists: "0", "0..3", "1,2,-2,-1". Sorted ascending, deduplicated.
inline std::vector<int> parse_branch_list(const std::string& raw) {
    const std::string s = strip_spaces(raw);
    if (s.empty()) throw DomainError("empty branch list");
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, comma - pos);
        const size_t dots = tok.find("..");
        long long lo, hi;
        if (dots != std::string::npos) {
            if (!parse_ll(tok.substr(0, dots), lo) || !parse_ll(tok.substr(dots + 2), hi) ||
                hi < lo || hi - lo > 4096)
                throw DomainError("bad branch range '" + tok + "'");
        } else {
            if (!parse_ll(tok, lo)) throw DomainError("bad branch index '" + tok + "'");
            hi = lo;
        }
        for (long long n = lo; n <= hi; ++n) out.push_back(static_cast<int>(n));
        pos = comma + 1;
        if (comma == s.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Comma-separated complex list for the merged-series flags.
inline std::vector<ParsedScalar> parse_scalar_list(const std::string& raw) {
    std::vector<ParsedScalar> out;
    const std::string s = strip_spaces(raw);
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        out.push_back(parse_scalar(s.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == s.size()) break;
    }
    return out;
}

} // namespace ultra::cli

#endif
