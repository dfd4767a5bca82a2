#include "proxdeg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "proxdeg/errors.hpp"

namespace proxdeg {

double theoretical_k(std::size_t n, double c) {
    if (n < 16) {
        throw ParameterError("n must be at least 16 for log log n > 1 (got " + std::to_string(n) +
                             ")");
    }
    const double ln = std::log(static_cast<double>(n));
    return c * ln / std::log(ln);
}

double chernoff_tail(double mu, double delta) {
    if (!(mu > 0.0)) {
        throw ParameterError("chernoff_tail: mu must be positive");
    }
    if (!(delta >= 0.0)) {
        throw ParameterError("chernoff_tail: delta must be non-negative");
    }
    if (delta == 0.0) return 1.0;
    return std::exp(mu * (delta - (1.0 + delta) * std::log1p(delta)));
}

double harmonic(std::size_t m) {
    // Summing smallest terms first keeps the rounding error at a few ulps.
    double h = 0.0;
    for (std::size_t i = m; i >= 1; --i) h += 1.0 / static_cast<double>(i);
    return h;
}

Moments moments(std::span<const double> values) {
    Moments out;
    if (values.empty()) return out;
    double sum = 0.0;
    out.min = values.front();
    out.max = values.front();
    for (double v : values) {
        sum += v;
        out.min = std::min(out.min, v);
        out.max = std::max(out.max, v);
    }
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return out;
}

}  // namespace proxdeg
