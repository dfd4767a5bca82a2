#pragma once

#include <cstddef>
#include <span>

namespace proxdeg {

/// c * log(n) / log(log(n)) with natural logarithms. Requires n >= 16 so that
/// log log n > 1; throws ParameterError otherwise.
double theoretical_k(std::size_t n, double c);

/// Chernoff upper-tail bound (e^delta / (1+delta)^(1+delta))^mu.
/// delta == 0 gives exactly 1. Throws ParameterError for mu <= 0 or delta < 0.
double chernoff_tail(double mu, double delta);

/// H_m = sum_{i=1..m} 1/i, with H_0 = 0.
double harmonic(std::size_t m);

struct Moments {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (n-1 denominator); 0 for one value
    double min = 0.0;
    double max = 0.0;
};

/// Summary statistics of a sequence, accumulated in index order.
Moments moments(std::span<const double> values);

}  // namespace proxdeg
