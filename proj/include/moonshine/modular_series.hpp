#pragma once

// Named q-expansions: the partition series 1/E(q), the Euler function
// E(q) = prod_{m>=1} (1 - q^m), the Dedekind eta function eta = q^{1/24} E(q)
// and its powers, the normalized Eisenstein series E4 and E6, the
// discriminant Delta = eta^24 = (E4^3 - E6^2)/1728, and the modular
// j-function j = E4^3 / Delta with J = j - 744.
//
// Delta is deliberately available through both routes; the test suite holds
// them term-for-term equal.
//
// Every constructor takes a term count n >= 1 and returns exactly n stored
// coefficients, all integers.

#include <cstddef>

#include "moonshine/graded_series.hpp"

namespace moonshine {

GradedSeries partition_series(std::size_t n);  // sum_m p(m) q^m
GradedSeries euler_function(std::size_t n);    // sparse +-1 coefficients
GradedSeries eta_series(std::size_t n);        // offset24 = 1
GradedSeries eta_power(unsigned k, std::size_t n);  // offset24 = k

// weight 4 or 6; anything else is std::invalid_argument
GradedSeries eisenstein_series(int weight, std::size_t n);

GradedSeries delta_series(std::size_t n);           // eta^24
GradedSeries delta_from_eisenstein(std::size_t n);  // (E4^3 - E6^2)/1728

GradedSeries j_series(std::size_t n);      // leading slot q^{-1}
GradedSeries big_j_series(std::size_t n);  // j - 744

}  // namespace moonshine
