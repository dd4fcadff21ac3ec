#pragma once

// Decomposition of the Monster module as a Virasoro module, per irreducible
// Monster character chi_k.
//
// A CharacterColumn holds the first 52 coefficients a_h of the singular
// vector generating function for chi_k, normalized by deg chi_k. Convolving
// a column with the partition numbers reproduces the multiplicities c_{hk}
// of chi_k in the height-h graded piece; dividing the multiplicity series by
// the partition series (i.e. multiplying by the Euler function) inverts the
// map. chi_1 carries the vacuum convention a_0 = 1, a_1 = -1, which bakes
// the quotient L(0,24) = M(0,24)/M(1,24) into the same convolution.
//
// From a column one also forms:
//   - the McKay-Thompson prefix  q^{-1} (sum_h a_h q^h) / E(q),
//   - the weight-1/2 expansion   q^{-23/24} sum_h a_h q^h,
//   - the weight-12 expansion    (weight-1/2) * eta^23,
// and these are tied together by the identity
//   (weight-1/2 form) = (Thompson prefix) * eta.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "moonshine/graded_series.hpp"
#include "moonshine/numeric.hpp"

namespace moonshine {

struct CharacterColumn {
    int chi = 0;                // character index, 1..194
    std::optional<Int> degree;  // deg chi_k when known
    std::vector<Int> coeffs;    // a_0, a_1, ... (52 entries for corpus rows)
};

struct MultiplicitySequence {
    int chi = 0;
    std::vector<Int> values;  // c_0, c_1, ...
};

// One sign-pattern violation: slot index plus a human-readable description.
struct ColumnViolation {
    std::size_t slot = 0;
    std::string message;
};

// chi = 1 must open 1, -1 and stay nonnegative after; chi >= 2 must open 0
// and be nonnegative throughout.
std::vector<ColumnViolation> column_violations(const CharacterColumn& col);
void validate_column(const CharacterColumn& col);  // throws invalid_argument

MultiplicitySequence multiplicities_from_column(const CharacterColumn& col,
                                                std::size_t n);

// Exact inverse of multiplicities_from_column. Requires c_1 = 0 and
// c_0 = 1 (trivial) or 0 (otherwise); any negative coefficient beyond the
// sanctioned a_1 = -1 signals inconsistent input and throws.
CharacterColumn column_from_multiplicities(const MultiplicitySequence& c,
                                           bool is_trivial, std::size_t n);

GradedSeries thompson_prefix_from_column(const CharacterColumn& col,
                                         std::size_t n);
GradedSeries weight_half_form(const CharacterColumn& col, std::size_t n);
GradedSeries weight_twelve_form(const CharacterColumn& col, std::size_t n);

// Shared expansions for corpus-wide passes: computing 1/E, eta^23 and the
// partition table once instead of per column dominates the cost of checking
// a 170-column corpus.
struct DecompositionContext {
    std::size_t terms;
    GradedSeries euler_inverse;  // 1/E(q) to `terms`
    GradedSeries eta;            // eta to `terms`
    GradedSeries eta23;          // eta^23 to `terms`
    std::vector<Int> partitions; // p(0..terms-1)
};

DecompositionContext make_decomposition_context(std::size_t terms);

MultiplicitySequence multiplicities_from_column(
    const CharacterColumn& col, std::size_t n,
    const DecompositionContext& ctx);
GradedSeries thompson_prefix_from_column(const CharacterColumn& col,
                                         std::size_t n,
                                         const DecompositionContext& ctx);
GradedSeries weight_twelve_form(const CharacterColumn& col, std::size_t n,
                                const DecompositionContext& ctx);

// char L(0,24) coefficients p(h) - p(h-1).
GradedSeries trivial_vacuum_series(std::size_t n);

// Nonzero (h, a_h) pairs for h >= 2, skipping the convention slots.
std::vector<std::pair<std::size_t, Int>> first_singular_heights(
    const CharacterColumn& col);

// Degree-weighted total singular series q J(q) E(q); slots 0 and 1 carry the
// chi_1 convention values 1 and -1.
GradedSeries total_singular_series(std::size_t n);

}  // namespace moonshine
