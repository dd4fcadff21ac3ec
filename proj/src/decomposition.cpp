#include "moonshine/decomposition.hpp"

#include <stdexcept>

#include "moonshine/modular_series.hpp"
#include "moonshine/partition.hpp"

namespace moonshine {

namespace {

GradedSeries column_series(const CharacterColumn& col, std::size_t n) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    if (n > col.coeffs.size())
        throw std::invalid_argument("term count exceeds column length");
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Rat(col.coeffs[i]);
    return GradedSeries(0, std::move(c));
}

}  // namespace

std::vector<ColumnViolation> column_violations(const CharacterColumn& col) {
    std::vector<ColumnViolation> v;
    const auto& a = col.coeffs;
    if (a.empty()) {
        v.push_back({0, "empty column"});
        return v;
    }
    if (col.chi == 1) {
        if (a[0] != 1) v.push_back({0, "a0 must be 1 for chi=1"});
        if (a.size() > 1 && a[1] != -1)
            v.push_back({1, "a1 must be -1 for chi=1"});
        for (std::size_t i = 2; i < a.size(); ++i)
            if (sgn(a[i]) < 0) v.push_back({i, "negative entry"});
    } else {
        if (a[0] != 0) v.push_back({0, "a0 must be 0 for chi>=2"});
        for (std::size_t i = 1; i < a.size(); ++i)
            if (sgn(a[i]) < 0) v.push_back({i, "negative entry"});
    }
    return v;
}

void validate_column(const CharacterColumn& col) {
    const auto v = column_violations(col);
    if (!v.empty())
        throw std::invalid_argument(
            "malformed column chi=" + std::to_string(col.chi) + " slot " +
            std::to_string(v.front().slot) + ": " + v.front().message);
}

namespace {

void require_terms(const CharacterColumn& col, std::size_t n,
                   std::size_t available) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    if (n > col.coeffs.size())
        throw std::invalid_argument("term count exceeds column length");
    if (n > available)
        throw std::invalid_argument("term count exceeds context depth");
}

}  // namespace

DecompositionContext make_decomposition_context(std::size_t terms) {
    if (terms == 0) throw std::invalid_argument("term count must be >= 1");
    DecompositionContext ctx;
    ctx.terms = terms;
    ctx.euler_inverse = euler_function(terms).inverse(terms);
    ctx.eta = eta_series(terms);
    ctx.eta23 = eta_power(23, terms);
    ctx.partitions = partition_numbers(terms - 1).values;
    return ctx;
}

namespace {

MultiplicitySequence convolve_with_partitions(const CharacterColumn& col,
                                              std::size_t n,
                                              const std::vector<Int>& p) {
    MultiplicitySequence seq;
    seq.chi = col.chi;
    seq.values.resize(n);
    for (std::size_t h = 0; h < n; ++h) {
        Int acc(0);
        for (std::size_t j = 0; j <= h; ++j)
            if (sgn(col.coeffs[j]) != 0) acc += col.coeffs[j] * p[h - j];
        seq.values[h] = acc;
    }
    return seq;
}

}  // namespace

MultiplicitySequence multiplicities_from_column(
    const CharacterColumn& col, std::size_t n,
    const DecompositionContext& ctx) {
    validate_column(col);
    require_terms(col, n, ctx.terms);
    return convolve_with_partitions(col, n, ctx.partitions);
}

MultiplicitySequence multiplicities_from_column(const CharacterColumn& col,
                                                std::size_t n) {
    validate_column(col);
    require_terms(col, n, n);
    return convolve_with_partitions(col, n, partition_numbers(n - 1).values);
}

CharacterColumn column_from_multiplicities(const MultiplicitySequence& c,
                                           bool is_trivial, std::size_t n) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    if (n > c.values.size())
        throw std::invalid_argument("term count exceeds sequence length");
    if (c.values[0] != (is_trivial ? 1 : 0))
        throw std::invalid_argument(is_trivial ? "c0 must be 1 for the trivial character"
                                               : "c0 must be 0");
    if (n > 1 && c.values[1] != 0)
        throw std::invalid_argument("c1 must be 0 (the height-1 component vanishes)");

    // Dividing out the partition series is convolution with the Euler
    // function's sparse +-1 coefficients.
    GradedSeries e = euler_function(n);
    CharacterColumn col;
    col.chi = c.chi;
    col.coeffs.resize(n);
    for (std::size_t h = 0; h < n; ++h) {
        Int acc(0);
        for (std::size_t j = 0; j <= h; ++j)
            if (sgn(e[j]) != 0) acc += e[j].get_num() * c.values[h - j];
        col.coeffs[h] = acc;
    }
    for (std::size_t h = 0; h < n; ++h) {
        const bool sanctioned = is_trivial && h == 1;
        if (sgn(col.coeffs[h]) < 0 && !sanctioned)
            throw std::runtime_error(
                "not a valid singular-vector series: negative count at height " +
                std::to_string(h));
    }
    return col;
}

GradedSeries thompson_prefix_from_column(const CharacterColumn& col,
                                         std::size_t n,
                                         const DecompositionContext& ctx) {
    validate_column(col);
    require_terms(col, n, ctx.terms);
    // q^{-1} (sum_h a_h q^h) / E(q); the q^{+-1/24} factors cancel against
    // eta, leaving an integer-grid series with leading slot q^{-1}.
    GradedSeries quotient =
        column_series(col, n) * ctx.euler_inverse.truncated(n);
    return quotient.shifted(-24);
}

GradedSeries thompson_prefix_from_column(const CharacterColumn& col,
                                         std::size_t n) {
    validate_column(col);
    GradedSeries quotient =
        column_series(col, n) * euler_function(n).inverse(n);
    return quotient.shifted(-24);
}

GradedSeries weight_half_form(const CharacterColumn& col, std::size_t n) {
    validate_column(col);
    return column_series(col, n).shifted(-23);
}

GradedSeries weight_twelve_form(const CharacterColumn& col, std::size_t n,
                                const DecompositionContext& ctx) {
    require_terms(col, n, ctx.terms);
    return weight_half_form(col, n) * ctx.eta23.truncated(n);
}

GradedSeries weight_twelve_form(const CharacterColumn& col, std::size_t n) {
    return weight_half_form(col, n) * eta_power(23, n);
}

GradedSeries trivial_vacuum_series(std::size_t n) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    PartitionTable p = partition_numbers(n - 1);
    std::vector<Rat> c(n);
    c[0] = Rat(p.values[0]);
    for (std::size_t h = 1; h < n; ++h)
        c[h] = Rat(p.values[h] - p.values[h - 1]);
    return GradedSeries(0, std::move(c));
}

std::vector<std::pair<std::size_t, Int>> first_singular_heights(
    const CharacterColumn& col) {
    validate_column(col);
    std::vector<std::pair<std::size_t, Int>> out;
    for (std::size_t h = 2; h < col.coeffs.size(); ++h)
        if (sgn(col.coeffs[h]) != 0) out.emplace_back(h, col.coeffs[h]);
    return out;
}

GradedSeries total_singular_series(std::size_t n) {
    // q J(q) E(q): anchored at q^0 with the chi_1 convention slots 1, -1.
    return big_j_series(n).shifted(24) * euler_function(n);
}

}  // namespace moonshine
