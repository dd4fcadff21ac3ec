#pragma once

// Truncated formal series with exponents on the (1/24)Z lattice.
//
// A series stores `order` consecutive coefficients anchored at the exponent
// offset24/24; slot i holds the coefficient of q^((offset24 + 24*i)/24).
// Exponents below the offset, or off the series' own grid (not congruent to
// offset24 mod 24), are exactly zero; exponents past the last slot are
// unknown (truncated). A default-constructed series is the exact zero with
// no truncation bound.
//
// Truncation is never extended: sums are valid up to the shorter operand's
// last known exponent, products up to the shorter operand's term count, and
// inversion refuses to run past the operand's own order.

#include <cstddef>
#include <vector>

#include "moonshine/numeric.hpp"

namespace moonshine {

class GradedSeries {
public:
    GradedSeries() = default;  // exact zero
    GradedSeries(long offset24, std::vector<Rat> coeffs);

    static GradedSeries zero(long offset24, std::size_t order);
    static GradedSeries one(std::size_t order);

    bool empty() const { return coeffs_.empty(); }
    std::size_t order() const { return coeffs_.size(); }
    long offset24() const { return offset24_; }
    long end24() const;  // exponent (1/24 units) of the last stored slot

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& operator[](std::size_t slot) const { return coeffs_.at(slot); }

    // Coefficient by exponent in 1/24 units: exact zero below the offset or
    // off-grid, std::out_of_range past the truncation.
    Rat at24(long e24) const;

    bool is_integral() const;
    void assert_integral() const;  // std::logic_error on non-integer entry

    GradedSeries operator-() const;
    GradedSeries truncated(std::size_t n) const;
    GradedSeries shifted(long delta24) const;  // multiply by q^(delta24/24)

    // Multiplicative inverse to n terms; requires a nonzero leading slot and
    // n <= order().
    GradedSeries inverse(std::size_t n) const;
    GradedSeries pow(unsigned exponent, std::size_t n) const;

    // True when the two series agree at every exponent both have knowledge
    // of. This is the working notion of series equality; operator== is
    // structural (same anchor, same order, same slots).
    bool agrees_with(const GradedSeries& other) const;

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

private:
    long offset24_ = 0;
    std::vector<Rat> coeffs_;
};

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);

}  // namespace moonshine
