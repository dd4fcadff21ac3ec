#include "moonshine/graded_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace moonshine {

namespace {

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

GradedSeries::GradedSeries(long offset24, std::vector<Rat> coeffs)
    : offset24_(offset24), coeffs_(std::move(coeffs)) {}

GradedSeries GradedSeries::zero(long offset24, std::size_t order) {
    return GradedSeries(offset24, std::vector<Rat>(order, Rat(0)));
}

GradedSeries GradedSeries::one(std::size_t order) {
    if (order == 0) throw std::invalid_argument("order must be >= 1");
    std::vector<Rat> c(order, Rat(0));
    c[0] = 1;
    return GradedSeries(0, std::move(c));
}

long GradedSeries::end24() const {
    if (empty()) throw std::logic_error("end24 of empty series");
    return offset24_ + 24 * static_cast<long>(order() - 1);
}

Rat GradedSeries::at24(long e24) const {
    if (empty())
        throw std::out_of_range("exponent past truncation of empty series");
    if (e24 < offset24_) return Rat(0);
    if (floor_mod(e24 - offset24_, 24) != 0) return Rat(0);
    long slot = (e24 - offset24_) / 24;
    if (slot >= static_cast<long>(order()))
        throw std::out_of_range("exponent past truncation order");
    return coeffs_[static_cast<std::size_t>(slot)];
}

bool GradedSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

void GradedSeries::assert_integral() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!is_integer(coeffs_[i]))
            throw std::logic_error("non-integer coefficient at slot " +
                                   std::to_string(i) + ": " +
                                   to_string(coeffs_[i]));
}

GradedSeries GradedSeries::operator-() const {
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return GradedSeries(offset24_, std::move(c));
}

GradedSeries GradedSeries::truncated(std::size_t n) const {
    if (n > order())
        throw std::invalid_argument("truncation exceeds known order");
    return GradedSeries(offset24_,
                        std::vector<Rat>(coeffs_.begin(),
                                         coeffs_.begin() + static_cast<long>(n)));
}

GradedSeries GradedSeries::shifted(long delta24) const {
    return GradedSeries(offset24_ + delta24, coeffs_);
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    // The empty series is exact zero, the additive identity.
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (floor_mod(a.offset24() - b.offset24(), 24) != 0)
        throw std::invalid_argument(
            "series offsets not congruent on the unit grid");
    const long off = std::min(a.offset24(), b.offset24());
    const long end = std::min(a.end24(), b.end24());
    if (end < off) return GradedSeries{};
    const std::size_t n = static_cast<std::size_t>((end - off) / 24) + 1;
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long e = off + 24 * static_cast<long>(i);
        c[i] = a.at24(e) + b.at24(e);
    }
    return GradedSeries(off, std::move(c));
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
    return a + (-b);
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    if (a.empty() || b.empty()) return GradedSeries{};
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    }
    return GradedSeries(a.offset24() + b.offset24(), std::move(c));
}

GradedSeries GradedSeries::inverse(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("inverse order must be >= 1");
    if (empty() || sgn(coeffs_[0]) == 0)
        throw std::domain_error("non-unit series");
    if (n > order())
        throw std::invalid_argument("inverse order exceeds operand truncation");
    std::vector<Rat> b(n, Rat(0));
    b[0] = 1 / coeffs_[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rat acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * b[k - j];
        b[k] = -acc / coeffs_[0];
    }
    return GradedSeries(-offset24_, std::move(b));
}

GradedSeries GradedSeries::pow(unsigned exponent, std::size_t n) const {
    if (n == 0) throw std::invalid_argument("power order must be >= 1");
    if (exponent == 0) return one(n);
    if (empty()) return GradedSeries{};
    if (n > order())
        throw std::invalid_argument("power order exceeds operand truncation");
    GradedSeries base = truncated(n);
    GradedSeries acc;  // empty until first multiply
    bool have = false;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) {
            acc = have ? acc * base : base;
            have = true;
        }
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool GradedSeries::agrees_with(const GradedSeries& other) const {
    // Knowledge of a series runs through its last stored exponent (below the
    // anchor and off-grid it is exactly zero); the empty series is known
    // everywhere. Compare wherever both are known.
    const bool a_inf = empty();
    const bool b_inf = other.empty();
    long common_end = 0;
    if (a_inf && b_inf) return true;
    if (a_inf)
        common_end = other.end24();
    else if (b_inf)
        common_end = end24();
    else
        common_end = std::min(end24(), other.end24());

    auto check_stored = [common_end](const GradedSeries& s,
                                     const GradedSeries& t) {
        if (s.empty()) return true;
        for (std::size_t i = 0; i < s.order(); ++i) {
            const long e = s.offset24() + 24 * static_cast<long>(i);
            if (e > common_end) break;
            Rat tv = t.empty() ? Rat(0) : t.at24(e);
            if (s.coeffs_[i] != tv) return false;
        }
        return true;
    };
    return check_stored(*this, other) && check_stored(other, *this);
}

}  // namespace moonshine
