#include "moonshine/modular_series.hpp"

#include <stdexcept>

#include "moonshine/partition.hpp"

namespace moonshine {

namespace {

// sigma_e(m) = sum of e-th powers of divisors, by a divisor sieve.
std::vector<Int> divisor_power_sums(unsigned e, std::size_t n) {
    std::vector<Int> sums(n, Int(0));  // sums[m-1] = sigma_e(m), m = 1..n-1
    for (std::size_t d = 1; d < n; ++d) {
        Int de(static_cast<unsigned long>(d));
        Int p(1);
        for (unsigned i = 0; i < e; ++i) p *= de;
        for (std::size_t m = d; m < n; m += d) sums[m] += p;
    }
    return sums;
}

}  // namespace

GradedSeries partition_series(std::size_t n) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    PartitionTable table = partition_numbers(n - 1);
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Rat(table.values[i]);
    return GradedSeries(0, std::move(c));
}

GradedSeries euler_function(std::size_t n) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    // prod (1 - q^m) = sum_{k in Z} (-1)^k q^{k(3k-1)/2}
    std::vector<Rat> c(n, Rat(0));
    c[0] = 1;
    for (std::size_t k = 1;; ++k) {
        const std::size_t g1 = k * (3 * k - 1) / 2;
        if (g1 >= n) break;
        const int sign = (k % 2 == 1) ? -1 : 1;
        c[g1] += sign;
        const std::size_t g2 = k * (3 * k + 1) / 2;
        if (g2 < n) c[g2] += sign;
    }
    return GradedSeries(0, std::move(c));
}

GradedSeries eta_series(std::size_t n) { return euler_function(n).shifted(1); }

GradedSeries eta_power(unsigned k, std::size_t n) {
    if (k == 0) throw std::invalid_argument("eta power must be >= 1");
    return euler_function(n).pow(k, n).shifted(static_cast<long>(k));
}

GradedSeries eisenstein_series(int weight, std::size_t n) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    if (weight != 4 && weight != 6)
        throw std::invalid_argument("unsupported Eisenstein weight " +
                                    std::to_string(weight));
    const unsigned e = weight == 4 ? 3u : 5u;
    const long factor = weight == 4 ? 240 : -504;
    std::vector<Int> sums = divisor_power_sums(e, n);
    std::vector<Rat> c(n);
    c[0] = 1;
    for (std::size_t m = 1; m < n; ++m) c[m] = Rat(factor * sums[m]);
    return GradedSeries(0, std::move(c));
}

GradedSeries delta_series(std::size_t n) { return eta_power(24, n); }

GradedSeries delta_from_eisenstein(std::size_t n) {
    GradedSeries e4 = eisenstein_series(4, n);
    GradedSeries e6 = eisenstein_series(6, n);
    GradedSeries num = e4.pow(3, n) - e6.pow(2, n);
    std::vector<Rat> c(num.order());
    const Rat scale = rat(1, 1728);
    for (std::size_t i = 0; i < num.order(); ++i) c[i] = num[i] * scale;
    // (E4^3 - E6^2)/1728 = q - 24 q^2 + ...: the constant slot vanishes, so
    // re-anchor at q^1 to match eta^24's window.
    if (sgn(c[0]) != 0) throw std::logic_error("discriminant constant term");
    c.erase(c.begin());
    return GradedSeries(24, std::move(c));
}

GradedSeries j_series(std::size_t n) {
    if (n == 0) throw std::invalid_argument("term count must be >= 1");
    // j = E4^3 / Delta with Delta = eta^24; leading exponent q^{-1}.
    GradedSeries numerator = eisenstein_series(4, n).pow(3, n);
    return numerator * delta_series(n).inverse(n);
}

GradedSeries big_j_series(std::size_t n) {
    GradedSeries j = j_series(n);
    std::vector<Rat> c = j.coeffs();
    if (n >= 2) c[1] -= 744;  // the q^0 slot
    return GradedSeries(j.offset24(), std::move(c));
}

}  // namespace moonshine
