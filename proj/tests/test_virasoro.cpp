#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "moonshine/partition.hpp"
#include "moonshine/virasoro.hpp"

using moonshine::EmbeddingReport;
using moonshine::GradedSeries;
using moonshine::Int;
using moonshine::ModuleVerdict;
using moonshine::Rat;
using moonshine::rat;

TEST_CASE("Verma characters") {
    auto m0 = moonshine::verma_character(0, 6);
    CHECK(m0.height == 0);
    CHECK(m0.series.offset24() == 0);
    const long p[] = {1, 1, 2, 3, 5, 7};
    for (std::size_t i = 0; i < 6; ++i) CHECK(m0.series[i] == p[i]);

    auto m1 = moonshine::verma_character(1, 4);
    CHECK(m1.series.offset24() == 24);
    for (long x = 1; x <= 4; ++x)
        CHECK(m1.series.at24(24 * x) == p[x - 1]);  // 1,1,2,3 at x^1..x^4

    CHECK_THROWS_AS(moonshine::verma_character(-1, 4), std::invalid_argument);
}

TEST_CASE("irreducible characters") {
    // height 0 is the quotient by the height-1 Verma submodule
    GradedSeries l0 = moonshine::irreducible_character(0, 201);
    CHECK(l0.at24(24) == 0);  // the height-1 component dies in the quotient
    auto table = moonshine::partition_numbers(200);
    for (std::size_t h = 0; h <= 200; ++h) {
        Int expected = table.at(h) - (h == 0 ? Int(0) : table.at(h - 1));
        CHECK(l0[h] == Rat(expected));
    }
    CHECK(l0[12] == 21);

    const long row[] = {1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14};
    GradedSeries diff = moonshine::verma_character(0, 12).series -
                        moonshine::verma_character(1, 12).series;
    for (std::size_t h = 0; h < 12; ++h) CHECK(diff[h] == row[h]);
    CHECK(l0.agrees_with(diff));

    // height >= 1 is the full Verma character
    GradedSeries l5 = moonshine::irreducible_character(5, 4);
    CHECK(l5 == moonshine::verma_character(5, 4).series);
    const long p[] = {1, 1, 2, 3};
    for (long x = 5; x <= 8; ++x) CHECK(l5.at24(24 * x) == p[x - 5]);
}

namespace {

// Independent oracle: enumerate every integer pair satisfying both quadratic
// identities directly. The box comfortably covers |beta| for the heights
// tested (72 beta^2 <= 253 + 264 h bounds any solution).
std::vector<std::pair<long, long>> enumerate_pairs(long h, long box) {
    std::vector<std::pair<long, long>> found;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            const bool first =
                72 * a * a + 132 * a * b + 49 * b * b == -264 * h + 253;
            const bool second = -12 * a * b - 11 * b * b == 24 * h - 23;
            if (first && second) found.emplace_back(a, b);
        }
    return found;
}

std::vector<std::pair<long, long>> report_pairs(const EmbeddingReport& r) {
    std::vector<std::pair<long, long>> pairs;
    for (const auto& branch : {r.plus, r.minus})
        for (const moonshine::Int& beta : branch.betas)
            pairs.emplace_back(branch.delta * beta.get_si(), beta.get_si());
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace

TEST_CASE("embedding solutions at the pinned heights") {
    EmbeddingReport r0 = moonshine::feigin_fuchs_solutions(0);
    CHECK(r0.plus.beta_squared == rat(1));  // 23/23
    REQUIRE(r0.plus.betas.size() == 2);
    CHECK(r0.plus.betas[0] == 1);
    CHECK(r0.plus.betas[1] == -1);
    CHECK(r0.plus.alpha_beta_sign == 1);
    CHECK(r0.plus.identities_hold);
    CHECK(r0.minus.beta_squared == rat(-23));
    CHECK(r0.minus.betas.empty());
    CHECK(r0.verdict == ModuleVerdict::UniqueSubmoduleHeightOne);

    EmbeddingReport r1 = moonshine::feigin_fuchs_solutions(1);
    CHECK(r1.plus.beta_squared == rat(-1, 23));
    CHECK(r1.plus.betas.empty());
    CHECK(r1.minus.beta_squared == rat(1));  // 24 - 23
    REQUIRE(r1.minus.betas.size() == 2);
    CHECK(r1.minus.alpha_beta_sign == -1);
    CHECK(r1.minus.identities_hold);
    CHECK(r1.verdict == ModuleVerdict::Irreducible);

    // h = 2: the delta = -1 branch has beta^2 = 25; the solutions carry
    // alpha beta = -25 < 0, so irreducibility still follows
    EmbeddingReport r2 = moonshine::feigin_fuchs_solutions(2);
    CHECK(r2.plus.beta_squared == rat(-25, 23));
    CHECK(r2.plus.betas.empty());
    CHECK(r2.minus.beta_squared == rat(25));
    REQUIRE(r2.minus.betas.size() == 2);
    CHECK(r2.minus.betas[0] == 5);
    CHECK(r2.minus.alpha_beta_sign == -1);
    CHECK(r2.minus.identities_hold);
    CHECK(r2.verdict == ModuleVerdict::Irreducible);
}

TEST_CASE("solver matches brute-force enumeration of the identities") {
    for (long h = 0; h <= 50; ++h) {
        auto expected = enumerate_pairs(h, 40);
        auto actual = report_pairs(moonshine::feigin_fuchs_solutions(h));
        CHECK(actual == expected);
    }
}

TEST_CASE("epsilon symmetric functions ride on every report") {
    EmbeddingReport r = moonshine::feigin_fuchs_solutions(7);
    CHECK(r.epsilon_product == rat(1));
    CHECK(r.epsilon_sum == rat(-11, 6));
    CHECK(r.epsilon_power_sum == rat(49, 36));
}

TEST_CASE("branch arithmetic for every height through 1000") {
    for (long h = 0; h <= 1000; ++h) {
        EmbeddingReport r = moonshine::feigin_fuchs_solutions(h);
        if (h == 0) {
            CHECK(r.plus.beta_squared == rat(1));
        } else {
            // delta = +1 branch is (23-24h)/23 < 0: solution-free
            CHECK(r.plus.beta_squared == rat(23 - 24 * h, 23));
            CHECK(sgn(r.plus.beta_squared) < 0);
            CHECK(r.plus.betas.empty());
        }
        CHECK(r.plus.identities_hold);
        CHECK(r.minus.identities_hold);

        // verdict is derivable from the solution set: a positive product
        // (embedded M(1,24)) appears exactly at h = 0
        const bool positive_product =
            r.plus.alpha_beta_sign > 0 || r.minus.alpha_beta_sign > 0;
        CHECK(positive_product == (h == 0));
        CHECK(moonshine::classify_module(h) == r.verdict);
    }
}

TEST_CASE("classification verdicts") {
    CHECK(moonshine::classify_module(0) ==
          ModuleVerdict::UniqueSubmoduleHeightOne);
    CHECK(moonshine::classify_module(1) == ModuleVerdict::Irreducible);
    CHECK(moonshine::classify_module(100) == ModuleVerdict::Irreducible);
    CHECK_THROWS_AS(moonshine::classify_module(-3), std::invalid_argument);
}
