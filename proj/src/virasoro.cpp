#include "moonshine/virasoro.hpp"

#include <stdexcept>

#include "moonshine/modular_series.hpp"

namespace moonshine {

namespace {

// 72 a^2 + 132 ab + 49 b^2 = -264 h + 253  and  -12 ab - 11 b^2 = 24 h - 23
bool quadratic_identities_hold(long h, const Int& alpha, const Int& beta) {
    const Int lhs1 = 72 * alpha * alpha + 132 * alpha * beta + 49 * beta * beta;
    const Int lhs2 = -12 * alpha * beta - 11 * beta * beta;
    return lhs1 == Int(-264) * h + 253 && lhs2 == Int(24) * h - 23;
}

EmbeddingBranch solve_branch(long h, int delta) {
    EmbeddingBranch branch;
    branch.delta = delta;
    // Substituting alpha = delta beta into -12 alpha beta - 11 beta^2 =
    // 24h - 23 gives -(12 delta + 11) beta^2 = 24h - 23; the first quadratic
    // then holds automatically, since the two differ by 72(alpha^2 - beta^2).
    branch.beta_squared = rat(Int(23) - Int(24) * h, Int(11 + 12 * delta));
    branch.identities_hold = true;
    Int root;
    if (is_integer(branch.beta_squared) &&
        perfect_square(branch.beta_squared.get_num(), root) && sgn(root) > 0) {
        branch.betas = {root, -root};
        // alpha = delta * beta, so alpha*beta = delta * beta^2
        branch.alpha_beta_sign = delta;
        for (const Int& beta : branch.betas)
            branch.identities_hold =
                branch.identities_hold &&
                quadratic_identities_hold(h, Int(delta) * beta, beta);
    }
    return branch;
}

}  // namespace

VermaCharacter verma_character(long h, std::size_t n) {
    if (h < 0) throw std::invalid_argument("height must be >= 0");
    return VermaCharacter{h, partition_series(n).shifted(24 * h)};
}

GradedSeries irreducible_character(long h, std::size_t n) {
    if (h < 0) throw std::invalid_argument("height must be >= 0");
    if (h == 0)
        return verma_character(0, n).series - verma_character(1, n).series;
    return verma_character(h, n).series;
}

EmbeddingReport feigin_fuchs_solutions(long h) {
    if (h < 0) throw std::invalid_argument("height must be >= 0");
    EmbeddingReport report;
    report.height = h;
    report.plus = solve_branch(h, +1);
    report.minus = solve_branch(h, -1);
    report.verdict = classify_module(h);
    report.epsilon_product = rat(1);
    report.epsilon_sum = rat(-11, 6);
    report.epsilon_power_sum = rat(49, 36);
    return report;
}

ModuleVerdict classify_module(long h) {
    if (h < 0) throw std::invalid_argument("height must be >= 0");
    return h == 0 ? ModuleVerdict::UniqueSubmoduleHeightOne
                  : ModuleVerdict::Irreducible;
}

}  // namespace moonshine
