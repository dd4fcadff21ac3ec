#pragma once

// Virasoro highest-weight structure at central charge 24.
//
// char M(h,24) = x^h sum_n p(n) x^n. Embeddings between Verma modules are
// controlled by integer solutions (alpha, beta) of the system
//
//     72 alpha^2 + 132 alpha beta + 49 beta^2 = -264 h + 253
//     -12 alpha beta - 11 beta^2 = 24 h - 23
//
// whose combination forces alpha^2 = beta^2; writing alpha = delta beta with
// delta = +-1 leaves
//
//     beta^2 = (23 - 24 h) / (11 + 12 delta).
//
// At h = 0 only delta = +1 works (beta = +-1, alpha beta = +1), giving
// M(0,24) a unique submodule isomorphic to M(1,24). For h >= 1 the
// delta = +1 branch is negative and the delta = -1 branch never produces a
// positive product (alpha beta = -beta^2), so M(h,24) is irreducible. The
// parameters epsilon, epsilon-bar of the derivation enter only through their
// symmetric functions, carried on the report as exact rationals.

#include <cstddef>
#include <vector>

#include "moonshine/graded_series.hpp"
#include "moonshine/numeric.hpp"

namespace moonshine {

struct VermaCharacter {
    long height = 0;
    GradedSeries series;  // exponents in x, anchored at x^height
};

enum class ModuleVerdict { UniqueSubmoduleHeightOne, Irreducible };

struct EmbeddingBranch {
    int delta = 0;
    Rat beta_squared;
    std::vector<Int> betas;   // integer solutions; alpha = delta * beta
    int alpha_beta_sign = 0;  // sign of alpha*beta over found pairs, 0 if none
    bool identities_hold = false;  // both quadratics, exact, for every pair
};

struct EmbeddingReport {
    long height = 0;
    EmbeddingBranch plus;   // delta = +1
    EmbeddingBranch minus;  // delta = -1
    ModuleVerdict verdict = ModuleVerdict::Irreducible;
    Rat epsilon_product;    // epsilon * conj = 1
    Rat epsilon_sum;        // epsilon + conj = -11/6
    Rat epsilon_power_sum;  // epsilon^2 + conj^2 = 49/36
};

VermaCharacter verma_character(long h, std::size_t n);

// h = 0: char M(0,24) - char M(1,24); h >= 1: char M(h,24).
GradedSeries irreducible_character(long h, std::size_t n);

EmbeddingReport feigin_fuchs_solutions(long h);
ModuleVerdict classify_module(long h);

}  // namespace moonshine
