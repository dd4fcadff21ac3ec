#pragma once

// Corpus-wide consistency checks and the invariance-group level arithmetic.
//
// verify_corpus runs, for every column: the sign-pattern invariants, the
// deconvolution roundtrip, multiplicity nonnegativity (with c_1 = 0), the
// eta-relation between the weight-1/2 form and the Thompson prefix, and
// weight-12 grading/integrality. The chi_1 column is additionally held to
// the vacuum character through height 11, the height-12 divergence (a = 21
// vs c = 22), and the singular-vector height table through height 30. With
// a degree table supplied, the low-height dimension identity
//   sum_k c_{hk} deg chi_k = [q^{h-1}] J
// is checked against an Eisenstein-only construction of J. With a checksum
// table supplied, each column is re-summed (plain and height-weighted)
// against the independently transcribed totals; a single corrupted entry is
// localized to its height by the quotient of the two discrepancies.
//
// Failures become report entries, never exceptions.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moonshine/decomposition.hpp"
#include "moonshine/numeric.hpp"

namespace moonshine {

struct CheckResult {
    std::string name;
    std::optional<int> chi;
    std::optional<long> h;
    bool pass = false;
    std::string expected;  // empty = omitted
    std::string actual;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool overall() const;
    void sort_entries();  // by (name, chi, h) for deterministic emission
};

// One Frobenius-class record (n_g, h_g) with the "does chi vanish on g"
// mask; the level of the invariance group is lcm over non-vanishing classes.
struct LevelRecord {
    Int n;
    Int h_divisor;
    bool chi_nonzero = true;
};

Int level_lcm(std::span<const LevelRecord> records);  // 1 on empty selection

struct RowChecksum {
    Int sum0;  // sum_h a_h
    Int sum1;  // sum_h h * a_h
};

struct VerifyOptions {
    long hmax = 5;  // dimension-identity reach; the six shipped degrees
                    // provably cover every character meeting V_h below this
    std::optional<std::map<int, RowChecksum>> checksums;
};

// Degrees must cover every supplied column index; throws on a missing one.
VerificationReport dimension_identity_check(
    const std::vector<CharacterColumn>& columns,
    const std::map<int, Int>& degrees, long hmax);

VerificationReport verify_corpus(const std::vector<CharacterColumn>& columns,
                                 const std::optional<std::map<int, Int>>& degrees,
                                 const VerifyOptions& options);

}  // namespace moonshine
