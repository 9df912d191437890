#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betticone/decomposition.hpp"

namespace betticone {

// splitmix64: tiny, seedable, identical everywhere. Standard library engines
// and distributions are implementation-defined, which would break the
// byte-identical-output contract across toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform over [0, bound). Modulo bias is irrelevant here: bounds are
    // tiny against 2^64 and the contract is determinism, not uniformity.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// All d of length s with d_0 = 0, d_s <= max_socle and d <= its reflection
// about d_s (d_i + d_(s-i) <= d_s for all i), in lexicographic order.
std::vector<DegreeSequence> enumerate_sequences(int s, int max_socle);

// Random valid decomposition: picks comparable, non-mutually-dual sequences
// from the enumerated range, with coefficients p/q, 1 <= p, q <= 100.
// socle_pinned restricts picks to d_s = N so the synthesized table is
// generated purely in degree zero.
SymmetrizedDecomposition random_symmetrized_decomposition(int s, int max_socle,
                                                          SplitMix64& rng,
                                                          bool socle_pinned);

struct SurveyViolation {
    std::vector<DegreeSequence> sequences;
    std::vector<Rational> values;
    std::string note;
    std::optional<SymmetrizedDecomposition> witness;
    std::optional<unsigned long> trial;
};

struct SurveyResult {
    std::string check;
    int s = 0;
    int max_socle = 0;
    unsigned long sequence_count = 0;
    unsigned long checked = 0;
    std::vector<SurveyViolation> violations;
    // One per enumerated sequence for the product survey, empty otherwise.
    std::vector<std::pair<DegreeSequence, Rational>> evaluations;
};

// For every pair d < d' with equal socle and d < d' <= reflection(d') <
// reflection(d), checks psi(d') <= psi(d). Violations are recorded, never
// asserted.
SurveyResult survey_lemma(int s, int max_socle);

// Records b_of(d) * psi(d) for every enumerated d and flags values < 2.
SurveyResult survey_proposition(int s, int max_socle);

// Synthesizes `trials` random decompositions (socle-pinned) and flags tables
// whose multiplicity exceeds theorem_bound.
SurveyResult survey_theorem(int s, int max_socle, unsigned long trials,
                            std::uint64_t seed);

}  // namespace betticone
