#pragma once

#include <vector>

#include "betticone/betti_table.hpp"

namespace betticone {

struct ChainTerm {
    DegreeSequence d;
    Rational r;

    bool operator==(const ChainTerm&) const = default;
};

// Nonnegative combination of pure tables along a componentwise-increasing
// chain of equal-length degree sequences.
class ChainDecomposition {
public:
    explicit ChainDecomposition(std::vector<ChainTerm> terms);

    const std::vector<ChainTerm>& terms() const { return terms_; }
    int length() const { return terms_.front().d.length(); }

    bool operator==(const ChainDecomposition&) const = default;

private:
    std::vector<ChainTerm> terms_;
};

struct SymmetrizedTerm {
    DegreeSequence d;
    Rational r;
    bool self_dual = false;

    bool operator==(const SymmetrizedTerm&) const = default;
};

// Combination of symmetrized pure tables r * (pure(d) + pure(dual(d, N))).
// Terms increase strictly, each satisfies d_i + d_(s-i) <= N, no two are dual
// to each other, and at most one (necessarily the last) is self-dual; a
// self-dual term carries the halved coefficient of 2 * pure(d).
class SymmetrizedDecomposition {
public:
    SymmetrizedDecomposition(int n, std::vector<SymmetrizedTerm> terms);

    int n() const { return n_; }
    const std::vector<SymmetrizedTerm>& terms() const { return terms_; }
    int length() const { return terms_.front().d.length(); }

    bool operator==(const SymmetrizedDecomposition&) const = default;

private:
    int n_ = 0;
    std::vector<SymmetrizedTerm> terms_;
};

// Greedy peel-off along minimal shifts. Requires the power-sum functionals
// below the length to vanish; diagnoses NotInCone when a remainder stops
// being decomposable.
ChainDecomposition es_decompose(const BettiTable& t);

// Sum of the chain: sum r * pure_table(d).
BettiTable synthesize(const ChainDecomposition& c);

// Folds a dual-closed chain into symmetrized terms by pairing each sequence
// with its reflection; NotDualClosed when the pairing fails.
SymmetrizedDecomposition symmetrize(const ChainDecomposition& c, int n);

// Sum of the terms: sum r * symmetrized_pure_table(d, N).
BettiTable synthesize(const SymmetrizedDecomposition& sd);

struct DecompositionReport {
    bool synthesis_matches = false;
    bool lengths_match = false;
    bool strictly_increasing = false;
    bool no_mutual_duals = false;
    bool dual_dominates = false;       // N >= d_i + d_(s-i) per term
    bool self_dual_flags_match = false;
    bool multiplicity_matches = false;
    Rational table_multiplicity;
    Rational terms_multiplicity;

    bool all_passed() const {
        return synthesis_matches && lengths_match && strictly_increasing &&
               no_mutual_duals && dual_dominates && self_dual_flags_match &&
               multiplicity_matches;
    }
};

DecompositionReport verify_decomposition(const BettiTable& t,
                                         const SymmetrizedDecomposition& sd);

}  // namespace betticone
