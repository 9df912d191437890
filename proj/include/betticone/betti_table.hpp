#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "betticone/rational.hpp"

namespace betticone {

// Strictly increasing integer tuple d_0 < d_1 < ... < d_s, s >= 1.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> degrees);

    int length() const { return static_cast<int>(degrees_.size()) - 1; }
    int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& degrees() const { return degrees_; }

    // Lexicographic; used for canonical listing orders.
    auto operator<=>(const DegreeSequence&) const = default;

private:
    std::vector<int> degrees_;
};

// d <= d' in the componentwise partial order (same length required).
bool pointwise_leq(const DegreeSequence& a, const DegreeSequence& b);
// d < d': componentwise <= and not equal.
bool pointwise_lt(const DegreeSequence& a, const DegreeSequence& b);

std::string to_string(const DegreeSequence& d);

// Sparse table of strictly positive rationals indexed by (homological index i,
// internal degree j). Absent keys are zero. Construction enforces:
//  - at least one entry,
//  - every value strictly positive,
//  - columns 0..length all nonempty with strictly increasing minimal degrees
//    (equivalent to: every entry in column i > 0 sits strictly above some
//    entry of column i-1).
class BettiTable {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, Rational>;

    // Accumulates repeated (i, j) triples, drops exact zeros, validates.
    static BettiTable from_entries(const std::vector<std::tuple<int, int, Rational>>& raw);
    // Takes an already-summed sparse map (zeros allowed, dropped), validates.
    static BettiTable from_map(Map entries);

    const Map& entries() const { return entries_; }
    int length() const { return length_; }
    Rational at(int i, int j) const;
    Rational column_sum(int i) const;

    bool operator==(const BettiTable&) const = default;

private:
    BettiTable(Map entries, int length)
        : entries_(std::move(entries)), length_(length) {}

    Map entries_;
    int length_ = 0;
};

// Column extrema. m/M are indexed 0..s; k = floor(s/2); N = M_s + m_0.
struct ShiftProfile {
    int s = 0;
    std::vector<int> m;
    std::vector<int> M;
    int k = 0;
    int N = 0;
};

ShiftProfile shifts(const BettiTable& t);

// Alternating power sum over all entries: sum_(i,j) (-1)^i beta_(i,j) j^power.
Rational ps_functional(const BettiTable& t, unsigned long power);

// (-1)^s ps_functional(t, s) / s!. Requires the functionals for l < s to
// vanish unless force is set; for length-zero tables returns the column sum.
Rational multiplicity(const BettiTable& t, bool force = false);

// Herzog-Kuhl normalization: beta_(i,d_i) = 1 / prod_(l != i) |d_l - d_i|.
BettiTable pure_table(const DegreeSequence& d);

// (n - d_s, ..., n - d_0).
DegreeSequence dual_sequence(const DegreeSequence& d, int n);

// Entry (i, j) of the result is entry (s - i, n - j) of t. The reflected
// support can break the column axioms; that surfaces as BrokenChain.
BettiTable dual_table(const BettiTable& t, int s, int n);

// The witness n = M_s + m_0 when t equals its own dual, otherwise nullopt.
std::optional<int> is_self_dual(const BettiTable& t);

// pure_table(d) + pure_table(dual_sequence(d, n)). Requires n >= d_0 + d_s.
BettiTable symmetrized_pure_table(const DegreeSequence& d, int n);

// m_i >= M_(i-1) for all i = 2..s.
bool is_quasi_pure(const BettiTable& t);

BettiTable add(const BettiTable& a, const BettiTable& b);
BettiTable scale(const Rational& c, const BettiTable& t);

}  // namespace betticone
