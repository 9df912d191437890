#pragma once

#include <optional>

#include "betticone/betti_table.hpp"

namespace betticone {

// Bound factor of a degree sequence starting at 0, with k = floor(s/2):
//   prod_{i=1..k} min{d_s - d_(s-i), floor(d_s/2)}
// * prod_{i=k+1..s} max{d_i, ceil(d_s/2)}.
Rational psi(const DegreeSequence& d);

// Sum of the two zeroth Herzog-Kuhl values of d and its reflection about d_s:
// 1/prod_{l=1..s} d_l + 1/(d_s * prod_{l=1..s-1} (d_s - d_l)).
Rational b_of(const DegreeSequence& d);

// (column-0 sum / s!) * psi-style product over the shift profile, using
// min{M_i, floor(m_s/2)} for i <= k and max{m_i, ceil(m_s/2)} above.
// Requires generation in degree zero (m_0 = 0).
Rational theorem_bound(const BettiTable& t);

// Quasi-pure two-sided bounds:
// (m_1...m_k M_(k+1)...M_s / s!, M_1...M_k m_(k+1)...m_s / s!).
std::pair<Rational, Rational> srinivasan_bounds(const BettiTable& t);

// max{j : beta_(1,j) > beta_(2,j)} for a cyclic length-3 table.
int n1(const BettiTable& t);

// n1 * M_2 * m_3 / 6.
Rational mnz_bound(const BettiTable& t);

// M_1 * m_2 * m_3 / 6 when M_1 <= m_2, else floor(m_3/2) * ceil(m_3/2) * m_3 / 6,
// for a cyclic length-3 table generated in degree zero.
Rational codim3_bound(const BettiTable& t);

// Shift-data forms of the two codimension-3 bounds, for checking printed
// products without building a table.
Rational mnz_value(int n1_degree, int max2, int socle);
Rational codim3_quasi_pure_value(int max1, int min2, int socle);
Rational codim3_general_value(int socle);

enum class BoundStatus { holds, violated, not_applicable };

struct BoundValue {
    std::optional<Rational> value;
    BoundStatus status = BoundStatus::not_applicable;
};

// Aggregate of every bound against the exact multiplicity. Status flags are
// literal comparisons of e with the stated value. lower_ref carries the
// unconditional lower-bound formula m_1...m_k M_(k+1)...M_s / s! even when
// the table is not quasi-pure; it is reference data, not a claimed bound.
struct BoundsReport {
    ShiftProfile profile;
    Rational beta0;
    Rational e;
    bool quasi_pure = false;
    bool cyclic = false;
    BoundValue theorem;      // upper
    BoundValue srinivasan_lower;
    BoundValue srinivasan_upper;
    BoundValue lower_ref;    // lower, unconditional
    std::optional<int> n1;
    BoundValue mnz;          // upper, length 3 cyclic only
    BoundValue codim3;       // upper, length 3 cyclic only
};

BoundsReport bounds_report(const BettiTable& t);

}  // namespace betticone
