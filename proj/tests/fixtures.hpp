#pragma once

#include <initializer_list>
#include <optional>

#include "betticone/betti_table.hpp"
#include "betticone/error.hpp"

namespace fixtures {

inline betticone::Rational q(long num, long den = 1) {
    return betticone::make_rational(num, den);
}

inline betticone::DegreeSequence seq(std::initializer_list<int> degrees) {
    return betticone::DegreeSequence(std::vector<int>(degrees));
}

// Gorenstein codimension-3 table with multiplicity 20:
// generators at 0; first syzygies at 2 (x3) and 7 (x2); second at 3 (x2) and
// 8 (x3); socle at 10. Self-dual about 10, not quasi-pure.
inline betticone::BettiTable gor20() {
    return betticone::BettiTable::from_entries({
        {0, 0, q(1)}, {1, 2, q(3)}, {1, 7, q(2)}, {2, 3, q(2)}, {2, 8, q(3)}, {3, 10, q(1)},
    });
}

// Koszul resolution of a complete intersection of degrees (2,2,4).
inline betticone::BettiTable ci224() {
    return betticone::BettiTable::from_entries({
        {0, 0, q(1)}, {1, 2, q(2)}, {1, 4, q(1)}, {2, 4, q(1)}, {2, 6, q(2)}, {3, 8, q(1)},
    });
}

// Koszul resolution of the residue field in three variables: 1,3,3,1.
inline betticone::BettiTable koszul3() {
    return betticone::BettiTable::from_entries({
        {0, 0, q(1)}, {1, 1, q(3)}, {2, 2, q(3)}, {3, 3, q(1)},
    });
}

// 5x5-Pfaffian-style Gorenstein table: first syzygies at 4,4,5,5,6, second
// at 6,7,7,8,8, socle at 12. Self-dual about 12 and quasi-pure.
inline betticone::BettiTable pfaffian() {
    return betticone::BettiTable::from_entries({
        {0, 0, q(1)},
        {1, 4, q(2)},
        {1, 5, q(2)},
        {1, 6, q(1)},
        {2, 6, q(1)},
        {2, 7, q(2)},
        {2, 8, q(2)},
        {3, 12, q(1)},
    });
}

// CM-consistent table the greedy peel cannot decompose: after one step the
// remainder's minimal shifts collide at (0,2,2).
inline betticone::BettiTable outside_cone() {
    return betticone::BettiTable::from_entries({
        {0, 0, q(1)}, {1, 1, q(1)}, {1, 2, q(2)}, {2, 2, q(1)}, {2, 3, q(1)},
    });
}

template <typename Fn>
std::optional<betticone::errc> thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const betticone::BettiError& error) {
        return error.code();
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace fixtures
