#include "betticone/bounds.hpp"

#include <algorithm>
#include <string>

#include "betticone/error.hpp"

namespace betticone {

namespace {

void require_zero_start(const DegreeSequence& d) {
    if (d[0] != 0)
        throw BettiError(errc::non_zero_start,
                         "sequence " + to_string(d) + " does not start at 0");
}

// prod_{i=1..k} min{tops[i], floor(socle/2)} * prod_{i=k+1..s} max{bottoms[i], ceil(socle/2)}
Integer half_split_product(const std::vector<int>& tops, const std::vector<int>& bottoms,
                           int socle) {
    const int s = static_cast<int>(tops.size()) - 1;
    const int k = s / 2;
    const int lo_cap = socle / 2;
    const int hi_cap = socle - lo_cap;
    Integer out = 1;
    for (int i = 1; i <= k; ++i)
        out *= std::min(tops[static_cast<std::size_t>(i)], lo_cap);
    for (int i = k + 1; i <= s; ++i)
        out *= std::max(bottoms[static_cast<std::size_t>(i)], hi_cap);
    return out;
}

}  // namespace

Rational psi(const DegreeSequence& d) {
    require_zero_start(d);
    const int s = d.length();
    std::vector<int> gaps(static_cast<std::size_t>(s) + 1, 0);
    for (int i = 1; i <= s / 2; ++i)
        gaps[static_cast<std::size_t>(i)] = d[s] - d[s - i];
    return Rational(half_split_product(gaps, d.degrees(), d[s]));
}

Rational b_of(const DegreeSequence& d) {
    require_zero_start(d);
    const int s = d.length();
    Integer front = 1;
    for (int l = 1; l <= s; ++l)
        front *= d[l];
    Integer back = d[s];
    for (int l = 1; l < s; ++l)
        back *= d[s] - d[l];
    Rational sum = Rational(1, front) + Rational(1, back);
    sum.canonicalize();
    return sum;
}

Rational theorem_bound(const BettiTable& t) {
    const ShiftProfile p = shifts(t);
    if (p.m.front() != 0)
        throw BettiError(errc::not_degree_zero_generated,
                         "minimal generator degree is " + std::to_string(p.m.front()) +
                             ", expected 0");
    if (p.s < 1)
        throw BettiError(errc::invalid_argument, "table of length 0 has no bound");
    const Rational product(half_split_product(p.M, p.m, p.m.back()));
    return t.column_sum(0) * product / Rational(factorial(static_cast<unsigned long>(p.s)));
}

std::pair<Rational, Rational> srinivasan_bounds(const BettiTable& t) {
    if (!is_quasi_pure(t))
        throw BettiError(errc::not_quasi_pure,
                         "shift ranges of consecutive columns interleave");
    const ShiftProfile p = shifts(t);
    if (p.m.front() != 0)
        throw BettiError(errc::not_degree_zero_generated,
                         "minimal generator degree is " + std::to_string(p.m.front()) +
                             ", expected 0");
    Integer lower = 1;
    Integer upper = 1;
    for (int i = 1; i <= p.s; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        lower *= i <= p.k ? p.m[idx] : p.M[idx];
        upper *= i <= p.k ? p.M[idx] : p.m[idx];
    }
    const Rational fact{factorial(static_cast<unsigned long>(p.s))};
    return {Rational(lower) / fact, Rational(upper) / fact};
}

namespace {

ShiftProfile cyclic_codim3_profile(const BettiTable& t) {
    if (t.length() != 3)
        throw BettiError(errc::not_codim_three,
                         "table has length " + std::to_string(t.length()) + ", expected 3");
    ShiftProfile p = shifts(t);
    if (p.m.front() != 0 || p.M.front() != 0 || t.at(0, 0) != 1)
        throw BettiError(errc::not_cyclic,
                         "column 0 must be the single entry 1 at degree 0");
    return p;
}

}  // namespace

int n1(const BettiTable& t) {
    cyclic_codim3_profile(t);
    std::optional<int> best;
    for (const auto& [key, value] : t.entries())
        if (key.first == 1 && value > t.at(2, key.second))
            best = best ? std::max(*best, key.second) : key.second;
    if (!best)
        throw BettiError(errc::no_such_degree,
                         "no degree j with a column-1 entry above the column-2 entry");
    return *best;
}

Rational mnz_bound(const BettiTable& t) {
    const ShiftProfile p = cyclic_codim3_profile(t);
    return mnz_value(n1(t), p.M[2], p.m[3]);
}

Rational codim3_bound(const BettiTable& t) {
    const ShiftProfile p = cyclic_codim3_profile(t);
    if (p.M[1] <= p.m[2])
        return codim3_quasi_pure_value(p.M[1], p.m[2], p.m[3]);
    return codim3_general_value(p.m[3]);
}

Rational mnz_value(int n1_degree, int max2, int socle) {
    return make_rational(static_cast<long>(n1_degree) * max2 * socle, 6);
}

Rational codim3_quasi_pure_value(int max1, int min2, int socle) {
    return make_rational(static_cast<long>(max1) * min2 * socle, 6);
}

Rational codim3_general_value(int socle) {
    const long lo = socle / 2;
    const long hi = socle - lo;
    return make_rational(lo * hi * socle, 6);
}

BoundsReport bounds_report(const BettiTable& t) {
    BoundsReport report;
    report.profile = shifts(t);
    report.beta0 = t.column_sum(0);
    report.e = multiplicity(t);
    report.quasi_pure = is_quasi_pure(t);

    const ShiftProfile& p = report.profile;
    if (p.m.front() != 0)
        throw BettiError(errc::not_degree_zero_generated,
                         "minimal generator degree is " + std::to_string(p.m.front()) +
                             ", expected 0");

    report.theorem.value = theorem_bound(t);
    report.theorem.status =
        report.e <= *report.theorem.value ? BoundStatus::holds : BoundStatus::violated;

    Integer lower = 1;
    for (int i = 1; i <= p.s; ++i)
        lower *= i <= p.k ? p.m[static_cast<std::size_t>(i)] : p.M[static_cast<std::size_t>(i)];
    report.lower_ref.value =
        Rational(lower) / Rational(factorial(static_cast<unsigned long>(p.s)));
    report.lower_ref.status =
        *report.lower_ref.value <= report.e ? BoundStatus::holds : BoundStatus::violated;

    if (report.quasi_pure) {
        const auto [lo, hi] = srinivasan_bounds(t);
        report.srinivasan_lower = {lo, lo <= report.e ? BoundStatus::holds
                                                      : BoundStatus::violated};
        report.srinivasan_upper = {hi, report.e <= hi ? BoundStatus::holds
                                                      : BoundStatus::violated};
    }

    report.cyclic = p.s == 3 && p.M.front() == 0 && t.at(0, 0) == 1;
    if (report.cyclic) {
        report.n1 = n1(t);
        const Rational mnz = mnz_bound(t);
        report.mnz = {mnz, report.e <= mnz ? BoundStatus::holds : BoundStatus::violated};
        const Rational c3 = codim3_bound(t);
        report.codim3 = {c3, report.e <= c3 ? BoundStatus::holds : BoundStatus::violated};
    }
    return report;
}

}  // namespace betticone
