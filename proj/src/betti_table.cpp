#include "betticone/betti_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "betticone/error.hpp"

namespace betticone {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.size() < 2)
        throw BettiError(errc::invalid_argument,
                         "degree sequence needs at least two entries");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
        if (degrees_[i - 1] >= degrees_[i])
            throw BettiError(errc::invalid_argument,
                             "degree sequence not strictly increasing: " +
                                 std::to_string(degrees_[i - 1]) + " then " +
                                 std::to_string(degrees_[i]));
}

bool pointwise_leq(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.length() != b.length())
        return false;
    for (int i = 0; i <= a.length(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool pointwise_lt(const DegreeSequence& a, const DegreeSequence& b) {
    return pointwise_leq(a, b) && a != b;
}

std::string to_string(const DegreeSequence& d) {
    std::ostringstream out;
    for (int i = 0; i <= d.length(); ++i) {
        if (i)
            out << ',';
        out << d[i];
    }
    return out.str();
}

namespace {

// Shared by construction and by decomposition remainders: positive values,
// columns 0..max nonempty, column minima strictly increasing.
void check_support(const BettiTable::Map& entries) {
    if (entries.empty())
        throw BettiError(errc::empty_table, "table has no entries");
    int max_col = 0;
    std::map<int, int> col_min;
    for (const auto& [key, value] : entries) {
        const auto [i, j] = key;
        if (i < 0)
            throw BettiError(errc::invalid_argument,
                             "negative homological index " + std::to_string(i));
        if (value < 0)
            throw BettiError(errc::negative_entry,
                             "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") = " + to_string(value));
        max_col = std::max(max_col, i);
        auto [it, inserted] = col_min.emplace(i, j);
        if (!inserted)
            it->second = std::min(it->second, j);
    }
    int prev_min = 0;
    for (int i = 0; i <= max_col; ++i) {
        auto it = col_min.find(i);
        if (it == col_min.end())
            throw BettiError(errc::broken_chain,
                             "column " + std::to_string(i) + " is empty below column " +
                                 std::to_string(max_col));
        if (i > 0 && it->second <= prev_min)
            throw BettiError(errc::broken_chain,
                             "column " + std::to_string(i) + " starts at degree " +
                                 std::to_string(it->second) +
                                 ", not above the previous column's minimum " +
                                 std::to_string(prev_min));
        prev_min = it->second;
    }
}

}  // namespace

BettiTable BettiTable::from_entries(const std::vector<std::tuple<int, int, Rational>>& raw) {
    Map sum;
    for (const auto& [i, j, value] : raw)
        sum[{i, j}] += value;
    return from_map(std::move(sum));
}

BettiTable BettiTable::from_map(Map entries) {
    for (auto it = entries.begin(); it != entries.end();) {
        if (it->second == 0)
            it = entries.erase(it);
        else
            ++it;
    }
    check_support(entries);
    const int length = entries.rbegin()->first.first;
    return BettiTable(std::move(entries), length);
}

Rational BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
}

Rational BettiTable::column_sum(int i) const {
    Rational sum = 0;
    for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
         it != entries_.end() && it->first.first == i; ++it)
        sum += it->second;
    return sum;
}

ShiftProfile shifts(const BettiTable& t) {
    ShiftProfile p;
    p.s = t.length();
    p.m.assign(static_cast<std::size_t>(p.s) + 1, 0);
    p.M.assign(static_cast<std::size_t>(p.s) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(p.s) + 1, false);
    for (const auto& [key, value] : t.entries()) {
        const auto [i, j] = key;
        const auto idx = static_cast<std::size_t>(i);
        if (!seen[idx]) {
            seen[idx] = true;
            p.m[idx] = p.M[idx] = j;
        } else {
            p.m[idx] = std::min(p.m[idx], j);
            p.M[idx] = std::max(p.M[idx], j);
        }
    }
    p.k = p.s / 2;
    p.N = p.M.back() + p.m.front();
    return p;
}

Rational ps_functional(const BettiTable& t, unsigned long power) {
    Rational sum = 0;
    for (const auto& [key, value] : t.entries()) {
        const auto [i, j] = key;
        const Rational term = value * Rational(int_pow(Integer(j), power));
        if (i % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Rational multiplicity(const BettiTable& t, bool force) {
    const int s = t.length();
    if (s == 0)
        return t.column_sum(0);
    if (!force) {
        for (unsigned long l = 0; l < static_cast<unsigned long>(s); ++l) {
            const Rational v = ps_functional(t, l);
            if (v != 0)
                throw BettiError(errc::not_cm_consistent,
                                 "power-sum functional at l = " + std::to_string(l) +
                                     " is " + to_string(v) + ", expected 0");
        }
    }
    Rational e = ps_functional(t, static_cast<unsigned long>(s)) /
                 Rational(factorial(static_cast<unsigned long>(s)));
    if (s % 2)
        e = -e;
    return e;
}

BettiTable pure_table(const DegreeSequence& d) {
    const int s = d.length();
    BettiTable::Map entries;
    for (int i = 0; i <= s; ++i) {
        Integer denom = 1;
        for (int l = 0; l <= s; ++l) {
            if (l == i)
                continue;
            denom *= Integer(std::abs(d[l] - d[i]));
        }
        Rational value(1, denom);
        value.canonicalize();
        entries[{i, d[i]}] = value;
    }
    return BettiTable::from_map(std::move(entries));
}

DegreeSequence dual_sequence(const DegreeSequence& d, int n) {
    std::vector<int> out;
    out.reserve(d.degrees().size());
    for (auto it = d.degrees().rbegin(); it != d.degrees().rend(); ++it)
        out.push_back(n - *it);
    return DegreeSequence(std::move(out));
}

BettiTable dual_table(const BettiTable& t, int s, int n) {
    if (s != t.length())
        throw BettiError(errc::invalid_argument,
                         "dual requested at length " + std::to_string(s) +
                             " but table has length " + std::to_string(t.length()));
    BettiTable::Map entries;
    for (const auto& [key, value] : t.entries())
        entries[{s - key.first, n - key.second}] = value;
    return BettiTable::from_map(std::move(entries));
}

std::optional<int> is_self_dual(const BettiTable& t) {
    const ShiftProfile p = shifts(t);
    for (const auto& [key, value] : t.entries())
        if (t.at(p.s - key.first, p.N - key.second) != value)
            return std::nullopt;
    return p.N;
}

BettiTable symmetrized_pure_table(const DegreeSequence& d, int n) {
    if (n < d[0] + d[d.length()])
        throw BettiError(errc::invalid_n,
                         "n = " + std::to_string(n) + " is below d_0 + d_s = " +
                             std::to_string(d[0] + d[d.length()]));
    return add(pure_table(d), pure_table(dual_sequence(d, n)));
}

bool is_quasi_pure(const BettiTable& t) {
    const ShiftProfile p = shifts(t);
    for (int i = 2; i <= p.s; ++i)
        if (p.m[static_cast<std::size_t>(i)] < p.M[static_cast<std::size_t>(i) - 1])
            return false;
    return true;
}

BettiTable add(const BettiTable& a, const BettiTable& b) {
    BettiTable::Map sum = a.entries();
    for (const auto& [key, value] : b.entries())
        sum[key] += value;
    return BettiTable::from_map(std::move(sum));
}

BettiTable scale(const Rational& c, const BettiTable& t) {
    if (c <= 0)
        throw BettiError(errc::invalid_argument,
                         "scale factor must be positive, got " + to_string(c));
    BettiTable::Map out = t.entries();
    for (auto& [key, value] : out)
        value *= c;
    return BettiTable::from_map(std::move(out));
}

}  // namespace betticone
