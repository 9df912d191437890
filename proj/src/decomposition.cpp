#include "betticone/decomposition.hpp"

#include <limits>
#include <string>

#include "betticone/error.hpp"

namespace betticone {

ChainDecomposition::ChainDecomposition(std::vector<ChainTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty())
        throw BettiError(errc::empty_decomposition, "chain has no terms");
    const int s = terms_.front().d.length();
    for (std::size_t a = 0; a < terms_.size(); ++a) {
        if (terms_[a].d.length() != s)
            throw BettiError(errc::invalid_argument,
                             "chain mixes sequence lengths " + std::to_string(s) +
                                 " and " + std::to_string(terms_[a].d.length()));
        if (terms_[a].r <= 0)
            throw BettiError(errc::invalid_argument,
                             "coefficient of " + to_string(terms_[a].d) +
                                 " must be positive, got " + to_string(terms_[a].r));
        if (a > 0 && !pointwise_lt(terms_[a - 1].d, terms_[a].d))
            throw BettiError(errc::invalid_argument,
                             "chain not strictly increasing at " +
                                 to_string(terms_[a - 1].d) + " -> " +
                                 to_string(terms_[a].d));
    }
}

SymmetrizedDecomposition::SymmetrizedDecomposition(int n, std::vector<SymmetrizedTerm> terms)
    : n_(n), terms_(std::move(terms)) {
    if (terms_.empty())
        throw BettiError(errc::empty_decomposition, "decomposition has no terms");
    const int s = terms_.front().d.length();
    for (std::size_t a = 0; a < terms_.size(); ++a) {
        const auto& term = terms_[a];
        if (term.d.length() != s)
            throw BettiError(errc::invalid_argument,
                             "terms mix sequence lengths " + std::to_string(s) +
                                 " and " + std::to_string(term.d.length()));
        if (term.r <= 0)
            throw BettiError(errc::invalid_argument,
                             "coefficient of " + to_string(term.d) +
                                 " must be positive, got " + to_string(term.r));
        for (int i = 0; i <= s; ++i)
            if (term.d[i] + term.d[s - i] > n_)
                throw BettiError(errc::invalid_n,
                                 "term " + to_string(term.d) + " has d_" +
                                     std::to_string(i) + " + d_" + std::to_string(s - i) +
                                     " > " + std::to_string(n_));
        const bool self_dual = dual_sequence(term.d, n_) == term.d;
        if (term.self_dual != self_dual)
            throw BettiError(errc::invalid_argument,
                             "self-dual flag of " + to_string(term.d) +
                                 " contradicts its reflection about " + std::to_string(n_));
        if (a > 0 && !pointwise_lt(terms_[a - 1].d, term.d))
            throw BettiError(errc::invalid_argument,
                             "terms not strictly increasing at " +
                                 to_string(terms_[a - 1].d) + " -> " + to_string(term.d));
        for (std::size_t b = 0; b < a; ++b)
            if (dual_sequence(terms_[b].d, n_) == term.d)
                throw BettiError(errc::invalid_argument,
                                 "terms " + to_string(terms_[b].d) + " and " +
                                     to_string(term.d) + " are dual to each other");
    }
}

ChainDecomposition es_decompose(const BettiTable& t) {
    const int s = t.length();
    if (s < 1)
        throw BettiError(errc::invalid_argument,
                         "table of length 0 has no degree sequence to peel");
    for (unsigned long l = 0; l < static_cast<unsigned long>(s); ++l) {
        const Rational v = ps_functional(t, l);
        if (v != 0)
            throw BettiError(errc::not_cm_consistent,
                             "power-sum functional at l = " + std::to_string(l) +
                                 " is " + to_string(v) + ", expected 0");
    }

    std::vector<ChainTerm> terms;
    BettiTable::Map rem = t.entries();
    for (int step = 0; !rem.empty(); ++step) {
        std::vector<int> min_shift(static_cast<std::size_t>(s) + 1,
                                   std::numeric_limits<int>::max());
        int max_col = 0;
        for (const auto& [key, value] : rem) {
            max_col = std::max(max_col, key.first);
            auto& slot = min_shift[static_cast<std::size_t>(key.first)];
            slot = std::min(slot, key.second);
        }
        if (max_col != s)
            throw BettiError(errc::not_in_cone,
                             "step " + std::to_string(step) +
                                 ": remainder no longer has length " + std::to_string(s));
        for (int i = 0; i <= s; ++i) {
            if (min_shift[static_cast<std::size_t>(i)] == std::numeric_limits<int>::max())
                throw BettiError(errc::not_in_cone,
                                 "step " + std::to_string(step) + ": column " +
                                     std::to_string(i) + " of the remainder is empty");
            if (i > 0 && min_shift[static_cast<std::size_t>(i)] <=
                             min_shift[static_cast<std::size_t>(i) - 1])
                throw BettiError(errc::not_in_cone,
                                 "step " + std::to_string(step) +
                                     ": minimal shifts not strictly increasing at column " +
                                     std::to_string(i));
        }

        DegreeSequence d(min_shift);
        const BettiTable pure = pure_table(d);
        Rational r;
        bool first = true;
        for (int i = 0; i <= s; ++i) {
            const Rational ratio = rem.at({i, d[i]}) / pure.at(i, d[i]);
            if (first || ratio < r) {
                r = ratio;
                first = false;
            }
        }
        for (int i = 0; i <= s; ++i) {
            auto it = rem.find({i, d[i]});
            it->second -= r * pure.at(i, d[i]);
            if (it->second == 0)
                rem.erase(it);
            else if (it->second < 0)
                throw BettiError(errc::not_in_cone,
                                 "step " + std::to_string(step) +
                                     ": remainder went negative at (" + std::to_string(i) +
                                     ", " + std::to_string(d[i]) + ")");
        }
        terms.push_back({std::move(d), std::move(r)});
    }
    return ChainDecomposition(std::move(terms));
}

BettiTable synthesize(const ChainDecomposition& c) {
    BettiTable::Map sum;
    for (const auto& term : c.terms()) {
        const BettiTable block = pure_table(term.d);
        for (const auto& [key, value] : block.entries())
            sum[key] += term.r * value;
    }
    return BettiTable::from_map(std::move(sum));
}

SymmetrizedDecomposition symmetrize(const ChainDecomposition& c, int n) {
    const auto& terms = c.terms();
    const std::size_t count = terms.size();
    std::vector<SymmetrizedTerm> out;
    // A dual-closed chain must pair first with last: dualization reverses the
    // componentwise order, so it acts on a chain as the list reversal.
    for (std::size_t a = 0; 2 * a < count; ++a) {
        const auto& low = terms[a];
        const auto& high = terms[count - 1 - a];
        const DegreeSequence expected = dual_sequence(low.d, n);
        if (high.d != expected)
            throw BettiError(errc::not_dual_closed,
                             "dual of " + to_string(low.d) + " about " + std::to_string(n) +
                                 " is " + to_string(expected) + ", but the chain carries " +
                                 to_string(high.d) + " opposite it");
        if (high.r != low.r)
            throw BettiError(errc::not_dual_closed,
                             "coefficients of " + to_string(low.d) + " and " +
                                 to_string(high.d) + " differ: " + to_string(low.r) +
                                 " vs " + to_string(high.r));
        if (2 * a + 1 == count)  // middle term, fixed by dualization
            out.push_back({low.d, low.r / 2, true});
        else
            out.push_back({low.d, low.r, false});
    }
    return SymmetrizedDecomposition(n, std::move(out));
}

BettiTable synthesize(const SymmetrizedDecomposition& sd) {
    BettiTable::Map sum;
    for (const auto& term : sd.terms()) {
        const BettiTable block = symmetrized_pure_table(term.d, sd.n());
        for (const auto& [key, value] : block.entries())
            sum[key] += term.r * value;
    }
    return BettiTable::from_map(std::move(sum));
}

DecompositionReport verify_decomposition(const BettiTable& t,
                                         const SymmetrizedDecomposition& sd) {
    DecompositionReport report;
    const auto& terms = sd.terms();
    const int s = t.length();

    report.lengths_match = true;
    for (const auto& term : terms)
        report.lengths_match = report.lengths_match && term.d.length() == s;

    report.strictly_increasing = true;
    for (std::size_t a = 1; a < terms.size(); ++a)
        report.strictly_increasing =
            report.strictly_increasing && pointwise_lt(terms[a - 1].d, terms[a].d);

    report.no_mutual_duals = true;
    for (std::size_t a = 0; a < terms.size(); ++a)
        for (std::size_t b = a + 1; b < terms.size(); ++b)
            if (dual_sequence(terms[a].d, sd.n()) == terms[b].d)
                report.no_mutual_duals = false;

    report.dual_dominates = true;
    report.self_dual_flags_match = true;
    for (const auto& term : terms) {
        const int len = term.d.length();
        for (int i = 0; i <= len; ++i)
            if (term.d[i] + term.d[len - i] > sd.n())
                report.dual_dominates = false;
        const bool self_dual = dual_sequence(term.d, sd.n()) == term.d;
        report.self_dual_flags_match =
            report.self_dual_flags_match && term.self_dual == self_dual;
    }

    report.synthesis_matches = synthesize(sd) == t;

    report.table_multiplicity = multiplicity(t, /*force=*/true);
    report.terms_multiplicity = 0;
    for (const auto& term : terms)
        report.terms_multiplicity +=
            term.r * multiplicity(symmetrized_pure_table(term.d, sd.n()));
    report.multiplicity_matches = report.table_multiplicity == report.terms_multiplicity;

    return report;
}

}  // namespace betticone
