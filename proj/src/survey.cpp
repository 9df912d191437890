#include "betticone/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "betticone/bounds.hpp"
#include "betticone/error.hpp"

namespace betticone {

namespace {

unsigned worker_count(std::size_t jobs) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;
    if (const char* cap = std::getenv("BETTI_THREADS")) {
        const long parsed = std::strtol(cap, nullptr, 10);
        if (parsed >= 1)
            workers = static_cast<unsigned>(parsed);
    }
    return static_cast<unsigned>(std::min<std::size_t>(workers, jobs));
}

// Runs fn(0..n-1) on a small pool. Each index writes only its own slot in
// the caller's result vector, so merged output is order-independent.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    if (n == 0)
        return;
    const unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = cursor.fetch_add(1); i < n; i = cursor.fetch_add(1))
                fn(i);
        });
    for (auto& thread : pool)
        thread.join();
}

void emit(std::vector<int>& prefix, int s, int max_socle,
          std::vector<DegreeSequence>& out) {
    const int have = static_cast<int>(prefix.size());
    if (have == s + 1) {
        DegreeSequence d(prefix);
        if (pointwise_leq(d, dual_sequence(d, d[s])))
            out.push_back(std::move(d));
        return;
    }
    // Leave room for the remaining strictly increasing entries.
    for (int next = prefix.back() + 1; next <= max_socle - (s - have); ++next) {
        prefix.push_back(next);
        emit(prefix, s, max_socle, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DegreeSequence> enumerate_sequences(int s, int max_socle) {
    if (s < 1 || max_socle < s)
        throw BettiError(errc::invalid_argument,
                         "need length >= 1 and socle bound >= length");
    std::vector<DegreeSequence> out;
    std::vector<int> prefix{0};
    emit(prefix, s, max_socle, out);
    return out;
}

SymmetrizedDecomposition random_symmetrized_decomposition(int s, int max_socle,
                                                          SplitMix64& rng,
                                                          bool socle_pinned) {
    const int n = s + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_socle - s) + 1));
    std::vector<DegreeSequence> pool;
    for (auto& d : enumerate_sequences(s, n))
        if (!socle_pinned || d[s] == n)
            pool.push_back(std::move(d));

    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.below(i)]);

    std::vector<DegreeSequence> picks;
    const std::size_t want = 1 + rng.below(5);
    for (auto& candidate : pool) {
        if (picks.size() == want)
            break;
        bool fits = true;
        for (const auto& chosen : picks) {
            const bool comparable = pointwise_lt(chosen, candidate) ||
                                    pointwise_lt(candidate, chosen);
            if (!comparable || dual_sequence(chosen, n) == candidate) {
                fits = false;
                break;
            }
        }
        if (fits)
            picks.push_back(std::move(candidate));
    }

    // Pairwise-comparable picks are totally ordered, so lexicographic sort
    // arranges them into a componentwise chain.
    std::sort(picks.begin(), picks.end());

    std::vector<SymmetrizedTerm> terms;
    terms.reserve(picks.size());
    for (auto& d : picks) {
        Rational r(1 + rng.below(100), 1 + rng.below(100));
        r.canonicalize();
        const bool self_dual = dual_sequence(d, n) == d;
        terms.push_back({std::move(d), std::move(r), self_dual});
    }
    return SymmetrizedDecomposition(n, std::move(terms));
}

SurveyResult survey_lemma(int s, int max_socle) {
    SurveyResult result;
    result.check = "lemma";
    result.s = s;
    result.max_socle = max_socle;
    const std::vector<DegreeSequence> all = enumerate_sequences(s, max_socle);
    result.sequence_count = all.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (a == b)
                continue;
            const auto& d = all[a];
            const auto& dp = all[b];
            const int socle = d[s];
            if (dp[s] != socle || !pointwise_lt(d, dp))
                continue;
            const DegreeSequence dual_d = dual_sequence(d, socle);
            const DegreeSequence dual_dp = dual_sequence(dp, socle);
            if (pointwise_leq(dp, dual_dp) && pointwise_lt(dual_dp, dual_d))
                pairs.emplace_back(a, b);
        }
    result.checked = pairs.size();

    std::vector<std::optional<SurveyViolation>> found(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) {
        const auto& d = all[pairs[i].first];
        const auto& dp = all[pairs[i].second];
        const Rational lhs = psi(dp);
        const Rational rhs = psi(d);
        if (lhs > rhs)
            found[i] = SurveyViolation{{d, dp},
                                       {rhs, lhs},
                                       "psi increased along the pair",
                                       std::nullopt,
                                       std::nullopt};
    });
    for (auto& violation : found)
        if (violation)
            result.violations.push_back(std::move(*violation));
    return result;
}

SurveyResult survey_proposition(int s, int max_socle) {
    SurveyResult result;
    result.check = "prop";
    result.s = s;
    result.max_socle = max_socle;
    const std::vector<DegreeSequence> all = enumerate_sequences(s, max_socle);
    result.sequence_count = all.size();
    result.checked = all.size();

    std::vector<Rational> values(all.size());
    parallel_for(all.size(), [&](std::size_t i) { values[i] = b_of(all[i]) * psi(all[i]); });

    for (std::size_t i = 0; i < all.size(); ++i) {
        result.evaluations.emplace_back(all[i], values[i]);
        if (values[i] < 2)
            result.violations.push_back(SurveyViolation{
                {all[i]}, {values[i]}, "product below 2", std::nullopt, std::nullopt});
    }
    return result;
}

SurveyResult survey_theorem(int s, int max_socle, unsigned long trials,
                            std::uint64_t seed) {
    SurveyResult result;
    result.check = "theorem";
    result.s = s;
    result.max_socle = max_socle;
    result.checked = trials;

    // Seed per trial, not per worker: the outcome must not depend on how
    // trials land on threads.
    std::vector<std::optional<SurveyViolation>> found(trials);
    parallel_for(trials, [&](std::size_t i) {
        SplitMix64 rng(seed + 0x9E3779B97F4A7C15ULL * (i + 1));
        const SymmetrizedDecomposition sd =
            random_symmetrized_decomposition(s, max_socle, rng, /*socle_pinned=*/true);
        const BettiTable table = synthesize(sd);
        const Rational e = multiplicity(table);
        const Rational bound = theorem_bound(table);
        if (e > bound) {
            std::vector<DegreeSequence> sequences;
            for (const auto& term : sd.terms())
                sequences.push_back(term.d);
            found[i] = SurveyViolation{std::move(sequences),
                                       {e, bound},
                                       "multiplicity exceeds the upper bound",
                                       sd,
                                       static_cast<unsigned long>(i)};
        }
    });
    for (auto& violation : found)
        if (violation)
            result.violations.push_back(std::move(*violation));
    return result;
}

}  // namespace betticone
