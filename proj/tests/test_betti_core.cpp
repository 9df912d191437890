#include <doctest.h>

#include <set>

#include "betticone/survey.hpp"
#include "fixtures.hpp"

using namespace betticone;
using fixtures::ci224;
using fixtures::gor20;
using fixtures::koszul3;
using fixtures::pfaffian;
using fixtures::q;
using fixtures::seq;
using fixtures::thrown_code;

namespace {

DegreeSequence random_sequence(SplitMix64& rng, int max_length, int max_degree) {
    const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_length)));
    std::set<int> picks;
    while (static_cast<int>(picks.size()) < s + 1)
        picks.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1)));
    return DegreeSequence(std::vector<int>(picks.begin(), picks.end()));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(q(20)) == "20");
    CHECK(to_string(q(-3, 6)) == "-1/2");
    CHECK(parse_rational("250/6") == q(125, 3));
    CHECK(parse_rational("-7") == q(-7));
    CHECK(thrown_code([] { parse_rational("1/0"); }) == errc::syntax_error);
    CHECK(thrown_code([] { parse_rational("a/2"); }) == errc::syntax_error);
    CHECK(thrown_code([] { parse_rational("1/-2"); }) == errc::syntax_error);
    CHECK(thrown_code([] { parse_rational(""); }) == errc::syntax_error);
}

TEST_CASE("table construction validates the column axioms") {
    const BettiTable koszul = koszul3();
    CHECK(koszul.length() == 3);
    CHECK(koszul.at(1, 1) == 3);
    CHECK(koszul.at(1, 2) == 0);

    SUBCASE("repeated keys accumulate") {
        const BettiTable t = BettiTable::from_entries({{0, 0, q(1)}, {1, 2, q(1)}, {1, 2, q(2)}});
        CHECK(t.at(1, 2) == 3);
        CHECK(t.entries().size() == 2);
    }
    SUBCASE("zeros are dropped") {
        const BettiTable t = BettiTable::from_entries({{0, 0, q(1)}, {1, 3, q(2)}, {1, 5, q(0)}});
        CHECK(t.entries().size() == 2);
        CHECK(t.at(1, 5) == 0);
    }
    SUBCASE("rejections") {
        CHECK(thrown_code([] { BettiTable::from_entries({{0, 0, q(1)}, {1, 1, q(-2)}}); }) ==
              errc::negative_entry);
        CHECK(thrown_code([] { BettiTable::from_entries({}); }) == errc::empty_table);
        CHECK(thrown_code([] { BettiTable::from_entries({{0, 0, q(0)}}); }) == errc::empty_table);
        CHECK(thrown_code([] { BettiTable::from_entries({{0, 0, q(1)}, {2, 5, q(1)}}); }) ==
              errc::broken_chain);
        CHECK(thrown_code([] {
                  BettiTable::from_entries({{0, 0, q(1)}, {1, 1, q(1)}, {2, 1, q(1)}});
              }) == errc::broken_chain);
        CHECK(thrown_code([] { BettiTable::from_entries({{-1, 0, q(1)}}); }) ==
              errc::invalid_argument);
    }
}

TEST_CASE("shift profiles") {
    const ShiftProfile p = shifts(gor20());
    CHECK(p.s == 3);
    CHECK(p.m == std::vector<int>{0, 2, 3, 10});
    CHECK(p.M == std::vector<int>{0, 7, 8, 10});
    CHECK(p.k == 1);
    CHECK(p.N == 10);

    const ShiftProfile kp = shifts(koszul3());
    CHECK(kp.m == std::vector<int>{0, 1, 2, 3});
    CHECK(kp.M == kp.m);
    CHECK(kp.N == 3);

    CHECK(shifts(ci224()).N == 8);

    const ShiftProfile neg = shifts(BettiTable::from_entries({{0, -2, q(1)}, {1, 0, q(1)}}));
    CHECK(neg.m == std::vector<int>{-2, 0});
    CHECK(neg.N == -2);
}

TEST_CASE("power-sum functionals") {
    const BettiTable t = gor20();
    CHECK(ps_functional(t, 0) == 0);
    CHECK(ps_functional(t, 1) == 0);
    CHECK(ps_functional(t, 2) == 0);
    CHECK(ps_functional(t, 3) == -120);

    CHECK(ps_functional(BettiTable::from_entries({{0, 0, q(1)}}), 0) == 1);

    const BettiTable neg = BettiTable::from_entries({{0, -1, q(1)}, {1, 0, q(1)}});
    CHECK(ps_functional(neg, 0) == 0);
    CHECK(ps_functional(neg, 1) == -1);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(gor20()) == 20);
    CHECK(multiplicity(ci224()) == 16);
    CHECK(multiplicity(koszul3()) == 1);
    CHECK(multiplicity(pfaffian()) == 66);

    SUBCASE("length zero sums the generator column") {
        CHECK(multiplicity(BettiTable::from_entries({{0, 0, q(2)}, {0, 3, q(1)}})) == 3);
    }
    SUBCASE("inconsistent tables refuse unless forced") {
        const BettiTable bad = BettiTable::from_entries({{0, 0, q(2)}, {1, 1, q(1)}});
        try {
            multiplicity(bad);
            FAIL("expected an error");
        } catch (const BettiError& error) {
            CHECK(error.code() == errc::not_cm_consistent);
            CHECK(std::string(error.what()).find("l = 0") != std::string::npos);
        }
        CHECK(multiplicity(bad, true) == 1);
    }
}

TEST_CASE("pure tables") {
    const BettiTable k = pure_table(seq({0, 1, 2, 3}));
    CHECK(k.at(0, 0) == q(1, 6));
    CHECK(k.at(1, 1) == q(1, 2));
    CHECK(k.at(2, 2) == q(1, 2));
    CHECK(k.at(3, 3) == q(1, 6));
    CHECK(k.entries().size() == 4);

    const BettiTable p = pure_table(seq({0, 2, 4, 8}));
    CHECK(p.at(0, 0) == q(1, 64));
    CHECK(p.at(1, 2) == q(1, 24));
    CHECK(p.at(2, 4) == q(1, 32));
    CHECK(p.at(3, 8) == q(1, 192));

    const BettiTable two = pure_table(seq({0, 1}));
    CHECK(two.at(0, 0) == 1);
    CHECK(two.at(1, 1) == 1);
}

TEST_CASE("dual sequences") {
    CHECK(dual_sequence(seq({0, 2, 4, 8}), 8) == seq({0, 4, 6, 8}));
    CHECK(dual_sequence(seq({0, 2, 6, 8}), 8) == seq({0, 2, 6, 8}));
    CHECK(dual_sequence(seq({0, 1, 3}), 3) == seq({0, 2, 3}));

    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const DegreeSequence d = random_sequence(rng, 6, 30);
        const int n = static_cast<int>(rng.below(40));
        CHECK(dual_sequence(dual_sequence(d, n), n) == d);
    }
}

TEST_CASE("dual tables") {
    CHECK(dual_table(koszul3(), 3, 3) == koszul3());
    CHECK(dual_table(pure_table(seq({0, 2, 4, 8})), 3, 8) == pure_table(seq({0, 4, 6, 8})));
    CHECK(dual_table(gor20(), 3, 10) == gor20());
    CHECK(dual_table(dual_table(pfaffian(), 3, 12), 3, 12) == pfaffian());

    CHECK(thrown_code([] { dual_table(koszul3(), 2, 3); }) == errc::invalid_argument);
    // Reflecting about too small an n can push an off-diagonal entry below
    // the previous column's minimum.
    const BettiTable lopsided =
        BettiTable::from_entries({{0, 0, q(1)}, {1, 1, q(1)}, {1, 5, q(1)}, {2, 2, q(1)}});
    CHECK(thrown_code([&] { dual_table(lopsided, 2, 2); }) == errc::broken_chain);
}

TEST_CASE("self-duality witnesses") {
    CHECK(is_self_dual(gor20()) == 10);
    CHECK(is_self_dual(ci224()) == 8);
    CHECK(is_self_dual(pfaffian()) == 12);
    CHECK(is_self_dual(koszul3()) == 3);
    CHECK_FALSE(is_self_dual(BettiTable::from_entries({{0, 0, q(1)}, {1, 1, q(2)}, {2, 3, q(1)}}))
                    .has_value());
    CHECK_FALSE(is_self_dual(pure_table(seq({0, 2, 4, 8}))).has_value());
}

TEST_CASE("symmetrized pure tables") {
    const BettiTable sym = symmetrized_pure_table(seq({0, 1, 3}), 3);
    CHECK(sym.entries().size() == 4);
    CHECK(sym.at(0, 0) == q(1, 2));
    CHECK(sym.at(1, 1) == q(1, 2));
    CHECK(sym.at(1, 2) == q(1, 2));
    CHECK(sym.at(2, 3) == q(1, 2));

    CHECK(symmetrized_pure_table(seq({0, 2, 6, 8}), 8) ==
          scale(q(2), pure_table(seq({0, 2, 6, 8}))));

    const BettiTable mixed = symmetrized_pure_table(seq({0, 2, 4, 8}), 8);
    CHECK(mixed.at(0, 0) == q(1, 48));
    CHECK(mixed.at(3, 8) == q(1, 48));
    CHECK(mixed.at(1, 2) == q(1, 24));
    CHECK(mixed.at(1, 4) == q(1, 32));
    CHECK(mixed.entries().size() == 6);

    CHECK(thrown_code([] { symmetrized_pure_table(seq({0, 1, 3}), 2); }) == errc::invalid_n);
}

TEST_CASE("quasi-purity") {
    CHECK(is_quasi_pure(ci224()));
    CHECK_FALSE(is_quasi_pure(gor20()));
    CHECK(is_quasi_pure(koszul3()));
    CHECK(is_quasi_pure(pfaffian()));
    CHECK(is_quasi_pure(pure_table(seq({0, 3, 7, 20}))));
}

TEST_CASE("pure table identities over random sequences") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const DegreeSequence d = random_sequence(rng, 6, 30);
        const int s = d.length();
        const BettiTable p = pure_table(d);
        for (int l = 0; l < s; ++l)
            CHECK(ps_functional(p, static_cast<unsigned long>(l)) == 0);
        CHECK(multiplicity(p) == Rational(1, factorial(static_cast<unsigned long>(s))));

        const int n = d[0] + d[s] + static_cast<int>(rng.below(4));
        CHECK(dual_table(p, s, n) == pure_table(dual_sequence(d, n)));
        CHECK(multiplicity(symmetrized_pure_table(d, n)) ==
              Rational(2) / factorial(static_cast<unsigned long>(s)));
    }
}

TEST_CASE("multiplicity is linear over same-length combinations") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const DegreeSequence d1 = random_sequence(rng, 5, 20);
        std::vector<int> bumped = d1.degrees();
        bumped.back() += 1 + static_cast<int>(rng.below(3));
        const DegreeSequence d2{bumped};
        const Rational a = q(1 + static_cast<long>(rng.below(9)),
                             1 + static_cast<long>(rng.below(9)));
        const Rational b = q(1 + static_cast<long>(rng.below(9)),
                             1 + static_cast<long>(rng.below(9)));
        const BettiTable combo = add(scale(a, pure_table(d1)), scale(b, pure_table(d2)));
        const Rational fact{factorial(static_cast<unsigned long>(d1.length()))};
        CHECK(multiplicity(combo) == (a + b) / fact);
    }
}

TEST_CASE("componentwise order on sequences") {
    CHECK(pointwise_lt(seq({0, 2, 4, 8}), seq({0, 2, 6, 8})));
    CHECK_FALSE(pointwise_lt(seq({0, 2, 4, 8}), seq({0, 2, 4, 8})));
    CHECK(pointwise_leq(seq({0, 2, 4, 8}), seq({0, 2, 4, 8})));
    // Crossing pair: 1 < 2 but 5 > 4, incomparable both ways.
    CHECK_FALSE(pointwise_leq(seq({0, 1, 5}), seq({0, 2, 4})));
    CHECK_FALSE(pointwise_leq(seq({0, 2, 4}), seq({0, 1, 5})));
    CHECK_FALSE(pointwise_leq(seq({0, 1}), seq({0, 1, 2})));
}
