#include <gtest/gtest.h>

#include <numeric>

#include "qbill/geom.hpp"
#include "qbill/wordgen.hpp"

using namespace qbill;

namespace {

const char* kReduced235 =
    "01201 01201 0120 20120 2012"
    "12012 12012 1201 01201 0120"
    "20120 20120 2012 12012 1201";

const char* kFull235 =
    "0210210212 0210210212 02102101 2102102101 21021020"
    "1021021020 1021021020 10210212 0210210212 02102101"
    "2102102101 2102102101 21021020 1021021020 10210212";

std::vector<std::pair<int, int>> admissible_pairs(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= max_n; ++n)
        for (int q = 1; 2 * q <= n; ++q)
            if (is_admissible(n, q)) out.emplace_back(n, q);
    return out;
}

// Digit k = i*k + (j-i)*floor(k q / n): floor(kq/n) wraps happen before digit k.
std::vector<int> closed_form(int n, int q, const StepRule& r, int count) {
    std::vector<int> d;
    for (int k = 0; k < count; ++k) {
        const long long w = static_cast<long long>(k) * q / n;
        d.push_back(mod(static_cast<long long>(r.i) * k + (r.j - r.i) * w, r.m));
    }
    return d;
}

std::vector<int> oracle(TableKind kind, int n, int q, int count) {
    const LatticeModel m = build_model(kind);
    return simulate(m, canonical_ray(m, n, q), count);
}

}  // namespace

TEST(ReducedWord, TwentyThreeFiveFixture) {
    const Word w = reduced_word(decompose(23, 5), rule_for(TableKind::A2));
    EXPECT_EQ(w.digits, parse_word(kReduced235, 3).digits);
    EXPECT_EQ(w.period(), 69);
}

TEST(ReducedWord, FiveTwoFixture) {
    const Word w = reduced_word(decompose(5, 2), rule_for(TableKind::A2));
    EXPECT_EQ(to_string(w), "012121202020101");
}

TEST(ReducedWord, D2SevenTwo) {
    const Word w = reduced_word(decompose(7, 2), rule_for(TableKind::D2));
    EXPECT_EQ(w.digits, closed_form(7, 2, rule_for(TableKind::D2), 7));
    EXPECT_EQ(to_string(w), "0000111");
}

TEST(ReducedWord, ClosedFormAllRules) {
    for (auto [n, q] : admissible_pairs(100))
        for (TableKind k : {TableKind::A2, TableKind::B2, TableKind::D2}) {
            const Word w = reduced_word(decompose(n, q), rule_for(k));
            ASSERT_EQ(w.digits, closed_form(n, q, rule_for(k), w.period())) << n << "," << q;
        }
}

TEST(ReducedWord, BlockLaw) {
    for (auto [n, q] : admissible_pairs(100)) {
        const CycleStructure s = decompose(n, q);
        const StepRule r = rule_for(TableKind::A2);
        const Word w = reduced_word(s, r);
        std::vector<int> runs;
        int len = 0;
        for (int k = 0; k < w.period(); ++k) {
            ++len;
            if (mod(w.digits[(k + 1) % w.period()] - w.digits[k], 3) == mod(r.j, 3)) {
                runs.push_back(len);
                len = 0;
            }
        }
        const auto L = lengths(s);
        ASSERT_EQ(runs.size() % L.size(), 0u);
        for (size_t k = 0; k < runs.size(); ++k) ASSERT_EQ(runs[k], L[k % L.size()]);
    }
}

TEST(ReducedWord, PeriodLaw) {
    for (auto [n, q] : admissible_pairs(100))
        for (TableKind k : {TableKind::A2, TableKind::B2, TableKind::D2}) {
            const StepRule r = rule_for(k);
            const Word w = reduced_word(decompose(n, q), r);
            const int ord = r.m / std::gcd(net_shift(r, make_parameters(n, q)), r.m);
            ASSERT_EQ(w.period(), n * ord);
            ASSERT_EQ((n * r.m) % w.period(), 0);
            ASSERT_EQ(minimal_period(w.digits), w.period());
        }
}

TEST(NetShift, Examples) {
    EXPECT_EQ(net_shift(rule_for(TableKind::A2), make_parameters(23, 5)), 1);
    EXPECT_EQ(net_shift(rule_for(TableKind::D2), make_parameters(5, 2)), 0);
    EXPECT_EQ(net_shift({0, 0, 5}, make_parameters(23, 5)), 0);
}

TEST(ExpandA2, TwentyThreeFiveFixture) {
    const Word full = expand_a2(parse_word(kReduced235, 3));
    EXPECT_EQ(full.digits, parse_word(kFull235, 3).digits);
    EXPECT_EQ(word_of_direction(TableKind::A2, 23, 5).digits, full.digits);
}

TEST(ExpandA2, DeExpansion) {
    for (auto [n, q] : admissible_pairs(60)) {
        const Word w = reduced_word(decompose(n, q), rule_for(TableKind::A2));
        const Word full = expand_a2(w);
        ASSERT_EQ(full.period(), 2 * w.period());
        for (int k = 0; k < w.period(); ++k) ASSERT_EQ(full.digits[2 * k], w.digits[k]);
    }
}

TEST(ExpandA2, RejectsEqualNeighbours) {
    EXPECT_THROW(expand_a2(parse_word("0012", 3)), std::invalid_argument);
}

TEST(ExpandA2, FagnanoPairFromOracle) {
    const Word w = word_of_direction(TableKind::A2, 2, 1);
    EXPECT_EQ(to_string(w), "0212");
    const auto sim = oracle(TableKind::A2, 2, 1, 12);
    for (int k = 0; k < 12; ++k) EXPECT_EQ(sim[k], w.digits[k % 4]);
}

TEST(ExpandD2, SevenTwoMatchesOracle) {
    const Word w = expand_d2(reduced_word(decompose(7, 2), rule_for(TableKind::D2)));
    const auto sim = oracle(TableKind::D2, 7, 2, 2 * w.period());
    for (int k = 0; k < 2 * w.period(); ++k) ASSERT_EQ(sim[k], w.digits[k % w.period()]);
}

TEST(ExpandD2, FiveTwoAndThreeOne) {
    for (auto [n, q] : {std::pair{5, 2}, std::pair{3, 1}}) {
        const Word w = word_of_direction(TableKind::D2, n, q);
        const auto sim = oracle(TableKind::D2, n, q, 3 * w.period());
        for (int k = 0; k < 3 * w.period(); ++k) ASSERT_EQ(sim[k], w.digits[k % w.period()]);
    }
}

TEST(ExpandD2, EvenLabelsMarkBetweenSteps) {
    for (auto [n, q] : admissible_pairs(60)) {
        const Word w = word_of_direction(TableKind::D2, n, q);
        int between = 0;
        for (int x : w.digits) between += x % 2 == 0;
        ASSERT_EQ(between * n, q * w.period());
    }
}

TEST(ExpandB2, SevenTwoMatchesOracle) {
    const Word w = word_of_direction(TableKind::B2, 7, 2);
    EXPECT_EQ(to_string(w), "201020210210102012020101");
    const auto sim = oracle(TableKind::B2, 7, 2, 48);
    for (int k = 0; k < 48; ++k) ASSERT_EQ(sim[k], w.digits[k % 24]);
}

TEST(ExpandB2, HypotenuseCount) {
    // 2n legs and 2n - 2q hypotenuses per doubled period of the direction.
    for (auto [n, q] : admissible_pairs(60)) {
        const Word w = expand_b2(reduced_word(decompose(n, q), rule_for(TableKind::B2)));
        int hyp = 0;
        for (int x : w.digits) hyp += x == 0;
        const int legs = w.period() - hyp;
        ASSERT_EQ(hyp * n, legs * (n - q)) << n << "," << q;
    }
}

TEST(G2Word, SevenTwoMatchesOracle) {
    const Word w = g2_word(make_parameters(7, 2));
    EXPECT_EQ(to_string(w), "21212021210212021212102121020120121201");
    const auto sim = oracle(TableKind::G2, 7, 2, 2 * w.period());
    for (int k = 0; k < 2 * w.period(); ++k) ASSERT_EQ(sim[k], w.digits[k % w.period()]);
}

TEST(G2Word, CrossingCounts) {
    // Per lattice period: 2n triangular-line crossings and 4n - 2q median crossings.
    for (auto [n, q] : admissible_pairs(60)) {
        const Word w = g2_word(make_parameters(n, q));
        int ones = 0;
        for (int x : w.digits) ones += x == 1;
        ASSERT_EQ(w.period() % (6 * n - 2 * q) == 0 || (6 * n - 2 * q) % w.period() == 0, true);
        ASSERT_EQ(ones * (6 * n - 2 * q), 2 * n * w.period());
    }
}

TEST(WordOfDirection, OracleEquivalenceSmall) {
    for (auto [n, q] : admissible_pairs(30))
        for (TableKind k : {TableKind::A2, TableKind::B2, TableKind::D2, TableKind::G2}) {
            const Word w = word_of_direction(k, n, q);
            const auto sim = oracle(k, n, q, 2 * w.period());
            for (int i = 0; i < 2 * w.period(); ++i)
                ASSERT_EQ(sim[i], w.digits[i % w.period()]) << table_name(k) << " " << n << "," << q;
        }
}

TEST(WordUtilities, ParseIgnoresSeparators) {
    EXPECT_EQ(to_string(parse_word(" 01 2|0\n1 ", 3)), "01201");
    EXPECT_THROW(parse_word("0131", 3), std::invalid_argument);
    EXPECT_THROW(parse_word("  ", 3), std::invalid_argument);
}

TEST(WordUtilities, MinimalPeriodAndRotation) {
    EXPECT_EQ(minimal_period({0, 1, 0, 1, 0, 1}), 2);
    EXPECT_EQ(minimal_period({0, 1, 0, 1, 0}), 5);
    const Word w = parse_word("0000111", 2);
    EXPECT_EQ(rotation_of(w, rotate(w, 3)), 3);
    EXPECT_EQ(rotation_of(w, parse_word("0001111", 2)), -1);
}

TEST(WordUtilities, BlocksString) {
    const Word w = reduced_word(decompose(5, 2), rule_for(TableKind::A2));
    EXPECT_EQ(blocks_string(w, rule_for(TableKind::A2)), "012 12 120 20 201 01");
}
