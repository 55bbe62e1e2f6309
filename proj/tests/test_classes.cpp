#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qbill/classes.hpp"
#include "qbill/recognizer.hpp"

using namespace qbill;

namespace {

std::vector<std::pair<int, int>> admissible_pairs(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= max_n; ++n)
        for (int q = 1; 2 * q <= n; ++q)
            if (is_admissible(n, q)) out.emplace_back(n, q);
    return out;
}

std::set<std::vector<int>> member_words(const TranslationClass& c) {
    std::set<std::vector<int>> out;
    for (const ClassMember& m : c.members) out.insert(m.word.digits);
    return out;
}

}  // namespace

TEST(TranslationClass, TwentyThreeFive) {
    const TranslationClass c = translation_class(make_parameters(23, 5), rule_for(TableKind::A2));
    ASSERT_EQ(c.members.size(), 5u);
    EXPECT_EQ(lengths(c.members[0].structure), (std::vector<int>{5, 5, 4, 5, 4}));
    EXPECT_EQ(lengths(c.members[1].structure), (std::vector<int>{5, 4, 5, 5, 4}));
    const AdjacencyReport rep = class_adjacency_check(c);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.witnesses.size(), 5u);
}

TEST(TranslationClass, QOneIsSingleton) {
    const TranslationClass c = translation_class(make_parameters(7, 1), rule_for(TableKind::D2));
    EXPECT_EQ(c.members.size(), 1u);
    EXPECT_TRUE(class_adjacency_check(c).ok);
}

TEST(TranslationClass, FiveTwoMatchesSweep) {
    const TranslationClass c = translation_class(make_parameters(5, 2), rule_for(TableKind::D2));
    ASSERT_EQ(c.members.size(), 2u);
    std::set<std::vector<int>> swept;
    for (const Word& w : swept_members(make_parameters(5, 2), TableKind::D2)) swept.insert(w.digits);
    EXPECT_EQ(member_words(c), swept);
}

TEST(TranslationClass, DoubleSwapBreaksAdjacency) {
    TranslationClass c = translation_class(make_parameters(23, 5), rule_for(TableKind::A2));
    c.members[1].structure = shift(shift(c.members[0].structure));
    EXPECT_FALSE(class_adjacency_check(c).ok);
}

TEST(TranslationClass, SizeAndAdjacencyUpTo100) {
    for (auto [n, q] : admissible_pairs(100)) {
        const TranslationClass c = translation_class(make_parameters(n, q), rule_for(TableKind::A2));
        ASSERT_EQ(static_cast<int>(c.members.size()), q) << n << "," << q;
        ASSERT_TRUE(class_adjacency_check(c).ok) << n << "," << q;
        ASSERT_EQ(member_words(c).size(), static_cast<size_t>(q));
    }
}

TEST(TranslationClass, MembersRecognized) {
    for (auto [n, q] : admissible_pairs(50))
        for (TableKind k : {TableKind::A2, TableKind::B2, TableKind::D2}) {
            const TranslationClass c = translation_class(make_parameters(n, q), rule_for(k));
            for (const ClassMember& m : c.members) {
                const RecognitionResult r = recognize_cyclic(m.word, rule_for(k));
                ASSERT_TRUE(r.accepted);
                ASSERT_EQ(r.params.n, n);
                ASSERT_EQ(r.params.q, q);
            }
        }
}

TEST(TranslationClass, EqualsSweepUpTo24) {
    for (auto [n, q] : admissible_pairs(24))
        for (TableKind k : {TableKind::A2, TableKind::B2, TableKind::D2}) {
            const TranslationClass c = translation_class(make_parameters(n, q), rule_for(k));
            std::set<std::vector<int>> swept;
            for (const Word& w : swept_members(make_parameters(n, q), k)) swept.insert(w.digits);
            ASSERT_EQ(member_words(c), swept) << table_name(k) << " " << n << "," << q;
        }
}
