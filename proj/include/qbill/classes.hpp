#pragma once

#include <utility>
#include <vector>

#include "qbill/wordgen.hpp"

namespace qbill {

struct ClassMember {
    CycleStructure structure;
    Word word;
};

struct TranslationClass {
    Parameters params;
    StepRule rule;
    std::vector<ClassMember> members;
};

TranslationClass translation_class(const Parameters& p, const StepRule& rule);

struct AdjacencyReport {
    bool ok = true;
    // Positions (k, k+1 mod q) swapped between member i and member i+1.
    std::vector<std::pair<int, int>> witnesses;
};

AdjacencyReport class_adjacency_check(const TranslationClass& c);

// Block-aligned pointed reduced words seen by sliding the start point of the
// table's simulator across one lattice cell, one sample per nonsingular interval.
std::vector<Word> swept_members(const Parameters& p, TableKind kind);

}  // namespace qbill
