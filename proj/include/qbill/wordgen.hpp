#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbill/qcycle.hpp"

namespace qbill {

enum class TableKind { A2, B2, D2, G2 };

// Digit increment +i inside a cycle, +j between cycles, mod m.
struct StepRule {
    int i = 0;
    int j = 0;
    int m = 2;

    bool operator==(const StepRule&) const = default;
};

// One period of a periodic word over {0..m-1}.
struct Word {
    int m = 2;
    std::vector<int> digits;
    bool pointed = true;

    int period() const { return static_cast<int>(digits.size()); }
    bool operator==(const Word&) const = default;
};

struct Table {
    TableKind kind;
    int alphabet;
    StepRule rule;
};

Table table(TableKind kind);
StepRule rule_for(TableKind kind);
std::string table_name(TableKind kind);
std::optional<TableKind> parse_table(std::string_view s);
std::optional<StepRule> parse_rule(std::string_view s);

int net_shift(const StepRule& rule, const Parameters& p);
int additive_order(int s, int m);

// True at k when digit k+1 starts a new cycle, over one pass of n steps.
std::vector<bool> between_steps(const CycleStructure& s);

Word reduced_word(const CycleStructure& s, const StepRule& rule);

Word expand_a2(const Word& w);
Word expand_b2(const Word& w);
Word expand_d2(const Word& w);
Word g2_word(const Parameters& p);

Word word_of_direction(TableKind kind, int n, int q);

// Word utilities.
int minimal_period(const std::vector<int>& digits);
Word trim_to_minimal(Word w);
Word rotate(const Word& w, int k);
// Smallest k with rotate(a, k) == b, or -1.
int rotation_of(const Word& a, const Word& b);
std::string to_string(const Word& w);
std::string blocks_string(const Word& w, const StepRule& rule);
// Parses digits, ignoring whitespace and '|'. Throws std::invalid_argument.
Word parse_word(std::string_view text, int m);

}  // namespace qbill
