#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbill/wordgen.hpp"

namespace qbill {

enum class Reason {
    NotPeriodicInput,
    BadIncrementPattern,
    MoreThanTwoBlockLengths,
    BlockLengthsDifferByMoreThanOne,
    ArrangementMismatch,
    NonCoprime,
    QTooLarge,
};

std::string reason_code(Reason r);

struct RecognitionResult {
    bool accepted = false;
    Parameters params;
    int rotation = 0;  // input[k] == canonical[(k + rotation) % period] + offset
    int offset = 0;
    std::string recognized;  // rule or table name
    Reason reason = Reason::NotPeriodicInput;

    static RecognitionResult reject(Reason r) {
        RecognitionResult out;
        out.reason = r;
        return out;
    }
};

class BlockError : public std::invalid_argument {
public:
    explicit BlockError(Reason r) : std::invalid_argument(reason_code(r)), reason_(r) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

// Cyclic run lengths of +i chains, starting at the first run that follows a
// +j step. Throws BlockError.
std::vector<int> block_decompose(const Word& w, const StepRule& rule);

RecognitionResult recognize_cyclic(const Word& w, const StepRule& rule);
RecognitionResult recognize_bruteforce(const Word& w, const StepRule& rule);
RecognitionResult recognize_table(const Word& w, TableKind kind);

// Checks the +1 action on the canonical tuple: rotating by p = r^{-1} mod q
// equals shift(), and the two tuples differ by one cyclically adjacent transposition.
bool transposition_property(const Parameters& p);

}  // namespace qbill
