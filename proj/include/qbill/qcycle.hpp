#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qbill {

class ParameterError : public std::invalid_argument {
public:
    enum class Kind { NonPositive, NotCoprime, QTooLarge, OutOfRange };

    ParameterError(Kind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// n = b*q + r, gcd(n, q) = 1, 2q < n (or the pair (2,1)).
struct Parameters {
    int n = 0;
    int q = 0;
    int b = 0;
    int r = 0;

    bool operator==(const Parameters&) const = default;
};

bool is_admissible(int n, int q) noexcept;
Parameters make_parameters(int n, int q);

// q-cycle C_min = (min, min+q, ...) below n.
struct Cycle {
    int min = 0;
    std::vector<int> elements;

    int length() const { return static_cast<int>(elements.size()); }
    bool operator==(const Cycle&) const = default;
};

// Cycles listed from C_offset along successor_min. decompose() gives offset 0.
struct CycleStructure {
    Parameters params;
    int offset = 0;
    std::vector<Cycle> cycles;

    bool operator==(const CycleStructure&) const = default;
};

CycleStructure decompose(int n, int q);

// Same decomposition without the 2q < n gate; only gcd(n, q) = 1 is required.
CycleStructure decompose_coprime(int n, int q);

// Structure listed from C_t, 0 <= t < q.
CycleStructure structure_at(const Parameters& p, int t);

int successor_min(int a, const Parameters& p);
std::vector<int> minimal_order(const Parameters& p);
CycleStructure euclid_construct(int n, int q);

// The +1 action: C_t, C_{t-r}, ... becomes C_{t+1}, C_{t+1-r}, ...
CycleStructure shift(const CycleStructure& s);

std::vector<int> lengths(const CycleStructure& s);

// p with p*r = 1 (mod q); shift(s) lengths are lengths(s) rotated right by p.
int shift_power(const Parameters& p);

int mod(long long a, long long m);

}  // namespace qbill
