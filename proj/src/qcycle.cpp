#include "qbill/qcycle.hpp"

#include <numeric>

namespace qbill {

int mod(long long a, long long m) {
    long long x = a % m;
    return static_cast<int>(x < 0 ? x + m : x);
}

bool is_admissible(int n, int q) noexcept {
    if (n <= 0 || q <= 0) return false;
    if (std::gcd(n, q) != 1) return false;
    return 2 * q < n || (n == 2 && q == 1);
}

Parameters make_parameters(int n, int q) {
    using K = ParameterError::Kind;
    if (n <= 0 || q <= 0)
        throw ParameterError(K::NonPositive, "n and q must be positive");
    if (std::gcd(n, q) != 1)
        throw ParameterError(K::NotCoprime, "n and q must be coprime");
    if (!(2 * q < n || (n == 2 && q == 1)))
        throw ParameterError(K::QTooLarge, "need 2q < n");
    return {n, q, n / q, n % q};
}

namespace {

Cycle cycle_of(int a, int n, int q) {
    Cycle c{a, {}};
    for (int x = a; x < n; x += q) c.elements.push_back(x);
    return c;
}

int successor_unchecked(int a, int q, int r) {
    return a < r ? a + q - r : a - r;
}

CycleStructure build(const Parameters& p, int t) {
    CycleStructure s{p, t, {}};
    int a = t;
    for (int k = 0; k < p.q; ++k) {
        s.cycles.push_back(cycle_of(a, p.n, p.q));
        a = successor_unchecked(a, p.q, p.r);
    }
    return s;
}

CycleStructure euclid_rec(int n, int q) {
    Parameters p{n, q, n / q, n % q};
    if (q == 1) return build(p, 0);
    CycleStructure inner = euclid_rec(q, mod(q - p.r, q));
    CycleStructure s{p, 0, {}};
    for (const Cycle& c : inner.cycles)
        for (int y : c.elements) s.cycles.push_back(cycle_of(y, n, q));
    return s;
}

}  // namespace

CycleStructure decompose(int n, int q) {
    return build(make_parameters(n, q), 0);
}

CycleStructure decompose_coprime(int n, int q) {
    if (n <= 0 || q <= 0 || std::gcd(n, q) != 1)
        throw ParameterError(ParameterError::Kind::NotCoprime, "need coprime positive n, q");
    return build({n, q, n / q, n % q}, 0);
}

CycleStructure structure_at(const Parameters& p, int t) {
    if (t < 0 || t >= p.q)
        throw ParameterError(ParameterError::Kind::OutOfRange, "offset out of range");
    return build(p, t);
}

int successor_min(int a, const Parameters& p) {
    if (a < 0 || a >= p.q)
        throw ParameterError(ParameterError::Kind::OutOfRange, "residue out of range");
    return successor_unchecked(a, p.q, p.r);
}

std::vector<int> minimal_order(const Parameters& p) {
    std::vector<int> out;
    for (int k = 0; k < p.q; ++k) out.push_back(mod(-static_cast<long long>(k) * p.r, p.q));
    return out;
}

CycleStructure euclid_construct(int n, int q) {
    make_parameters(n, q);
    return euclid_rec(n, q);
}

CycleStructure shift(const CycleStructure& s) {
    return build(s.params, (s.offset + 1) % s.params.q);
}

std::vector<int> lengths(const CycleStructure& s) {
    std::vector<int> out;
    for (const Cycle& c : s.cycles) out.push_back(c.length());
    return out;
}

int shift_power(const Parameters& p) {
    if (p.q == 1) return 0;
    for (int x = 1; x < p.q; ++x)
        if (mod(static_cast<long long>(x) * p.r, p.q) == 1) return x;
    return 0;
}

}  // namespace qbill
