#include "qbill/recognizer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qbill {

std::string reason_code(Reason r) {
    switch (r) {
        case Reason::NotPeriodicInput: return "not-periodic-input";
        case Reason::BadIncrementPattern: return "bad-increment-pattern";
        case Reason::MoreThanTwoBlockLengths: return "more-than-two-block-lengths";
        case Reason::BlockLengthsDifferByMoreThanOne: return "block-lengths-differ-by-more-than-one";
        case Reason::ArrangementMismatch: return "arrangement-mismatch";
        case Reason::NonCoprime: return "non-coprime";
        case Reason::QTooLarge: return "q-too-large";
    }
    return "unknown";
}

namespace {

std::vector<bool> steps(const Word& w, const StepRule& rule) {
    const int L = w.period();
    const int i = mod(rule.i, rule.m), j = mod(rule.j, rule.m);
    if (i == j) throw BlockError(Reason::BadIncrementPattern);
    std::vector<bool> between(L);
    for (int k = 0; k < L; ++k) {
        const int s = mod(w.digits[(k + 1) % L] - w.digits[k], rule.m);
        if (s == i) between[k] = false;
        else if (s == j) between[k] = true;
        else throw BlockError(Reason::BadIncrementPattern);
    }
    return between;
}

// Finds rotation and digit offset of w against the canonical reduced word.
bool match_canonical(const Word& w, const Parameters& p, const StepRule& rule,
                     RecognitionResult& res) {
    const Word canon = reduced_word(decompose(p.n, p.q), rule);
    if (canon.period() != w.period()) return false;
    for (int off = 0; off < rule.m; ++off) {
        Word shifted = w;
        for (int& d : shifted.digits) d = mod(d - off, rule.m);
        const int rot = rotation_of(canon, shifted);
        if (rot >= 0) {
            res.rotation = rot;
            res.offset = off;
            return true;
        }
    }
    return false;
}

RecognitionResult finish(const Word& w, int n, int q, const StepRule& rule) {
    if (std::gcd(n, q) != 1) return RecognitionResult::reject(Reason::NonCoprime);
    if (!is_admissible(n, q)) return RecognitionResult::reject(Reason::QTooLarge);
    RecognitionResult res;
    res.params = make_parameters(n, q);
    if (!match_canonical(w, res.params, rule, res))
        return RecognitionResult::reject(Reason::ArrangementMismatch);
    res.accepted = true;
    return res;
}

Word minimal(const Word& w) { return trim_to_minimal(w); }

}  // namespace

std::vector<int> block_decompose(const Word& w, const StepRule& rule) {
    if (w.period() == 0) throw BlockError(Reason::NotPeriodicInput);
    const auto between = steps(w, rule);
    const int L = w.period();
    int start = -1;
    for (int k = 0; k < L; ++k) {
        if (between[mod(k - 1, L)]) {
            start = k;
            break;
        }
    }
    if (start < 0) throw BlockError(Reason::BadIncrementPattern);
    std::vector<int> runs;
    int len = 0;
    for (int t = 0; t < L; ++t) {
        const int k = (start + t) % L;
        ++len;
        if (between[k]) {
            runs.push_back(len);
            len = 0;
        }
    }
    return runs;
}

RecognitionResult recognize_cyclic(const Word& input, const StepRule& rule) {
    const Word w = minimal(input);
    std::vector<int> runs;
    try {
        runs = block_decompose(w, rule);
    } catch (const BlockError& e) {
        return RecognitionResult::reject(e.reason());
    }
    const std::set<int> distinct(runs.begin(), runs.end());
    if (distinct.size() > 2) return RecognitionResult::reject(Reason::MoreThanTwoBlockLengths);
    const int b = *distinct.begin();
    if (*distinct.rbegin() - b > 1)
        return RecognitionResult::reject(Reason::BlockLengthsDifferByMoreThanOne);
    const int q = minimal_period(runs);
    const int r = static_cast<int>(std::count(runs.begin(), runs.begin() + q, b + 1));
    const int n = b * q + r;
    if (std::gcd(n, q) != 1) return RecognitionResult::reject(Reason::NonCoprime);
    if (!is_admissible(n, q)) return RecognitionResult::reject(Reason::QTooLarge);

    // Observed blocks against the rotations of (|C_{-kr mod q}|).
    const Parameters p = make_parameters(n, q);
    std::vector<int> canon;
    for (int a : minimal_order(p)) canon.push_back(a < r ? b + 1 : b);
    const std::vector<int> observed(runs.begin(), runs.begin() + q);
    bool found = false;
    for (int s = 0; s < q && !found; ++s) {
        std::vector<int> rot(canon);
        std::rotate(rot.begin(), rot.begin() + s, rot.end());
        found = rot == observed;
    }
    if (!found) return RecognitionResult::reject(Reason::ArrangementMismatch);
    if (!transposition_property(p)) return RecognitionResult::reject(Reason::ArrangementMismatch);

    RecognitionResult res = finish(w, n, q, rule);
    res.recognized = "rule";
    return res;
}

RecognitionResult recognize_bruteforce(const Word& input, const StepRule& rule) {
    // 1. period
    const Word w = minimal(input);
    std::vector<bool> between;
    try {
        if (w.period() == 0) throw BlockError(Reason::NotPeriodicInput);
        between = steps(w, rule);
    } catch (const BlockError& e) {
        return RecognitionResult::reject(e.reason());
    }
    // 2. the +i/+j pattern repeats with a digit drift: its period is n
    std::vector<int> pattern(between.begin(), between.end());
    const int n = minimal_period(pattern);
    const int q = static_cast<int>(std::count(pattern.begin(), pattern.begin() + n, 1));
    if (q == 0) return RecognitionResult::reject(Reason::BadIncrementPattern);
    // 3. the two block lengths
    std::vector<int> runs;
    {
        int start = 0;
        while (!pattern[mod(start - 1, n)]) ++start;
        int len = 0;
        for (int t = 0; t < n; ++t) {
            ++len;
            if (pattern[(start + t) % n]) {
                runs.push_back(len);
                len = 0;
            }
        }
    }
    const auto [lo, hi] = std::minmax_element(runs.begin(), runs.end());
    const std::set<int> distinct(runs.begin(), runs.end());
    if (distinct.size() > 2) return RecognitionResult::reject(Reason::MoreThanTwoBlockLengths);
    if (*hi - *lo > 1) return RecognitionResult::reject(Reason::BlockLengthsDifferByMoreThanOne);
    // 4. long division
    const int b = n / q, r = n % q;
    if (*lo != b || (r > 0 && *hi != b + 1) || (r == 0 && *hi != b))
        return RecognitionResult::reject(Reason::ArrangementMismatch);
    if (std::gcd(n, q) != 1) return RecognitionResult::reject(Reason::NonCoprime);
    if (!is_admissible(n, q)) return RecognitionResult::reject(Reason::QTooLarge);
    // 5. arrangement from the orbit itself: walk k*q mod n and cut at wraps
    std::vector<int> orbit_runs;
    {
        int len = 1;
        for (int k = 1; k <= n; ++k) {
            if (mod(static_cast<long long>(k) * q, n) < q) {
                orbit_runs.push_back(len);
                len = 1;
            } else {
                ++len;
            }
        }
    }
    bool found = false;
    for (int s = 0; s < q && !found; ++s) {
        std::vector<int> rot(orbit_runs);
        std::rotate(rot.begin(), rot.begin() + s, rot.end());
        found = rot == runs;
    }
    if (!found) return RecognitionResult::reject(Reason::ArrangementMismatch);
    // 6. the digits themselves
    RecognitionResult res = finish(w, n, q, rule);
    res.recognized = "rule";
    return res;
}

namespace {

RecognitionResult match_full(const Word& w, TableKind kind, int n, int q) {
    RecognitionResult res;
    const Word canon = word_of_direction(kind, n, q);
    const int rot = rotation_of(canon, w);
    if (rot < 0) return RecognitionResult::reject(Reason::ArrangementMismatch);
    res.accepted = true;
    res.params = make_parameters(n, q);
    res.rotation = rot;
    res.recognized = table_name(kind);
    return res;
}

RecognitionResult recognize_a2(const Word& w) {
    std::vector<int> d = w.digits;
    if (d.size() % 2 == 1) d.insert(d.end(), w.digits.begin(), w.digits.end());
    RecognitionResult last = RecognitionResult::reject(Reason::BadIncrementPattern);
    for (int parity = 0; parity < 2; ++parity) {
        Word reduced{3, {}, false};
        for (size_t k = parity; k < d.size(); k += 2) reduced.digits.push_back(d[k]);
        RecognitionResult r = recognize_cyclic(reduced, rule_for(TableKind::A2));
        if (!r.accepted) {
            last = r;
            continue;
        }
        Word canon = word_of_direction(TableKind::A2, r.params.n, r.params.q);
        for (int& x : canon.digits) x = mod(x + r.offset, 3);
        const int rot = rotation_of(canon, w);
        if (rot < 0) {
            last = RecognitionResult::reject(Reason::ArrangementMismatch);
            continue;
        }
        r.rotation = rot;
        r.recognized = "A2";
        return r;
    }
    return last;
}

RecognitionResult recognize_d2(const Word& w) {
    // Labels 0 and 2 sit on between-steps; the next reduced digit follows.
    Word d{2, {0}, false};
    std::vector<int> dd = w.digits;
    if (dd.size() % 2 == 1) dd.insert(dd.end(), w.digits.begin(), w.digits.end());
    for (size_t k = 0; k + 1 < dd.size(); ++k)
        d.digits.push_back(dd[k] % 2 == 0 ? 1 - d.digits.back() : d.digits.back());
    const bool closes = (dd.back() % 2 == 0) == (d.digits.back() != d.digits.front());
    if (!closes) return RecognitionResult::reject(Reason::BadIncrementPattern);
    RecognitionResult r = recognize_cyclic(d, rule_for(TableKind::D2));
    if (!r.accepted) return r;
    return match_full(w, TableKind::D2, r.params.n, r.params.q);
}

// Tries every (n, q) whose leg count fits the observed period.
RecognitionResult recognize_by_count(const Word& w, TableKind kind, int reduced_label_lo,
                                     int reduced_label_hi) {
    const int c = static_cast<int>(std::count_if(w.digits.begin(), w.digits.end(), [&](int x) {
        return x >= reduced_label_lo && x <= reduced_label_hi;
    }));
    for (int k = 1; k <= 12; ++k) {
        if ((k * c) % 2 != 0) continue;
        const int n = k * c / 2;
        for (int q = 1; 2 * q < n || (n == 2 && q == 1); ++q) {
            if (!is_admissible(n, q)) continue;
            RecognitionResult r = match_full(w, kind, n, q);
            if (r.accepted) return r;
        }
    }
    return RecognitionResult::reject(Reason::ArrangementMismatch);
}

}  // namespace

RecognitionResult recognize_table(const Word& input, TableKind kind) {
    const Word w = trim_to_minimal(input);
    if (w.period() == 0) return RecognitionResult::reject(Reason::NotPeriodicInput);
    switch (kind) {
        case TableKind::A2: return recognize_a2(w);
        case TableKind::D2: return recognize_d2(w);
        case TableKind::B2: return recognize_by_count(w, kind, 1, 2);
        case TableKind::G2: return recognize_by_count(w, kind, 1, 1);
    }
    return RecognitionResult::reject(Reason::NotPeriodicInput);
}

bool transposition_property(const Parameters& p) {
    const CycleStructure s = decompose(p.n, p.q);
    const std::vector<int> L = lengths(s);
    const std::vector<int> S = lengths(shift(s));
    const int q = p.q;
    if (q == 1) return L == S;
    const int pw = shift_power(p);
    std::vector<int> rotated(q);
    for (int k = 0; k < q; ++k) rotated[k] = L[mod(k - pw, q)];
    if (rotated != S) return false;
    std::vector<int> diff;
    for (int k = 0; k < q; ++k)
        if (L[k] != S[k]) diff.push_back(k);
    if (diff.size() != 2) return false;
    const int a = diff[0], b = diff[1];
    const bool adjacent = b - a == 1 || (a == 0 && b == q - 1);
    return adjacent && L[a] == S[b] && L[b] == S[a];
}

}  // namespace qbill
