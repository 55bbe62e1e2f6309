#include "qbill/wordgen.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qbill {

Table table(TableKind kind) {
    switch (kind) {
        case TableKind::A2: return {kind, 3, {1, -1, 3}};
        case TableKind::B2: return {kind, 3, {1, 0, 2}};
        case TableKind::D2: return {kind, 4, {0, 1, 2}};
        case TableKind::G2: return {kind, 3, {0, 1, 2}};
    }
    throw std::logic_error("unknown table");
}

StepRule rule_for(TableKind kind) { return table(kind).rule; }

std::string table_name(TableKind kind) {
    switch (kind) {
        case TableKind::A2: return "A2";
        case TableKind::B2: return "B2";
        case TableKind::D2: return "D2";
        case TableKind::G2: return "G2";
    }
    return "?";
}

std::optional<TableKind> parse_table(std::string_view s) {
    std::string t(s);
    for (char& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (t == "A2") return TableKind::A2;
    if (t == "B2") return TableKind::B2;
    if (t == "D2") return TableKind::D2;
    if (t == "G2") return TableKind::G2;
    return std::nullopt;
}

std::optional<StepRule> parse_rule(std::string_view s) {
    auto k = parse_table(s);
    if (!k) return std::nullopt;
    return rule_for(*k);
}

int net_shift(const StepRule& rule, const Parameters& p) {
    return mod(static_cast<long long>(rule.i) * (p.n - p.q) + static_cast<long long>(rule.j) * p.q,
               rule.m);
}

int additive_order(int s, int m) { return m / std::gcd(mod(s, m), m); }

std::vector<bool> between_steps(const CycleStructure& s) {
    std::vector<bool> out;
    for (const Cycle& c : s.cycles) {
        for (int k = 1; k < c.length(); ++k) out.push_back(false);
        out.push_back(true);
    }
    return out;
}

Word reduced_word(const CycleStructure& s, const StepRule& rule) {
    const std::vector<bool> between = between_steps(s);
    const int passes = additive_order(net_shift(rule, s.params), rule.m);
    Word w{rule.m, {}, true};
    int d = 0;
    for (int pass = 0; pass < passes; ++pass) {
        for (bool b : between) {
            w.digits.push_back(d);
            d = mod(d + (b ? rule.j : rule.i), rule.m);
        }
    }
    return w;
}

Word expand_a2(const Word& w) {
    if (w.m != 3) throw std::invalid_argument("A2 words are ternary");
    const int L = w.period();
    if (L == 0) throw std::invalid_argument("empty word");
    Word out{3, {}, w.pointed};
    for (int k = 0; k < L; ++k) {
        const int x = w.digits[k];
        const int y = w.digits[(k + 1) % L];
        if (x == y) throw std::invalid_argument("adjacent equal digits: not an A2 reduced word");
        out.digits.push_back(x);
        out.digits.push_back(3 - x - y);
    }
    return out;
}

namespace {

// Step type k -> k+1 of a cyclic word: true for a between-step.
std::vector<bool> step_types(const std::vector<int>& d, const StepRule& rule) {
    const int L = static_cast<int>(d.size());
    std::vector<bool> t(L);
    for (int k = 0; k < L; ++k) {
        const int step = mod(d[(k + 1) % L] - d[k], rule.m);
        if (step == mod(rule.i, rule.m)) t[k] = false;
        else if (step == mod(rule.j, rule.m)) t[k] = true;
        else throw std::invalid_argument("digit step is neither +i nor +j");
    }
    return t;
}

std::vector<int> doubled(const std::vector<int>& d) {
    std::vector<int> out(d);
    out.insert(out.end(), d.begin(), d.end());
    return out;
}

}  // namespace

Word expand_d2(const Word& w) {
    if (w.period() == 0) throw std::invalid_argument("empty word");
    std::vector<int> d = w.digits;
    if (d.size() % 2 == 1) d = doubled(d);
    const auto between = step_types(d, rule_for(TableKind::D2));
    const int L = static_cast<int>(d.size());
    Word out{4, {}, w.pointed};
    for (int k = 0; k < L; ++k) {
        const int next = d[(k + 1) % L];
        if (between[k]) out.digits.push_back(next == 1 ? 2 : 0);
        else out.digits.push_back((k + next) % 2 == 0 ? 3 : 1);
    }
    return trim_to_minimal(out);
}

Word expand_b2(const Word& w) {
    if (w.period() == 0) throw std::invalid_argument("empty word");
    std::vector<int> d = w.digits;
    auto types = step_types(d, rule_for(TableKind::B2));
    const auto nb = std::count(types.begin(), types.end(), true);
    if (d.size() % 2 == 1 || nb % 2 == 1) {
        d = doubled(d);
        types = step_types(d, rule_for(TableKind::B2));
    }
    const int L = static_cast<int>(d.size());
    Word out{3, {}, w.pointed};
    int within_seen = 0;
    int between_seen = 0;
    for (int k = 0; k < L; ++k) {
        if (!types[k]) {
            out.digits.push_back(within_seen % 2 == 0 ? 2 : 1);
            ++within_seen;
        } else {
            ++between_seen;
            out.digits.push_back(between_seen % 2 == 1 ? 2 : 1);
        }
        if (k % 2 == 0 || types[k] == types[(k + 1) % L]) out.digits.push_back(0);
    }
    return trim_to_minimal(out);
}

namespace {

// Line family a*u + b*v = c crossed by the ray eps*(-3,1) + tau*(n-q, q).
struct Progression {
    int a, b;
    long long rate;    // value increase per unit tau
    long long offset;  // value at tau = 0, in units of eps
};

long long floor_div(long long x, long long y) {
    long long f = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --f;
    return f;
}

}  // namespace

Word g2_word(const Parameters& p) {
    const long long du = p.n - p.q;
    const long long dv = p.q;
    auto make = [&](int a, int b) { return Progression{a, b, a * du + b * dv, -3LL * a + b}; };
    const Progression fam[6] = {make(1, 0), make(0, 1), make(1, 1),
                                make(2, 1), make(1, 2), make(1, -1)};

    // Event at tau = (C - O*eps) / R with R > 0.
    struct Event {
        long long C, O, R;
        int f;
        long long c;
    };
    std::vector<Event> ev;
    for (int f = 0; f < 6; ++f) {
        const Progression& g = fam[f];
        if (g.rate == 0) continue;
        const long long s = g.rate > 0 ? 1 : -1;
        const long long first = (s * g.offset < 0) ? 0 : s;
        for (long long t = 0; t < s * g.rate; ++t) {
            const long long c = first + s * t;
            ev.push_back({s * c, s * g.offset, s * g.rate, f, c});
        }
    }
    std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) {
        const auto lx = static_cast<__int128>(x.C) * y.R;
        const auto ly = static_cast<__int128>(y.C) * x.R;
        if (lx != ly) return lx < ly;
        return static_cast<__int128>(x.O) * y.R > static_cast<__int128>(y.O) * x.R;
    });

    // floor of form g at the event time.
    auto floor_at = [&](const Event& e, const Progression& g) {
        const long long X = e.C * g.rate;
        const long long Y = g.offset * e.R - e.O * g.rate;
        long long fl = floor_div(X, e.R);
        if (X % e.R == 0 && Y < 0) --fl;
        return fl;
    };

    Word w{3, {}, true};
    for (const Event& e : ev) {
        if (e.f < 3) {
            w.digits.push_back(1);
            continue;
        }
        // Median segments: label 2 on vertex-to-center pieces, 0 on center-to-midpoint pieces.
        bool short_leg;
        if (e.f == 3) short_leg = mod(e.c + floor_at(e, fam[4]), 3) == 1;
        else if (e.f == 4) short_leg = mod(floor_at(e, fam[3]) + e.c, 3) == 1;
        else short_leg = mod(2 * floor_at(e, fam[3]) - e.c, 3) == 2;
        w.digits.push_back(short_leg ? 0 : 2);
    }
    return trim_to_minimal(w);
}

Word word_of_direction(TableKind kind, int n, int q) {
    const CycleStructure s = decompose(n, q);
    switch (kind) {
        case TableKind::A2: return trim_to_minimal(expand_a2(reduced_word(s, rule_for(kind))));
        case TableKind::B2: return expand_b2(reduced_word(s, rule_for(kind)));
        case TableKind::D2: return expand_d2(reduced_word(s, rule_for(kind)));
        case TableKind::G2: return g2_word(s.params);
    }
    throw std::logic_error("unknown table");
}

int minimal_period(const std::vector<int>& d) {
    const int L = static_cast<int>(d.size());
    if (L == 0) return 0;
    std::vector<int> pi(L, 0);
    for (int i = 1; i < L; ++i) {
        int k = pi[i - 1];
        while (k > 0 && d[i] != d[k]) k = pi[k - 1];
        if (d[i] == d[k]) ++k;
        pi[i] = k;
    }
    const int p = L - pi[L - 1];
    return L % p == 0 ? p : L;
}

Word trim_to_minimal(Word w) {
    w.digits.resize(minimal_period(w.digits));
    return w;
}

Word rotate(const Word& w, int k) {
    Word out = w;
    const int L = w.period();
    if (L == 0) return out;
    std::rotate(out.digits.begin(), out.digits.begin() + mod(k, L), out.digits.end());
    return out;
}

int rotation_of(const Word& a, const Word& b) {
    const int L = a.period();
    if (L != b.period() || L == 0) return -1;
    // Find b inside a+a with the prefix function.
    std::vector<int> s = b.digits;
    s.push_back(-1);
    s.insert(s.end(), a.digits.begin(), a.digits.end());
    s.insert(s.end(), a.digits.begin(), a.digits.end() - 1);
    std::vector<int> pi(s.size(), 0);
    for (size_t i = 1; i < s.size(); ++i) {
        int k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
        if (k == L) return static_cast<int>(i) - 2 * L;
    }
    return -1;
}

std::string to_string(const Word& w) {
    std::string s;
    for (int d : w.digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::string blocks_string(const Word& w, const StepRule& rule) {
    const auto types = step_types(w.digits, rule);
    std::string s;
    for (int k = 0; k < w.period(); ++k) {
        s.push_back(static_cast<char>('0' + w.digits[k]));
        if (types[k] && k + 1 < w.period()) s.push_back(' ');
    }
    return s;
}

Word parse_word(std::string_view text, int m) {
    Word w{m, {}, false};
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '|') continue;
        if (c < '0' || c > '9' || c - '0' >= m)
            throw std::invalid_argument(std::string("bad digit '") + c + "'");
        w.digits.push_back(c - '0');
    }
    if (w.digits.empty()) throw std::invalid_argument("empty word");
    return w;
}

}  // namespace qbill
