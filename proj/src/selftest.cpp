#include <functional>
#include <ostream>
#include <set>
#include <string>

#include "qbill/classes.hpp"
#include "qbill/cli.hpp"
#include "qbill/geom.hpp"
#include "qbill/recognizer.hpp"

namespace qbill::cli {

namespace {

template <class F>
void each_pair(int max_n, F&& f) {
    for (int n = 2; n <= max_n; ++n)
        for (int q = 1; 2 * q <= n; ++q)
            if (is_admissible(n, q)) f(n, q);
}

constexpr TableKind kTables[] = {TableKind::A2, TableKind::B2, TableKind::D2, TableKind::G2};

bool partition_and_counts(int n, int q) {
    const CycleStructure s = decompose(n, q);
    std::set<int> seen;
    int longer = 0;
    for (size_t k = 0; k < s.cycles.size(); ++k) {
        const Cycle& c = s.cycles[k];
        for (int x : c.elements)
            if (!seen.insert(x).second) return false;
        if (c.length() == s.params.b + 1) ++longer;
        const int next = s.cycles[(k + 1) % s.cycles.size()].min;
        if (successor_min(c.min, s.params) != next) return false;
        if (c.elements.back() + q - n != next) return false;
    }
    return static_cast<int>(seen.size()) == n && longer == s.params.r;
}

bool shift_law(int n, int q) {
    const Parameters p = make_parameters(n, q);
    if (!transposition_property(p)) return false;
    CycleStructure s = decompose(n, q);
    for (int k = 0; k < q; ++k) s = shift(s);
    return s == decompose(n, q);
}

bool oracle(int n, int q) {
    for (TableKind kind : kTables) {
        const Word w = word_of_direction(kind, n, q);
        const LatticeModel model = build_model(kind);
        const auto sim = simulate(model, canonical_ray(model, n, q), 2 * w.period());
        for (int k = 0; k < 2 * w.period(); ++k)
            if (sim[k] != w.digits[k % w.period()]) return false;
    }
    return true;
}

bool recognizers(int n, int q) {
    for (TableKind kind : kTables) {
        const StepRule rule = rule_for(kind);
        const Word w = reduced_word(decompose(n, q), rule);
        const auto a = recognize_cyclic(w, rule);
        const auto b = recognize_bruteforce(w, rule);
        if (!a.accepted || !b.accepted) return false;
        if (a.params.n != n || a.params.q != q || !(a.params == b.params)) return false;
        const auto t = recognize_table(word_of_direction(kind, n, q), kind);
        if (!t.accepted || t.params.n != n || t.params.q != q) return false;
    }
    return true;
}

bool classes_law(int n, int q) {
    const Parameters p = make_parameters(n, q);
    for (TableKind kind : {TableKind::A2, TableKind::B2, TableKind::D2}) {
        const TranslationClass c = translation_class(p, rule_for(kind));
        if (static_cast<int>(c.members.size()) != q || !class_adjacency_check(c).ok) return false;
        std::set<std::vector<int>> expect, seen;
        for (const auto& m : c.members) expect.insert(m.word.digits);
        for (const auto& w : swept_members(p, kind)) seen.insert(w.digits);
        if (expect != seen) return false;
    }
    return true;
}

}  // namespace

int selftest(int max_n, std::ostream& out) {
    struct Check {
        const char* name;
        std::function<bool(int, int)> fn;
        int limit;
    };
    const Check checks[] = {
        {"partition, counting and successor law", partition_and_counts, max_n},
        {"euclidean construction", [](int n, int q) { return euclid_construct(n, q) == decompose(n, q); }, max_n},
        {"shift transposition and order q", shift_law, max_n},
        {"recognizer round trip", recognizers, max_n},
        {"simulator equals generated words", oracle, max_n},
        {"translation classes against start-point sweep", classes_law, std::min(max_n, 40)},
    };
    int failures = 0;
    for (const Check& c : checks) {
        int pairs = 0, bad = 0;
        std::string first;
        each_pair(c.limit, [&](int n, int q) {
            ++pairs;
            bool ok = false;
            try {
                ok = c.fn(n, q);
            } catch (const std::exception&) {
                ok = false;
            }
            if (!ok && bad++ == 0) first = " first failure (" + std::to_string(n) + "," + std::to_string(q) + ")";
        });
        out << (bad ? "FAIL " : "PASS ") << c.name << " [" << pairs << " pairs, n <= " << c.limit << "]"
            << first << "\n";
        failures += bad ? 1 : 0;
    }
    out << (failures ? "selftest failed" : "selftest passed") << "\n";
    return failures ? 1 : 0;
}

}  // namespace qbill::cli
