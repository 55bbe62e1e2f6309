#include "qbill/classes.hpp"

#include <algorithm>

#include "qbill/geom.hpp"

namespace qbill {

TranslationClass translation_class(const Parameters& p, const StepRule& rule) {
    TranslationClass c{p, rule, {}};
    const CycleStructure start = structure_at(p, 0);
    CycleStructure s = start;
    do {
        c.members.push_back({s, reduced_word(s, rule)});
        s = shift(s);
    } while (!(s == start));
    return c;
}

AdjacencyReport class_adjacency_check(const TranslationClass& c) {
    AdjacencyReport rep;
    const int count = static_cast<int>(c.members.size());
    if (c.params.q < 2) return rep;
    for (int i = 0; i < count; ++i) {
        const auto a = lengths(c.members[i].structure);
        const auto b = lengths(c.members[(i + 1) % count].structure);
        const int q = static_cast<int>(a.size());
        std::vector<int> diff;
        for (int k = 0; k < q; ++k)
            if (a[k] != b[k]) diff.push_back(k);
        bool good = diff.size() == 2;
        if (good) {
            const int x = diff[0], y = diff[1];
            good = (y - x == 1 || (x == 0 && y == q - 1)) && a[x] == b[y] && a[y] == b[x];
            if (good) rep.witnesses.emplace_back(x, y);
        }
        rep.ok = rep.ok && good;
    }
    return rep;
}

std::vector<Word> swept_members(const Parameters& p, TableKind kind) {
    const LatticeModel model = build_model(kind);
    const StepRule rule = rule_for(kind);
    const Rational eps(1, 64LL * p.n * p.n);
    const RationalPoint dir{Rational(p.n - p.q), Rational(p.q)};
    const bool triangular = kind == TableKind::A2;
    // Singular start offsets are spaced 1/n (A2, along u+v = 0) or 1/(n-q) (square grids, along u = 0).
    const int intervals = triangular ? p.n : p.n - p.q;
    std::vector<Word> out;
    for (int t = 0; t < intervals; ++t) {
        const Rational s(2 * t + 1, 2 * intervals);
        const RationalPoint p0 = triangular ? RationalPoint{-3 * eps - s, eps + s}
                                            : RationalPoint{-3 * eps, eps + s};
        const auto period = detect_period(model, {p0, dir}).crossings;
        const auto events = trace(model, {p0, dir}, period + 4);
        // Step k -> k+1 is a between-step iff it crosses a v-line.
        std::vector<bool> between;
        if (triangular) {
            for (size_t k = 1; k < events.size() && static_cast<int>(between.size()) < p.n; k += 2)
                between.push_back(events[k].family == 1);
        } else {
            for (const CrossingEvent& e : events) {
                if (e.family > 1) continue;
                if (static_cast<int>(between.size()) == p.n) break;
                between.push_back(e.family == 1);
            }
        }
        if (!between.back()) continue;  // not block-aligned
        const int passes = additive_order(net_shift(rule, p), rule.m);
        Word w{rule.m, {}, true};
        int d = 0;
        for (int pass = 0; pass < passes; ++pass) {
            for (bool b : between) {
                w.digits.push_back(d);
                d = mod(d + (b ? rule.j : rule.i), rule.m);
            }
        }
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

}  // namespace qbill
