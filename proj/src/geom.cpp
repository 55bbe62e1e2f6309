#include "qbill/geom.hpp"

#include <numeric>
#include <optional>

namespace qbill {

namespace {

Rational floor_r(const Rational& x) {
    std::int64_t n = x.numerator(), d = x.denominator();
    std::int64_t f = n / d;
    if (n % d != 0 && n < 0) --f;
    return Rational(f);
}

bool is_integer(const Rational& x) { return x.denominator() == 1; }

Rational value(int a, int b, const RationalPoint& p) { return a * p.u + b * p.v; }

AffineMap affine(int m00, int m01, int m10, int m11, Rational t0, Rational t1) {
    return {{{{m00, m01}, {m10, m11}}}, {t0, t1}};
}

Wall wall(int a, int b, Rational c, int side, int label, AffineMap refl) {
    return {a, b, c, side, label, refl};
}

}  // namespace

RationalPoint AffineMap::operator()(const RationalPoint& p) const {
    return {M[0][0] * p.u + M[0][1] * p.v + t[0], M[1][0] * p.u + M[1][1] * p.v + t[1]};
}

int LatticeModel::tiles_per_torus() const {
    Rational n = Rational(h * h) / tile_area;
    return static_cast<int>(n.numerator() / n.denominator());
}

LatticeModel build_model(TableKind kind) {
    LatticeModel m{kind, {}, {}, 1, Rational(1, 2)};
    switch (kind) {
        case TableKind::A2:
            // Triangular lattice: v1, v2 at 60 degrees.
            m.families = {{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}};
            m.walls = {wall(0, 1, 0, 1, 0, affine(1, 1, 0, -1, 0, 0)),
                       wall(1, 1, 1, -1, 1, affine(0, -1, -1, 0, 1, 1)),
                       wall(1, 0, 0, 1, 2, affine(-1, 0, 1, 1, 0, 0))};
            m.h = 3;
            m.tile_area = Rational(1, 2);
            break;
        case TableKind::D2:
            m.families = {{1, 0, 1, 0}, {0, 1, 1, 0}};
            m.walls = {wall(0, 1, 0, 1, 0, affine(1, 0, 0, -1, 0, 0)),
                       wall(1, 0, 1, -1, 1, affine(-1, 0, 0, 1, 2, 0)),
                       wall(0, 1, 1, -1, 2, affine(1, 0, 0, -1, 0, 2)),
                       wall(1, 0, 0, 1, 3, affine(-1, 0, 0, 1, 0, 0))};
            m.h = 2;
            m.tile_area = Rational(1);
            break;
        case TableKind::B2:
            // Legs on the integer grid, hypotenuses on odd diagonals.
            m.families = {{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 2, 1}, {1, -1, 2, 1}};
            m.walls = {wall(0, 1, 0, 1, 1, affine(1, 0, 0, -1, 0, 0)),
                       wall(1, 0, 0, 1, 2, affine(-1, 0, 0, 1, 0, 0)),
                       wall(1, 1, 1, -1, 0, affine(0, -1, -1, 0, 1, 1))};
            m.h = 2;
            m.tile_area = Rational(1, 2);
            break;
        case TableKind::G2:
            // Triangular lattice with all medians: tile (0,0), (1/2,0), (1/3,1/3).
            m.families = {{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 1, 1, 0},
                          {2, 1, 1, 0}, {1, 2, 1, 0}, {1, -1, 1, 0}};
            m.walls = {wall(0, 1, 0, 1, 1, affine(1, 1, 0, -1, 0, 0)),
                       wall(2, 1, 1, -1, 0, affine(-1, -1, 0, 1, 1, 0)),
                       wall(1, -1, 0, 1, 2, affine(0, 1, 1, 0, 0, 0))};
            m.h = 1;
            m.tile_area = Rational(1, 12);
            break;
    }
    return m;
}

int fold_label(const LatticeModel& model, RationalPoint inside, RationalPoint on_edge) {
    const Rational h(model.h);
    const Rational su = h * floor_r(inside.u / h);
    const Rational sv = h * floor_r(inside.v / h);
    inside.u -= su;
    inside.v -= sv;
    on_edge.u -= su;
    on_edge.v -= sv;
    for (int guard = 0; guard < 10000; ++guard) {
        const Wall* bad = nullptr;
        for (const Wall& w : model.walls) {
            if ((w.side * (value(w.a, w.b, inside) - w.c)).numerator() < 0) {
                bad = &w;
                break;
            }
        }
        if (!bad) {
            for (const Wall& w : model.walls)
                if (value(w.a, w.b, on_edge) == w.c) return w.label;
            throw std::logic_error("crossing point not on a wall after folding");
        }
        inside = bad->reflection(inside);
        on_edge = bad->reflection(on_edge);
    }
    throw std::logic_error("folding did not terminate");
}

namespace {

struct Cursor {
    int family;
    Rational x0;    // family value at p0
    Rational rate;  // value change per unit t
    std::int64_t c; // next line value
};

Rational next_line(const EdgeFamily& f, const Rational& x0, int dir) {
    // smallest c > x0 (dir > 0) or largest c < x0 (dir < 0) with c = residue mod modulus
    const Rational M(f.modulus);
    Rational k = floor_r((x0 - f.residue) / M);
    Rational c = k * M + f.residue;
    if (dir > 0) {
        while (c <= x0) c += M;
    } else {
        while (c >= x0) c -= M;
        while (c + M < x0) c += M;
    }
    return c;
}

}  // namespace

bool on_vertex(const LatticeModel& model, const RationalPoint& p) {
    int hits = 0;
    for (const EdgeFamily& f : model.families) {
        const Rational x = value(f.a, f.b, p);
        if (is_integer(x) && mod(x.numerator() - f.residue, f.modulus) == 0) ++hits;
    }
    return hits >= 2;
}

std::vector<CrossingEvent> trace(const LatticeModel& model, const RationalRay& ray, int count) {
    if (ray.v0.u.numerator() == 0 && ray.v0.v.numerator() == 0) throw std::invalid_argument("zero direction");
    if (on_vertex(model, ray.p0)) throw std::invalid_argument("start point is a vertex");
    std::vector<Cursor> cur;
    bool along_edge = false;
    for (int i = 0; i < static_cast<int>(model.families.size()); ++i) {
        const EdgeFamily& f = model.families[i];
        const Rational rate = value(f.a, f.b, ray.v0);
        const Rational x0 = value(f.a, f.b, ray.p0);
        if (rate.numerator() == 0) {
            if (is_integer(x0) && mod(x0.numerator() - f.residue, f.modulus) == 0) along_edge = true;
            continue;
        }
        const Rational c = next_line(f, x0, rate.numerator() > 0 ? 1 : -1);
        cur.push_back({i, x0, rate, c.numerator()});
    }
    std::vector<CrossingEvent> out;
    Rational prev(0);
    while (static_cast<int>(out.size()) < count) {
        std::optional<Rational> best;
        int who = -1;
        bool tie = false;
        for (int k = 0; k < static_cast<int>(cur.size()); ++k) {
            const Rational t = (Rational(cur[k].c) - cur[k].x0) / cur[k].rate;
            if (!best || t < *best) {
                best = t;
                who = k;
                tie = false;
            } else if (t == *best) {
                tie = true;
            }
        }
        // Running along an edge line, every crossing is a vertex.
        if (tie || along_edge) throw SingularError(*best);
        const Rational t = *best;
        const RationalPoint at{ray.p0.u + t * ray.v0.u, ray.p0.v + t * ray.v0.v};
        const Rational mid = (prev + t) / 2;
        const RationalPoint in{ray.p0.u + mid * ray.v0.u, ray.p0.v + mid * ray.v0.v};
        const int fam = cur[who].family;
        out.push_back({t, fam, fold_label(model, in, at), false});
        const int step = model.families[fam].modulus;
        cur[who].c += cur[who].rate.numerator() > 0 ? step : -step;
        prev = t;
    }
    return out;
}

std::vector<int> simulate(const LatticeModel& model, const RationalRay& ray, int count) {
    std::vector<int> labels;
    for (const CrossingEvent& e : trace(model, ray, count)) labels.push_back(e.label);
    return labels;
}

bool is_singular(const LatticeModel& model, const RationalRay& ray, int horizon) {
    try {
        trace(model, ray, horizon);
    } catch (const SingularError&) {
        return true;
    }
    return false;
}

PeriodReport detect_period(const LatticeModel& model, const RationalRay& ray) {
    // Scale the rational direction to a primitive integer vector.
    const std::int64_t den = std::lcm(ray.v0.u.denominator(), ray.v0.v.denominator());
    std::int64_t du = (ray.v0.u * den).numerator();
    std::int64_t dv = (ray.v0.v * den).numerator();
    const std::int64_t g = std::gcd(du, dv);
    du /= g;
    dv /= g;
    const std::int64_t h = model.h;
    const std::int64_t k = std::lcm(h / std::gcd(h, du), h / std::gcd(h, dv));
    PeriodReport rep{{k * du, k * dv}, 0};
    for (const EdgeFamily& f : model.families) {
        const std::int64_t x = f.a * rep.translation[0] + f.b * rep.translation[1];
        rep.crossings += static_cast<int>((x < 0 ? -x : x) / f.modulus);
    }
    return rep;
}

RationalRay canonical_ray(const LatticeModel& model, int n, int q) {
    Rational eps(1, 64LL * n * n);
    const RationalPoint dir{Rational(n - q), Rational(q)};
    const int horizon = 2 * detect_period(model, {{Rational(0), Rational(0)}, dir}).crossings;
    for (int attempt = 0; attempt < 20; ++attempt, eps /= 2) {
        RationalRay ray{{-3 * eps, eps}, dir};
        if (!is_singular(model, ray, horizon)) return ray;
    }
    throw SingularError(Rational(0));
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(v);
        }
        const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        const std::int64_t num = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const std::int64_t den = std::stoll(b, &used);
        if (used != b.size() || den == 0) throw std::invalid_argument(s);
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational '" + s + "'");
    }
}

std::string format_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace qbill
