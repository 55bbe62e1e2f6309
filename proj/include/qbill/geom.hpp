#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "qbill/wordgen.hpp"

namespace qbill {

using Rational = boost::rational<std::int64_t>;

// Coordinates in the lattice basis (v1, v2).
struct RationalPoint {
    Rational u;
    Rational v;

    bool operator==(const RationalPoint&) const = default;
};

struct RationalRay {
    RationalPoint p0;
    RationalPoint v0;
};

// Lines a*u + b*v = c with c = residue (mod modulus).
struct EdgeFamily {
    int a = 0;
    int b = 0;
    int modulus = 1;
    int residue = 0;
};

// Affine map x -> M x + t.
struct AffineMap {
    std::array<std::array<int, 2>, 2> M;
    std::array<Rational, 2> t;

    RationalPoint operator()(const RationalPoint& p) const;
};

// Wall a*u + b*v = c of the fundamental tile; the tile lies on the side where
// side * (a*u + b*v - c) > 0.
struct Wall {
    int a = 0;
    int b = 0;
    Rational c;
    int side = 1;
    int label = 0;
    AffineMap reflection;
};

struct LatticeModel {
    TableKind kind;
    std::vector<EdgeFamily> families;
    std::vector<Wall> walls;
    int h = 1;                  // labels are invariant under h*Z^2
    Rational tile_area;         // in basis units
    int tiles_per_torus() const;
};

struct CrossingEvent {
    Rational t;
    int family = 0;
    int label = 0;
    bool singular = false;
};

class SingularError : public std::runtime_error {
public:
    explicit SingularError(Rational t)
        : std::runtime_error("trajectory passes through a lattice vertex"), t_(t) {}
    Rational t() const { return t_; }

private:
    Rational t_;
};

LatticeModel build_model(TableKind kind);

// Label of the edge through `on_edge`, seen from the tile containing `inside`.
int fold_label(const LatticeModel& model, RationalPoint inside, RationalPoint on_edge);

std::vector<CrossingEvent> trace(const LatticeModel& model, const RationalRay& ray, int count);
std::vector<int> simulate(const LatticeModel& model, const RationalRay& ray, int count);
bool is_singular(const LatticeModel& model, const RationalRay& ray, int horizon);

struct PeriodReport {
    std::array<std::int64_t, 2> translation;
    int crossings = 0;
};
PeriodReport detect_period(const LatticeModel& model, const RationalRay& ray);

// Direction (n-q, q) from eps*(-3, 1), eps = 1/(64 n^2); eps halves on a singular start.
RationalRay canonical_ray(const LatticeModel& model, int n, int q);

bool on_vertex(const LatticeModel& model, const RationalPoint& p);

Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

}  // namespace qbill
