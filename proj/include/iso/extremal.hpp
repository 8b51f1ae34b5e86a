#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "iso/pointset.hpp"
#include "iso/polytope.hpp"
#include "iso/rational.hpp"

namespace iso {

// Lattice ball extracted from a dilated polytope, together with the scale
// at which the requested cardinality was first reached. base is the set
// whose conical hull was dilated (B itself, or its subset sums for the
// edge variant).
struct ExtremalBall {
    PointSet base;
    PointSet points;
    std::int64_t kappa = 0;
    std::int64_t target_n = 0;
};

// Smallest k >= 1 with |k * conv(B u {0}) n Z^d| >= n.
std::int64_t kappa(const PointSet& b, std::int64_t n);

// Lattice points of kappa(b, n) * conv(B u {0}); kept whole on overshoot.
ExtremalBall ball(const PointSet& b, std::int64_t n);

// Same construction over the subset-sum hull of B.
ExtremalBall edge_ball(const PointSet& b, std::int64_t n);

// Normalizing constants of the two discrete isoperimetric inequalities.
// beta^d is retained exactly so comparisons against it never round.
struct IsoperimetricConstants {
    int d = 0;
    Rat volume_vertex;   // volume of conv(B u {0})
    Rat volume_edge;     // volume of the zonotope of B
    double beta_vertex = 0.0;  // d * volume_vertex^(1/d)
    double beta_edge = 0.0;
    Rat beta_vertex_pow;  // d^d * volume_vertex
    Rat beta_edge_pow;
};
IsoperimetricConstants constants(const PointSet& b);

// One measured set against its isoperimetric bound. epsilon_sign is the
// exact sign of boundary^d - beta^d * n^(d-1); epsilon itself is the
// floating-point relative excess boundary / (beta n^(1-1/d)) - 1.
struct IsoperimetricReport {
    std::int64_t n = 0;
    std::int64_t boundary = 0;
    double beta = 0.0;
    double epsilon = 0.0;
    int epsilon_sign = 0;
    bool has_translate = false;
    Pt best_v;
    std::int64_t symdiff = 0;
    bool normalized_valid = false;
    double normalized_symdiff = 0.0;  // symdiff / (n * sqrt(epsilon))
};

IsoperimetricReport vertex_excess(const PointSet& a, const PointSet& b);
IsoperimetricReport edge_excess(const PointSet& a, const PointSet& b);

// Minimizes |A symdiff (v + S)| over integer translates v, scanning the
// window where the bounding boxes can meet. Ties break lexicographically.
std::pair<Pt, std::int64_t> best_translate_symdiff(const PointSet& a, const PointSet& s);

// Equality-probe pair: B the corner set {0,1}^d and A the integer cuboid
// prod [0, a_i). Boundaries of such cuboids track the isoperimetric bound
// closely, which makes the family useful in the stability experiment.
std::pair<PointSet, PointSet> tight_example(const std::vector<Coord>& sides);

}  // namespace iso
