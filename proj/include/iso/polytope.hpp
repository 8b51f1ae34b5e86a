#pragma once

#include <utility>
#include <vector>

#include "iso/pointset.hpp"
#include "iso/rational.hpp"

namespace iso {

// Closed halfspace a . x <= b. Stored with integer-primitive a (coprime
// entries) so equal halfspaces compare equal componentwise.
struct Halfspace {
    QVec a;
    Rat b;

    bool operator==(const Halfspace& o) const { return a == o.a && b == o.b; }
};

// Convex polytope over Q carrying both representations plus its exact
// volume. Vertices are the extreme points, sorted lexicographically.
// Lower-dimensional polytopes are supported: their affine hull appears in
// the halfspace list as paired opposite inequalities and their volume is 0.
class Polytope {
public:
    int dim() const { return d_; }
    int affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == d_; }
    const std::vector<QVec>& vertices() const { return verts_; }
    const std::vector<Halfspace>& halfspaces() const { return hs_; }
    const Rat& volume() const { return vol_; }

    bool contains(const QVec& x) const;

    // Componentwise (min, max) over the vertices.
    std::pair<QVec, QVec> vertex_bbox() const;

private:
    friend class PolytopeBuilder;
    int d_ = 0;
    int affine_dim_ = 0;
    std::vector<QVec> verts_;
    std::vector<Halfspace> hs_;
    Rat vol_ = 0;
};

// Hull of a finite nonempty point set (exact incremental algorithm with
// rational predicates). Handles affinely dependent input by recursing in
// the coordinates of the affine hull.
Polytope convex_hull(const std::vector<QVec>& pts);
Polytope convex_hull(const PointSet& pts);

// conv(B u {0}).
Polytope conical_hull(const PointSet& b);

// Hull of all subset sums of B; equals the Minkowski sum of the segments
// [0, s] over s in B. Checked against the determinant-sum volume formula.
Polytope zonotope(const PointSet& b, std::size_t cap = 20);

// Volume of the zonotope as sum over d-element subsets {s_1..s_d} of
// |det(s_1..s_d)|; no 2^|B| blowup, so usable beyond the hull cap.
Rat zonotope_volume(const PointSet& b);

Rat support_function(const Polytope& k, const QVec& u);

// t * K for t >= 0 (t == 0 collapses to the origin).
Polytope dilate(const Polytope& k, const Rat& t);

Polytope translate(const Polytope& k, const QVec& x);

// K ∩ Z^d by scanning the vertex bounding box; refuses boxes over the cap.
PointSet lattice_points(const Polytope& k, std::int64_t cap = 20'000'000);

// Volume of K intersected with the unit cube c + [-1/2, 1/2]^d.
Rat cube_clip_volume(const Polytope& k, const Pt& c);

// True iff the integer vectors of B span Z^d as a lattice (gcd of all
// maximal minors is 1).
bool is_generating(const PointSet& b);

// Exact determinant (fraction-free elimination).
Rat det(std::vector<QVec> m);

}  // namespace iso
