#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "iso/error.hpp"

namespace iso {

// Lattice points use checked 64-bit coordinates; any overflow in point
// arithmetic is a domain error rather than silent wraparound.
using Coord = std::int64_t;
using Pt = std::vector<Coord>;

Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);
Pt pt_add(const Pt& a, const Pt& b);
Pt pt_sub(const Pt& a, const Pt& b);
Pt pt_neg(const Pt& a);

struct PtHash {
    std::size_t operator()(const Pt& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Coord c : p) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull;
        return h;
    }
};

// Finite subset of Z^d. Membership is hash-based; every ordered traversal
// (serialization, enumeration, reporting) goes through sorted(), so results
// never depend on hash iteration order. The bounding box is maintained
// incrementally and is always tight.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(int d);
    PointSet(int d, const std::vector<Pt>& pts);

    int dim() const { return d_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    bool contains(const Pt& p) const { return pts_.count(p) != 0; }
    void insert(Pt p);

    const std::unordered_set<Pt, PtHash>& raw() const { return pts_; }
    std::vector<Pt> sorted() const;  // lexicographic

    // Tight per-axis (min, max); undefined on the empty set.
    std::pair<Pt, Pt> bbox() const;

    PointSet translated(const Pt& v) const;

    bool operator==(const PointSet& o) const { return d_ == o.d_ && pts_ == o.pts_; }
    bool operator!=(const PointSet& o) const { return !(*this == o); }

private:
    int d_ = 0;
    std::unordered_set<Pt, PtHash> pts_;
    Pt lo_, hi_;
};

PointSet sumset(const PointSet& a, const PointSet& b);

// B + B + ... + B (k summands); k == 0 gives {0}.
PointSet iterated_sumset(const PointSet& b, unsigned k);

// { sum of B' : B' subseteq B }, including 0 from the empty subset.
// Computed by folding one generator at a time; |B| is capped because the
// result can have 2^|B| points.
PointSet subset_sums(const PointSet& b, std::size_t cap = 20);

// |A + (B u {0})| - |A|: the number of points reachable from A by one step
// along B that are not already in A (counting A's own growth under 0).
std::int64_t vertex_boundary(const PointSet& a, const PointSet& b);

// Number of pairs (x, s) with x in A, s in B, x + s not in A.
std::int64_t edge_boundary(const PointSet& a, const PointSet& b);

}  // namespace iso
