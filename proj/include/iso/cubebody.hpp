#pragma once

#include <cstdint>
#include <vector>

#include "iso/pointset.hpp"
#include "iso/polytope.hpp"
#include "iso/rational.hpp"

namespace iso {

// Union of closed unit cubes centered at the cells: A + [-1/2, 1/2]^d.
// Measure is the cell count exactly.
struct CubeUnionBody {
    PointSet cells;

    int dim() const { return cells.dim(); }
    Rat measure() const { return Rat(static_cast<unsigned long>(cells.size())); }
};

CubeUnionBody cube_union(const PointSet& a);

// Exposed unit facets per direction: counts[i].first for +e_i,
// counts[i].second for -e_i. A facet (c, +e_i) is exposed iff c is a cell
// and c + e_i is not.
std::vector<std::pair<std::int64_t, std::int64_t>> exposed_facets(const CubeUnionBody& e);

// First-order growth rate of mu(E + t*K): sum over the 2d axis directions
// of exposed facet count times the support function of K. Exact for cube
// unions (re-entrant corners only contribute at second order).
Rat perimeter(const CubeUnionBody& e, const Polytope& k);

// Relative gap to the anisotropic isoperimetric bound
// d mu(K)^(1/d) mu(E)^(1-1/d). sign is the exact comparison of
// per^d against d^d mu(K) mu(E)^(d-1); value is the float deficit.
struct DeficitResult {
    double value = 0.0;
    int sign = 0;
    Rat per;
    Rat per_pow;    // per^d
    Rat bound_pow;  // d^d mu(K) mu(E)^(d-1)
};
DeficitResult deficit(const CubeUnionBody& e, const Polytope& k);

// Certified upper bound on the asymmetric index: the infimum over x0 of
// mu(E symdiff (x0 + r K)) / mu(E) under r^d mu(K) = mu(E), minimized over
// a grid of translates with the given step. When r is irrational the copy
// is shrunk to a rational lower enclosure r_lo (anchored so the shrunk copy
// nests inside the true one), which keeps the reported value a true upper
// bound. x0 anchors r*(K - m) where m is 0 if 0 is in K, else the vertex
// centroid of K.
struct AsymmetryResult {
    double value = 0.0;
    QVec x0;
    Rat symdiff_bound;  // exact numerator of value (times mu(E))
    bool r_exact = false;
    Rat r_lo;
};
AsymmetryResult asymmetric_index(const CubeUnionBody& e, const Polytope& k, const Rat& grid_step);

// Empirical stability ratio asym / sqrt(deficit) for one instance.
struct FmpPoint {
    double delta = 0.0;
    double asym = 0.0;
    double ratio = 0.0;
};
FmpPoint fmp_ratio(const CubeUnionBody& e, const Polytope& k, const Rat& grid_step = Rat(1, 4));

}  // namespace iso
