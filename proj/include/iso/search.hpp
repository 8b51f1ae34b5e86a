#pragma once

#include <cstdint>
#include <vector>

#include "iso/cubebody.hpp"
#include "iso/extremal.hpp"
#include "iso/pointset.hpp"
#include "iso/rational.hpp"

namespace iso {

// The two boundary functionals the searches minimize. The vertex objective
// is the sumset size |A + B| (the quantity the sumset lower bound speaks
// about); the edge objective is the edge boundary of A in G_B.
enum class Objective { vertex, edge };

std::int64_t objective_value(Objective obj, const PointSet& a, const PointSet& b);

struct SearchConfig {
    Objective objective = Objective::vertex;
    std::int64_t n = 1;
    std::vector<Coord> box;  // per-axis extent; candidate cells are prod [0, box_i)
    enum class Mode { exhaustive, anneal } mode = Mode::exhaustive;
    std::uint64_t budget = 100'000;
    std::uint64_t seed = 0;
    std::uint64_t exhaustive_cap = 10'000'000;
    // annealing schedule (geometric cooling)
    double t0 = 2.0;
    double cooling = 0.999;
    int threads = 1;
};

struct SearchResult {
    std::int64_t min_value = 0;
    std::vector<PointSet> witnesses;  // canonical translates, sorted
    std::uint64_t candidates_examined = 0;
    bool exact = false;
};

// Enumerates every n-subset of the box in canonical form (per-axis minimum
// 0) and returns the global minimum with all minimizers. Candidate count
// C(cells, n) must stay under cfg.exhaustive_cap.
SearchResult exact_min_boundary(const PointSet& b, const SearchConfig& cfg);

// Simulated annealing over single-point swap moves from a ball-derived
// seed. Upper bound only (exact = false); deterministic for a fixed seed.
SearchResult anneal_min_boundary(const PointSet& b, const SearchConfig& cfg);

// Subset growth certificate: with alpha = |A+B| / |A|, finds the nonempty
// subset A' of A minimizing |A' + Sigma_k(B)| / |A'| and checks it against
// alpha^k. The scan is exhaustive over 2^|A| - 1 subsets.
struct PlunneckeResult {
    Rat alpha;
    PointSet witness;
    Rat ratio;  // |witness + Sigma_k(B)| / |witness|
    Rat bound;  // alpha^k
    bool ratio_ok = false;
};
PlunneckeResult plunnecke_verify(const PointSet& a, const PointSet& b, unsigned k,
                                 std::size_t cap = 18);

// Exact d-th-power forms of the sumset measure inequality on cube unions:
// continuous_ok:  mu(U+V)^(1/d) >= mu(U)^(1/d) + mu(V)^(1/d)
// lattice_ok:     |X+Y|^(1/d)  >= |X|^(1/d) + |Y|^(1/d) - 1
// ok mirrors continuous_ok (the measure inequality itself).
struct BrunnMinkowskiCheck {
    bool ok = false;
    bool continuous_ok = false;
    bool lattice_ok = false;
    std::int64_t lattice_sum = 0;  // |X+Y|
    std::int64_t body_sum = 0;     // mu(U+V) as a cell count
};
BrunnMinkowskiCheck brunn_minkowski_check(const CubeUnionBody& u, const CubeUnionBody& v);

// Per-instance excess and best-translate reports against the extremal ball
// of matching size. Rows with nonpositive excess keep symdiff but carry no
// normalized value.
std::vector<IsoperimetricReport> stability_experiment(const PointSet& b,
                                                      const std::vector<PointSet>& family,
                                                      Objective obj);

// One row of a conjectured-inequality scan: the minimum boundary found at
// size n against d mu^(1/d) n^(1-1/d), with the gap sign decided by the
// exact d-th-power comparison. A negative sign flags a counterexample
// candidate; the witness is retained for serialization.
struct ScanRow {
    std::int64_t n = 0;
    std::int64_t min_value = 0;
    double bound = 0.0;
    int gap_sign = 0;
    PointSet witness;
    bool exact = false;
};
std::vector<ScanRow> conjecture_scan(const PointSet& b, std::int64_t n_from, std::int64_t n_to,
                                     const SearchConfig& cfg);

}  // namespace iso
