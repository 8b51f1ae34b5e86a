#include "iso/extremal.hpp"

#include <algorithm>
#include <cmath>

namespace iso {

namespace {

std::int64_t lattice_count(const Polytope& hull, std::int64_t k) {
    return static_cast<std::int64_t>(lattice_points(dilate(hull, Rat(static_cast<long>(k)))).size());
}

std::int64_t kappa_of_hull(const Polytope& hull, std::int64_t n) {
    if (!hull.full_dimensional())
        throw domain_error("kappa: conical hull is not full-dimensional, count never reaches n");
    if (n < 1) throw domain_error("kappa: n must be positive");
    if (lattice_count(hull, 1) >= n) return 1;
    // gallop to an upper bound, then bisect on the monotone count
    std::int64_t lo = 1, hi = 2;
    while (lattice_count(hull, hi) < n) {
        lo = hi;
        hi = checked_mul(hi, 2);
    }
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (lattice_count(hull, mid) >= n)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

ExtremalBall ball_of_hull(PointSet base, const Polytope& hull, std::int64_t n) {
    ExtremalBall eb;
    eb.kappa = kappa_of_hull(hull, n);
    eb.points = lattice_points(dilate(hull, Rat(static_cast<long>(eb.kappa))));
    eb.target_n = n;
    eb.base = std::move(base);
    return eb;
}

}  // namespace

std::int64_t kappa(const PointSet& b, std::int64_t n) {
    return kappa_of_hull(conical_hull(b), n);
}

ExtremalBall ball(const PointSet& b, std::int64_t n) {
    return ball_of_hull(b, conical_hull(b), n);
}

ExtremalBall edge_ball(const PointSet& b, std::int64_t n) {
    PointSet ss = subset_sums(b);
    Polytope hull = convex_hull(ss);
    return ball_of_hull(std::move(ss), hull, n);
}

IsoperimetricConstants constants(const PointSet& b) {
    if (!is_generating(b)) throw domain_error("constants: B does not generate Z^d");
    IsoperimetricConstants c;
    c.d = b.dim();
    c.volume_vertex = conical_hull(b).volume();
    c.volume_edge = zonotope_volume(b);
    Rat dd = 1;
    for (int i = 0; i < c.d; ++i) dd *= c.d;
    c.beta_vertex_pow = dd * c.volume_vertex;
    c.beta_edge_pow = dd * c.volume_edge;
    c.beta_vertex = c.d * std::pow(to_double(c.volume_vertex), 1.0 / c.d);
    c.beta_edge = c.d * std::pow(to_double(c.volume_edge), 1.0 / c.d);
    return c;
}

namespace {

IsoperimetricReport excess_report(std::int64_t boundary, std::int64_t n, double beta,
                                  const Rat& beta_pow, int d) {
    IsoperimetricReport r;
    r.n = n;
    r.boundary = boundary;
    r.beta = beta;
    r.epsilon = static_cast<double>(boundary) /
                    (beta * std::pow(static_cast<double>(n), 1.0 - 1.0 / d)) -
                1.0;
    // exact sign of boundary^d - beta^d n^(d-1)
    Rat lhs = 1, rhs = beta_pow;
    for (int i = 0; i < d; ++i) lhs *= boundary;
    for (int i = 0; i + 1 < d; ++i) rhs *= n;
    r.epsilon_sign = cmp(lhs, rhs);
    return r;
}

}  // namespace

IsoperimetricReport vertex_excess(const PointSet& a, const PointSet& b) {
    if (a.empty()) throw domain_error("vertex_excess: A must be nonempty");
    IsoperimetricConstants c = constants(b);
    return excess_report(vertex_boundary(a, b), static_cast<std::int64_t>(a.size()),
                         c.beta_vertex, c.beta_vertex_pow, c.d);
}

IsoperimetricReport edge_excess(const PointSet& a, const PointSet& b) {
    if (a.empty()) throw domain_error("edge_excess: A must be nonempty");
    IsoperimetricConstants c = constants(b);
    return excess_report(edge_boundary(a, b), static_cast<std::int64_t>(a.size()),
                         c.beta_edge, c.beta_edge_pow, c.d);
}

std::pair<Pt, std::int64_t> best_translate_symdiff(const PointSet& a, const PointSet& s) {
    if (a.empty() || s.empty()) throw domain_error("best_translate_symdiff: empty input");
    if (a.dim() != s.dim()) throw domain_error("best_translate_symdiff: dimension mismatch");
    const int d = a.dim();
    auto [alo, ahi] = a.bbox();
    auto [slo, shi] = s.bbox();
    // Outside this window no translate of S meets bbox(A), so the symdiff is
    // |A| + |S| there and cannot beat any in-window candidate.
    Pt vlo(d), vhi(d);
    for (int i = 0; i < d; ++i) {
        vlo[i] = checked_add(alo[i], -shi[i]);
        vhi[i] = checked_add(ahi[i], -slo[i]);
    }
    const std::int64_t total = static_cast<std::int64_t>(a.size() + s.size());
    std::vector<Pt> spts = s.sorted();
    Pt best_v;
    std::int64_t best = -1;
    Pt v = vlo;
    while (true) {
        std::int64_t inter = 0;
        for (const Pt& p : spts)
            if (a.contains(pt_add(p, v))) ++inter;
        std::int64_t sd = total - 2 * inter;
        if (best < 0 || sd < best) {  // lex scan order makes ties keep the smallest v
            best = sd;
            best_v = v;
        }
        int pos = d - 1;
        while (pos >= 0 && v[pos] == vhi[pos]) {
            v[pos] = vlo[pos];
            --pos;
        }
        if (pos < 0) break;
        ++v[pos];
    }
    return {best_v, best};
}

std::pair<PointSet, PointSet> tight_example(const std::vector<Coord>& sides) {
    const int d = static_cast<int>(sides.size());
    if (d < 1) throw domain_error("tight_example: need at least one side length");
    for (Coord s : sides)
        if (s < 1) throw domain_error("tight_example: side lengths must be >= 1");
    PointSet b(d);
    for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
        Pt p(d);
        for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1 ? 1 : 0;
        b.insert(std::move(p));
    }
    PointSet a(d);
    Pt cur(d, 0);
    while (true) {
        a.insert(cur);
        int pos = d - 1;
        while (pos >= 0 && cur[pos] == sides[pos] - 1) {
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++cur[pos];
    }
    return {std::move(b), std::move(a)};
}

}  // namespace iso
