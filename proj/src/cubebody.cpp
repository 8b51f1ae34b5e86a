#include "iso/cubebody.hpp"

#include <algorithm>
#include <cmath>

namespace iso {

CubeUnionBody cube_union(const PointSet& a) {
    if (a.empty()) throw domain_error("cube_union: empty cell set");
    return CubeUnionBody{a};
}

std::vector<std::pair<std::int64_t, std::int64_t>> exposed_facets(const CubeUnionBody& e) {
    const int d = e.dim();
    std::vector<std::pair<std::int64_t, std::int64_t>> counts(d, {0, 0});
    for (const Pt& c : e.cells.raw()) {
        for (int i = 0; i < d; ++i) {
            Pt up = c, dn = c;
            up[i] = checked_add(up[i], 1);
            dn[i] = checked_add(dn[i], -1);
            if (!e.cells.contains(up)) ++counts[i].first;
            if (!e.cells.contains(dn)) ++counts[i].second;
        }
    }
    return counts;
}

Rat perimeter(const CubeUnionBody& e, const Polytope& k) {
    const int d = e.dim();
    if (k.dim() != d) throw domain_error("perimeter: dimension mismatch");
    if (!k.full_dimensional()) throw domain_error("perimeter: K must be full-dimensional");
    auto counts = exposed_facets(e);
    Rat per = 0;
    for (int i = 0; i < d; ++i) {
        QVec u(d, Rat(0));
        u[i] = 1;
        per += counts[i].first * support_function(k, u);
        u[i] = -1;
        per += counts[i].second * support_function(k, u);
    }
    return per;
}

DeficitResult deficit(const CubeUnionBody& e, const Polytope& k) {
    const int d = e.dim();
    if (e.cells.empty()) throw domain_error("deficit: empty body");
    DeficitResult r;
    r.per = perimeter(e, k);
    const Rat mu_e = e.measure();
    const Rat mu_k = k.volume();
    r.per_pow = rat_pow(r.per, d);
    Rat dd = 1;
    for (int i = 0; i < d; ++i) dd *= d;
    r.bound_pow = dd * mu_k * rat_pow(mu_e, d - 1);
    r.sign = cmp(r.per_pow, r.bound_pow);
    r.value = to_double(r.per) /
                  (d * std::pow(to_double(mu_k), 1.0 / d) *
                   std::pow(to_double(mu_e), 1.0 - 1.0 / d)) -
              1.0;
    return r;
}

namespace {

// Interval overlap length, clamped at zero.
Rat seg_overlap(const Rat& alo, const Rat& ahi, const Rat& blo, const Rat& bhi) {
    Rat lo = std::max(alo, blo);
    Rat hi = std::min(ahi, bhi);
    return hi > lo ? Rat(hi - lo) : Rat(0);
}

}  // namespace

AsymmetryResult asymmetric_index(const CubeUnionBody& e, const Polytope& k, const Rat& grid_step) {
    const int d = e.dim();
    if (e.cells.empty()) throw domain_error("asymmetric_index: empty body");
    if (k.dim() != d) throw domain_error("asymmetric_index: dimension mismatch");
    if (!k.full_dimensional()) throw domain_error("asymmetric_index: K must be full-dimensional");
    if (sgn(grid_step) <= 0) throw domain_error("asymmetric_index: grid step must be positive");

    const Rat mu_e = e.measure();
    const Rat mu_k = k.volume();

    // r from r^d mu(K) = mu(E); rational lower enclosure within 1e-9
    RootBounds rb = nth_root_bounds(mu_e / mu_k, d, Int(1'000'000'000));

    // anchor K so the shrunk copy nests inside the true one
    QVec anchor(d, Rat(0));
    if (!k.contains(anchor)) {
        for (const QVec& v : k.vertices())
            for (int i = 0; i < d; ++i) anchor[i] += v[i];
        for (int i = 0; i < d; ++i) anchor[i] /= static_cast<long>(k.vertices().size());
    }
    QVec neg_anchor(d);
    for (int i = 0; i < d; ++i) neg_anchor[i] = -anchor[i];
    const Polytope k0 = translate(k, neg_anchor);
    const Polytope copy0 = dilate(k0, rb.lo);  // r_lo * K0, translated per candidate
    auto [klo, khi] = k0.vertex_bbox();

    auto [clo, chi] = e.cells.bbox();
    const Rat half(1, 2);
    QVec elo(d), ehi(d);
    for (int i = 0; i < d; ++i) {
        elo[i] = Rat(static_cast<long>(clo[i])) - half;
        ehi[i] = Rat(static_cast<long>(chi[i])) + half;
    }

    // grid window: bbox(E) inflated by one diameter of rK per axis
    QVec wlo(d), whi(d);
    for (int i = 0; i < d; ++i) {
        Rat diam = rb.hi * (khi[i] - klo[i]);
        wlo[i] = elo[i] - diam;
        whi[i] = ehi[i] + diam;
    }
    // first grid point >= window start, per axis
    QVec start(d);
    std::vector<Int> steps(d);
    for (int i = 0; i < d; ++i) {
        start[i] = Rat(rat_ceil(wlo[i] / grid_step)) * grid_step;
        Int count = rat_floor((whi[i] - start[i]) / grid_step) + 1;
        if (count < 1) count = 1;
        steps[i] = count;
    }

    const std::vector<Pt> cells = e.cells.sorted();
    const bool box_copy = [&] {
        // axis-box iff the bbox volume matches the exact volume
        Rat bv = 1;
        for (int i = 0; i < d; ++i) bv *= khi[i] - klo[i];
        return bv == k0.volume();
    }();

    auto overlap_at = [&](const QVec& x0, const Rat& give_up_below) -> Rat {
        // bbox of the placed copy
        QVec xlo(d), xhi(d);
        Rat cap = 1;
        for (int i = 0; i < d; ++i) {
            xlo[i] = x0[i] + rb.lo * klo[i];
            xhi[i] = x0[i] + rb.lo * khi[i];
            cap *= seg_overlap(xlo[i], xhi[i], elo[i], ehi[i]);
            if (sgn(cap) == 0) return Rat(0);
        }
        if (cap < give_up_below) return Rat(-1);  // cannot reach the incumbent
        if (box_copy) {
            Rat total = 0;
            for (const Pt& c : cells) {
                Rat cell = 1;
                for (int i = 0; i < d; ++i) {
                    Rat lo = Rat(static_cast<long>(c[i])) - half;
                    cell *= seg_overlap(lo, lo + 1, xlo[i], xhi[i]);
                    if (sgn(cell) == 0) break;
                }
                total += cell;
            }
            return total;
        }
        Polytope placed = translate(copy0, x0);
        Rat total = 0;
        for (const Pt& c : cells) {
            bool outside = false;
            for (int i = 0; i < d; ++i) {
                Rat lo = Rat(static_cast<long>(c[i])) - half;
                if (lo + 1 <= xlo[i] || lo >= xhi[i]) {
                    outside = true;
                    break;
                }
            }
            if (!outside) total += cube_clip_volume(placed, c);
        }
        return total;
    };

    // centroid placement first: a good incumbent that tightens pruning
    Rat best_overlap = 0;
    {
        QVec centroid(d, Rat(0));
        for (const Pt& c : cells)
            for (int i = 0; i < d; ++i) centroid[i] += static_cast<long>(c[i]);
        QVec seed(d);
        for (int i = 0; i < d; ++i) {
            centroid[i] /= static_cast<long>(cells.size());
            Rat g = Rat(rat_floor((centroid[i] - start[i]) / grid_step + half)) * grid_step + start[i];
            Rat last = start[i] + Rat(Int(steps[i] - 1)) * grid_step;
            if (g < start[i]) g = start[i];
            if (g > last) g = last;
            seed[i] = g;
        }
        Rat ov = overlap_at(seed, Rat(0));
        if (ov > best_overlap) best_overlap = ov;
    }

    AsymmetryResult res;
    res.r_exact = rb.exact;
    res.r_lo = rb.lo;

    // lexicographic scan; ties keep the earliest grid point
    bool have_x0 = false;
    std::vector<Int> idx(d, Int(0));
    QVec x0(d);
    while (true) {
        for (int i = 0; i < d; ++i) x0[i] = start[i] + Rat(Int(idx[i])) * grid_step;
        Rat ov = overlap_at(x0, best_overlap);
        if (ov > best_overlap || (!have_x0 && ov == best_overlap)) {
            best_overlap = std::max(best_overlap, ov);
            res.x0 = x0;
            have_x0 = true;
        }
        int pos = d - 1;
        while (pos >= 0 && idx[pos] == steps[pos] - 1) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
    }
    if (!have_x0) res.x0 = start;  // all placements disjoint; report the first

    res.symdiff_bound = 2 * (mu_e - best_overlap);
    res.value = to_double(res.symdiff_bound / mu_e);
    return res;
}

FmpPoint fmp_ratio(const CubeUnionBody& e, const Polytope& k, const Rat& grid_step) {
    DeficitResult del = deficit(e, k);
    if (del.sign == 0) throw domain_error("fmp_ratio: deficit is zero, ratio undefined");
    if (del.sign < 0) throw domain_error("fmp_ratio: negative deficit (inequality violation)");
    AsymmetryResult as = asymmetric_index(e, k, grid_step);
    FmpPoint p;
    p.delta = del.value;
    p.asym = as.value;
    p.ratio = as.value / std::sqrt(del.value);
    return p;
}

}  // namespace iso
