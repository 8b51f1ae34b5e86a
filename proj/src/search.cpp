#include "iso/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace iso {

std::int64_t objective_value(Objective obj, const PointSet& a, const PointSet& b) {
    if (obj == Objective::vertex) return static_cast<std::int64_t>(sumset(a, b).size());
    return edge_boundary(a, b);
}

namespace {

PointSet canonical_translate(const PointSet& a) {
    auto [lo, hi] = a.bbox();
    (void)hi;
    return a.translated(pt_neg(lo));
}

bool pointset_less(const PointSet& x, const PointSet& y) {
    return x.sorted() < y.sorted();
}

std::vector<Pt> box_cells(const std::vector<Coord>& box) {
    const int d = static_cast<int>(box.size());
    for (Coord s : box)
        if (s < 1) throw domain_error("search box extents must be >= 1");
    std::vector<Pt> cells;
    Pt cur(d, 0);
    while (true) {
        cells.push_back(cur);
        int pos = d - 1;
        while (pos >= 0 && cur[pos] == box[pos] - 1) {
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++cur[pos];
    }
    return cells;  // generation order is lexicographic
}

struct WorkerResult {
    std::int64_t min_value = -1;
    std::vector<PointSet> witnesses;
    std::uint64_t examined = 0;
};

}  // namespace

SearchResult exact_min_boundary(const PointSet& b, const SearchConfig& cfg) {
    const int d = b.dim();
    if (static_cast<int>(cfg.box.size()) != d) throw domain_error("search box dimension mismatch");
    if (cfg.n < 1) throw domain_error("search target size must be >= 1");
    std::vector<Pt> cells = box_cells(cfg.box);
    const int m = static_cast<int>(cells.size());
    const int n = static_cast<int>(cfg.n);
    if (n > m) throw domain_error("search target size exceeds box cell count");

    Int cand_count;
    mpz_bin_uiui(cand_count.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    if (cand_count > Int(static_cast<unsigned long>(cfg.exhaustive_cap)))
        throw domain_error("exhaustive candidate count exceeds cap; use anneal mode");

    const int threads = std::max(1, cfg.threads);

    // Workers split on the first chosen index; each enumerates the remaining
    // combination suffix in lexicographic order.
    auto run_worker = [&](int worker) {
        WorkerResult wr;
        std::vector<int> idx(n);
        PointSet a(d);
        for (int first = worker; first <= m - n; first += threads) {
            idx[0] = first;
            for (int i = 1; i < n; ++i) idx[i] = first + i;
            while (true) {
                // canonical form: per-axis minimum over chosen cells is 0
                bool canonical = true;
                for (int axis = 0; axis < d && canonical; ++axis) {
                    Coord mn = cells[idx[0]][axis];
                    for (int i = 1; i < n; ++i) mn = std::min(mn, cells[idx[i]][axis]);
                    if (mn != 0) canonical = false;
                }
                if (canonical) {
                    a = PointSet(d);
                    for (int i = 0; i < n; ++i) a.insert(cells[idx[i]]);
                    std::int64_t val = objective_value(cfg.objective, a, b);
                    ++wr.examined;
                    if (wr.min_value < 0 || val < wr.min_value) {
                        wr.min_value = val;
                        wr.witnesses.clear();
                    }
                    if (val == wr.min_value) wr.witnesses.push_back(a);
                }
                // next combination with fixed idx[0]
                int pos = n - 1;
                while (pos >= 1 && idx[pos] == m - n + pos) --pos;
                if (pos < 1) break;
                ++idx[pos];
                for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        return wr;
    };

    std::vector<WorkerResult> results(threads);
    if (threads == 1) {
        results[0] = run_worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] { results[w] = run_worker(w); });
        for (auto& t : pool) t.join();
    }

    SearchResult res;
    res.exact = true;
    res.min_value = -1;
    for (const WorkerResult& wr : results) {
        res.candidates_examined += wr.examined;
        if (wr.min_value < 0) continue;
        if (res.min_value < 0 || wr.min_value < res.min_value) {
            res.min_value = wr.min_value;
            res.witnesses.clear();
        }
        if (wr.min_value == res.min_value)
            res.witnesses.insert(res.witnesses.end(), wr.witnesses.begin(), wr.witnesses.end());
    }
    if (res.min_value < 0) throw domain_error("search found no canonical candidate");
    std::sort(res.witnesses.begin(), res.witnesses.end(), pointset_less);
    return res;
}

SearchResult anneal_min_boundary(const PointSet& b, const SearchConfig& cfg) {
    const int d = b.dim();
    if (cfg.n < 1) throw domain_error("search target size must be >= 1");

    // seed: extremal ball trimmed to n cells (lexicographically first cells
    // kept; deterministic)
    ExtremalBall eb = ball(b, cfg.n);
    std::vector<Pt> seed_pts = eb.points.sorted();
    seed_pts.resize(static_cast<std::size_t>(cfg.n));
    PointSet a(d, seed_pts);

    // symmetric move directions
    PointSet dirs(d);
    for (const Pt& s : b.raw()) {
        if (s == Pt(d, 0)) continue;
        dirs.insert(s);
        dirs.insert(pt_neg(s));
    }
    std::vector<Pt> moves = dirs.sorted();

    std::int64_t value = objective_value(cfg.objective, a, b);
    PointSet best = a;
    std::int64_t best_value = value;

    std::mt19937_64 rng(cfg.seed);
    double temp = cfg.t0;
    for (std::uint64_t it = 0; it < cfg.budget; ++it, temp *= cfg.cooling) {
        std::vector<Pt> boundary, outside;
        {
            PointSet outside_set(d);
            for (const Pt& x : a.sorted()) {
                bool on_boundary = false;
                for (const Pt& s : moves) {
                    Pt y = pt_add(x, s);
                    if (!a.contains(y)) {
                        on_boundary = true;
                        outside_set.insert(y);
                    }
                }
                if (on_boundary) boundary.push_back(x);
            }
            outside = outside_set.sorted();
        }
        if (boundary.empty() || outside.empty()) break;
        const Pt& rem = boundary[rng() % boundary.size()];
        const Pt& add = outside[rng() % outside.size()];
        PointSet next(d);
        for (const Pt& x : a.raw())
            if (x != rem) next.insert(x);
        next.insert(add);
        std::int64_t nv = objective_value(cfg.objective, next, b);
        bool accept = nv <= value;
        if (!accept) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            accept = std::exp(-static_cast<double>(nv - value) / temp) > u;
        }
        if (accept) {
            a = std::move(next);
            value = nv;
            if (value < best_value) {
                best_value = value;
                best = a;
            }
        }
    }

    SearchResult res;
    res.min_value = best_value;
    res.witnesses.push_back(canonical_translate(best));
    res.candidates_examined = cfg.budget;
    res.exact = false;
    return res;
}

PlunneckeResult plunnecke_verify(const PointSet& a, const PointSet& b, unsigned k,
                                 std::size_t cap) {
    if (a.empty() || b.empty()) throw domain_error("plunnecke_verify: empty input");
    if (k < 1) throw domain_error("plunnecke_verify: k must be >= 1");
    if (a.size() > cap) throw domain_error("plunnecke_verify: |A| exceeds subset-scan cap");

    PlunneckeResult pr;
    pr.alpha = Rat(static_cast<unsigned long>(sumset(a, b).size()),
                   static_cast<unsigned long>(a.size()));
    pr.alpha.canonicalize();
    pr.bound = rat_pow(pr.alpha, k);

    PointSet sk = iterated_sumset(b, k);
    std::vector<Pt> pts = a.sorted();
    const std::size_t na = pts.size();
    bool have = false;
    for (std::uint64_t mask = 1; mask < (1ull << na); ++mask) {
        PointSet sub(a.dim());
        for (std::size_t i = 0; i < na; ++i)
            if (mask >> i & 1) sub.insert(pts[i]);
        Rat ratio(static_cast<unsigned long>(sumset(sub, sk).size()),
                  static_cast<unsigned long>(sub.size()));
        ratio.canonicalize();
        if (!have || ratio < pr.ratio) {
            pr.ratio = ratio;
            pr.witness = sub;
            have = true;
        }
    }
    pr.ratio_ok = pr.ratio <= pr.bound;
    return pr;
}

BrunnMinkowskiCheck brunn_minkowski_check(const CubeUnionBody& u, const CubeUnionBody& v) {
    if (u.dim() != v.dim()) throw domain_error("brunn_minkowski_check: dimension mismatch");
    const int d = u.dim();
    PointSet xy = sumset(u.cells, v.cells);

    PointSet corners(d);
    for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
        Pt p(d);
        for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1 ? 1 : 0;
        corners.insert(std::move(p));
    }
    // (X + cube) + (Y + cube) is a union of side-2 cubes centered at X+Y;
    // its measure is the number of unit cells it covers, |X+Y+{0,1}^d|
    PointSet body = sumset(xy, corners);

    BrunnMinkowskiCheck r;
    r.lattice_sum = static_cast<std::int64_t>(xy.size());
    r.body_sum = static_cast<std::int64_t>(body.size());
    const Int nx(static_cast<unsigned long>(u.cells.size()));
    const Int ny(static_cast<unsigned long>(v.cells.size()));
    r.continuous_ok = cmp_root_sum(Int(static_cast<unsigned long>(body.size())), nx, ny, d, 0) >= 0;
    r.lattice_ok = cmp_root_sum(Int(static_cast<unsigned long>(xy.size())), nx, ny, d, 1) >= 0;
    r.ok = r.continuous_ok;
    return r;
}

std::vector<IsoperimetricReport> stability_experiment(const PointSet& b,
                                                      const std::vector<PointSet>& family,
                                                      Objective obj) {
    std::vector<IsoperimetricReport> rows;
    for (const PointSet& a : family) {
        IsoperimetricReport rep =
            obj == Objective::vertex ? vertex_excess(a, b) : edge_excess(a, b);
        ExtremalBall eb = obj == Objective::vertex ? ball(b, rep.n) : edge_ball(b, rep.n);
        auto [v, sd] = best_translate_symdiff(a, eb.points);
        rep.has_translate = true;
        rep.best_v = v;
        rep.symdiff = sd;
        if (rep.epsilon_sign > 0) {
            rep.normalized_valid = true;
            rep.normalized_symdiff =
                static_cast<double>(sd) / (static_cast<double>(rep.n) * std::sqrt(rep.epsilon));
        }
        rows.push_back(std::move(rep));
    }
    return rows;
}

std::vector<ScanRow> conjecture_scan(const PointSet& b, std::int64_t n_from, std::int64_t n_to,
                                     const SearchConfig& cfg) {
    if (n_from < 1 || n_to < n_from) throw domain_error("conjecture_scan: bad n range");
    const int d = b.dim();
    Rat mu;
    PointSet search_b(d);
    if (cfg.objective == Objective::vertex) {
        mu = conical_hull(b).volume();
        // minimizing |A + (B u {0})| and subtracting n recovers the vertex
        // boundary; the minimizers coincide
        search_b = b;
        search_b.insert(Pt(d, 0));
    } else {
        mu = zonotope_volume(b);
        search_b = b;
    }
    Rat dd = 1;
    for (int i = 0; i < d; ++i) dd *= d;

    std::vector<ScanRow> rows;
    for (std::int64_t n = n_from; n <= n_to; ++n) {
        SearchConfig c = cfg;
        c.n = n;
        SearchResult sr = c.mode == SearchConfig::Mode::exhaustive
                              ? exact_min_boundary(search_b, c)
                              : anneal_min_boundary(search_b, c);
        ScanRow row;
        row.n = n;
        row.min_value = cfg.objective == Objective::vertex ? sr.min_value - n : sr.min_value;
        row.exact = sr.exact;
        row.witness = sr.witnesses.front();
        row.bound = d * std::pow(to_double(mu), 1.0 / d) *
                    std::pow(static_cast<double>(n), 1.0 - 1.0 / d);
        Rat lhs = 1;
        for (int i = 0; i < d; ++i) lhs *= row.min_value;
        Rat rhs = dd * mu;
        for (int i = 0; i + 1 < d; ++i) rhs *= n;
        row.gap_sign = cmp(lhs, rhs);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace iso
