#include "iso/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace iso {

namespace {

// Internal invariants of the hull construction. Violations indicate a bug,
// not bad input, so they stay active in release builds.
void hull_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("hull invariant violated: ") + what);
}

// ---------------------------------------------------------------------------
// exact linear algebra on small rational matrices
// ---------------------------------------------------------------------------

// Reduced row echelon form in place. Returns the pivot column of each
// nonzero row; rank is the number of entries.
std::vector<int> rref(std::vector<QVec>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r)
            if (sgn(m[r][col]) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        Rat inv = m[row][col];
        for (int c = col; c < cols; ++c) m[row][c] /= inv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank_of(std::vector<QVec> m) { return static_cast<int>(rref(m).size()); }

// Basis of { c : m c = 0 } for an r x cols matrix given by rows.
std::vector<QVec> null_space(std::vector<QVec> m, int cols) {
    std::vector<int> pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<QVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec c(cols, Rat(0));
        c[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = -m[r][f];
        basis.push_back(std::move(c));
    }
    return basis;
}

// Solves a x = rhs for square a; false when singular.
bool solve_square(std::vector<QVec> a, QVec rhs, QVec& out) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (sgn(a[r][col]) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return false;
        std::swap(a[col], a[sel]);
        std::swap(rhs[col], rhs[sel]);
        Rat inv = a[col][col];
        for (int c = col; c < n; ++c) a[col][c] /= inv;
        rhs[col] /= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out = std::move(rhs);
    return true;
}

// Normal of the hyperplane through d affinely independent points, via the
// generalized cross product of the difference vectors. Zero vector iff the
// points are affinely dependent. For d == 1 the "hyperplane" is the point
// itself and any nonzero scalar serves as normal.
QVec hyperplane_normal(const std::vector<QVec>& pts) {
    const int d = static_cast<int>(pts[0].size());
    if (d == 1) return QVec{Rat(1)};
    std::vector<QVec> diff(d - 1, QVec(d));
    for (int r = 0; r + 1 < d; ++r)
        for (int c = 0; c < d; ++c) diff[r][c] = pts[r + 1][c] - pts[0][c];
    QVec n(d);
    for (int i = 0; i < d; ++i) {
        std::vector<QVec> minor(d - 1, QVec(d - 1));
        for (int r = 0; r + 1 < d; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == i) continue;
                minor[r][cc++] = diff[r][c];
            }
        }
        Rat dv = det(minor);
        n[i] = (i % 2 == 0) ? dv : -dv;
    }
    return n;
}

bool is_zero_vec(const QVec& v) {
    for (const Rat& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

// Scales (a, b) by the positive rational making a a primitive integer
// vector. b stays rational. Unique representation per halfspace.
Halfspace canonical_halfspace(QVec a, Rat b) {
    Int l = 1;
    for (const Rat& x : a) {
        Int r;
        mpz_lcm(r.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        l = r;
    }
    Int g = 0;
    for (Rat& x : a) {
        x *= l;
        x.canonicalize();
        Int r;
        mpz_gcd(r.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        g = r;
    }
    b *= l;
    if (sgn(g) != 0) {
        for (Rat& x : a) {
            x /= g;
            x.canonicalize();
        }
        b /= g;
    }
    b.canonicalize();
    return Halfspace{std::move(a), std::move(b)};
}

bool halfspace_less(const Halfspace& x, const Halfspace& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        int c = cmp(x.a[i], y.a[i]);
        if (c != 0) return c < 0;
    }
    return cmp(x.b, y.b) < 0;
}

// ---------------------------------------------------------------------------
// incremental hull of full-dimensional input
// ---------------------------------------------------------------------------

struct HullFacet {
    std::vector<int> vs;   // d point indices, ascending
    QVec a;                // outward normal
    Rat b;
    std::vector<int> nbr;  // nbr[k]: facet across the ridge vs \ {vs[k]}
    bool dead = false;
};

struct FullHull {
    std::vector<HullFacet> facets;
    Rat volume = 0;
};

// pts must be distinct, simplex_ids an affinely independent (d+1)-subset.
FullHull hull_full_dim(const std::vector<QVec>& pts, const std::vector<int>& simplex_ids) {
    const int d = static_cast<int>(pts[0].size());
    QVec interior(d, Rat(0));
    for (int id : simplex_ids)
        for (int c = 0; c < d; ++c) interior[c] += pts[id][c];
    for (int c = 0; c < d; ++c) interior[c] /= Rat(d + 1);

    std::vector<HullFacet> facets;
    auto make_facet = [&](std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        std::vector<QVec> fp;
        for (int id : vs) fp.push_back(pts[id]);
        QVec a = hyperplane_normal(fp);
        hull_check(!is_zero_vec(a), "degenerate facet normal");
        Rat b = dot(a, fp[0]);
        int side = cmp(dot(a, interior), b);
        hull_check(side != 0, "interior point on facet plane");
        if (side > 0) {
            for (Rat& x : a) x = -x;
            b = -b;
        }
        HullFacet f;
        f.vs = std::move(vs);
        f.a = std::move(a);
        f.b = std::move(b);
        f.nbr.assign(d, -1);
        return f;
    };

    // initial simplex: facet i omits simplex_ids[i]
    for (int i = 0; i <= d; ++i) {
        std::vector<int> vs;
        for (int j = 0; j <= d; ++j)
            if (j != i) vs.push_back(simplex_ids[j]);
        facets.push_back(make_facet(std::move(vs)));
    }
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            if (i == j) continue;
            // facets i and j share the ridge omitting both omitted vertices;
            // in facet i the ridge drops simplex_ids[j]
            int slot = -1;
            for (int k = 0; k < d; ++k)
                if (facets[i].vs[k] == simplex_ids[j]) slot = k;
            hull_check(slot >= 0, "simplex adjacency slot not found");
            facets[i].nbr[slot] = j;
        }

    std::vector<char> in_simplex(pts.size(), 0);
    for (int id : simplex_ids) in_simplex[id] = 1;

    for (int q = 0; q < static_cast<int>(pts.size()); ++q) {
        if (in_simplex[q]) continue;
        const QVec& p = pts[q];
        std::vector<int> visible;
        std::vector<char> vis(facets.size(), 0);
        for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
            if (facets[i].dead) continue;
            if (cmp(dot(facets[i].a, p), facets[i].b) > 0) {
                vis[i] = 1;
                visible.push_back(i);
            }
        }
        if (visible.empty()) continue;  // inside or on the current hull

        struct Horizon {
            std::vector<int> ridge;
            int outside;
            int outside_slot;
        };
        std::vector<Horizon> horizon;
        for (int i : visible) {
            for (int k = 0; k < d; ++k) {
                int g = facets[i].nbr[k];
                hull_check(g >= 0 && !facets[g].dead, "missing live neighbor");
                if (vis[g]) continue;
                std::vector<int> ridge;
                for (int t = 0; t < d; ++t)
                    if (t != k) ridge.push_back(facets[i].vs[t]);
                int gslot = -1;
                for (int t = 0; t < d; ++t)
                    if (!std::binary_search(ridge.begin(), ridge.end(), facets[g].vs[t])) gslot = t;
                hull_check(gslot >= 0, "horizon ridge not in neighbor");
                horizon.push_back({std::move(ridge), g, gslot});
            }
        }
        for (int i : visible) facets[i].dead = true;

        std::map<std::vector<int>, std::pair<int, int>> open_ridge;
        for (const Horizon& h : horizon) {
            std::vector<int> vs = h.ridge;
            vs.push_back(q);
            HullFacet nf = make_facet(std::move(vs));
            int id = static_cast<int>(facets.size());
            int qslot = -1;
            for (int k = 0; k < d; ++k)
                if (nf.vs[k] == q) qslot = k;
            nf.nbr[qslot] = h.outside;
            facets.push_back(std::move(nf));
            facets[h.outside].nbr[h.outside_slot] = id;
            // pair up the ridges through q with sibling new facets
            for (int k = 0; k < d; ++k) {
                if (facets[id].vs[k] == q) continue;
                std::vector<int> ridge;
                for (int t = 0; t < d; ++t)
                    if (t != k) ridge.push_back(facets[id].vs[t]);
                auto it = open_ridge.find(ridge);
                if (it == open_ridge.end()) {
                    open_ridge.emplace(std::move(ridge), std::make_pair(id, k));
                } else {
                    facets[id].nbr[k] = it->second.first;
                    facets[it->second.first].nbr[it->second.second] = id;
                    open_ridge.erase(it);
                }
            }
        }
        hull_check(open_ridge.empty(), "unpaired ridge after insertion");
    }

    FullHull out;
    // cone decomposition from a fixed hull point; facets through it
    // contribute zero
    const QVec& apex = pts[simplex_ids[0]];
    Rat fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    for (const HullFacet& f : facets) {
        if (f.dead) continue;
        std::vector<QVec> m(d, QVec(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m[r][c] = pts[f.vs[r]][c] - apex[c];
        Rat dv = det(m);
        if (sgn(dv) < 0) dv = -dv;
        out.volume += dv;
    }
    out.volume /= fact;
    out.facets = std::move(facets);
    return out;
}

// ---------------------------------------------------------------------------
// assembly
// ---------------------------------------------------------------------------

}  // namespace

class PolytopeBuilder {
public:
    static Polytope make(int d, int affine_dim, std::vector<QVec> verts,
                         std::vector<Halfspace> hs, Rat vol) {
        Polytope p;
        p.d_ = d;
        p.affine_dim_ = affine_dim;
        p.verts_ = std::move(verts);
        p.hs_ = std::move(hs);
        p.vol_ = std::move(vol);
        std::sort(p.verts_.begin(), p.verts_.end(),
                  [](const QVec& x, const QVec& y) {
                      for (std::size_t i = 0; i < x.size(); ++i) {
                          int c = cmp(x[i], y[i]);
                          if (c != 0) return c < 0;
                      }
                      return false;
                  });
        std::sort(p.hs_.begin(), p.hs_.end(), halfspace_less);
        p.hs_.erase(std::unique(p.hs_.begin(), p.hs_.end()), p.hs_.end());
        return p;
    }
};

Rat det(std::vector<QVec> m) {
    const int n = static_cast<int>(m.size());
    Rat result = 1;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (sgn(m[r][col]) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return Rat(0);
        if (sel != col) {
            std::swap(m[col], m[sel]);
            result = -result;
        }
        result *= m[col][col];
        Rat inv = m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col] / inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return result;
}

bool Polytope::contains(const QVec& x) const {
    if (static_cast<int>(x.size()) != d_) throw domain_error("contains: dimension mismatch");
    for (const Halfspace& h : hs_)
        if (cmp(dot(h.a, x), h.b) > 0) return false;
    return true;
}

std::pair<QVec, QVec> Polytope::vertex_bbox() const {
    if (verts_.empty()) throw domain_error("vertex_bbox of empty polytope");
    QVec lo = verts_[0], hi = verts_[0];
    for (const QVec& v : verts_)
        for (int i = 0; i < d_; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    return {lo, hi};
}

Polytope convex_hull(const std::vector<QVec>& pts_in) {
    if (pts_in.empty()) throw domain_error("convex hull of empty point set");
    const int d = static_cast<int>(pts_in[0].size());
    if (d < 1) throw domain_error("convex hull: dimension must be positive");
    if (d > 4) throw domain_error("convex hull: dimension above supported envelope (d <= 4)");
    for (const QVec& p : pts_in)
        if (static_cast<int>(p.size()) != d) throw domain_error("convex hull: ragged input");

    std::vector<QVec> pts = pts_in;
    std::sort(pts.begin(), pts.end(), [](const QVec& x, const QVec& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = cmp(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // greedy affine basis from pts[0]
    std::vector<int> basis_ids;            // indices whose difference vectors are independent
    std::vector<QVec> reduced;             // row-reduced copies of those differences
    for (int i = 1; i < static_cast<int>(pts.size()) && static_cast<int>(basis_ids.size()) < d; ++i) {
        QVec v(d);
        for (int c = 0; c < d; ++c) v[c] = pts[i][c] - pts[0][c];
        std::vector<QVec> test = reduced;
        test.push_back(v);
        if (rank_of(std::move(test)) > static_cast<int>(reduced.size())) {
            basis_ids.push_back(i);
            reduced.push_back(std::move(v));
            rref(reduced);
        }
    }
    const int r = static_cast<int>(basis_ids.size());

    if (r == d) {
        std::vector<int> simplex_ids{0};
        simplex_ids.insert(simplex_ids.end(), basis_ids.begin(), basis_ids.end());
        FullHull fh = hull_full_dim(pts, simplex_ids);

        std::vector<Halfspace> hs;
        for (const HullFacet& f : fh.facets) {
            if (f.dead) continue;
            hs.push_back(canonical_halfspace(f.a, f.b));
        }
        std::sort(hs.begin(), hs.end(), halfspace_less);
        hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

        // candidate corners -> true vertices (active constraints of rank d)
        std::vector<int> cand;
        for (const HullFacet& f : fh.facets) {
            if (f.dead) continue;
            cand.insert(cand.end(), f.vs.begin(), f.vs.end());
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<QVec> verts;
        for (int id : cand) {
            std::vector<QVec> active;
            for (const Halfspace& h : hs)
                if (cmp(dot(h.a, pts[id]), h.b) == 0) active.push_back(h.a);
            if (rank_of(std::move(active)) == d) verts.push_back(pts[id]);
        }
        return PolytopeBuilder::make(d, d, std::move(verts), std::move(hs), fh.volume);
    }

    // degenerate: work in the coordinates of the affine hull
    if (r == 0) {
        std::vector<Halfspace> hs;
        for (int i = 0; i < d; ++i) {
            QVec e(d, Rat(0));
            e[i] = 1;
            hs.push_back(canonical_halfspace(e, pts[0][i]));
            for (Rat& x : e) x = -x;
            hs.push_back(canonical_halfspace(e, -pts[0][i]));
        }
        return PolytopeBuilder::make(d, 0, {pts[0]}, std::move(hs), Rat(0));
    }

    // columns of U are the independent difference vectors
    std::vector<QVec> ucols;
    for (int id : basis_ids) {
        QVec v(d);
        for (int c = 0; c < d; ++c) v[c] = pts[id][c] - pts[0][c];
        ucols.push_back(std::move(v));
    }
    // pivot rows J making the r x r block invertible
    std::vector<int> jrows;
    {
        std::vector<QVec> rows(d, QVec(r));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < r; ++j) rows[i][j] = ucols[j][i];
        std::vector<QVec> work;
        for (int i = 0; i < d && static_cast<int>(jrows.size()) < r; ++i) {
            std::vector<QVec> test = work;
            test.push_back(rows[i]);
            if (rank_of(std::move(test)) > static_cast<int>(work.size())) {
                jrows.push_back(i);
                work.push_back(rows[i]);
            }
        }
    }
    // S = inverse of the J-block, computed column by column
    std::vector<QVec> ub(r, QVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ub[i][j] = ucols[j][jrows[i]];
    std::vector<QVec> sinv(r, QVec(r));
    for (int j = 0; j < r; ++j) {
        QVec rhs(r, Rat(0)), col;
        rhs[j] = 1;
        if (!solve_square(ub, rhs, col)) throw domain_error("affine basis inversion failed");
        for (int i = 0; i < r; ++i) sinv[i][j] = col[i];
    }
    auto to_sub = [&](const QVec& x) {
        QVec rel(r);
        for (int i = 0; i < r; ++i) rel[i] = x[jrows[i]] - pts[0][jrows[i]];
        QVec lam(r, Rat(0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) lam[i] += sinv[i][j] * rel[j];
        return lam;
    };
    auto from_sub = [&](const QVec& lam) {
        QVec x = pts[0];
        for (int j = 0; j < r; ++j)
            for (int c = 0; c < d; ++c) x[c] += lam[j] * ucols[j][c];
        return x;
    };

    std::vector<QVec> sub;
    for (const QVec& p : pts) {
        QVec lam = to_sub(p);
        // consistency: p must lie in the affine hull
        if (from_sub(lam) != p) throw domain_error("affine projection inconsistency");
        sub.push_back(std::move(lam));
    }
    Polytope inner = convex_hull(sub);

    std::vector<QVec> verts;
    for (const QVec& lam : inner.vertices()) verts.push_back(from_sub(lam));

    std::vector<Halfspace> hs;
    for (const Halfspace& h : inner.halfspaces()) {
        QVec a(d, Rat(0));
        for (int j = 0; j < r; ++j) {
            Rat s = 0;
            for (int i = 0; i < r; ++i) s += sinv[i][j] * h.a[i];
            a[jrows[j]] = s;
        }
        Rat b = h.b + dot(a, pts[0]);
        hs.push_back(canonical_halfspace(std::move(a), std::move(b)));
    }
    // affine hull equalities: normals orthogonal to every basis direction
    std::vector<QVec> ut(r, QVec(d));
    for (int j = 0; j < r; ++j) ut[j] = ucols[j];
    for (const QVec& c : null_space(std::move(ut), d)) {
        Rat b = dot(c, pts[0]);
        hs.push_back(canonical_halfspace(c, b));
        QVec neg(d);
        for (int i = 0; i < d; ++i) neg[i] = -c[i];
        hs.push_back(canonical_halfspace(std::move(neg), -b));
    }
    return PolytopeBuilder::make(d, r, std::move(verts), std::move(hs), Rat(0));
}

Polytope convex_hull(const PointSet& ps) {
    if (ps.empty()) throw domain_error("convex hull of empty point set");
    std::vector<QVec> pts;
    for (const Pt& p : ps.sorted()) {
        QVec q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(static_cast<long>(p[i]));
        pts.push_back(std::move(q));
    }
    return convex_hull(pts);
}

Polytope conical_hull(const PointSet& b) {
    PointSet b0 = b;
    b0.insert(Pt(b.dim(), 0));
    return convex_hull(b0);
}

Rat zonotope_volume(const PointSet& b) {
    const int d = b.dim();
    std::vector<Pt> gens = b.sorted();
    const int m = static_cast<int>(gens.size());
    if (m < d) return Rat(0);
    Rat total = 0;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::vector<QVec> mtr(d, QVec(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) mtr[r][c] = Rat(static_cast<long>(gens[idx[r]][c]));
        Rat dv = det(std::move(mtr));
        if (sgn(dv) < 0) dv = -dv;
        total += dv;
        int pos = d - 1;
        while (pos >= 0 && idx[pos] == m - d + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

Polytope zonotope(const PointSet& b, std::size_t cap) {
    Polytope z = convex_hull(subset_sums(b, cap));
    if (z.volume() != zonotope_volume(b))
        throw std::logic_error("zonotope volume disagrees with determinant sum");
    return z;
}

Rat support_function(const Polytope& k, const QVec& u) {
    if (k.vertices().empty()) throw domain_error("support function of empty polytope");
    if (static_cast<int>(u.size()) != k.dim()) throw domain_error("support function: dimension mismatch");
    Rat best = dot(k.vertices()[0], u);
    for (const QVec& v : k.vertices()) {
        Rat s = dot(v, u);
        if (s > best) best = s;
    }
    return best;
}

Polytope dilate(const Polytope& k, const Rat& t) {
    if (sgn(t) < 0) throw domain_error("dilate: negative factor");
    if (sgn(t) == 0) return convex_hull(std::vector<QVec>{QVec(k.dim(), Rat(0))});
    std::vector<QVec> verts = k.vertices();
    for (QVec& v : verts)
        for (Rat& x : v) {
            x *= t;
            x.canonicalize();
        }
    std::vector<Halfspace> hs = k.halfspaces();
    for (Halfspace& h : hs) {
        h.b *= t;
        h.b.canonicalize();
    }
    Rat vol = k.volume();
    for (int i = 0; i < k.dim(); ++i) vol *= t;
    return PolytopeBuilder::make(k.dim(), k.affine_dim(), std::move(verts), std::move(hs), vol);
}

Polytope translate(const Polytope& k, const QVec& x) {
    if (static_cast<int>(x.size()) != k.dim()) throw domain_error("translate: dimension mismatch");
    std::vector<QVec> verts = k.vertices();
    for (QVec& v : verts)
        for (int i = 0; i < k.dim(); ++i) {
            v[i] += x[i];
        }
    std::vector<Halfspace> hs = k.halfspaces();
    for (Halfspace& h : hs) h.b += dot(h.a, x);
    return PolytopeBuilder::make(k.dim(), k.affine_dim(), std::move(verts), std::move(hs), k.volume());
}

PointSet lattice_points(const Polytope& k, std::int64_t cap) {
    const int d = k.dim();
    auto [lo, hi] = k.vertex_bbox();
    Pt ilo(d), ihi(d);
    std::int64_t cells = 1;
    for (int i = 0; i < d; ++i) {
        ilo[i] = int_to_i64(rat_ceil(lo[i]));
        ihi[i] = int_to_i64(rat_floor(hi[i]));
        if (ihi[i] < ilo[i]) return PointSet(d);
        std::int64_t extent = ihi[i] - ilo[i] + 1;
        if (cells > cap / extent) throw domain_error("lattice_points: bounding box too large");
        cells *= extent;
    }
    PointSet out(d);
    Pt cur = ilo;
    QVec q(d);
    while (true) {
        for (int i = 0; i < d; ++i) q[i] = Rat(static_cast<long>(cur[i]));
        if (k.contains(q)) out.insert(cur);
        int pos = d - 1;
        while (pos >= 0 && cur[pos] == ihi[pos]) {
            cur[pos] = ilo[pos];
            --pos;
        }
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

namespace {

// Exact Sutherland-Hodgman clip of a convex CCW polygon by a . x <= b.
std::vector<QVec> clip_polygon(const std::vector<QVec>& poly, const QVec& a, const Rat& b) {
    std::vector<QVec> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const QVec& cur = poly[i];
        const QVec& nxt = poly[(i + 1) % n];
        Rat scur = b - dot(a, cur);
        Rat snxt = b - dot(a, nxt);
        int ccur = sgn(scur), cnxt = sgn(snxt);
        if (ccur >= 0) out.push_back(cur);
        if ((ccur > 0 && cnxt < 0) || (ccur < 0 && cnxt > 0)) {
            Rat t = scur / (scur - snxt);
            QVec ip(2);
            for (int c = 0; c < 2; ++c) ip[c] = cur[c] + t * (nxt[c] - cur[c]);
            out.push_back(std::move(ip));
        }
    }
    return out;
}

Rat polygon_area(const std::vector<QVec>& poly) {
    Rat s = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const QVec& p = poly[i];
        const QVec& q = poly[(i + 1) % n];
        s += p[0] * q[1] - q[0] * p[1];
    }
    if (sgn(s) < 0) s = -s;
    return s / 2;
}

}  // namespace

Rat cube_clip_volume(const Polytope& k, const Pt& c) {
    const int d = k.dim();
    if (static_cast<int>(c.size()) != d) throw domain_error("cube_clip_volume: dimension mismatch");
    const Rat half(1, 2);

    if (d == 1) {
        auto [lo, hi] = k.vertex_bbox();
        Rat cell_lo = Rat(static_cast<long>(c[0])) - half;
        Rat cell_hi = Rat(static_cast<long>(c[0])) + half;
        Rat a = std::max(lo[0], cell_lo);
        Rat b = std::min(hi[0], cell_hi);
        return b > a ? Rat(b - a) : Rat(0);
    }
    if (d == 2) {
        std::vector<QVec> poly;
        Rat x = Rat(static_cast<long>(c[0])), y = Rat(static_cast<long>(c[1]));
        poly.push_back({x - half, y - half});
        poly.push_back({x + half, y - half});
        poly.push_back({x + half, y + half});
        poly.push_back({x - half, y + half});
        for (const Halfspace& h : k.halfspaces()) {
            poly = clip_polygon(poly, h.a, h.b);
            if (poly.size() < 3) return Rat(0);
        }
        return polygon_area(poly);
    }

    // d >= 3: vertices of the intersection are solutions of d active
    // constraints drawn from the combined system
    std::vector<Halfspace> sys = k.halfspaces();
    for (int i = 0; i < d; ++i) {
        QVec e(d, Rat(0));
        e[i] = 1;
        sys.push_back(Halfspace{e, Rat(static_cast<long>(c[i])) + half});
        for (Rat& v : e) v = -v;
        sys.push_back(Halfspace{std::move(e), -(Rat(static_cast<long>(c[i])) - half)});
    }
    const int m = static_cast<int>(sys.size());
    std::vector<QVec> cands;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::vector<QVec> a(d);
        QVec rhs(d);
        for (int r = 0; r < d; ++r) {
            a[r] = sys[idx[r]].a;
            rhs[r] = sys[idx[r]].b;
        }
        QVec x;
        if (solve_square(std::move(a), std::move(rhs), x)) {
            bool ok = true;
            for (const Halfspace& h : sys)
                if (cmp(dot(h.a, x), h.b) > 0) {
                    ok = false;
                    break;
                }
            if (ok) cands.push_back(std::move(x));
        }
        int pos = d - 1;
        while (pos >= 0 && idx[pos] == m - d + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (cands.empty()) return Rat(0);
    std::sort(cands.begin(), cands.end(), [](const QVec& x, const QVec& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int cc = cmp(x[i], y[i]);
            if (cc != 0) return cc < 0;
        }
        return false;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (static_cast<int>(cands.size()) <= d) return Rat(0);
    return convex_hull(cands).volume();
}

bool is_generating(const PointSet& b) {
    const int d = b.dim();
    std::vector<Pt> gens = b.sorted();
    const int m = static_cast<int>(gens.size());
    if (m < d) return false;
    Int g = 0;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::vector<QVec> mtr(d, QVec(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) mtr[r][c] = Rat(static_cast<long>(gens[idx[r]][c]));
        Rat dv = det(std::move(mtr));
        Int z = dv.get_num();
        if (sgn(z) < 0) z = -z;
        Int ng;
        mpz_gcd(ng.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        g = ng;
        if (g == 1) return true;
        int pos = d - 1;
        while (pos >= 0 && idx[pos] == m - d + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    return g == 1;
}

}  // namespace iso
