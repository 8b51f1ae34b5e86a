#include <doctest.h>

#include <cmath>
#include <random>

#include "iso/cubebody.hpp"
#include "iso/extremal.hpp"

using namespace iso;

namespace {

PointSet make(int d, std::initializer_list<Pt> pts) {
    PointSet s(d);
    for (const Pt& p : pts) s.insert(p);
    return s;
}

PointSet cross_polytope_dirs(int d) {
    PointSet b(d);
    for (int i = 0; i < d; ++i) {
        Pt p(d, 0);
        p[i] = 1;
        b.insert(p);
        p[i] = -1;
        b.insert(p);
    }
    return b;
}

PointSet rect_cells(Coord w, Coord h) {
    PointSet s(2);
    for (Coord x = 0; x < w; ++x)
        for (Coord y = 0; y < h; ++y) s.insert({x, y});
    return s;
}

Polytope cube_pm1(int d) {
    std::vector<QVec> corners;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        QVec v(d);
        for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? Rat(1) : Rat(-1);
        corners.push_back(std::move(v));
    }
    return convex_hull(corners);
}

PointSet random_cells(std::mt19937& rng, int d, int max_size) {
    PointSet s(d);
    int target = 1 + static_cast<int>(rng() % max_size);
    while (static_cast<int>(s.size()) < target) {
        Pt p(d);
        for (int i = 0; i < d; ++i) p[i] = static_cast<Coord>(rng() % 7) - 3;
        s.insert(std::move(p));
    }
    return s;
}

}  // namespace

TEST_CASE("cube union basics") {
    CHECK_THROWS_AS(cube_union(PointSet(2)), domain_error);
    CubeUnionBody e = cube_union(rect_cells(3, 2));
    CHECK(e.dim() == 2);
    CHECK(e.measure() == Rat(6));
}

TEST_CASE("exposed facet counts") {
    CubeUnionBody single = cube_union(make(2, {{0, 0}}));
    auto c1 = exposed_facets(single);
    CHECK(c1[0] == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(c1[1] == std::pair<std::int64_t, std::int64_t>{1, 1});

    CubeUnionBody ell = cube_union(make(2, {{0, 0}, {1, 0}, {0, 1}}));
    auto c2 = exposed_facets(ell);
    CHECK(c2[0] == std::pair<std::int64_t, std::int64_t>{2, 2});
    CHECK(c2[1] == std::pair<std::int64_t, std::int64_t>{2, 2});
}

TEST_CASE("perimeter against reference anisotropies") {
    CubeUnionBody e = cube_union(rect_cells(3, 2));

    CHECK(perimeter(e, cube_pm1(2)) == Rat(10));
    CHECK(perimeter(e, conical_hull(cross_polytope_dirs(2))) == Rat(10));

    // one-sided anisotropy: only the +x and +y facets carry weight
    Polytope tri = conical_hull(make(2, {{1, 0}, {0, 1}}));
    CHECK(perimeter(e, tri) == Rat(5));

    SUBCASE("scaling in K") {
        CHECK(perimeter(e, dilate(cube_pm1(2), Rat(3, 7))) == Rat(30, 7));
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(perimeter(e, cube_pm1(3)), domain_error);
        Polytope flat = convex_hull({QVec{Rat(0), Rat(0)}, QVec{Rat(1), Rat(1)}});
        CHECK_THROWS_AS(perimeter(e, flat), domain_error);
    }
}

TEST_CASE("perimeter under the symmetric cube equals the edge boundary") {
    std::mt19937 rng(7401);
    for (int it = 0; it < 50; ++it) {
        int d = 2 + it % 2;
        PointSet a = random_cells(rng, d, 20);
        Rat per = perimeter(cube_union(a), cube_pm1(d));
        std::int64_t de = edge_boundary(a, cross_polytope_dirs(d));
        CHECK(per == Rat(static_cast<long>(de)));
    }
}

TEST_CASE("deficit") {
    SUBCASE("zero exactly on square blocks") {
        DeficitResult r = deficit(cube_union(rect_cells(3, 3)), cube_pm1(2));
        CHECK(r.sign == 0);
        CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.per == Rat(12));
        CHECK(r.per_pow == Rat(144));
        CHECK(r.bound_pow == Rat(144));
    }
    SUBCASE("positive on oblong blocks") {
        DeficitResult r = deficit(cube_union(rect_cells(2, 1)), cube_pm1(2));
        CHECK(r.sign == 1);
        CHECK(r.per == Rat(6));
        // 6 / (2 * 2 * sqrt(2)) - 1
        CHECK(r.value == doctest::Approx(6.0 / (4 * std::sqrt(2.0)) - 1).epsilon(1e-12));
    }
    SUBCASE("never negative on random bodies") {
        std::mt19937 rng(7402);
        for (int it = 0; it < 60; ++it) {
            int d = 2 + it % 2;
            PointSet a = random_cells(rng, d, 15);
            Polytope k = it % 2 ? cube_pm1(d) : conical_hull(cross_polytope_dirs(d));
            CHECK(deficit(cube_union(a), k).sign >= 0);
        }
    }
}

TEST_CASE("asymmetric index with an exactly representable radius") {
    // mu(E) = 4, mu(K) = 4, r = 1: the square block is a translate of K
    AsymmetryResult r = asymmetric_index(cube_union(rect_cells(2, 2)), cube_pm1(2), Rat(1, 4));
    CHECK(r.r_exact);
    CHECK(r.r_lo == Rat(1));
    CHECK(r.symdiff_bound == Rat(0));
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.x0 == QVec{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("asymmetric index with an irrational radius stays a true upper bound") {
    // single cell vs diamond: r = 1/sqrt(2)
    AsymmetryResult r =
        asymmetric_index(cube_union(make(2, {{0, 0}})), conical_hull(cross_polytope_dirs(2)),
                         Rat(1, 4));
    CHECK_FALSE(r.r_exact);
    CHECK(rat_pow(r.r_lo, 2) * 2 <= Rat(1));
    CHECK(r.value > 0.0);
    CHECK(r.value < 1.0);
    // overlap at the centered placement: 2 r^2 - 4 (r - 1/2)^2, so the bound
    // cannot exceed the symdiff of that single candidate by construction
    Rat centered = Rat(2) * rat_pow(r.r_lo, 2) - Rat(4) * rat_pow(r.r_lo - Rat(1, 2), 2);
    CHECK(r.symdiff_bound <= 2 * (Rat(1) - centered));
}

TEST_CASE("finer grids never worsen the asymmetry bound") {
    CubeUnionBody e = cube_union(rect_cells(4, 2));
    Polytope k = cube_pm1(2);
    AsymmetryResult coarse = asymmetric_index(e, k, Rat(1, 4));
    AsymmetryResult fine = asymmetric_index(e, k, Rat(1, 8));
    CHECK(fine.symdiff_bound <= coarse.symdiff_bound);
}

TEST_CASE("fmp ratio composes deficit and asymmetry") {
    CubeUnionBody e = cube_union(rect_cells(4, 2));
    Polytope k = cube_pm1(2);
    FmpPoint p = fmp_ratio(e, k);
    DeficitResult del = deficit(e, k);
    AsymmetryResult as = asymmetric_index(e, k, Rat(1, 4));
    CHECK(p.delta == del.value);
    CHECK(p.asym == as.value);
    CHECK(p.ratio == doctest::Approx(as.value / std::sqrt(del.value)).epsilon(1e-15));

    SUBCASE("undefined at zero deficit") {
        CHECK_THROWS_AS(fmp_ratio(cube_union(rect_cells(2, 2)), k), domain_error);
    }
}

TEST_CASE("Steiner growth cross-check by Monte Carlo sampling") {
    // mu(E + tK) = mu(E) + t Per_K(E) + t^2 mu(K) for a convex rectangle in
    // the plane; the sampled measure must agree with the perimeter the
    // library reports. Doubles and randomness live only in this test.
    const double t = 0.5;
    const double x_lo = -0.5, x_hi = 7.5, y_lo = -0.5, y_hi = 5.5;  // 8x6 cells
    CubeUnionBody e = cube_union(rect_cells(8, 6));

    auto run = [&](const Polytope& k, bool l1ball, double mu_k) {
        const double wx_lo = x_lo - t - 1, wx_hi = x_hi + t + 1;
        const double wy_lo = y_lo - t - 1, wy_hi = y_hi + t + 1;
        const double window = (wx_hi - wx_lo) * (wy_hi - wy_lo);
        std::mt19937 rng(7403);
        std::uniform_real_distribution<double> ux(wx_lo, wx_hi), uy(wy_lo, wy_hi);
        const int n = 300000;
        int hits = 0;
        for (int i = 0; i < n; ++i) {
            double x = ux(rng), y = uy(rng);
            double dx = std::max({x_lo - x, x - x_hi, 0.0});
            double dy = std::max({y_lo - y, y - y_hi, 0.0});
            bool inside = l1ball ? dx + dy <= t : std::max(dx, dy) <= t;
            if (inside) ++hits;
        }
        double p = static_cast<double>(hits) / n;
        double estimate = p * window;
        double predicted = 48.0 + t * to_double(perimeter(e, k)) + t * t * mu_k;
        double sigma = window * std::sqrt(p * (1 - p) / n);
        CHECK(std::abs(estimate - predicted) < 3 * sigma);
    };

    run(cube_pm1(2), false, 4.0);
    run(conical_hull(cross_polytope_dirs(2)), true, 2.0);
}
