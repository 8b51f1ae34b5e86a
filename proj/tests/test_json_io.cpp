#include <doctest.h>

#include "iso/json_io.hpp"

using namespace iso;
using nlohmann::json;

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

}  // namespace

TEST_CASE("stable float rendering") {
    CHECK(fmt_double(0.0) == "0");
    CHECK(fmt_double(0.5) == "0.5");
    CHECK(fmt_double(-0.25) == "-0.25");
    CHECK(fmt_double(1.0 / 3) == "0.333333333333");
    CHECK(fmt_double(2.4494897427831779) == "2.44948974278");
    CHECK(fmt_double(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("point set JSON round-trip") {
    PointSet ps = make(2, {{1, -2}, {0, 3}, {1, -2}});
    json j = pointset_to_json(ps);
    CHECK(j["d"] == 2);
    CHECK(j["points"].size() == 2);
    // points come out sorted lexicographically, so dumps are reproducible
    CHECK(j.dump() == R"({"d":2,"points":[[0,3],[1,-2]]})");
    CHECK(pointset_from_json(j) == ps);

    PointSet one = make(1, {{-7}});
    CHECK(pointset_from_json(pointset_to_json(one)) == one);
}

TEST_CASE("point set JSON schema violations") {
    auto bad = [](const char* text) {
        CHECK_THROWS_AS(pointset_from_json(json::parse(text)), parse_error);
    };
    bad(R"([[0,0]])");                               // not an object
    bad(R"({"points":[[0,0]]})");                    // missing d
    bad(R"({"d":2})");                               // missing points
    bad(R"({"d":0,"points":[[0]]})");                // d < 1
    bad(R"({"d":"2","points":[[0,0]]})");            // d not an integer
    bad(R"({"d":2.5,"points":[[0,0]]})");            // d not an integer
    bad(R"({"d":2,"points":[]})");                   // empty points
    bad(R"({"d":2,"points":{"x":1}})");              // points not an array
    bad(R"({"d":2,"points":[[0]]})");                // wrong arity
    bad(R"({"d":2,"points":[[0,0,0]]})");            // wrong arity
    bad(R"({"d":2,"points":[[0,1.5]]})");            // non-integer coordinate
    bad(R"({"d":2,"points":[[0,"1"]]})");            // non-integer coordinate
    bad(R"({"d":2,"points":[0,1]})");                // row not an array
}

TEST_CASE("point set text round-trip") {
    PointSet ps = make(2, {{1, -2}, {0, 3}});
    CHECK(pointset_to_text(ps) == "0 3\n1 -2\n");
    CHECK(pointset_from_text(pointset_to_text(ps)) == ps);
    CHECK(pointset_from_text("\n  0 3 \n\n1 -2\n") == ps);

    CHECK_THROWS_AS(pointset_from_text(""), parse_error);
    CHECK_THROWS_AS(pointset_from_text("\n\n"), parse_error);
    CHECK_THROWS_AS(pointset_from_text("1 x\n"), parse_error);
    CHECK_THROWS_AS(pointset_from_text("1 2\n3\n"), parse_error);
    CHECK_THROWS_AS(pointset_from_text("1.5 2\n"), parse_error);
}

TEST_CASE("polytope JSON round-trip") {
    std::vector<QVec> pts = {{Rat(0), Rat(0)},
                             {Rat(1, 2), Rat(0)},
                             {Rat(0), Rat(1, 2)},
                             {Rat(1, 2), Rat(1, 2)}};
    Polytope p = convex_hull(pts);
    json j = polytope_to_json(p);
    CHECK(j["d"] == 2);
    REQUIRE(j["vertices"].size() == 4);
    // integral coordinates print bare, fractional ones as num/den
    bool saw_plain = false, saw_frac = false;
    for (const json& row : j["vertices"])
        for (const json& c : row) {
            if (c == "0") saw_plain = true;
            if (c == "1/2") saw_frac = true;
        }
    CHECK(saw_plain);
    CHECK(saw_frac);

    Polytope q = polytope_from_json(j);
    CHECK(q.volume() == p.volume());
    CHECK(q.vertices() == p.vertices());
}

TEST_CASE("polytope JSON accepts integers and re-hulls the input") {
    Polytope p = polytope_from_json(json::parse(R"({"d":1,"vertices":[[0],[5],[2]]})"));
    CHECK(p.vertices().size() == 2);  // 2 is interior and drops out
    CHECK(p.volume() == Rat(5));
}

TEST_CASE("polytope JSON schema violations") {
    auto bad = [](const char* text) {
        CHECK_THROWS_AS(polytope_from_json(json::parse(text)), parse_error);
    };
    bad(R"({"vertices":[[0]]})");                    // missing d
    bad(R"({"d":1})");                               // missing vertices
    bad(R"({"d":0,"vertices":[[0]]})");              // d < 1
    bad(R"({"d":1,"vertices":[]})");                 // empty
    bad(R"({"d":2,"vertices":[[0]]})");              // wrong arity
    bad(R"({"d":1,"vertices":[[0.5]]})");            // float coordinate
    bad(R"({"d":1,"vertices":[[null]]})");           // null coordinate
    bad(R"({"d":1,"vertices":[["1/0"]]})");          // zero denominator
    bad(R"({"d":1,"vertices":[["abc"]]})");          // unparsable rational
}

TEST_CASE("report JSON keeps optional fields optional") {
    IsoperimetricReport r;
    r.n = 9;
    r.boundary = 12;
    r.beta = 4.0;
    r.epsilon = 0.0;
    r.epsilon_sign = 0;
    json j = report_to_json(r);
    CHECK(j.size() == 5);
    CHECK(j["n"] == 9);
    CHECK(j["boundary"] == 12);
    CHECK_FALSE(j.contains("best_v"));
    CHECK_FALSE(j.contains("symdiff"));
    CHECK_FALSE(j.contains("normalized_symdiff"));

    r.has_translate = true;
    r.best_v = {1, -2};
    r.symdiff = 4;
    j = report_to_json(r);
    CHECK(j["best_v"] == json::array({1, -2}));
    CHECK(j["symdiff"] == 4);
    CHECK_FALSE(j.contains("normalized_symdiff"));

    r.normalized_valid = true;
    r.normalized_symdiff = 0.25;
    j = report_to_json(r);
    CHECK(j["normalized_symdiff"] == 0.25);
}

TEST_CASE("report CSV layout") {
    CHECK(report_csv_header(2) == "n,boundary,beta,epsilon,vx0,vx1,symdiff,normalized");
    CHECK(report_csv_header(3) == "n,boundary,beta,epsilon,vx0,vx1,vx2,symdiff,normalized");

    // a 3x3 square meets the edge bound exactly and carries no translate data
    PointSet sq(2);
    for (Coord x = 0; x < 3; ++x)
        for (Coord y = 0; y < 3; ++y) sq.insert({x, y});
    IsoperimetricReport r = edge_excess(sq, cross_polytope_dirs(2));
    CHECK(report_csv_row(r, 2) == "9,12,4,0,,,,");

    IsoperimetricReport full;
    full.n = 13;
    full.boundary = 12;
    full.beta = 2.8284271247461903;
    full.epsilon = 0.17669683398513029;
    full.epsilon_sign = 1;
    full.has_translate = true;
    full.best_v = {1, -2};
    full.symdiff = 4;
    full.normalized_valid = true;
    full.normalized_symdiff = 0.25;
    CHECK(report_csv_row(full, 2) == "13,12,2.82842712475,0.176696833985,1,-2,4,0.25");
}

TEST_CASE("scatter CSV layout") {
    CHECK(scatter_csv_header() == "instance_id,mu_E,per,delta,asym,ratio");
    CHECK(scatter_csv_row("sq", Rat(4), Rat(8), 0.0, 0.0, false, 0.0) == "sq,4,8,0,0,");
    CHECK(scatter_csv_row("r21", Rat(2), Rat(6), 0.25, 0.5, true, 2.0) == "r21,2,6,0.25,0.5,2");
    CHECK(scatter_csv_row("h", Rat(1, 2), Rat(7, 3), 0.0, 0.0, false, 0.0) == "h,1/2,7/3,0,0,");
}

TEST_CASE("scan CSV layout") {
    CHECK(scan_csv_header() == "n,min_value,bound,gap_sign,witness_file");
    ScanRow row;
    row.n = 4;
    row.min_value = 8;
    row.bound = 8.0;
    row.gap_sign = 0;
    CHECK(scan_csv_row(row, "") == "4,8,8,0,");
    row.gap_sign = -1;
    CHECK(scan_csv_row(row, "counterexample_n4.json") == "4,8,8,-1,counterexample_n4.json");
}

TEST_CASE("result serializers expose the documented fields") {
    PointSet cross = cross_polytope_dirs(2);
    json c = constants_to_json(constants(cross));
    CHECK(c["d"] == 2);
    CHECK(c["volume_vertex"] == "2");
    CHECK(c["volume_edge"] == "4");
    CHECK(c["beta_vertex_pow"] == "8");
    CHECK(c["beta_edge_pow"] == "16");
    CHECK(c["beta_edge"] == 4.0);

    json b = ball_to_json(ball(cross, 5));
    CHECK(b["kappa"] == 1);
    CHECK(b["target_n"] == 5);
    CHECK(b["size"] == 5);
    CHECK(b["points"]["points"].size() == 5);

    SearchResult sr;
    sr.min_value = 3;
    sr.witnesses.push_back(make(2, {{0, 1}, {1, 0}}));
    sr.candidates_examined = 36;
    sr.exact = true;
    json s = search_result_to_json(sr);
    CHECK(s["min_value"] == 3);
    CHECK(s["exact"] == true);
    CHECK(s["candidates_examined"] == 36);
    CHECK(s["witnesses"][0]["points"].size() == 2);

    PlunneckeResult pr;
    pr.alpha = Rat(3, 2);
    pr.witness = make(1, {{0}, {1}});
    pr.ratio = Rat(2);
    pr.bound = Rat(9, 4);
    pr.ratio_ok = true;
    json p = plunnecke_to_json(pr);
    CHECK(p["alpha"] == "3/2");
    CHECK(p["bound"] == "9/4");
    CHECK(p["ratio"] == "2");
    CHECK(p["ratio_ok"] == true);

    BrunnMinkowskiCheck bm;
    bm.ok = bm.continuous_ok = bm.lattice_ok = true;
    bm.lattice_sum = 4;
    bm.body_sum = 9;
    json bj = bm_to_json(bm);
    CHECK(bj["ok"] == true);
    CHECK(bj["lattice_sum"] == 4);
    CHECK(bj["body_sum"] == 9);

    DeficitResult dr;
    dr.value = 0.5;
    dr.sign = 1;
    dr.per = Rat(6);
    dr.per_pow = Rat(36);
    dr.bound_pow = Rat(32);
    json dj = deficit_to_json(dr);
    CHECK(dj["value"] == 0.5);
    CHECK(dj["sign"] == 1);
    CHECK(dj["per"] == "6");
    CHECK(dj["per_pow"] == "36");
    CHECK(dj["bound_pow"] == "32");

    AsymmetryResult ar;
    ar.value = 0.0;
    ar.x0 = {Rat(1, 2), Rat(1, 2)};
    ar.symdiff_bound = Rat(0);
    ar.r_exact = true;
    ar.r_lo = Rat(1);
    json aj = asymmetry_to_json(ar);
    CHECK(aj["value"] == 0.0);
    CHECK(aj["x0"] == json::array({"1/2", "1/2"}));
    CHECK(aj["symdiff_bound"] == "0");
    CHECK(aj["r_exact"] == true);
    CHECK(aj["r_lo"] == "1");

    FmpPoint fp;
    fp.delta = 0.25;
    fp.asym = 0.5;
    fp.ratio = 1.0;
    json fj = fmp_to_json(fp);
    CHECK(fj["delta"] == 0.25);
    CHECK(fj["asym"] == 0.5);
    CHECK(fj["ratio"] == 1.0);
}

TEST_CASE("serialization is deterministic") {
    PointSet ps = make(2, {{3, 1}, {-1, 2}, {0, 0}});
    CHECK(pointset_to_json(ps).dump() == pointset_to_json(ps).dump());
    Polytope p = conical_hull(ps);
    CHECK(polytope_to_json(p).dump() == polytope_to_json(p).dump());
}
