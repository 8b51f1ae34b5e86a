// Command-line front end: one subcommand per library operation, JSON/CSV
// output, deterministic for a fixed argv (+ seed where randomized).
//
// Exit codes: 0 success, 1 domain error (valid request the library refuses),
// 2 usage error (bad flags or malformed input).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "iso/json_io.hpp"

namespace {

using iso::Rat;
using nlohmann::json;

std::string slurp(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg);
    if (!in) throw iso::parse_error("cannot open input: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inputs are inline JSON when they start with '{' or '[', otherwise paths
// ("-" for stdin). Point sets additionally accept the one-point-per-line
// text form.
std::string fetch(const std::string& arg) {
    std::size_t i = arg.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (arg[i] == '{' || arg[i] == '[')) return arg;
    return slurp(arg);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw iso::parse_error(std::string("bad JSON: ") + e.what());
    }
}

iso::PointSet load_pointset(const std::string& arg) {
    std::string text = fetch(arg);
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw iso::parse_error("empty point set input");
    if (text[i] == '{') return iso::pointset_from_json(parse_json(text));
    return iso::pointset_from_text(text);
}

iso::Polytope load_polytope(const std::string& arg) {
    return iso::polytope_from_json(parse_json(fetch(arg)));
}

Rat parse_rat(const std::string& s) {
    try {
        return iso::rat_from_string(s);
    } catch (const iso::domain_error& e) {
        throw iso::parse_error(e.what());
    }
}

// [-1,1]^d, the default anisotropy when none is given.
iso::Polytope symmetric_cube(int d) {
    std::vector<iso::QVec> corners;
    for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
        iso::QVec v(d);
        for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? Rat(1) : Rat(-1);
        corners.push_back(std::move(v));
    }
    return iso::convex_hull(corners);
}

struct Output {
    std::string path;  // empty -> stdout

    void write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw iso::domain_error("cannot open output file: " + path);
        out << payload;
    }
};

iso::Objective parse_objective(const std::string& s) {
    if (s == "vertex") return iso::Objective::vertex;
    if (s == "edge") return iso::Objective::edge;
    throw iso::parse_error("objective must be 'vertex' or 'edge'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact isoperimetric computations on Z^d: boundaries, extremal balls, "
                 "anisotropic perimeter, stability experiments and conjecture scans"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // common option storage
    std::string arg_points, arg_a, arg_b, arg_s, arg_e, arg_k, arg_x, arg_y, arg_family,
        arg_instances;
    std::string objective = "vertex";
    std::string mode = "exhaustive";
    std::string format = "json";
    std::string grid_step = "1/4";
    std::string witness_dir;
    std::int64_t n = 1;
    std::int64_t n_from = 1, n_to = 1;
    unsigned k_fold = 1;
    std::uint64_t budget = 100'000;
    std::uint64_t seed = 0;
    std::uint64_t cap = 10'000'000;
    std::size_t subset_cap = 18;
    int threads = 1;
    std::vector<std::int64_t> box, sides;

    auto* c_hull = app.add_subcommand("hull", "convex hull of rational points (JSON polytope out)");
    c_hull->add_option("--points", arg_points, "point set (JSON/text, path or inline)")->required();

    auto* c_zono = app.add_subcommand("zonotope", "hull of all subset sums of B");
    c_zono->add_option("--B", arg_b)->required();

    auto* c_kappa = app.add_subcommand("kappa", "smallest k with |k C(B) n Z^d| >= n");
    c_kappa->add_option("--B", arg_b)->required();
    c_kappa->add_option("--n", n)->required();

    auto* c_ball = app.add_subcommand("ball", "lattice ball kappa(B,n) C(B) n Z^d");
    c_ball->add_option("--B", arg_b)->required();
    c_ball->add_option("--n", n)->required();

    auto* c_eball = app.add_subcommand("edge-ball", "ball of the subset-sum hull of B");
    c_eball->add_option("--B", arg_b)->required();
    c_eball->add_option("--n", n)->required();

    auto* c_bound = app.add_subcommand("boundary", "vertex or edge boundary of A in G_B");
    c_bound->add_option("--objective", objective, "vertex|edge");
    c_bound->add_option("--A", arg_a)->required();
    c_bound->add_option("--B", arg_b)->required();

    auto* c_const = app.add_subcommand("constants", "isoperimetric constants of B");
    c_const->add_option("--B", arg_b)->required();

    auto* c_excess = app.add_subcommand("excess", "boundary excess of A against the bound");
    c_excess->add_option("--objective", objective, "vertex|edge");
    c_excess->add_option("--A", arg_a)->required();
    c_excess->add_option("--B", arg_b)->required();
    c_excess->add_option("--format", format, "json|csv");

    auto* c_sym = app.add_subcommand("symdiff", "best translate of S against A");
    c_sym->add_option("--A", arg_a)->required();
    c_sym->add_option("--S", arg_s)->required();

    auto* c_per = app.add_subcommand("perimeter", "anisotropic perimeter of the cube union of E");
    c_per->add_option("--E", arg_e, "cell centers (point set)")->required();
    c_per->add_option("--K", arg_k, "anisotropy polytope (default [-1,1]^d)");

    auto* c_def = app.add_subcommand("deficit", "isoperimetric deficit of E against K");
    c_def->add_option("--E", arg_e)->required();
    c_def->add_option("--K", arg_k);

    auto* c_asym = app.add_subcommand("asym", "grid upper bound on the asymmetric index");
    c_asym->add_option("--E", arg_e)->required();
    c_asym->add_option("--K", arg_k);
    c_asym->add_option("--grid-step", grid_step, "rational step, default 1/4");

    auto* c_fmp = app.add_subcommand("fmp-scatter", "asym vs sqrt(deficit) over instances");
    c_fmp->add_option("--instances", arg_instances,
                      "JSON array of {id, E, K?} instance objects")
        ->required();
    c_fmp->add_option("--grid-step", grid_step);
    c_fmp->add_option("--format", format, "json|csv");

    auto* c_search = app.add_subcommand("search", "minimize a boundary objective at size n");
    c_search->add_option("--B", arg_b)->required();
    c_search->add_option("--objective", objective, "vertex|edge");
    c_search->add_option("--n", n)->required();
    c_search->add_option("--box", box, "per-axis extents, e.g. 5,5")->delimiter(',');
    c_search->add_option("--mode", mode, "exhaustive|anneal");
    c_search->add_option("--budget", budget);
    auto* search_seed = c_search->add_option("--seed", seed, "required in anneal mode");
    c_search->add_option("--cap", cap, "exhaustive candidate cap");
    c_search->add_option("--threads", threads);

    auto* c_plu = app.add_subcommand("verify-plunnecke", "subset growth certificate");
    c_plu->add_option("--A", arg_a)->required();
    c_plu->add_option("--B", arg_b)->required();
    c_plu->add_option("--k", k_fold)->required();
    c_plu->add_option("--cap", subset_cap);

    auto* c_bm = app.add_subcommand("verify-bm", "sumset measure inequality on cube unions");
    c_bm->add_option("--X", arg_x, "cells of the first body")->required();
    c_bm->add_option("--Y", arg_y, "cells of the second body")->required();

    auto* c_stab = app.add_subcommand("stability", "excess/symdiff table over a family");
    c_stab->add_option("--B", arg_b)->required();
    c_stab->add_option("--family", arg_family, "JSON array of point sets")->required();
    c_stab->add_option("--objective", objective, "vertex|edge");
    c_stab->add_option("--format", format, "json|csv");

    auto* c_scan = app.add_subcommand("scan-conjecture", "minimum boundary vs conjectured bound");
    c_scan->add_option("--B", arg_b)->required();
    c_scan->add_option("--objective", objective, "vertex|edge");
    c_scan->add_option("--from", n_from)->required();
    c_scan->add_option("--to", n_to)->required();
    c_scan->add_option("--box", box)->delimiter(',');
    c_scan->add_option("--mode", mode, "exhaustive|anneal");
    c_scan->add_option("--budget", budget);
    auto* scan_seed = c_scan->add_option("--seed", seed, "required in anneal mode");
    c_scan->add_option("--cap", cap);
    c_scan->add_option("--threads", threads);
    c_scan->add_option("--witness-dir", witness_dir,
                       "directory for counterexample witness files (default .)");

    auto* c_tight = app.add_subcommand("tight-example", "cube-corner B with a cuboid A");
    c_tight->add_option("--sides", sides, "cuboid side lengths, e.g. 8,2")->delimiter(',');

    // lets the global --out appear after the subcommand name
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out{out_path};
    auto emit_json = [&](const json& j) { out.write(j.dump() + "\n"); };

    try {
        if (*c_hull) {
            iso::PointSet ps = load_pointset(arg_points);
            std::vector<iso::QVec> pts;
            for (const iso::Pt& p : ps.sorted()) {
                iso::QVec q(p.size());
                for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(static_cast<long>(p[i]));
                pts.push_back(std::move(q));
            }
            emit_json(iso::polytope_to_json(iso::convex_hull(pts)));
        } else if (*c_zono) {
            emit_json(iso::polytope_to_json(iso::zonotope(load_pointset(arg_b))));
        } else if (*c_kappa) {
            out.write(std::to_string(iso::kappa(load_pointset(arg_b), n)) + "\n");
        } else if (*c_ball) {
            emit_json(iso::ball_to_json(iso::ball(load_pointset(arg_b), n)));
        } else if (*c_eball) {
            emit_json(iso::ball_to_json(iso::edge_ball(load_pointset(arg_b), n)));
        } else if (*c_bound) {
            iso::PointSet a = load_pointset(arg_a), b = load_pointset(arg_b);
            std::int64_t v = parse_objective(objective) == iso::Objective::vertex
                                 ? iso::vertex_boundary(a, b)
                                 : iso::edge_boundary(a, b);
            out.write(std::to_string(v) + "\n");
        } else if (*c_const) {
            emit_json(iso::constants_to_json(iso::constants(load_pointset(arg_b))));
        } else if (*c_excess) {
            iso::PointSet a = load_pointset(arg_a), b = load_pointset(arg_b);
            iso::IsoperimetricReport rep = parse_objective(objective) == iso::Objective::vertex
                                               ? iso::vertex_excess(a, b)
                                               : iso::edge_excess(a, b);
            if (format == "csv")
                out.write(iso::report_csv_header(a.dim()) + "\n" +
                          iso::report_csv_row(rep, a.dim()) + "\n");
            else
                emit_json(iso::report_to_json(rep));
        } else if (*c_sym) {
            auto [v, sd] = iso::best_translate_symdiff(load_pointset(arg_a), load_pointset(arg_s));
            json jv = json::array();
            for (iso::Coord c : v) jv.push_back(c);
            emit_json(json{{"v", std::move(jv)}, {"symdiff", sd}});
        } else if (*c_per) {
            iso::CubeUnionBody e = iso::cube_union(load_pointset(arg_e));
            iso::Polytope k = arg_k.empty() ? symmetric_cube(e.dim()) : load_polytope(arg_k);
            out.write(iso::rat_to_string(iso::perimeter(e, k)) + "\n");
        } else if (*c_def) {
            iso::CubeUnionBody e = iso::cube_union(load_pointset(arg_e));
            iso::Polytope k = arg_k.empty() ? symmetric_cube(e.dim()) : load_polytope(arg_k);
            emit_json(iso::deficit_to_json(iso::deficit(e, k)));
        } else if (*c_asym) {
            iso::CubeUnionBody e = iso::cube_union(load_pointset(arg_e));
            iso::Polytope k = arg_k.empty() ? symmetric_cube(e.dim()) : load_polytope(arg_k);
            emit_json(iso::asymmetry_to_json(iso::asymmetric_index(e, k, parse_rat(grid_step))));
        } else if (*c_fmp) {
            json arr = parse_json(fetch(arg_instances));
            if (!arr.is_array() || arr.empty())
                throw iso::parse_error("instances must be a nonempty JSON array");
            Rat step = parse_rat(grid_step);
            std::vector<std::string> rows;
            json jrows = json::array();
            for (const json& item : arr) {
                if (!item.is_object() || !item.contains("id") || !item.contains("E") ||
                    !item["id"].is_string())
                    throw iso::parse_error("each instance needs {id (string), E, K?}");
                std::string id = item["id"].get<std::string>();
                iso::CubeUnionBody e = iso::cube_union(iso::pointset_from_json(item["E"]));
                iso::Polytope k = item.contains("K") ? iso::polytope_from_json(item["K"])
                                                     : symmetric_cube(e.dim());
                iso::DeficitResult del = iso::deficit(e, k);
                iso::AsymmetryResult as = iso::asymmetric_index(e, k, step);
                bool has_ratio = del.sign > 0;
                double ratio = has_ratio ? as.value / std::sqrt(del.value) : 0.0;
                rows.push_back(iso::scatter_csv_row(id, e.measure(), del.per, del.value,
                                                    as.value, has_ratio, ratio));
                json jr{{"instance_id", id},
                        {"mu_E", iso::rat_to_string(e.measure())},
                        {"per", iso::rat_to_string(del.per)},
                        {"delta", del.value},
                        {"asym", as.value}};
                if (has_ratio) jr["ratio"] = ratio;
                jrows.push_back(std::move(jr));
            }
            if (format == "json") {
                emit_json(jrows);
            } else {
                std::string csv = iso::scatter_csv_header() + "\n";
                for (const std::string& r : rows) csv += r + "\n";
                out.write(csv);
            }
        } else if (*c_search || *c_scan) {
            iso::PointSet b = load_pointset(arg_b);
            iso::SearchConfig cfg;
            cfg.objective = parse_objective(objective);
            cfg.budget = budget;
            cfg.seed = seed;
            cfg.exhaustive_cap = cap;
            cfg.threads = threads;
            if (mode == "anneal") {
                cfg.mode = iso::SearchConfig::Mode::anneal;
                if (!(*c_search ? search_seed : scan_seed)->count())
                    throw iso::parse_error("anneal mode requires --seed");
            } else if (mode != "exhaustive") {
                throw iso::parse_error("mode must be 'exhaustive' or 'anneal'");
            }
            for (std::int64_t s : box) cfg.box.push_back(s);
            if (cfg.mode == iso::SearchConfig::Mode::exhaustive && cfg.box.empty())
                throw iso::parse_error("exhaustive mode requires --box");
            if (*c_search) {
                cfg.n = n;
                iso::SearchResult sr = cfg.mode == iso::SearchConfig::Mode::exhaustive
                                           ? iso::exact_min_boundary(b, cfg)
                                           : iso::anneal_min_boundary(b, cfg);
                emit_json(iso::search_result_to_json(sr));
            } else {
                std::vector<iso::ScanRow> rows = iso::conjecture_scan(b, n_from, n_to, cfg);
                std::string csv = iso::scan_csv_header() + "\n";
                for (const iso::ScanRow& row : rows) {
                    std::string wfile;
                    if (row.gap_sign < 0) {
                        std::string dir = witness_dir.empty() ? "." : witness_dir;
                        wfile = dir + "/counterexample_n" + std::to_string(row.n) + ".json";
                        std::ofstream wf(wfile, std::ios::binary);
                        if (!wf) throw iso::domain_error("cannot write witness file: " + wfile);
                        wf << iso::pointset_to_json(row.witness).dump() << "\n";
                    }
                    csv += iso::scan_csv_row(row, wfile) + "\n";
                }
                out.write(csv);
            }
        } else if (*c_plu) {
            emit_json(iso::plunnecke_to_json(iso::plunnecke_verify(
                load_pointset(arg_a), load_pointset(arg_b), k_fold, subset_cap)));
        } else if (*c_bm) {
            emit_json(iso::bm_to_json(
                iso::brunn_minkowski_check(iso::cube_union(load_pointset(arg_x)),
                                           iso::cube_union(load_pointset(arg_y)))));
        } else if (*c_stab) {
            iso::PointSet b = load_pointset(arg_b);
            json fam = parse_json(fetch(arg_family));
            if (!fam.is_array() || fam.empty())
                throw iso::parse_error("family must be a nonempty JSON array of point sets");
            std::vector<iso::PointSet> family;
            for (const json& item : fam) family.push_back(iso::pointset_from_json(item));
            std::vector<iso::IsoperimetricReport> rows =
                iso::stability_experiment(b, family, parse_objective(objective));
            if (format == "csv") {
                std::string csv = iso::report_csv_header(b.dim()) + "\n";
                for (const auto& r : rows) csv += iso::report_csv_row(r, b.dim()) + "\n";
                out.write(csv);
            } else {
                json jr = json::array();
                for (const auto& r : rows) jr.push_back(iso::report_to_json(r));
                emit_json(jr);
            }
        } else if (*c_tight) {
            if (sides.empty()) throw iso::parse_error("tight-example requires --sides");
            std::vector<iso::Coord> sv(sides.begin(), sides.end());
            auto [tb, ta] = iso::tight_example(sv);
            emit_json(json{{"B", iso::pointset_to_json(tb)}, {"A", iso::pointset_to_json(ta)}});
        }
    } catch (const iso::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iso::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
