#include "iso/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace iso {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json pointset_to_json(const PointSet& ps) {
    json pts = json::array();
    for (const Pt& p : ps.sorted()) {
        json row = json::array();
        for (Coord c : p) row.push_back(c);
        pts.push_back(std::move(row));
    }
    return json{{"d", ps.dim()}, {"points", std::move(pts)}};
}

PointSet pointset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("points"))
        throw parse_error("point set JSON must be {\"d\":..., \"points\":[...]}");
    if (!j["d"].is_number_integer() || j["d"].get<int>() < 1)
        throw parse_error("point set dimension must be a positive integer");
    const int d = j["d"].get<int>();
    if (!j["points"].is_array() || j["points"].empty())
        throw parse_error("point set needs a nonempty points array");
    PointSet ps(d);
    for (const json& row : j["points"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw parse_error("every point must list exactly d integer coordinates");
        Pt p(d);
        for (int i = 0; i < d; ++i) {
            if (!row[i].is_number_integer()) throw parse_error("coordinates must be integers");
            p[i] = row[i].get<std::int64_t>();
        }
        ps.insert(std::move(p));
    }
    return ps;
}

std::string pointset_to_text(const PointSet& ps) {
    std::ostringstream out;
    for (const Pt& p : ps.sorted()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << p[i];
        }
        out << '\n';
    }
    return out.str();
}

PointSet pointset_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Pt> pts;
    int d = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        Pt p;
        std::int64_t c;
        while (ls >> c) p.push_back(c);
        if (!ls.eof()) throw parse_error("point text: non-integer token in line: " + line);
        if (p.empty()) continue;  // blank line
        if (d < 0)
            d = static_cast<int>(p.size());
        else if (static_cast<int>(p.size()) != d)
            throw parse_error("point text: inconsistent coordinate count");
        pts.push_back(std::move(p));
    }
    if (d < 0) throw parse_error("point text: no points");
    return PointSet(d, pts);
}

json polytope_to_json(const Polytope& p) {
    json verts = json::array();
    for (const QVec& v : p.vertices()) {
        json row = json::array();
        for (const Rat& x : v) row.push_back(rat_to_string(x));
        verts.push_back(std::move(row));
    }
    return json{{"d", p.dim()}, {"vertices", std::move(verts)}};
}

Polytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("vertices"))
        throw parse_error("polytope JSON must be {\"d\":..., \"vertices\":[...]}");
    if (!j["d"].is_number_integer() || j["d"].get<int>() < 1)
        throw parse_error("polytope dimension must be a positive integer");
    const int d = j["d"].get<int>();
    if (!j["vertices"].is_array() || j["vertices"].empty())
        throw parse_error("polytope needs a nonempty vertices array");
    std::vector<QVec> pts;
    for (const json& row : j["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw parse_error("every vertex must list exactly d rational coordinates");
        QVec v(d);
        for (int i = 0; i < d; ++i) {
            if (row[i].is_string()) {
                try {
                    v[i] = rat_from_string(row[i].get<std::string>());
                } catch (const domain_error& e) {
                    throw parse_error(e.what());
                }
            } else if (row[i].is_number_integer()) {
                v[i] = Rat(static_cast<long>(row[i].get<std::int64_t>()));
            } else {
                throw parse_error("vertex coordinates must be rational strings or integers");
            }
        }
        pts.push_back(std::move(v));
    }
    return convex_hull(pts);
}

namespace {

json rat_json(const Rat& q) { return json(rat_to_string(q)); }

json qvec_json(const QVec& v) {
    json row = json::array();
    for (const Rat& x : v) row.push_back(rat_json(x));
    return row;
}

json pt_json(const Pt& p) {
    json row = json::array();
    for (Coord c : p) row.push_back(c);
    return row;
}

}  // namespace

json constants_to_json(const IsoperimetricConstants& c) {
    return json{{"d", c.d},
                {"volume_vertex", rat_json(c.volume_vertex)},
                {"volume_edge", rat_json(c.volume_edge)},
                {"beta_vertex", c.beta_vertex},
                {"beta_edge", c.beta_edge},
                {"beta_vertex_pow", rat_json(c.beta_vertex_pow)},
                {"beta_edge_pow", rat_json(c.beta_edge_pow)}};
}

json ball_to_json(const ExtremalBall& eb) {
    return json{{"kappa", eb.kappa},
                {"target_n", eb.target_n},
                {"size", eb.points.size()},
                {"points", pointset_to_json(eb.points)}};
}

json report_to_json(const IsoperimetricReport& r) {
    json j{{"n", r.n},
           {"boundary", r.boundary},
           {"beta", r.beta},
           {"epsilon", r.epsilon},
           {"epsilon_sign", r.epsilon_sign}};
    if (r.has_translate) {
        j["best_v"] = pt_json(r.best_v);
        j["symdiff"] = r.symdiff;
        if (r.normalized_valid) j["normalized_symdiff"] = r.normalized_symdiff;
    }
    return j;
}

json search_result_to_json(const SearchResult& r) {
    json ws = json::array();
    for (const PointSet& w : r.witnesses) ws.push_back(pointset_to_json(w));
    return json{{"min_value", r.min_value},
                {"witnesses", std::move(ws)},
                {"candidates_examined", r.candidates_examined},
                {"exact", r.exact}};
}

json plunnecke_to_json(const PlunneckeResult& r) {
    return json{{"alpha", rat_json(r.alpha)},
                {"witness", pointset_to_json(r.witness)},
                {"ratio", rat_json(r.ratio)},
                {"bound", rat_json(r.bound)},
                {"ratio_ok", r.ratio_ok}};
}

json bm_to_json(const BrunnMinkowskiCheck& r) {
    return json{{"ok", r.ok},
                {"continuous_ok", r.continuous_ok},
                {"lattice_ok", r.lattice_ok},
                {"lattice_sum", r.lattice_sum},
                {"body_sum", r.body_sum}};
}

json deficit_to_json(const DeficitResult& r) {
    return json{{"value", r.value},
                {"sign", r.sign},
                {"per", rat_json(r.per)},
                {"per_pow", rat_json(r.per_pow)},
                {"bound_pow", rat_json(r.bound_pow)}};
}

json asymmetry_to_json(const AsymmetryResult& r) {
    return json{{"value", r.value},
                {"x0", qvec_json(r.x0)},
                {"symdiff_bound", rat_json(r.symdiff_bound)},
                {"r_exact", r.r_exact},
                {"r_lo", rat_json(r.r_lo)}};
}

json fmp_to_json(const FmpPoint& p) {
    return json{{"delta", p.delta}, {"asym", p.asym}, {"ratio", p.ratio}};
}

std::string report_csv_header(int d) {
    std::string h = "n,boundary,beta,epsilon";
    for (int i = 0; i < d; ++i) h += ",vx" + std::to_string(i);
    h += ",symdiff,normalized";
    return h;
}

std::string report_csv_row(const IsoperimetricReport& r, int d) {
    std::ostringstream out;
    out << r.n << ',' << r.boundary << ',' << fmt_double(r.beta) << ',' << fmt_double(r.epsilon);
    for (int i = 0; i < d; ++i) {
        out << ',';
        if (r.has_translate) out << r.best_v[i];
    }
    out << ',';
    if (r.has_translate) out << r.symdiff;
    out << ',';
    if (r.normalized_valid) out << fmt_double(r.normalized_symdiff);
    return out.str();
}

std::string scatter_csv_header() { return "instance_id,mu_E,per,delta,asym,ratio"; }

std::string scatter_csv_row(const std::string& instance_id, const Rat& mu_e, const Rat& per,
                            double delta, double asym, bool has_ratio, double ratio) {
    std::ostringstream out;
    out << instance_id << ',' << rat_to_string(mu_e) << ',' << rat_to_string(per) << ','
        << fmt_double(delta) << ',' << fmt_double(asym) << ',';
    if (has_ratio) out << fmt_double(ratio);
    return out.str();
}

std::string scan_csv_header() { return "n,min_value,bound,gap_sign,witness_file"; }

std::string scan_csv_row(const ScanRow& row, const std::string& witness_file) {
    std::ostringstream out;
    out << row.n << ',' << row.min_value << ',' << fmt_double(row.bound) << ',' << row.gap_sign
        << ',' << witness_file;
    return out.str();
}

}  // namespace iso
