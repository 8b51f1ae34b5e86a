#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "iso/cubebody.hpp"
#include "iso/extremal.hpp"
#include "iso/pointset.hpp"
#include "iso/polytope.hpp"
#include "iso/search.hpp"

namespace iso {

// Malformed or schema-violating input. Distinct from domain_error so the
// CLI can map it to the usage exit code.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Shortest stable float rendering used in every CSV column ("%.12g").
std::string fmt_double(double v);

// PointSet <-> {"d": int, "points": [[int,...], ...]} with points sorted
// lexicographically. Text form is one space-separated point per line.
nlohmann::json pointset_to_json(const PointSet& ps);
PointSet pointset_from_json(const nlohmann::json& j);
std::string pointset_to_text(const PointSet& ps);
PointSet pointset_from_text(const std::string& text);

// Polytope <-> {"d": int, "vertices": [["num/den", ...], ...]}. Reading
// rebuilds the halfspace representation from the vertices.
nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::json constants_to_json(const IsoperimetricConstants& c);
nlohmann::json ball_to_json(const ExtremalBall& eb);
nlohmann::json report_to_json(const IsoperimetricReport& r);
nlohmann::json search_result_to_json(const SearchResult& r);
nlohmann::json plunnecke_to_json(const PlunneckeResult& r);
nlohmann::json bm_to_json(const BrunnMinkowskiCheck& r);
nlohmann::json deficit_to_json(const DeficitResult& r);
nlohmann::json asymmetry_to_json(const AsymmetryResult& r);
nlohmann::json fmp_to_json(const FmpPoint& p);

// CSV rows for the tabular outputs. Columns:
//   report:  n,boundary,beta,epsilon,vx0..vx{d-1},symdiff,normalized
//   scatter: instance_id,mu_E,per,delta,asym,ratio
//   scan:    n,min_value,bound,gap_sign,witness_file
std::string report_csv_header(int d);
std::string report_csv_row(const IsoperimetricReport& r, int d);
std::string scatter_csv_header();
std::string scatter_csv_row(const std::string& instance_id, const Rat& mu_e, const Rat& per,
                            double delta, double asym, bool has_ratio, double ratio);
std::string scan_csv_header();
std::string scan_csv_row(const ScanRow& row, const std::string& witness_file);

}  // namespace iso
