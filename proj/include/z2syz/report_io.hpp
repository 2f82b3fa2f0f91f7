#pragma once

// Serialization of chain-space parameters and reports: JSON records (using
// nlohmann/json), a plain text form and matrix dumps. Polynomials are written
// in canonical text form, so parse(emit(report)) reproduces the report.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "z2syz/chainspace.hpp"

namespace z2syz {

using Json = nlohmann::json;

class ReportFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Subset parse_subset(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ReportFormatError("bad subset '" + text + "'");
  Subset s = 0;
  std::stringstream in(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    const int j = std::stoi(item);
    if (j < 1 || j > 32) throw ReportFormatError("bad subset '" + text + "'");
    s |= Subset{1} << (j - 1);
  }
  return s;
}

inline Json params_to_json(const ChainSpaceParams& p) {
  Json l = Json::array();
  for (const auto& x : p.ell) l.push_back(to_string(x));
  return {{"m", p.m}, {"n", p.n}, {"l", l}, {"c", to_string(p.c)}};
}

/// Accepts rationals as strings ("p/q", "p") or integers.
inline ChainSpaceParams params_from_json(const Json& j) {
  auto rational = [](const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ReportFormatError("rational expected, got " + v.dump());
  };
  try {
    ChainSpaceParams p;
    p.m = j.at("m").get<int>();
    p.n = j.at("n").get<int>();
    for (const auto& x : j.at("l")) p.ell.push_back(rational(x));
    p.c = j.contains("c") ? rational(j.at("c")) : Rational(0);
    return p;
  } catch (const Json::exception& e) {
    throw ReportFormatError(std::string("bad parameter record: ") + e.what());
  }
}

namespace detail {

inline Json subsets_to_json(const std::vector<Subset>& v) {
  Json a = Json::array();
  for (auto s : v) a.push_back(subset_to_string(s));
  return a;
}

inline std::vector<Subset> subsets_from_json(const Json& a) {
  std::vector<Subset> v;
  for (const auto& s : a) v.push_back(parse_subset(s.get<std::string>()));
  return v;
}

inline Json matrix_rows_to_json(const ModuleMap& f) {
  Json rows = Json::array();
  for (const auto& row : f.to_rows()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return rows;
}

inline Json map_to_json(const ModuleMap& f) {
  return {{"source_degrees", f.source().shifts()},
          {"target_degrees", f.target().shifts()},
          {"rows", matrix_rows_to_json(f)}};
}

inline ModuleMap map_from_json(const Json& j, const RingPtr& ring) {
  FreeModule src(ring, j.at("source_degrees").get<std::vector<int>>());
  FreeModule dst(ring, j.at("target_degrees").get<std::vector<int>>());
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& r : j.at("rows")) {
    std::vector<Polynomial> row;
    for (const auto& e : r) row.push_back(parse_polynomial(e.get<std::string>(), ring));
    rows.push_back(std::move(row));
  }
  return ModuleMap::from_rows(std::move(src), std::move(dst), rows);
}

inline Json presentation_to_json(const Presentation& p) { return map_to_json(p.rels); }

inline Presentation presentation_from_json(const Json& j, const RingPtr& ring) {
  ModuleMap rels = map_from_json(j, ring);
  FreeModule gens = rels.target();
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace detail

inline Json report_to_json(const SyzygyReport& r) {
  Json cv = Json::array();
  for (const auto& v : r.critical_values) cv.push_back(to_string(v));
  Json j;
  j["params"] = params_to_json(r.params);
  j["long_sets"] = detail::subsets_to_json(r.long_sets);
  j["short_sets"] = detail::subsets_to_json(r.short_sets);
  j["critical_values"] = cv;
  j["cr_min"] = to_string(r.cr_min);
  j["iota"] = detail::map_to_json(r.iota.map);
  j["iota"]["row_labels"] = detail::subsets_to_json(r.iota.rows);
  j["iota"]["col_labels"] = detail::subsets_to_json(r.iota.cols);
  j["rank_iota"] = r.rank_iota;
  j["dim_H"] = r.dim_H;
  j["dim_H_fixed"] = r.dim_H_fixed;
  j["ker_pres"] = detail::presentation_to_json(r.ker_pres);
  j["coker_pres"] = detail::presentation_to_json(r.coker_pres);
  j["order"] = r.order.is_free() ? Json("FREE") : Json(r.order.value());
  j["free"] = r.free;
  j["zero"] = r.zero;
  j["free_rank"] = r.free_rank;
  j["classification_predicted"] =
      r.classification_predicted ? Json(*r.classification_predicted) : Json("below-maximal");
  j["consistent"] = r.consistent;
  return j;
}

inline SyzygyReport report_from_json(const Json& j) {
  try {
    SyzygyReport r;
    r.params = params_from_json(j.at("params"));
    const RingPtr ring = make_ring(static_cast<std::size_t>(r.params.r()));
    r.long_sets = detail::subsets_from_json(j.at("long_sets"));
    r.short_sets = detail::subsets_from_json(j.at("short_sets"));
    for (const auto& v : j.at("critical_values")) r.critical_values.push_back(parse_rational(v.get<std::string>()));
    r.cr_min = parse_rational(j.at("cr_min").get<std::string>());
    r.iota.map = detail::map_from_json(j.at("iota"), ring);
    r.iota.rows = detail::subsets_from_json(j.at("iota").at("row_labels"));
    r.iota.cols = detail::subsets_from_json(j.at("iota").at("col_labels"));
    r.rank_iota = j.at("rank_iota").get<std::size_t>();
    r.dim_H = j.at("dim_H").get<long long>();
    r.dim_H_fixed = j.at("dim_H_fixed").get<long long>();
    r.ker_pres = detail::presentation_from_json(j.at("ker_pres"), ring);
    r.coker_pres = detail::presentation_from_json(j.at("coker_pres"), ring);
    const Json& o = j.at("order");
    r.order = o.is_string() && o.get<std::string>() == "FREE" ? SyzygyOrder::free() : SyzygyOrder::of(o.get<int>());
    r.free = j.at("free").get<bool>();
    r.zero = j.at("zero").get<bool>();
    r.free_rank = j.at("free_rank").get<std::size_t>();
    const Json& c = j.at("classification_predicted");
    if (c.is_number_integer()) r.classification_predicted = c.get<int>();
    r.consistent = j.at("consistent").get<bool>();
    return r;
  } catch (const Json::exception& e) {
    throw ReportFormatError(std::string("bad report record: ") + e.what());
  }
}

/// "<rows>x<cols>", optional label lines, then one comma-separated line per row.
inline std::string dump_matrix(const ModuleMap& f, const std::vector<Subset>& row_labels = {},
                               const std::vector<Subset>& col_labels = {}) {
  std::ostringstream out;
  out << f.rows() << "x" << f.cols() << "\n";
  auto labels = [&](const char* name, const std::vector<Subset>& v) {
    if (v.empty()) return;
    out << name << ":";
    for (auto s : v) out << " " << subset_to_string(s);
    out << "\n";
  };
  labels("rows", row_labels);
  labels("cols", col_labels);
  for (const auto& row : f.to_rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k].to_string();
    out << "\n";
  }
  return out.str();
}

inline std::string verdict_string(const SyzygyReport& r) {
  if (r.zero) return "ZERO";
  return r.order.to_string();
}

inline std::string report_to_text(const SyzygyReport& r, bool with_matrices = false) {
  std::ostringstream out;
  auto list = [](const std::vector<Subset>& v) {
    std::string s;
    for (auto x : v) s += " " + subset_to_string(x);
    return s;
  };
  const auto& p = r.params;
  out << "m = " << p.m << "\nn = " << p.n << "\nl =";
  for (const auto& x : p.ell) out << " " << to_string(x);
  out << "\nc = " << to_string(p.c) << "\nr = " << p.r() << "\n";
  out << "critical values:";
  for (const auto& v : r.critical_values) out << " " << to_string(v);
  out << "\ncr_min = " << to_string(r.cr_min) << "\n";
  out << "long sets (" << r.long_sets.size() << "):" << list(r.long_sets) << "\n";
  out << "short sets (" << r.short_sets.size() << "):" << list(r.short_sets) << "\n";
  out << "rank iota = " << r.rank_iota << "\n";
  out << "dim_H = " << r.dim_H << "\ndim_H_fixed = " << r.dim_H_fixed << "\n";
  out << "order = " << r.order.to_string() << "\n";
  out << "free = " << (r.free ? "true" : "false") << "\n";
  out << "zero = " << (r.zero ? "true" : "false") << "\n";
  out << "free rank = " << r.free_rank << "\n";
  out << "classification = "
      << (r.classification_predicted ? std::to_string(*r.classification_predicted) : std::string("below-maximal")) << "\n";
  out << "consistent = " << (r.consistent ? "true" : "false") << "\n";
  if (with_matrices) {
    out << "\n[iota]\n" << dump_matrix(r.iota.map, r.iota.rows, r.iota.cols);
    out << "\n[coker relations]\n" << dump_matrix(r.coker_pres.rels);
    out << "\n[ker relations]\n" << dump_matrix(r.ker_pres.rels);
  }
  return out.str();
}

}  // namespace z2syz
