#pragma once

#include <json.hpp>

#include "gtcl/transition.hpp"

namespace gtcl {

using Json = nlohmann::ordered_json;

inline Json pattern_to_json(const Pattern& p) {
  Json rows = Json::array();
  for (const auto& row : p.rows()) rows.push_back(row);
  return Json{{"bounding", p.row(p.size())}, {"rows", rows}};
}

inline Pattern pattern_from_json(const Json& j) {
  std::vector<std::vector<Entry>> rows;
  for (const auto& row : j.at("rows")) rows.push_back(row.get<std::vector<Entry>>());
  Pattern p = Pattern::from_rows(rows);
  if (j.contains("bounding") &&
      j.at("bounding").get<std::vector<Entry>>() != p.row(p.size()))
    throw std::invalid_argument("gtcl: bounding field disagrees with the last row");
  return p;
}

inline Json gt_vector_to_json(const GtVector& v) {
  Json terms = Json::array();
  for (const auto& [p, c] : v.terms())
    terms.push_back(Json{{"pattern", format_pattern(p)}, {"coeff", format_rational(c)}});
  return Json{{"bounding", v.bounding().entries()}, {"terms", terms}};
}

inline GtVector gt_vector_from_json(const Json& j) {
  const BoundingTuple bounding(j.at("bounding").get<std::vector<Entry>>());
  GtVector v(bounding);
  for (const auto& term : j.at("terms"))
    v.add_term(parse_pattern(term.at("pattern").get<std::string>(), bounding),
               parse_rational(term.at("coeff").get<std::string>()));
  return v;
}

inline Json transition_to_json(const TransitionMatrix& m) {
  Json order = Json::array();
  for (const Pattern& p : m.order) order.push_back(format_pattern(p));
  Json entries = Json::array();
  for (const auto& row : m.entries) {
    Json cells = Json::array();
    for (const Rational& c : row) cells.push_back(format_rational(c));
    entries.push_back(std::move(cells));
  }
  return Json{{"bounding", m.bounding.entries()}, {"order", order}, {"entries", entries}};
}

inline TransitionMatrix transition_from_json(const Json& j) {
  const BoundingTuple bounding(j.at("bounding").get<std::vector<Entry>>());
  TransitionMatrix m{bounding, {}, {}};
  for (const auto& text : j.at("order"))
    m.order.push_back(parse_pattern(text.get<std::string>(), bounding));
  for (const auto& row : j.at("entries")) {
    std::vector<Rational> cells;
    for (const auto& cell : row) cells.push_back(parse_rational(cell.get<std::string>()));
    if (cells.size() != m.order.size())
      throw std::invalid_argument("gtcl: transition matrix rows must be square");
    m.entries.push_back(std::move(cells));
  }
  if (m.entries.size() != m.order.size())
    throw std::invalid_argument("gtcl: transition matrix must be square");
  return m;
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

/// Header row of column patterns, then one row per CL vector prefixed by
/// its pattern; rationals as "p/q".
inline std::string transition_to_csv(const TransitionMatrix& m) {
  std::string out = "pattern";
  for (const Pattern& p : m.order) {
    out.push_back(',');
    out += csv_escape(format_pattern(p));
  }
  out.push_back('\n');
  for (int s = 0; s < m.size(); ++s) {
    out += csv_escape(format_pattern(m.order[s]));
    for (int t = 0; t < m.size(); ++t) {
      out.push_back(',');
      out += format_rational(m.entries[s][t]);
    }
    out.push_back('\n');
  }
  return out;
}

inline Json verification_report_to_json(const TriangularReport& triangular,
                                        const DiagonalReport& diagonal) {
  Json violations = Json::array();
  for (const auto& v : triangular.violations)
    violations.push_back(Json{{"kind", "triangularity"},
                              {"row", format_pattern(v.row_pattern)},
                              {"col", format_pattern(v.col_pattern)},
                              {"coeff", format_rational(v.coeff)}});
  for (const auto& d : diagonal.mismatches)
    violations.push_back(Json{{"kind", "diagonal"},
                              {"pattern", format_pattern(d.pattern)},
                              {"actual", format_rational(d.actual)},
                              {"predicted", format_rational(d.predicted)}});
  return Json{{"triangular", triangular.passed()},
              {"diagonal", diagonal.passed()},
              {"violations", violations}};
}

}  // namespace gtcl
