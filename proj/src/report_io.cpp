#include "zrule/report_io.hpp"

#include <fstream>
#include <stdexcept>

namespace zrule::io {

using nlohmann::json;

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += quote(row[i]);
  }
  out += '\n';
}

const char* kind_name(ExtremeKind k) {
  switch (k) {
    case ExtremeKind::Minus1: return "minus1";
    case ExtremeKind::Exact: return "exact";
    case ExtremeKind::Plus1: return "plus1";
  }
  return "?";
}

}  // namespace

std::string to_csv(const CsvTable& table) {
  std::string out;
  append_row(out, table.header);
  for (const auto& r : table.rows) append_row(out, r);
  return out;
}

CsvTable west_csv(const WestEdge& edge) {
  CsvTable t{{"m", "value", "factorization", "omega"}, {}};
  for (std::size_t m = 1; m <= edge.size(); ++m) {
    const auto& v = edge.at(m);
    t.rows.push_back({std::to_string(m), decimal_string(v), factor_string(v), std::to_string(omega(v))});
  }
  return t;
}

CsvTable table1_csv(const std::vector<ExtremeRow>& rows) {
  CsvTable t{{"g", "m", "value", "magnitude", "factorization", "omega", "formula_agrees"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.g), std::to_string(r.m), decimal_string(r.value),
                      scientific_string(r.value), factor_string(r.value), std::to_string(r.omega),
                      r.formula_agrees ? (*r.formula_agrees ? "yes" : "no") : ""});
  }
  return t;
}

CsvTable table2_csv(const ComparisonStats& s) {
  CsvTable t{{"f", "s_nstar", "s_p"}, {}};
  for (std::size_t f = 0; f < s.surplus_nstar.size(); ++f) {
    t.rows.push_back({std::to_string(f), std::to_string(s.surplus_nstar[f]), std::to_string(s.surplus_p[f])});
  }
  return t;
}

CsvTable listing_csv(const DivisorListing& l) {
  CsvTable t{{"prime", "divides"}, {}};
  for (const auto& e : l.primes) t.rows.push_back({std::to_string(e.prime), e.divides ? "1" : "0"});
  return t;
}

CsvTable conjecture3_csv(const Conjecture3Report& rep) {
  CsvTable t{{"g", "index", "expected", "engine", "match"}, {}};
  for (const auto& e : rep.entries) {
    t.rows.push_back({std::to_string(e.g), std::to_string(e.index), decimal_string(e.expected),
                      decimal_string(e.engine), e.match ? "1" : "0"});
  }
  return t;
}

CsvTable factored_list_csv(const std::vector<FactoredNat>& values) {
  CsvTable t{{"value", "factorization"}, {}};
  for (const auto& v : values) t.rows.push_back({decimal_string(v), factor_string(v)});
  return t;
}

json to_json(const FactoredNat& n) {
  json a = json::array();
  for (const auto& f : n.factors()) a.push_back(json::array({f.prime, f.exponent}));
  return a;
}

namespace {

json value_json(const FactoredNat& n) {
  return json{{"value", decimal_string(n)}, {"factors", to_json(n)}};
}

json cells_json(const std::vector<Cell>& cells) {
  json a = json::array();
  for (const auto& [j, k] : cells) a.push_back(json::array({j, k}));
  return a;
}

}  // namespace

json to_json(const WestEdge& edge) {
  json terms = json::array();
  for (const auto& v : edge.terms) terms.push_back(value_json(v));
  return json{{"length", edge.size()}, {"terms", terms}};
}

json to_json(const Triangle& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(decimal_string(v));
    rows.push_back(std::move(r));
  }
  return json{{"origin", t.origin}, {"rows", rows}};
}

json to_json(const Tomography& t) {
  json rows = json::array();
  for (std::size_t j = 1; j <= t.depth(); ++j) {
    const auto r = t.row(j);
    rows.push_back(json(std::vector<std::uint16_t>(r.begin(), r.end())));
  }
  return json{{"prime", t.prime()}, {"window_offset", t.window_offset()}, {"width", t.width()},
              {"depth", t.depth()}, {"rows", rows}};
}

json to_json(const PeriodReport& r) {
  return json{{"prime", r.prime},
              {"pre_period_rows", r.pre_period_rows},
              {"minimal_period", r.minimal_period},
              {"bound", r.bound},
              {"witness", r.witness}};
}

json to_json(const SolitonReport& r) {
  return json{{"prime", r.prime},
              {"power", r.power},
              {"cells", cells_json(r.cells)},
              {"cell_count", r.cells.size()},
              {"bounding_box", json{{"row_min", r.row_min}, {"row_max", r.row_max},
                                    {"col_min", r.col_min}, {"col_max", r.col_max}}},
              {"touched_boundary", r.touched_boundary},
              {"max_exponent", r.max_exponent},
              {"half_width", r.half_width}};
}

json to_json(const DisjointnessReport& r) {
  json sol = json::array();
  for (const auto& s : r.solitons) sol.push_back(to_json(s));
  auto pairs = [](const std::vector<SolitonPair>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(json{{"g1", p.g1}, {"g2", p.g2}, {"distance", p.distance}});
    return a;
  };
  return json{{"prime", r.prime},         {"solitons", sol},
              {"pairs", pairs(r.pairs)},  {"overlaps", pairs(r.overlaps)},
              {"touchings", pairs(r.touchings)}, {"incomplete", r.incomplete},
              {"disjoint", r.disjoint()}};
}

json to_json(const std::vector<ExtremeRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    json o{{"g", r.g},
           {"m", r.m},
           {"value", decimal_string(r.value)},
           {"factors", to_json(r.value)},
           {"omega", r.omega},
           {"source", r.source == RowSource::Engine ? "engine" : "formula"}};
    if (r.formula_agrees) o["formula_agrees"] = *r.formula_agrees;
    a.push_back(std::move(o));
  }
  (void)kind_name;
  return a;
}

json to_json(const ComparisonStats& s) {
  return json{{"K", s.K},
              {"equality_indices", s.equality_indices},
              {"equality_count", s.equality_count},
              {"surplus_nstar", s.surplus_nstar},
              {"surplus_p", s.surplus_p}};
}

json to_json(const DivisorListing& l) {
  json d = json::array(), nd = json::array();
  for (const auto& e : l.primes) (e.divides ? d : nd).push_back(e.prime);
  return json{{"m", l.m}, {"omega", l.omega}, {"divisors", d}, {"non_divisors", nd}};
}

json to_json(const Conjecture3Report& r) {
  json a = json::array();
  for (const auto& e : r.entries) {
    a.push_back(json{{"g", e.g},
                     {"index", e.index},
                     {"expected", decimal_string(e.expected)},
                     {"engine", decimal_string(e.engine)},
                     {"match", e.match}});
  }
  return json{{"entries", a}, {"all_match", r.all_match()}};
}

json to_json(const SquarefreeReport& r) {
  json o{{"checked", r.checked}, {"ok", r.ok()}};
  if (r.first_violation) {
    o["first_violation"] = *r.first_violation;
    o["value"] = value_json(*r.violating_value);
  }
  return o;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace zrule::io
