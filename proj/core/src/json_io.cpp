#include <fstream>

#include "qfe/json_io.hpp"

namespace qfe {

json to_json(const LatinSquare& s) { return json(s.cells); }

json to_json(const KrsticGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
  return json{{"vertices", g.vertices}, {"edges", edges}};
}

json to_json(const BranchWord& w) {
  json a = json::array();
  for (const auto& s : w) a.push_back(s.str());
  return a;
}

json to_json(const Condition& c) {
  if (const auto* gr = std::get_if<GroupRequirement>(&c))
    return json{{"kind", "group"}, {"abelian", gr->abelian}};
  if (std::get_if<ConstCompat>(&c)) return json{{"kind", "constCompat"}};
  if (const auto* le = std::get_if<LinearEq>(&c))
    return json{{"kind", "linear"},
                {"variable", le->variable},
                {"lhs", to_json(le->lhs)},
                {"rhs", to_json(le->rhs)}};
  if (const auto* an = std::get_if<Annihilate>(&c))
    return json{{"kind", "annihilate"},
                {"variable", an->variable},
                {"first", to_json(an->first)},
                {"second", to_json(an->second)}};
  if (const auto* sw = std::get_if<Sandwich>(&c))
    return json{{"kind", "sandwich"},
                {"variable", sw->variable},
                {"first", to_json(sw->first)},
                {"constantIndex", sw->constant_index},
                {"second", to_json(sw->second)}};
  const auto& dt = std::get<DualTwist>(c);
  return json{{"kind", "dualTwist"}, {"opIndex", dt.op_index}, {"odd", dt.odd}};
}

json to_json(const std::vector<Condition>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

json to_json(const OpParams& p, const LatinSquare& table) {
  return json{{"alpha", p.alpha},
              {"c", p.c},
              {"beta", p.beta},
              {"reversed", p.reversed},
              {"table", to_json(table)}};
}

json to_json(const SolutionPair& sp) {
  json ops = json::array();
  for (std::size_t k = 0; k < sp.params.size(); ++k)
    ops.push_back(to_json(sp.params[k], sp.tables[k]));
  return json{{"group", json{{"spec", sp.group.spec}, {"table", to_json(sp.group.table)}}},
              {"ops", ops},
              {"verified", sp.verified}};
}

json to_json(const Interpretation& i) {
  json ops = json::array();
  for (const auto& [sym, table] : i.ops)
    ops.push_back(json{{"symbol", sym}, {"table", to_json(table)}});
  return json{{"order", i.n}, {"ops", ops}};
}

json to_json(const Counterexample& ce) {
  json assignment = json::object();
  for (const auto& [var, val] : ce.assignment) assignment[var] = val;
  return json{{"assignment", assignment}, {"lhs", ce.lhs_value}, {"rhs", ce.rhs_value}};
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("bad JSON in '" + path + "': " + ex.what());
  }
  return j;
}

// Shape and range checks only: a malformed (non-Latin) table is legal
// input — the point of verification is to find where it breaks.
LatinSquare square_from(const json& cells, int order, const std::string& path) {
  LatinSquare s;
  s.n = order;
  s.cells = cells.get<std::vector<std::vector<int>>>();
  if (static_cast<int>(s.cells.size()) != order)
    throw Error("table in '" + path + "' has the wrong number of rows");
  for (const auto& row : s.cells) {
    if (static_cast<int>(row.size()) != order)
      throw Error("table in '" + path + "' has a row of the wrong length");
    for (int v : row)
      if (v < 0 || v >= order) throw Error("table entry out of range in '" + path + "'");
  }
  return s;
}

}  // namespace

std::vector<LatinSquare> tables_from_file(const std::string& path) {
  json j = read_json_file(path);
  int order = j.at("order").get<int>();
  std::vector<LatinSquare> out;
  for (const auto& t : j.at("tables")) out.push_back(square_from(t, order, path));
  return out;
}

Algebra algebra_from_file(const std::string& path) {
  json j = read_json_file(path);
  Algebra a;
  a.n = j.at("order").get<int>();
  for (const auto& t : j.at("operations")) a.operations.push_back(square_from(t, a.n, path));
  if (a.operations.empty()) throw Error("algebra in '" + path + "' has no operations");
  return a;
}

LatinSquare table_from_spec(const std::string& spec) {
  if (spec == "sloop10") return steiner_loop_10().table;
  if (spec.rfind("file:", 0) == 0) {
    json j = read_json_file(spec.substr(5));
    return square_from(j.at("table"), j.at("order").get<int>(), spec);
  }
  return make_group(spec).table;
}

}  // namespace qfe
