// Command-line front-end: catalog inspection, classification, graphs,
// solvability conditions, synthesis and search over finite carriers.
//
// Exit codes: 0 = property holds / data emitted, 1 = checked property
// fails (counterexample emitted), 2 = usage or input error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfe/json_io.hpp"

namespace {

using qfe::json;

qfe::Equation resolve_equation(const std::string& id_text, const std::string& expr) {
  if (!expr.empty()) return qfe::parse_equation(expr);
  return qfe::catalog(qfe::parse_equation_id(id_text));
}

const char* kind_name(qfe::VarProfile::Kind k) {
  switch (k) {
    case qfe::VarProfile::Kind::Linear: return "linear";
    case qfe::VarProfile::Kind::LeftQuadratic: return "leftQuadratic";
    case qfe::VarProfile::Kind::RightQuadratic: return "rightQuadratic";
    default: return "other";
  }
}

int count_in(const std::string& var, const qfe::Term& t) {
  if (t.is_var()) return t.symbol() == var ? 1 : 0;
  return count_in(var, t.left()) + count_in(var, t.right());
}

json classify_json(const qfe::Equation& e) {
  json out;
  bool quadratic = qfe::is_quadratic(e);
  bool balanced = qfe::is_balanced(e);
  out["quadratic"] = quadratic;
  out["balanced"] = balanced;
  out["belousov"] = balanced ? json(qfe::is_belousov(e)) : json(nullptr);
  out["level"] = quadratic ? json(qfe::is_level(e)) : json(nullptr);
  if (quadratic) {
    auto v = qfe::gemini_refute(e);
    out["gemini_verdict"] = v.refuted ? json{{"verdict", "NonGemini"},
                                            {"model", v.model},
                                            {"counterexample", qfe::to_json(*v.counterexample)}}
                                      : json{{"verdict", "GeminiUnknown"}};
  } else {
    out["gemini_verdict"] = nullptr;
  }
  json vars = json::array();
  if (quadratic) {
    for (const auto& p : qfe::var_profiles(e))
      vars.push_back({{"variable", p.variable},
                      {"total", p.total},
                      {"lhs", p.lhs},
                      {"rhs", p.rhs},
                      {"kind", kind_name(p.kind)}});
  } else {
    for (const auto& v : qfe::variables_in_order(e)) {
      int l = count_in(v, e.lhs), r = count_in(v, e.rhs);
      vars.push_back(
          {{"variable", v}, {"total", l + r}, {"lhs", l}, {"rhs", r}, {"kind", "other"}});
    }
  }
  out["variables"] = vars;
  return out;
}

json interpretation_with_certificate(const qfe::Interpretation& interp, bool certify) {
  json j = qfe::to_json(interp);
  if (!certify) return j;
  // pair up f1/f2 (or duplicate the single table) for the certificate search
  std::vector<qfe::LatinSquare> tables;
  for (const auto& [sym, t] : interp.ops) tables.push_back(t);
  const auto& f1 = tables.front();
  const auto& f2 = tables.size() > 1 ? tables[1] : tables.front();
  auto cert = qfe::find_linear_certificate(f1, f2, /*require_abelian=*/false);
  if (cert) {
    j["certificate"] = {
        {"group", {{"spec", cert->group.spec}, {"table", qfe::to_json(cert->group.table)}}},
        {"abelian", cert->group.abelian},
        {"f1", qfe::to_json(cert->f1, f1)},
        {"f2", qfe::to_json(cert->f2, f2)}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasigroup functional equation toolkit"};
  app.require_subcommand(1);

  std::string id_text, expr, group_spec, format = "dot", tables_file, algebra_file, family;
  std::size_t limit = 0;
  bool all = false, certify = false, represent = false;
  int order = 3;

  auto* cat = app.add_subcommand("catalog", "list equations");
  cat->add_option("--family", family, "4, 5 or named")->check(CLI::IsMember({"4", "5", "named"}));

  auto* cls = app.add_subcommand("classify", "syntactic classification");
  cls->add_option("id", id_text, "equation id");
  cls->add_option("--expr", expr, "equation text");

  auto* gra = app.add_subcommand("graph", "operation-occurrence graph");
  gra->add_option("id", id_text, "equation id");
  gra->add_option("--expr", expr, "equation text");
  gra->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* con = app.add_subcommand("conditions", "solvability conditions");
  con->add_option("id", id_text, "equation id")->required();

  auto* syn = app.add_subcommand("synthesize", "solutions over a group");
  syn->add_option("id", id_text, "equation id")->required();
  syn->add_option("--group", group_spec, "group spec")->required();
  syn->add_option("--limit", limit, "emit at most this many");
  syn->add_flag("--all", all, "emit all solutions");

  auto* ver = app.add_subcommand("verify", "check tables against an equation");
  ver->add_option("id", id_text, "equation id");
  ver->add_option("--expr", expr, "equation text");
  ver->add_option("--tables", tables_file, "JSON {order,tables}")->required();

  auto* sea = app.add_subcommand("search", "exhaustive search at small order");
  sea->add_option("id", id_text, "equation id")->required();
  sea->add_option("--order", order, "carrier size (1..4)")->required();
  sea->add_flag("--certify", certify, "attach linear certificates");

  auto* gem = app.add_subcommand("gemini", "model-refutation verdict");
  gem->add_option("id", id_text, "equation id");
  gem->add_option("--expr", expr, "equation text");

  auto* hyp = app.add_subcommand("hyper", "hyperidentity check");
  hyp->add_option("id", id_text, "equation id")->required();
  hyp->add_option("--algebra", algebra_file, "JSON {order,operations}")->required();
  hyp->add_flag("--represent", represent, "emit a linear representation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*cat) {
      json out = json::array();
      auto emit = [&](const qfe::EquationId& id) {
        out.push_back({{"id", id.str()}, {"text", qfe::print(qfe::catalog(id))}});
      };
      if (family.empty() || family == "4")
        for (int j = 1; j <= 16; ++j) emit({4, j, ""});
      if (family.empty() || family == "5")
        for (int j = 1; j <= 32; ++j) emit({5, j, ""});
      if (family.empty() || family == "named")
        for (const auto& name : qfe::named_equations()) emit({0, 0, name});
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*cls) {
      std::cout << classify_json(resolve_equation(id_text, expr)).dump(2) << "\n";
      return 0;
    }
    if (*gra) {
      auto g = qfe::build_graph(resolve_equation(id_text, expr));
      if (format == "dot") {
        std::cout << qfe::to_dot(g);
        return 0;
      }
      json out = qfe::to_json(g);
      out["threeConnected"] = qfe::is_three_connected(g);
      auto shape = qfe::classify_shape(g);
      out["shape"] = qfe::to_string(shape.shape);
      if (shape.shape == qfe::GraphShape::Other) out["certificate"] = shape.certificate;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*con) {
      auto cs = qfe::conditions(qfe::parse_equation_id(id_text));
      std::cout << qfe::to_json(cs).dump(2) << "\n";
      return 0;
    }
    if (*syn) {
      auto id = qfe::parse_equation_id(id_text);
      auto g = qfe::make_group(group_spec);
      auto pairs = qfe::synthesize(id, g, all ? 0 : limit);
      json out = json::array();
      for (const auto& p : pairs) out.push_back(qfe::to_json(p));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*ver) {
      auto e = resolve_equation(id_text, expr);
      auto tables = qfe::tables_from_file(tables_file);
      auto syms = qfe::operation_symbols(e);
      if (tables.size() < syms.size())
        throw qfe::Error("equation needs " + std::to_string(syms.size()) + " tables, file has " +
                         std::to_string(tables.size()));
      qfe::Interpretation interp{tables.front().n, {}};
      for (std::size_t k = 0; k < syms.size(); ++k) interp.ops[syms[k]] = tables[k];
      auto r = qfe::verify_equation(interp, e);
      if (r.ok()) {
        std::cout << json{{"holds", true}}.dump(2) << "\n";
        return 0;
      }
      std::cout << json{{"holds", false}, {"counterexample", qfe::to_json(*r.counterexample)}}
                       .dump(2)
                << "\n";
      return 1;
    }
    if (*sea) {
      auto id = qfe::parse_equation_id(id_text);
      auto found = qfe::exhaustive_search(id, order);
      json out = json::array();
      for (const auto& interp : found) out.push_back(interpretation_with_certificate(interp, certify));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*gem) {
      auto v = qfe::gemini_refute(resolve_equation(id_text, expr));
      if (v.refuted) {
        std::cout << json{{"verdict", "NonGemini"},
                          {"model", v.model},
                          {"counterexample", qfe::to_json(*v.counterexample)}}
                         .dump(2)
                  << "\n";
        return 1;
      }
      std::cout << json{{"verdict", "GeminiUnknown"}}.dump(2) << "\n";
      return 0;
    }
    if (*hyp) {
      auto id = qfe::parse_equation_id(id_text);
      auto a = qfe::algebra_from_file(algebra_file);
      auto r = qfe::check_hyperidentity(a, id);
      json out;
      if (!r.ok()) {
        out["holds"] = false;
        out["substitution"] = r.counterexample->substitution;
        out["counterexample"] = qfe::to_json(r.counterexample->inner);
        std::cout << out.dump(2) << "\n";
        return 1;
      }
      out["holds"] = true;
      if (represent) {
        auto rep = qfe::represent_hyperalgebra(a, id);
        if (!rep) {
          out["representation"] = nullptr;
          std::cout << out.dump(2) << "\n";
          return 1;
        }
        json certs = json::array();
        for (std::size_t k = 0; k < rep->certificates.size(); ++k)
          certs.push_back(qfe::to_json(rep->certificates[k], a.operations[k]));
        out["representation"] = {
            {"group", {{"spec", rep->group.spec}, {"table", qfe::to_json(rep->group.table)}}},
            {"certificates", certs}};
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const qfe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
