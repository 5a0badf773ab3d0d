// Acceptance gate: one checkable criterion per invocation, selected by
// the single numeric argument. Prints exactly one "criterion N: PASS" /
// "criterion N: FAIL (...)" line and exits 0/1 accordingly.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <fstream>

#include "qfe/json_io.hpp"
#include "qfe/krstic.hpp"
#include "qfe/solver.hpp"

using namespace qfe;

namespace {

std::vector<EquationId> all48() {
  std::vector<EquationId> ids;
  for (int j = 1; j <= 16; ++j) ids.push_back({4, j, ""});
  for (int j = 1; j <= 32; ++j) ids.push_back({5, j, ""});
  return ids;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

BranchWord word(const std::string& compact) {
  BranchWord w;
  for (std::size_t i = 0; i + 1 < compact.size(); i += 2)
    w.push_back({compact[i] == 'a' ? BranchSymbol::Kind::Alpha : BranchSymbol::Kind::Beta,
                 compact[i + 1] - '0'});
  return w;
}

LatinSquare transpose(const LatinSquare& s) {
  LatinSquare t{s.n, std::vector<std::vector<int>>(s.n, std::vector<int>(s.n))};
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) t.cells[j][i] = s.cells[i][j];
  return t;
}

// ---------------------------------------------------------------------------

// 1. Catalog dichotomy: 16 + 32 entries; all graphs 6 vertices / 9 edges,
// cubic, 3-connected; shapes split K33 / prism by family. < 1 s.
std::string criterion1() {
  for (const auto& id : all48()) {
    auto g = build_graph(catalog(id));
    if (g.vertices.size() != 6) return id.str() + ": vertex count " + std::to_string(g.vertices.size());
    if (g.edges.size() != 9) return id.str() + ": edge count " + std::to_string(g.edges.size());
    for (int v = 0; v < 6; ++v)
      if (g.degree(v) != 3) return id.str() + ": not cubic";
    if (!is_three_connected(g)) return id.str() + ": not 3-connected";
    auto shape = classify_shape(g).shape;
    if (id.family == 4 && shape != GraphShape::K33) return id.str() + ": expected K33";
    if (id.family == 5 && shape != GraphShape::Prism) return id.str() + ": expected prism";
  }
  return "";
}

// 2. Classification table of the twelve named equations.
std::string criterion2() {
  const std::set<std::string> expect_balanced = {"commutativity", "associativity", "mediality",
                                                "paramediality", "4-palindromic", "trivial",
                                                "eq13"};
  const std::set<std::string> expect_quad_not_bal = {"transitivity", "intermediality",
                                                     "extramediality"};
  const std::set<std::string> expect_not_quad = {"distributivity", "idempotency"};
  const std::set<std::string> expect_belousov = {"commutativity", "4-palindromic", "trivial",
                                                 "eq13"};
  const std::set<std::string> expect_level = {"commutativity", "mediality", "paramediality",
                                              "intermediality", "extramediality", "4-palindromic",
                                              "trivial"};
  std::set<std::string> balanced, quad_not_bal, not_quad, belousov, level;
  for (const auto& name : named_equations()) {
    auto e = catalog(parse_equation_id(name));
    bool q = is_quadratic(e), b = is_balanced(e);
    if (b) balanced.insert(name);
    if (q && !b) quad_not_bal.insert(name);
    if (!q) not_quad.insert(name);
    if (b && is_belousov(e)) belousov.insert(name);
    if (q && is_level(e)) level.insert(name);
  }
  if (balanced != expect_balanced) return "balanced set mismatch";
  if (quad_not_bal != expect_quad_not_bal) return "quadratic-not-balanced set mismatch";
  if (not_quad != expect_not_quad) return "non-quadratic set mismatch";
  if (belousov != expect_belousov) return "belousov set mismatch";
  if (level != expect_level) return "level set mismatch";
  return "";
}

// 3. Condition-generator regression: the medial and paramedial quadruples
// and the folded single relations under f1 = f2.
std::string criterion3() {
  auto rels = [](const EquationId& id) {
    std::vector<std::pair<BranchWord, BranchWord>> out;
    for (const auto& c : conditions(id))
      if (const auto* le = std::get_if<LinearEq>(&c)) out.emplace_back(le->lhs, le->rhs);
    return out;
  };
  auto medial = rels({4, 1, ""});
  std::vector<std::pair<BranchWord, BranchWord>> expect_medial = {
      {word("a1a2"), word("a2a1")},
      {word("a1b2"), word("b2a1")},
      {word("b1a2"), word("a2b1")},
      {word("b1b2"), word("b2b1")}};
  if (medial != expect_medial) return "medial quadruple mismatch";

  auto paramedial = rels({4, 16, ""});
  std::vector<std::pair<BranchWord, BranchWord>> expect_paramedial = {
      {word("a1a2"), word("b2b1")},
      {word("a1b2"), word("a2b1")},
      {word("b1a2"), word("b2a1")},
      {word("b1b2"), word("a2a1")}};
  if (paramedial != expect_paramedial) return "paramedial quadruple mismatch";

  auto toyoda = identify_operations(conditions(parse_equation_id("mediality")));
  if (toyoda.size() != 1 || toyoda[0].lhs != word("a1b1") || toyoda[0].rhs != word("b1a1"))
    return "folded mediality is not the commuting pair";
  auto nk = identify_operations(conditions(parse_equation_id("paramediality")));
  if (nk.size() != 1 || nk[0].lhs != word("a1a1") || nk[0].rhs != word("b1b1"))
    return "folded paramediality is not alpha^2 = beta^2";
  return "";
}

// 4. Soundness sweep over Z5: each equation yields a verified pair with a
// non-identity automorphism. < 60 s.
std::string criterion4() {
  auto z5 = make_group("Z5");
  std::vector<std::string> missing;
  for (const auto& id : all48()) {
    bool witness = false;
    for (const auto& sp : synthesize(id, z5)) {
      if (!sp.verified) return id.str() + ": unverified pair emitted";
      bool nonid = false;
      for (const auto& p : sp.params)
        if (!is_identity(p.alpha) || !is_identity(p.beta)) nonid = true;
      if (!nonid) continue;
      Interpretation i{5, {{"f1", sp.tables[0]}, {"f2", sp.tables[1]}}};
      if (!verify_equation(i, catalog(id)).ok()) return id.str() + ": verifier disagrees";
      witness = true;
      break;
    }
    if (!witness) missing.push_back(id.str());
  }
  if (!missing.empty()) {
    std::string s = "no qualifying pair over Z5 for:";
    for (const auto& m : missing) s += " " + m;
    return s;
  }
  return "";
}

// 5. Oracle completeness at order 3: exhaustive search equals synthesis
// over every group structure on the carrier; certificates exist, abelian
// where demanded. < 120 s.
std::string criterion5() {
  auto groups = groups_on_carrier(3);
  for (const auto& id : all48()) {
    bool special = id.family == 5 && (id.index == 10 || id.index == 23);
    std::set<std::pair<LatinSquare, LatinSquare>> via_search, via_synth;
    for (const auto& i : exhaustive_search(id, 3))
      via_search.insert({i.ops.at("f1"), i.ops.at("f2")});
    for (const auto& g : groups)
      for (const auto& sp : synthesize(id, g)) via_synth.insert({sp.tables[0], sp.tables[1]});
    if (via_search != via_synth)
      return id.str() + ": search " + std::to_string(via_search.size()) + " vs synthesis " +
             std::to_string(via_synth.size());
    for (const auto& [f1, f2] : via_search) {
      auto cert = find_linear_certificate(f1, f2, /*require_abelian=*/false);
      if (!cert) return id.str() + ": pair without linear certificate";
      if (!special && !cert->group.abelian) return id.str() + ": non-abelian certificate";
    }
  }
  return "";
}

// 6. Non-abelian witnesses for (5.10) and (5.23) over S3.
std::string criterion6() {
  auto s3 = make_group("S3");
  auto w10 = synthesize(EquationId{5, 10, ""}, s3, 1);
  auto w23 = synthesize(EquationId{5, 23, ""}, s3, 1);
  if (w10.empty() && w23.empty())
    return "synthesize((5.10),S3) and ((5.23),S3) are both empty";
  if (w10.empty()) return "synthesize((5.10),S3) is empty";
  if (w23.empty()) return "synthesize((5.23),S3) is empty";
  if (!w23[0].params[1].reversed) return "(5.23) witness lacks the reversed f2";
  return "";
}

// 7. Gemini semi-decision: the bank refutes all 48 and stays silent on the
// four gemini classics. < 30 s.
std::string criterion7() {
  for (const auto& id : all48())
    if (!gemini_refute(catalog(id)).refuted) return id.str() + ": not refuted";
  for (const char* name : {"commutativity", "trivial", "4-palindromic", "eq13"})
    if (gemini_refute(catalog(parse_equation_id(name))).refuted)
      return std::string(name) + ": wrongly refuted";
  return "";
}

// 8. Holomorphisms of Z6 are exactly the 12 maps x -> phi(x) + k, and the
// decomposition recovers phi and k on each of them.
std::string criterion8() {
  auto g = make_group("Z6");
  std::set<Perm> expected;
  for (const auto& phi : automorphisms(g))
    for (int k = 0; k < 6; ++k) {
      Perm m(6);
      for (int x = 0; x < 6; ++x) m[x] = g.op(phi[x], k);
      expected.insert(m);
    }
  if (expected.size() != 12) return "expected family has size " + std::to_string(expected.size());
  std::set<Perm> found;
  Perm p = {0, 1, 2, 3, 4, 5};
  do {
    if (is_holomorphism(p, g)) found.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (found != expected) return "holomorphism set mismatch (" + std::to_string(found.size()) + ")";
  for (const auto& m : found) {
    auto d = decompose_holomorphism(m, g);
    if (d.k1 != d.k2) return "asymmetric constants";
    for (int x = 0; x < 6; ++x)
      if (m[x] != g.op(d.phi[x], d.k1)) return "decomposition does not recompose";
    if (!is_automorphism(g, d.phi)) return "decomposed map is not an automorphism";
  }
  return "";
}

// 9. Hyperidentity: the (Z5; x+y, 2x+3y, 3x+2y) algebra passes, admits a
// shared-Z5 representation, and every single-cell perturbation is caught
// (spot-checked end-to-end through the CLI with exit status 1).
std::string criterion9() {
  auto z5 = make_group("Z5");
  auto affine = [&](int a, int b) {
    LatinSquare t{5, std::vector<std::vector<int>>(5, std::vector<int>(5))};
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) t.cells[x][y] = (a * x + b * y) % 5;
    return t;
  };
  Algebra a{5, {affine(1, 1), affine(2, 3), affine(3, 2)}};
  EquationId id{4, 1, ""};
  if (!check_hyperidentity(a, id).ok()) return "base algebra fails the hyperidentity";
  auto rep = represent_hyperalgebra(a, id);
  if (!rep) return "no shared representation found";
  if (rep->group.order() != 5 || !rep->group.abelian) return "representation group is not Z5";
  for (std::size_t k = 0; k < a.operations.size(); ++k)
    for (std::size_t l = 0; l < a.operations.size(); ++l) {
      int ck = rep->certificates[k].c, cl = rep->certificates[l].c;
      if (a.operations[l].at(ck, ck) != a.operations[k].at(cl, cl))
        return "constant compatibility violated";
    }
  // every single-cell perturbation of every table must be caught
  for (std::size_t t = 0; t < a.operations.size(); ++t)
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        for (int d = 1; d < 5; ++d) {
          Algebra bad = a;
          bad.operations[t].cells[x][y] = (bad.operations[t].cells[x][y] + d) % 5;
          if (check_hyperidentity(bad, id).ok())
            return "perturbation passed undetected at table " + std::to_string(t);
        }
  // end-to-end exit-status check through the CLI
  Algebra bad = a;
  bad.operations[1].cells[2][4] = (bad.operations[1].cells[2][4] + 1) % 5;
  json file{{"order", 5}, {"operations", json::array()}};
  for (const auto& t : bad.operations) file["operations"].push_back(to_json(t));
  const std::string path = "/tmp/qfe_acceptance_algebra.json";
  std::ofstream(path) << file.dump();
  std::string cmd = std::string(QFE_CLI_PATH) + " hyper 4.1 --algebra " + path + " > /dev/null";
  int status = std::system(cmd.c_str());
  int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (exit_code != 1) return "CLI exit status " + std::to_string(exit_code) + ", expected 1";
  return "";
}

// 10. Duality transport: the syntactic reduction lands on its target and
// order-3 solution sets correspond under transposing f2.
std::string criterion10() {
  for (int k = 1; k <= 32; ++k) {
    DualReduction r;
    try {
      r = dual_reduce(EquationId{5, k, ""});
    } catch (const Error&) {
      continue;  // not in the mapped list
    }
    auto transformed = canonical_rename(apply_duality(catalog(EquationId{5, k, ""}), r.dualized_ops));
    if (print(transformed) != print(catalog(r.target)))
      return "5." + std::to_string(k) + ": transform does not land on " + r.target.str();

    std::set<std::pair<LatinSquare, LatinSquare>> from_source, from_target;
    for (const auto& i : exhaustive_search(EquationId{5, k, ""}, 3))
      from_source.insert({i.ops.at("f1"), transpose(i.ops.at("f2"))});
    for (const auto& i : exhaustive_search(r.target, 3))
      from_target.insert({i.ops.at("f1"), i.ops.at("f2")});
    if (from_source != from_target)
      return "5." + std::to_string(k) + ": order-3 solution sets do not correspond";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..10>\n";
    return 2;
  }
  int n = std::atoi(argv[1]);
  double budget = 0;  // seconds; 0 = no budget
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  switch (n) {
    case 1: budget = 1; detail = criterion1(); break;
    case 2: detail = criterion2(); break;
    case 3: detail = criterion3(); break;
    case 4: budget = 60; detail = criterion4(); break;
    case 5: budget = 120; detail = criterion5(); break;
    case 6: detail = criterion6(); break;
    case 7: budget = 30; detail = criterion7(); break;
    case 8: detail = criterion8(); break;
    case 9: detail = criterion9(); break;
    case 10: detail = criterion10(); break;
    default:
      std::cerr << "usage: acceptance <criterion 1..10>\n";
      return 2;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (detail.empty() && budget > 0 && elapsed > budget) {
    std::ostringstream os;
    os << "runtime " << elapsed << "s exceeds budget " << budget << "s";
    detail = os.str();
  }
  if (detail.empty()) {
    std::cout << "criterion " << n << ": PASS\n";
    return 0;
  }
  std::cout << "criterion " << n << ": FAIL (" << detail << ")\n";
  return 1;
}
