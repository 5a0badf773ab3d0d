#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "qfe/branches.hpp"

namespace qfe {

std::string BranchSymbol::str() const {
  return (kind == Kind::Alpha ? "a" : "b") + std::to_string(index);
}

std::string to_string(const BranchWord& w) {
  if (w.empty()) return "^";
  std::string s;
  for (const auto& sym : w) s += sym.str();
  return s;
}

int operation_index(const std::string& op_symbol) {
  std::size_t pos = op_symbol.size();
  while (pos > 0 && std::isdigit(static_cast<unsigned char>(op_symbol[pos - 1]))) --pos;
  if (pos == op_symbol.size()) return 1;
  return std::stoi(op_symbol.substr(pos));
}

namespace {

bool occurs(const std::string& var, const Term& t) {
  if (t.is_var()) return t.symbol() == var;
  return occurs(var, t.left()) || occurs(var, t.right());
}

BranchWord branch(const std::string& var, const Term& t, bool left_branch) {
  if (t.is_var()) {
    if (t.symbol() == var) return {};
    throw Error("variable '" + var + "' does not occur");
  }
  bool in_left = occurs(var, t.left());
  bool in_right = occurs(var, t.right());
  if (!in_left && !in_right) throw Error("variable '" + var + "' does not occur");
  int i = operation_index(t.symbol());
  BranchWord rest;
  BranchSymbol head;
  if (in_left && (!in_right || left_branch)) {
    head = {BranchSymbol::Kind::Alpha, i};
    rest = branch(var, t.left(), left_branch);
  } else {
    head = {BranchSymbol::Kind::Beta, i};
    rest = branch(var, t.right(), left_branch);
  }
  BranchWord w{head};
  w.insert(w.end(), rest.begin(), rest.end());
  return w;
}

}  // namespace

BranchWord lbranch(const std::string& var, const Term& t) { return branch(var, t, true); }
BranchWord rbranch(const std::string& var, const Term& t) { return branch(var, t, false); }

BranchWord lbranch(const std::string& var, const Equation& e) {
  if (occurs(var, e.lhs)) return lbranch(var, e.lhs);
  return lbranch(var, e.rhs);
}

BranchWord rbranch(const std::string& var, const Equation& e) {
  if (occurs(var, e.rhs)) return rbranch(var, e.rhs);
  return rbranch(var, e.lhs);
}

// The four level classics are instances of catalog entries with the two
// operations identified.
EquationId family_counterpart(const EquationId& id) {
  if (!id.is_named()) return id;
  if (id.name == "mediality") return EquationId{4, 1, ""};
  if (id.name == "paramediality") return EquationId{4, 16, ""};
  if (id.name == "intermediality") return EquationId{5, 10, ""};
  if (id.name == "extramediality") return EquationId{5, 21, ""};
  throw Error("no catalog counterpart for '" + id.str() + "'");
}

std::vector<Condition> conditions(const EquationId& raw_id) {
  EquationId id = family_counterpart(raw_id);
  Equation e = catalog(id);
  bool special = id.family == 5 && (id.index == 10 || id.index == 23);

  std::vector<Condition> out;
  out.push_back(GroupRequirement{!special});
  out.push_back(ConstCompat{});

  auto profiles = var_profiles(e);
  for (const auto& p : profiles) {
    if (p.kind != VarProfile::Kind::Linear) continue;
    out.push_back(LinearEq{p.variable, lbranch(p.variable, e), rbranch(p.variable, e)});
  }
  for (const auto& p : profiles) {
    if (p.kind == VarProfile::Kind::Linear) continue;
    const std::string& w = p.variable;
    if (!special) {
      out.push_back(Annihilate{w, lbranch(w, e), rbranch(w, e)});
    } else if (id.index == 10) {
      // left quadratic pairs with c1, right quadratic with c2
      int ci = p.kind == VarProfile::Kind::LeftQuadratic ? 1 : 2;
      out.push_back(Sandwich{w, lbranch(w, e), ci, rbranch(w, e)});
    } else {  // 5.23: the right-quadratic condition has its words swapped
      if (p.kind == VarProfile::Kind::LeftQuadratic)
        out.push_back(Sandwich{w, lbranch(w, e), 1, rbranch(w, e)});
      else
        out.push_back(Sandwich{w, rbranch(w, e), 2, lbranch(w, e)});
    }
  }
  if (special) out.push_back(DualTwist{2, id.index % 2 == 1});
  return out;
}

std::vector<LinearEq> identify_operations(const std::vector<Condition>& conds) {
  auto fold = [](BranchWord w) {
    for (auto& s : w) s.index = 1;
    return w;
  };
  std::vector<LinearEq> out;
  for (const auto& c : conds) {
    const auto* le = std::get_if<LinearEq>(&c);
    if (!le) continue;
    LinearEq folded{le->variable, fold(le->lhs), fold(le->rhs)};
    if (folded.lhs == folded.rhs) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const LinearEq& o) {
      return (o.lhs == folded.lhs && o.rhs == folded.rhs) ||
             (o.lhs == folded.rhs && o.rhs == folded.lhs);
    });
    if (!dup) out.push_back(std::move(folded));
  }
  return out;
}

DualReduction dual_reduce(const EquationId& id) {
  static const std::map<int, int> pairing = {
      {3, 25},  {4, 29},  {7, 26},  {8, 30},  {11, 17}, {12, 21},
      {15, 18}, {16, 22}, {19, 9},  {20, 13}, {23, 10}, {24, 14},
      {27, 1},  {28, 5},  {31, 2},  {32, 6}};
  if (id.family != 5) throw Error("dual_reduce applies to family-5 equations only");
  auto it = pairing.find(id.index);
  if (it == pairing.end())
    throw Error("equation " + id.str() + " is not in the dual-reducible list");
  return DualReduction{EquationId{5, it->second, ""}, {"f2"}};
}

Equation apply_duality(const Equation& e, const std::vector<std::string>& ops) {
  std::function<Term(const Term&)> walk = [&](const Term& t) -> Term {
    if (t.is_var()) return t;
    Term l = walk(t.left());
    Term r = walk(t.right());
    bool dual = std::find(ops.begin(), ops.end(), t.symbol()) != ops.end();
    if (dual) return Term::app(t.symbol(), std::move(r), std::move(l));
    return Term::app(t.symbol(), std::move(l), std::move(r));
  };
  return Equation{walk(e.lhs), walk(e.rhs)};
}

Equation canonical_rename(const Equation& e) {
  static const std::vector<std::string> alphabet = {"x", "y", "u", "v", "z", "w"};
  auto order = variables_in_order(e);
  if (order.size() > alphabet.size()) throw Error("too many variables to rename");
  std::map<std::string, std::string> renaming;
  for (std::size_t i = 0; i < order.size(); ++i) renaming[order[i]] = alphabet[i];
  std::function<Term(const Term&)> walk = [&](const Term& t) -> Term {
    if (t.is_var()) return Term::var(renaming.at(t.symbol()));
    return Term::app(t.symbol(), walk(t.left()), walk(t.right()));
  };
  return Equation{walk(e.lhs), walk(e.rhs)};
}

}  // namespace qfe
