#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qfe/term.hpp"

namespace qfe {

/// Identifier for a catalog entry: a family/index pair ("4.1".."5.32")
/// or one of the twelve named classics.
struct EquationId {
  int family = 0;  // 4 or 5; 0 for named equations
  int index = 0;   // 1..16 / 1..32 when family != 0
  std::string name;

  bool is_named() const { return family == 0; }
  std::string str() const;
  bool operator==(const EquationId&) const = default;
  bool operator<(const EquationId& o) const {
    return std::tie(family, index, name) < std::tie(o.family, o.index, o.name);
  }
};

/// Parses "4.1", "5.32", or a name such as "mediality". Throws on
/// malformed or out-of-range ids.
EquationId parse_equation_id(const std::string& text);

/// Names of the twelve classic equations, in their customary order.
const std::vector<std::string>& named_equations();

/// Returns the catalog AST for the given id. Throws on unknown ids.
Equation catalog(const EquationId& id);

/// One formal symbol alpha_i or beta_i.
struct BranchSymbol {
  enum class Kind { Alpha, Beta };
  Kind kind = Kind::Alpha;
  int index = 1;  // operation index i

  bool operator==(const BranchSymbol&) const = default;
  bool operator<(const BranchSymbol& o) const {
    return std::tie(kind, index) < std::tie(o.kind, o.index);
  }
  std::string str() const;  // "a1", "b2", ...
};

/// Composition word, outermost first: {s1,s2} applied to x is s1(s2(x)).
using BranchWord = std::vector<BranchSymbol>;

std::string to_string(const BranchWord& w);  // empty word prints as "^"

/// Operation index of a symbol: trailing decimal suffix, or 1 when absent
/// ("f1" -> 1, "g3" -> 3, "f" -> 1).
int operation_index(const std::string& op_symbol);

/// Branch words of a variable in a term or equation (Lbranch/Rbranch
/// recursion, including the equation-level membership split). Throws if
/// the variable does not occur.
BranchWord lbranch(const std::string& var, const Term& t);
BranchWord rbranch(const std::string& var, const Term& t);
BranchWord lbranch(const std::string& var, const Equation& e);
BranchWord rbranch(const std::string& var, const Equation& e);

// --- solvability conditions -------------------------------------------------

/// lhs(x) = rhs(x) for all x.
struct LinearEq {
  std::string variable;
  BranchWord lhs, rhs;
  bool operator==(const LinearEq&) const = default;
};
/// first(x) + second(x) = 0 for all x.
struct Annihilate {
  std::string variable;
  BranchWord first, second;
  bool operator==(const Annihilate&) const = default;
};
/// first(x) + c_i + second(x) = c_i for all x.
struct Sandwich {
  std::string variable;
  BranchWord first;
  int constant_index = 1;  // 1 or 2
  BranchWord second;
  bool operator==(const Sandwich&) const = default;
};
/// f1(c2,c2) = f2(c1,c1).
struct ConstCompat {
  bool operator==(const ConstCompat&) const = default;
};
/// Carrier-group requirement.
struct GroupRequirement {
  bool abelian = true;
  bool operator==(const GroupRequirement&) const = default;
};
/// Operation op_index is written with the sum reversed when odd.
struct DualTwist {
  int op_index = 2;
  bool odd = false;
  bool operator==(const DualTwist&) const = default;
};

using Condition =
    std::variant<GroupRequirement, ConstCompat, LinearEq, Annihilate, Sandwich, DualTwist>;

/// Maps the four level classics (mediality, paramediality, intermediality,
/// extramediality) to the catalog entries they instantiate; family ids are
/// returned unchanged. Throws for other named ids.
EquationId family_counterpart(const EquationId& id);

/// Symbolic solvability conditions for a covered id, in canonical order:
/// group requirement, ConstCompat, linear variables in equation order,
/// quadratic-variable conditions, dual twist. Throws for ids outside the
/// covered families (the four level classics map to their family
/// counterparts).
std::vector<Condition> conditions(const EquationId& id);

/// Rewrites a condition list under the identification f1 = f2
/// (alpha2 -> alpha1, beta2 -> beta1, c2 -> c1), dropping conditions that
/// become trivial and duplicates modulo swapping the two sides.
std::vector<LinearEq> identify_operations(const std::vector<Condition>& conds);

/// Duality pairing of the reducible family-5 equations. Returns the
/// target id and the set of dualized operation symbols. Throws for ids
/// outside the mapped list.
struct DualReduction {
  EquationId target;
  std::vector<std::string> dualized_ops;
};
DualReduction dual_reduce(const EquationId& id);

/// Swaps the two arguments of every occurrence of the given operations.
Equation apply_duality(const Equation& e, const std::vector<std::string>& ops);

/// Renames variables to x,y,u,v,... in first-appearance order.
Equation canonical_rename(const Equation& e);

}  // namespace qfe
