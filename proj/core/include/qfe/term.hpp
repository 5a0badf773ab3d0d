#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfe {

/// Base error for all domain-level failures in this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A term is either an object variable or a binary application f(s,t).
/// Value type; two terms compare equal iff they are the same tree.
class Term {
 public:
  static Term var(std::string name);
  static Term app(std::string op, Term left, Term right);

  bool is_var() const { return children_.empty(); }
  bool is_app() const { return !children_.empty(); }
  /// Variable name or operation symbol, depending on node kind.
  const std::string& symbol() const { return symbol_; }
  const Term& left() const;
  const Term& right() const;

  bool operator==(const Term&) const = default;

 private:
  Term() = default;
  std::string symbol_;
  std::vector<Term> children_;  // empty for a variable, exactly two otherwise
};

struct Equation {
  Term lhs;
  Term rhs;
  bool operator==(const Equation&) const = default;
};

/// Parses `term "=" term`, term ::= var | op "(" term "," term ")".
/// Identifiers are alphanumeric (first character alphabetic) and are
/// lowercased on input; whitespace is insignificant. Rejects equations
/// without any operation symbol and identifiers used both as a variable
/// and as an operation.
Equation parse_equation(std::string_view text);

/// Canonical printer: no whitespace, identifiers as stored (lowercase).
std::string print(const Term& t);
std::string print(const Equation& e);

/// var(t), var1(t) and var2(t): all variables, those occurring once,
/// and those occurring twice.
struct VarSets {
  std::set<std::string> all;
  std::set<std::string> once;
  std::set<std::string> twice;
};
VarSets var_sets(const Term& t);
VarSets var_sets(const Equation& e);

struct VarProfile {
  enum class Kind { Linear, LeftQuadratic, RightQuadratic, Other };
  std::string variable;
  int total = 0;
  int lhs = 0;
  int rhs = 0;
  Kind kind = Kind::Other;
};

/// Every variable occurs exactly twice in the whole equation.
bool is_quadratic(const Equation& e);
/// Every variable occurs exactly once on each side.
bool is_balanced(const Equation& e);
/// Every subterm of one side has a subterm of the other side with the
/// same variable content. Throws on non-balanced input.
bool is_belousov(const Equation& e);
/// Every operation symbol occurs exactly once.
bool is_generalized(const Equation& e);
/// Replaces the k-th operation occurrence (pre-order, lhs then rhs) with a
/// fresh symbol g<k>. Already generalized equations are returned unchanged.
Equation generalize(const Equation& e);

/// Left/right height of a variable (term and equation forms). Throws if
/// the variable does not occur.
int lh(const std::string& var, const Term& t);
int rh(const std::string& var, const Term& t);
int lh(const std::string& var, const Equation& e);
int rh(const std::string& var, const Equation& e);

/// All left heights and all right heights coincide in one constant.
/// Throws on non-quadratic input.
bool is_level(const Equation& e);

/// One profile per variable, in first-appearance order. Throws on
/// non-quadratic input.
std::vector<VarProfile> var_profiles(const Equation& e);

/// Variables in order of first appearance (lhs then rhs).
std::vector<std::string> variables_in_order(const Equation& e);
/// Distinct operation symbols in order of first appearance.
std::vector<std::string> operation_symbols(const Equation& e);
/// Total number of operation occurrences.
int operation_occurrences(const Equation& e);

}  // namespace qfe
