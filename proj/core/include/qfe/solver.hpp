#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfe/branches.hpp"
#include "qfe/finalg.hpp"
#include "qfe/term.hpp"

namespace qfe {

/// Assignment of quasigroup tables to the operation symbols of an
/// equation; all tables share the carrier {0..n-1}.
struct Interpretation {
  int n = 0;
  std::map<std::string, LatinSquare> ops;

  bool operator==(const Interpretation&) const = default;
  bool operator<(const Interpretation& o) const {
    return std::tie(n, ops) < std::tie(o.n, o.ops);
  }
};

/// A variable assignment on which the two sides evaluate differently.
struct Counterexample {
  std::vector<std::pair<std::string, int>> assignment;  // equation order
  int lhs_value = 0;
  int rhs_value = 0;
};

struct VerifyResult {
  std::optional<Counterexample> counterexample;

  bool ok() const { return !counterexample.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Evaluates both sides over all n^|var(e)| assignments (lexicographic in
/// first-appearance variable order); returns the first violation if any.
VerifyResult verify_equation(const Interpretation& i, const Equation& e);

/// One synthesized solution: a group plus linear parameters per
/// operation, with the induced tables.
struct SolutionPair {
  FiniteGroup group;
  std::vector<OpParams> params;      // one entry per f1, f2, ...
  std::vector<LatinSquare> tables;   // induced by params
  bool verified = false;
};

/// Enumerates automorphism tuples and constants over g that satisfy every
/// symbolic condition of the id (pointwise over the carrier), builds the
/// induced tables and verifies each candidate. Deterministic order:
/// (alpha1, beta1, alpha2, beta2) in the automorphism enumeration order,
/// then (c1, c2) ascending. limit = 0 means all.
std::vector<SolutionPair> synthesize(const EquationId& id, const FiniteGroup& g,
                                     std::size_t limit = 0);

/// All Latin squares on {0..n-1}, lexicographic by rows. n <= 4.
std::vector<LatinSquare> all_latin_squares(int n);

/// All operation-table tuples of order n passing the equation, in
/// lexicographic square order. n <= 4.
std::vector<Interpretation> exhaustive_search(const EquationId& id, int n);

/// Model-refutation verdict. refuted=false means the bank could not
/// separate the equation from the theory (semi-decision).
struct GeminiVerdict {
  bool refuted = false;
  std::string model;  // bank model name when refuted
  std::optional<Counterexample> counterexample;
};

/// Substitutes a single loop operation for every symbol of e in each bank
/// model (Z2, Z2^2, Z2^3, the order-10 triple-system loop) and scans all
/// assignments. Requires e quadratic.
GeminiVerdict gemini_refute(const Equation& e);

/// Finite algebra: several quasigroup operations on one carrier.
struct Algebra {
  int n = 0;
  std::vector<LatinSquare> operations;
};

/// A violation found while checking a hyperidentity: which operations
/// were substituted for the equation's symbols, and where they disagree.
struct HyperCounterexample {
  std::vector<int> substitution;  // operation index per equation symbol
  Counterexample inner;
};

struct HyperResult {
  std::optional<HyperCounterexample> counterexample;

  bool ok() const { return !counterexample.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Checks the equation under every substitution of the algebra's
/// operations for its operation symbols.
HyperResult check_hyperidentity(const Algebra& a, const EquationId& id);

/// One shared group plus linear parameters reproducing every operation of
/// the algebra, with all pairwise constant-compatibility relations
/// holding. Empty result means the search over group structures on the
/// carrier (order <= 6) was exhausted.
struct HyperRepresentation {
  FiniteGroup group;
  std::vector<OpParams> certificates;
};
std::optional<HyperRepresentation> represent_hyperalgebra(const Algebra& a,
                                                          const EquationId& id);

}  // namespace qfe
