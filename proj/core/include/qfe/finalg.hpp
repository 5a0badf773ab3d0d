#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfe/term.hpp"

namespace qfe {

using Perm = std::vector<int>;

/// n x n table over {0..n-1} whose rows and columns are permutations.
struct LatinSquare {
  int n = 0;
  std::vector<std::vector<int>> cells;

  int at(int x, int y) const { return cells[x][y]; }
  bool operator==(const LatinSquare&) const = default;
  bool operator<(const LatinSquare& o) const { return cells < o.cells; }
};

bool is_latin(const LatinSquare& s);

/// Group given by its Cayley table; element 0 is the identity in all
/// canonical constructions.
struct FiniteGroup {
  LatinSquare table;
  int identity = 0;
  bool abelian = true;
  std::string spec;  // construction string when known, e.g. "Z5"

  int order() const { return table.n; }
  int op(int a, int b) const { return table.cells[a][b]; }
  int inverse(int a) const;
};

/// Builds a group from a spec string: "Z<n>", products joined with 'x'
/// ("Z2xZ2"), "S3", or "file:<path>" (JSON {order,table} or whitespace
/// rows). Tables are validated against the Latin, identity and
/// associativity laws.
FiniteGroup make_group(const std::string& spec);
FiniteGroup group_from_table(const LatinSquare& table);

bool is_automorphism(const FiniteGroup& g, const Perm& p);

/// Complete automorphism list in lexicographic permutation order.
/// Filters all n! permutations up to order 8, switches to
/// generator-image search above. Throws above the bound.
std::vector<Perm> automorphisms(const FiniteGroup& g, int bound = 12);

/// alpha(x + y^-1 + z) = alpha(x) + alpha(y)^-1 + alpha(z) for all triples.
bool is_holomorphism(const Perm& m, const FiniteGroup& g);

/// m(x) = phi(x) + k1 = k2 + phi2(x); returns (phi, k1, k2). Throws if m
/// is not a holomorphism.
struct HolDecomposition {
  Perm phi;
  int k1 = 0;
  int k2 = 0;
};
HolDecomposition decompose_holomorphism(const Perm& m, const FiniteGroup& g);

/// f(x,y) = alpha(x) + c + beta(y), or beta(y) + c + alpha(x) when
/// reversed. Requires alpha and beta to be automorphisms.
LatinSquare linear_quasigroup(const FiniteGroup& g, const Perm& alpha, int c, const Perm& beta,
                              bool reversed = false);

/// Commutative loop with x*x = e and x*(x*y) = y.
struct SteinerLoop {
  LatinSquare table;
  int identity = 0;
};

/// The order-10 loop built from the triple system on 9 points.
SteinerLoop steiner_loop_10();

/// Parameters of one operation in a linear representation.
struct OpParams {
  Perm alpha;
  int c = 0;
  Perm beta;
  bool reversed = false;
  bool operator==(const OpParams&) const = default;
};

struct LinearCertificate {
  FiniteGroup group;
  OpParams f1, f2;
};

/// All distinct group tables on the carrier {0..n-1}, n <= 6, obtained by
/// relabeling the canonical groups of that order; deterministic order.
std::vector<FiniteGroup> groups_on_carrier(int n, bool abelian_only = false);

/// Solves f(x,y) = alpha(x) + c + beta(y) (or its reversal) over a fixed
/// group; the parameters are forced by the table's border row/column.
std::optional<OpParams> solve_linear(const FiniteGroup& g, const LatinSquare& f);

/// Searches all group structures on the shared carrier and all linear
/// parameterizations reproducing both tables. Returns the first
/// certificate in deterministic enumeration order, or nothing.
std::optional<LinearCertificate> find_linear_certificate(const LatinSquare& f1,
                                                         const LatinSquare& f2,
                                                         bool require_abelian);

}  // namespace qfe
