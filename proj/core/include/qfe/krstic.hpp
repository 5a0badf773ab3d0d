#pragma once

#include <string>
#include <vector>

#include "qfe/term.hpp"

namespace qfe {

/// Labeled multigraph on operation occurrences. Edge provenance is the
/// shared variable name, "nesting", or "=" for the equality edge.
struct KrsticEdge {
  int u = 0;
  int v = 0;
  std::string label;
  bool operator==(const KrsticEdge&) const = default;
};

struct KrsticGraph {
  std::vector<std::string> vertices;  // occurrence labels, construction order
  std::vector<KrsticEdge> edges;

  int degree(int v) const;
};

enum class GraphShape { K33, Prism, Other };

struct ShapeResult {
  GraphShape shape = GraphShape::Other;
  /// For Other: lexicographically minimal adjacency matrix over all
  /// vertex orders, row-major digits.
  std::string certificate;
};

std::string to_string(GraphShape s);

/// Builds the graph of the generalized form of a quadratic equation:
/// one vertex per operation occurrence, one edge per object variable
/// (joining the occurrences whose argument slots it fills), one edge per
/// nested subterm, and one equality edge between the two root
/// occurrences. The result is cubic and connected; violations are
/// reported as structural errors.
KrsticGraph build_graph(const Equation& e);

/// No removal of at most two vertices disconnects the graph. Requires at
/// least four vertices.
bool is_three_connected(const KrsticGraph& g);

/// Brute-force isomorphism test against K33 and the 3-prism.
ShapeResult classify_shape(const KrsticGraph& g);

/// DOT-format text, deterministic ordering.
std::string to_dot(const KrsticGraph& g);

}  // namespace qfe
