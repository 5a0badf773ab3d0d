#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "qfe/krstic.hpp"

namespace qfe {

int KrsticGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;  // a loop counts twice
  }
  return d;
}

std::string to_string(GraphShape s) {
  switch (s) {
    case GraphShape::K33: return "K33";
    case GraphShape::Prism: return "Prism";
    default: return "Other";
  }
}

KrsticGraph build_graph(const Equation& input) {
  if (!is_quadratic(input)) throw Error("build_graph requires a quadratic equation");
  Equation e = generalize(input);

  KrsticGraph g;
  // occurrence -> vertex id, in pre-order (lhs then rhs); variable -> the
  // vertices whose argument slot it directly fills
  std::map<std::string, std::vector<int>> hosts;
  std::vector<std::pair<int, int>> nestings;  // parent, child
  std::function<int(const Term&)> walk = [&](const Term& t) -> int {
    int self = static_cast<int>(g.vertices.size());
    g.vertices.push_back(t.symbol());
    for (const Term* child : {&t.left(), &t.right()}) {
      if (child->is_var()) {
        hosts[child->symbol()].push_back(self);
      } else {
        nestings.emplace_back(self, walk(*child));
      }
    }
    return self;
  };
  if (e.lhs.is_var() || e.rhs.is_var())
    throw Error("structural error: a variable occurrence has no host operation");
  int lroot = walk(e.lhs);
  int rroot = walk(e.rhs);

  for (const auto& v : variables_in_order(e)) {
    const auto& h = hosts[v];
    if (h.size() != 2)
      throw Error("structural error: variable '" + v +
                  "' is not directly under an operation on both occurrences");
    g.edges.push_back({h[0], h[1], v});
  }
  for (const auto& [parent, child] : nestings) g.edges.push_back({parent, child, "nesting"});
  g.edges.push_back({lroot, rroot, "="});

  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (g.degree(v) != 3)
      throw Error("structural error: vertex '" + g.vertices[v] + "' has degree " +
                  std::to_string(g.degree(v)));
  return g;
}

namespace {

std::vector<std::vector<int>> adjacency(const KrsticGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges) {
    ++m[e.u][e.v];
    if (e.u != e.v) ++m[e.v][e.u];
  }
  return m;
}

bool connected_without(const std::vector<std::vector<int>>& adj, const std::vector<int>& removed) {
  int n = static_cast<int>(adj.size());
  std::vector<bool> gone(n, false);
  for (int v : removed) gone[v] = true;
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      start = v;
      break;
    }
  if (start < 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (adj[v][w] > 0 && !gone[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  int remaining = n - static_cast<int>(removed.size());
  return count == remaining;
}

// multiplicity matrices of the two reference graphs on vertices 0..5
std::vector<std::vector<int>> reference_k33() {
  std::vector<std::vector<int>> m(6, std::vector<int>(6, 0));
  for (int a : {0, 1, 2})
    for (int b : {3, 4, 5}) m[a][b] = m[b][a] = 1;
  return m;
}

std::vector<std::vector<int>> reference_prism() {
  std::vector<std::vector<int>> m(6, std::vector<int>(6, 0));
  auto link = [&](int a, int b) { m[a][b] = m[b][a] = 1; };
  link(0, 1); link(1, 2); link(0, 2);  // first triangle
  link(3, 4); link(4, 5); link(3, 5);  // second triangle
  link(0, 3); link(1, 4); link(2, 5);  // matching
  return m;
}

bool isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a[i][j] != b[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string minimal_certificate(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    s.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += static_cast<char>('0' + m[perm[i]][perm[j]]);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

bool is_three_connected(const KrsticGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  if (n < 4) throw Error("is_three_connected requires at least 4 vertices");
  auto adj = adjacency(g);
  if (!connected_without(adj, {})) return false;
  for (int a = 0; a < n; ++a)
    if (!connected_without(adj, {a})) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!connected_without(adj, {a, b})) return false;
  return true;
}

ShapeResult classify_shape(const KrsticGraph& g) {
  auto adj = adjacency(g);
  if (g.vertices.size() == 6) {
    if (isomorphic(adj, reference_k33())) return {GraphShape::K33, ""};
    if (isomorphic(adj, reference_prism())) return {GraphShape::Prism, ""};
  }
  return {GraphShape::Other, minimal_certificate(adj)};
}

std::string to_dot(const KrsticGraph& g) {
  std::ostringstream os;
  os << "graph krstic {\n";
  for (const auto& v : g.vertices) os << "  " << v << ";\n";
  for (const auto& e : g.edges)
    os << "  " << g.vertices[e.u] << " -- " << g.vertices[e.v] << " [label=\"" << e.label
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qfe
