#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qfe/finalg.hpp"

namespace qfe {

bool is_latin(const LatinSquare& s) {
  if (s.n <= 0 || static_cast<int>(s.cells.size()) != s.n) return false;
  for (const auto& row : s.cells) {
    if (static_cast<int>(row.size()) != s.n) return false;
    std::vector<bool> seen(s.n, false);
    for (int v : row) {
      if (v < 0 || v >= s.n || seen[v]) return false;
      seen[v] = true;
    }
  }
  for (int j = 0; j < s.n; ++j) {
    std::vector<bool> seen(s.n, false);
    for (int i = 0; i < s.n; ++i) {
      int v = s.cells[i][j];
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order(); ++b)
    if (op(a, b) == identity) return b;
  throw Error("no inverse found; table is not a group");
}

namespace {

bool table_abelian(const LatinSquare& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b)
      if (t.cells[a][b] != t.cells[b][a]) return false;
  return true;
}

FiniteGroup cyclic(int n) {
  LatinSquare t{n, {}};
  t.cells.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.cells[a][b] = (a + b) % n;
  return FiniteGroup{t, 0, true, "Z" + std::to_string(n)};
}

FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h) {
  int n = g.order() * h.order();
  LatinSquare t{n, {}};
  t.cells.assign(n, std::vector<int>(n));
  // pair (a,b) encoded as a*|h| + b
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int b1 = 0; b1 < h.order(); ++b1)
      for (int a2 = 0; a2 < g.order(); ++a2)
        for (int b2 = 0; b2 < h.order(); ++b2)
          t.cells[a1 * h.order() + b1][a2 * h.order() + b2] =
              g.op(a1, a2) * h.order() + h.op(b1, b2);
  return FiniteGroup{t, 0, g.abelian && h.abelian, g.spec + "x" + h.spec};
}

FiniteGroup symmetric3() {
  // the six permutations of three letters in lexicographic order;
  // composition (p*q)(i) = p(q(i)), identity is element 0
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  LatinSquare t{6, {}};
  t.cells.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t.cells[a][b] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup{t, 0, false, "S3"};
}

LatinSquare table_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  LatinSquare t;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto j = nlohmann::json::parse(text);
    t.n = j.at("order").get<int>();
    t.cells = j.at("table").get<std::vector<std::vector<int>>>();
  } else {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::vector<int> row;
      int v;
      while (ls >> v) row.push_back(v);
      if (!row.empty()) t.cells.push_back(std::move(row));
    }
    t.n = static_cast<int>(t.cells.size());
  }
  return t;
}

}  // namespace

FiniteGroup group_from_table(const LatinSquare& table) {
  if (!is_latin(table)) throw Error("table is not a Latin square");
  int n = table.n;
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (table.cells[e][a] != a || table.cells[a][e] != a) ok = false;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error("table has no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table.cells[table.cells[a][b]][c] != table.cells[a][table.cells[b][c]])
          throw Error("table is not associative");
  return FiniteGroup{table, identity, table_abelian(table), ""};
}

FiniteGroup make_group(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    FiniteGroup g = group_from_table(table_from_file(spec.substr(5)));
    g.spec = spec;
    return g;
  }
  auto x = spec.find('x');
  if (x != std::string::npos)
    return product(make_group(spec.substr(0, x)), make_group(spec.substr(x + 1)));
  if (spec == "S3" || spec == "s3") return symmetric3();
  if ((spec[0] == 'Z' || spec[0] == 'z') && spec.size() > 1) {
    int n;
    try {
      n = std::stoi(spec.substr(1));
    } catch (const std::exception&) {
      throw Error("bad group spec '" + spec + "'");
    }
    if (n < 1) throw Error("bad group order in '" + spec + "'");
    return cyclic(n);
  }
  throw Error("unknown group spec '" + spec + "'");
}

bool is_automorphism(const FiniteGroup& g, const Perm& p) {
  int n = g.order();
  if (p[g.identity] != g.identity) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p[g.op(a, b)] != g.op(p[a], p[b])) return false;
  return true;
}

namespace {

// Greedy generating set: add elements not yet in the generated subgroup.
std::vector<int> generating_set(const FiniteGroup& g) {
  int n = g.order();
  std::set<int> span{g.identity};
  std::vector<int> gens;
  for (int a = 0; a < n && static_cast<int>(span.size()) < n; ++a) {
    if (span.count(a)) continue;
    gens.push_back(a);
    // close under the operation
    bool grew = true;
    span.insert(a);
    while (grew) {
      grew = false;
      std::vector<int> members(span.begin(), span.end());
      for (int x : members)
        for (int y : members)
          if (span.insert(g.op(x, y)).second) grew = true;
    }
  }
  return gens;
}

void extend_homomorphism(const FiniteGroup& g, const std::vector<int>& gens, std::size_t next,
                         std::vector<int>& image, std::vector<Perm>& out) {
  int n = g.order();
  if (next == gens.size()) {
    // grow the partial map from generator images by closure
    std::vector<int> map(n, -1);
    map[g.identity] = g.identity;
    for (std::size_t i = 0; i < gens.size(); ++i) map[gens[i]] = image[i];
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (map[a] < 0 || map[b] < 0) continue;
          int ab = g.op(a, b);
          int im = g.op(map[a], map[b]);
          if (map[ab] < 0) {
            map[ab] = im;
            grew = true;
          } else if (map[ab] != im) {
            return;  // inconsistent
          }
        }
    }
    if (std::find(map.begin(), map.end(), -1) != map.end()) return;
    std::vector<bool> hit(n, false);
    for (int v : map) {
      if (hit[v]) return;
      hit[v] = true;
    }
    out.push_back(map);
    return;
  }
  for (int v = 0; v < n; ++v) {
    image[next] = v;
    extend_homomorphism(g, gens, next + 1, image, out);
  }
}

}  // namespace

std::vector<Perm> automorphisms(const FiniteGroup& g, int bound) {
  int n = g.order();
  if (n > bound) throw Error("group order " + std::to_string(n) + " above bound");
  std::vector<Perm> out;
  if (n <= 8) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (is_automorphism(g, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  auto gens = generating_set(g);
  std::vector<int> image(gens.size(), 0);
  extend_homomorphism(g, gens, 0, image, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_holomorphism(const Perm& m, const FiniteGroup& g) {
  int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = m[g.op(g.op(x, g.inverse(y)), z)];
        int rhs = g.op(g.op(m[x], g.inverse(m[y])), m[z]);
        if (lhs != rhs) return false;
      }
  return true;
}

HolDecomposition decompose_holomorphism(const Perm& m, const FiniteGroup& g) {
  if (!is_holomorphism(m, g)) throw Error("map is not a holomorphism");
  int n = g.order();
  int k = m[g.identity];
  HolDecomposition d;
  d.k1 = k;
  d.k2 = k;
  d.phi.resize(n);
  for (int x = 0; x < n; ++x) d.phi[x] = g.op(m[x], g.inverse(k));
  if (!is_automorphism(g, d.phi))
    throw Error("holomorphism decomposition failed");  // cannot happen for valid input
  return d;
}

LatinSquare linear_quasigroup(const FiniteGroup& g, const Perm& alpha, int c, const Perm& beta,
                              bool reversed) {
  if (!is_automorphism(g, alpha) || !is_automorphism(g, beta))
    throw Error("linear_quasigroup requires automorphisms");
  int n = g.order();
  LatinSquare t{n, {}};
  t.cells.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t.cells[x][y] = reversed ? g.op(g.op(beta[y], c), alpha[x])
                               : g.op(g.op(alpha[x], c), beta[y]);
  if (!is_latin(t)) throw Error("induced table is not Latin");  // cannot happen
  return t;
}

SteinerLoop steiner_loop_10() {
  // lines of the affine plane of order 3 on points 1..9; 0 is the identity
  static const std::array<std::array<int, 3>, 12> triples = {{{1, 2, 3},
                                                              {4, 5, 6},
                                                              {7, 8, 9},
                                                              {1, 4, 7},
                                                              {2, 5, 8},
                                                              {3, 6, 9},
                                                              {1, 5, 9},
                                                              {2, 6, 7},
                                                              {3, 4, 8},
                                                              {1, 6, 8},
                                                              {2, 4, 9},
                                                              {3, 5, 7}}};
  LatinSquare t{10, {}};
  t.cells.assign(10, std::vector<int>(10, -1));
  for (int x = 0; x < 10; ++x) {
    t.cells[x][x] = 0;
    t.cells[0][x] = x;
    t.cells[x][0] = x;
  }
  for (const auto& tr : triples)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) t.cells[tr[i]][tr[j]] = tr[3 - i - j];
  if (!is_latin(t)) throw Error("triple system does not induce a Latin square");
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y)
      if (t.cells[x][y] != t.cells[y][x] || t.cells[x][t.cells[x][y]] != y)
        throw Error("loop fails the defining identities");
  return SteinerLoop{t, 0};
}

std::vector<FiniteGroup> groups_on_carrier(int n, bool abelian_only) {
  if (n < 1 || n > 6) throw Error("groups_on_carrier supports orders 1..6");
  std::vector<FiniteGroup> canonical;
  switch (n) {
    case 1: canonical = {cyclic(1)}; break;
    case 2: canonical = {cyclic(2)}; break;
    case 3: canonical = {cyclic(3)}; break;
    case 4: canonical = {cyclic(4), product(cyclic(2), cyclic(2))}; break;
    case 5: canonical = {cyclic(5)}; break;
    case 6: canonical = {cyclic(6), symmetric3()}; break;
  }
  std::vector<FiniteGroup> out;
  std::set<LatinSquare> seen;
  for (const auto& base : canonical) {
    if (abelian_only && !base.abelian) continue;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      // relabel: x maps to p[x]
      Perm inv(n);
      for (int i = 0; i < n; ++i) inv[p[i]] = i;
      LatinSquare t{n, {}};
      t.cells.assign(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.cells[a][b] = p[base.op(inv[a], inv[b])];
      if (seen.insert(t).second)
        out.push_back(FiniteGroup{t, p[base.identity], base.abelian, base.spec});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

std::optional<OpParams> solve_linear(const FiniteGroup& g, const LatinSquare& f) {
  int n = g.order();
  if (f.n != n) return std::nullopt;
  int e = g.identity;
  for (bool reversed : {false, true}) {
    int c = f.cells[e][e];
    Perm alpha(n), beta(n);
    for (int x = 0; x < n; ++x) {
      if (reversed) {
        alpha[x] = g.op(g.inverse(c), f.cells[x][e]);  // f(x,e) = c + alpha(x)
        beta[x] = g.op(f.cells[e][x], g.inverse(c));   // f(e,y) = beta(y) + c
      } else {
        alpha[x] = g.op(f.cells[x][e], g.inverse(c));  // f(x,e) = alpha(x) + c
        beta[x] = g.op(g.inverse(c), f.cells[e][x]);   // f(e,y) = c + beta(y)
      }
    }
    if (!is_automorphism(g, alpha) || !is_automorphism(g, beta)) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int expect = reversed ? g.op(g.op(beta[y], c), alpha[x])
                              : g.op(g.op(alpha[x], c), beta[y]);
        if (f.cells[x][y] != expect) ok = false;
      }
    if (ok) return OpParams{alpha, c, beta, reversed};
  }
  return std::nullopt;
}

std::optional<LinearCertificate> find_linear_certificate(const LatinSquare& f1,
                                                         const LatinSquare& f2,
                                                         bool require_abelian) {
  if (f1.n != f2.n) throw Error("tables must share the carrier");
  if (f1.n > 6) throw Error("certificate search supports orders 1..6");
  for (const auto& g : groups_on_carrier(f1.n, require_abelian)) {
    auto p1 = solve_linear(g, f1);
    if (!p1) continue;
    auto p2 = solve_linear(g, f2);
    if (!p2) continue;
    return LinearCertificate{g, *p1, *p2};
  }
  return std::nullopt;
}

}  // namespace qfe
