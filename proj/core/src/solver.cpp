#include <algorithm>
#include <functional>

#include "qfe/solver.hpp"

namespace qfe {

namespace {

int eval(const Term& t, const Interpretation& i,
         const std::map<std::string, int>& assignment) {
  if (t.is_var()) return assignment.at(t.symbol());
  auto it = i.ops.find(t.symbol());
  if (it == i.ops.end()) throw Error("operation '" + t.symbol() + "' is unassigned");
  return it->second.at(eval(t.left(), i, assignment), eval(t.right(), i, assignment));
}

}  // namespace

VerifyResult verify_equation(const Interpretation& i, const Equation& e) {
  for (const auto& op : operation_symbols(e)) {
    auto it = i.ops.find(op);
    if (it == i.ops.end()) throw Error("operation '" + op + "' is unassigned");
    if (it->second.n != i.n) throw Error("operation '" + op + "' has the wrong order");
  }
  auto vars = variables_in_order(e);
  std::vector<int> vals(vars.size(), 0);
  std::map<std::string, int> assignment;
  while (true) {
    for (std::size_t k = 0; k < vars.size(); ++k) assignment[vars[k]] = vals[k];
    int l = eval(e.lhs, i, assignment);
    int r = eval(e.rhs, i, assignment);
    if (l != r) {
      Counterexample ce;
      for (std::size_t k = 0; k < vars.size(); ++k) ce.assignment.emplace_back(vars[k], vals[k]);
      ce.lhs_value = l;
      ce.rhs_value = r;
      return VerifyResult{ce};
    }
    // next assignment, last variable fastest
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++vals[k] < i.n) break;
      vals[k] = 0;
      if (k == 0) return VerifyResult{};
    }
    if (vars.empty()) return VerifyResult{};
  }
}

namespace {

// word applied outermost-first: {s1,s2}(x) = s1(s2(x))
int apply_word(const BranchWord& w, int x, const std::vector<Perm>& alpha,
               const std::vector<Perm>& beta) {
  int v = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto& map = it->kind == BranchSymbol::Kind::Alpha ? alpha[it->index] : beta[it->index];
    v = map[v];
  }
  return v;
}

int eval_op(const FiniteGroup& g, const OpParams& p, int x, int y) {
  return p.reversed ? g.op(g.op(p.beta[y], p.c), p.alpha[x])
                    : g.op(g.op(p.alpha[x], p.c), p.beta[y]);
}

}  // namespace

std::vector<SolutionPair> synthesize(const EquationId& raw_id, const FiniteGroup& g,
                                     std::size_t limit) {
  EquationId id = family_counterpart(raw_id);
  auto conds = conditions(id);
  Equation e = catalog(id);
  int n = g.order();

  bool reversed2 = false;
  for (const auto& c : conds) {
    if (const auto* gr = std::get_if<GroupRequirement>(&c)) {
      if (gr->abelian && !g.abelian)
        throw Error("equation " + id.str() + " requires an abelian carrier group");
    } else if (const auto* dt = std::get_if<DualTwist>(&c)) {
      if (dt->op_index != 2) throw Error("unexpected dual twist target");
      reversed2 = dt->odd;
    }
  }

  auto auts = automorphisms(g);
  std::vector<SolutionPair> out;
  // indices 1 and 2; slot 0 unused
  std::vector<Perm> alpha(3), beta(3);
  std::vector<int> cs(3, 0);

  auto conditions_hold = [&]() {
    std::vector<OpParams> ps = {OpParams{alpha[1], cs[1], beta[1], false},
                                OpParams{alpha[2], cs[2], beta[2], reversed2}};
    for (const auto& c : conds) {
      if (const auto* le = std::get_if<LinearEq>(&c)) {
        for (int x = 0; x < n; ++x)
          if (apply_word(le->lhs, x, alpha, beta) != apply_word(le->rhs, x, alpha, beta))
            return false;
      } else if (const auto* an = std::get_if<Annihilate>(&c)) {
        for (int x = 0; x < n; ++x)
          if (g.op(apply_word(an->first, x, alpha, beta), apply_word(an->second, x, alpha, beta)) !=
              g.identity)
            return false;
      } else if (const auto* sw = std::get_if<Sandwich>(&c)) {
        int ci = cs[sw->constant_index];
        for (int x = 0; x < n; ++x)
          if (g.op(g.op(apply_word(sw->first, x, alpha, beta), ci),
                   apply_word(sw->second, x, alpha, beta)) != ci)
            return false;
      } else if (std::get_if<ConstCompat>(&c)) {
        if (eval_op(g, ps[0], cs[2], cs[2]) != eval_op(g, ps[1], cs[1], cs[1])) return false;
      }
    }
    return true;
  };

  for (const auto& a1 : auts) {
    alpha[1] = a1;
    for (const auto& b1 : auts) {
      beta[1] = b1;
      for (const auto& a2 : auts) {
        alpha[2] = a2;
        for (const auto& b2 : auts) {
          beta[2] = b2;
          for (cs[1] = 0; cs[1] < n; ++cs[1])
            for (cs[2] = 0; cs[2] < n; ++cs[2]) {
              if (!conditions_hold()) continue;
              SolutionPair sp;
              sp.group = g;
              sp.params = {OpParams{alpha[1], cs[1], beta[1], false},
                           OpParams{alpha[2], cs[2], beta[2], reversed2}};
              for (const auto& p : sp.params)
                sp.tables.push_back(linear_quasigroup(g, p.alpha, p.c, p.beta, p.reversed));
              Interpretation interp{n, {}};
              for (const auto& sym : operation_symbols(e))
                interp.ops[sym] = sp.tables[operation_index(sym) - 1];
              sp.verified = verify_equation(interp, e).ok();
              if (!sp.verified)
                throw Error("condition-satisfying parameters failed verification for " + id.str());
              out.push_back(std::move(sp));
              if (limit && out.size() >= limit) return out;
            }
        }
      }
    }
  }
  return out;
}

std::vector<LatinSquare> all_latin_squares(int n) {
  if (n < 1 || n > 4) throw Error("all_latin_squares supports orders 1..4");
  std::vector<LatinSquare> out;
  LatinSquare s{n, std::vector<std::vector<int>>(n, std::vector<int>(n, -1))};
  std::vector<std::vector<bool>> row_used(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> col_used(n, std::vector<bool>(n, false));
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * n) {
      out.push_back(s);
      return;
    }
    int r = cell / n, c = cell % n;
    for (int v = 0; v < n; ++v) {
      if (row_used[r][v] || col_used[c][v]) continue;
      s.cells[r][c] = v;
      row_used[r][v] = col_used[c][v] = true;
      fill(cell + 1);
      row_used[r][v] = col_used[c][v] = false;
    }
    s.cells[r][c] = -1;
  };
  fill(0);
  return out;
}

std::vector<Interpretation> exhaustive_search(const EquationId& id, int n) {
  if (n < 1 || n > 4) throw Error("exhaustive_search supports orders 1..4");
  Equation e = catalog(id);
  auto syms = operation_symbols(e);
  auto squares = all_latin_squares(n);
  std::vector<Interpretation> out;
  std::vector<std::size_t> pick(syms.size(), 0);
  while (true) {
    Interpretation interp{n, {}};
    for (std::size_t k = 0; k < syms.size(); ++k) interp.ops[syms[k]] = squares[pick[k]];
    if (verify_equation(interp, e).ok()) out.push_back(std::move(interp));
    std::size_t k = syms.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++pick[k] < squares.size()) {
        done = false;
        break;
      }
      pick[k] = 0;
    }
    if (done) return out;
  }
}

GeminiVerdict gemini_refute(const Equation& e) {
  if (!is_quadratic(e)) throw Error("gemini_refute requires a quadratic equation");
  struct Model {
    std::string name;
    LatinSquare table;
  };
  static const std::vector<Model> bank = [] {
    std::vector<Model> b;
    b.push_back({"Z2", make_group("Z2").table});
    b.push_back({"Z2^2", make_group("Z2xZ2").table});
    b.push_back({"Z2^3", make_group("Z2xZ2xZ2").table});
    b.push_back({"sloop10", steiner_loop_10().table});
    return b;
  }();
  for (const auto& m : bank) {
    Interpretation interp{m.table.n, {}};
    for (const auto& sym : operation_symbols(e)) interp.ops[sym] = m.table;
    auto r = verify_equation(interp, e);
    if (!r.ok()) return GeminiVerdict{true, m.name, r.counterexample};
  }
  return GeminiVerdict{};
}

HyperResult check_hyperidentity(const Algebra& a, const EquationId& id) {
  if (a.operations.empty()) throw Error("algebra has no operations");
  for (const auto& t : a.operations)
    if (t.n != a.n) throw Error("algebra tables disagree on the order");
  Equation e = catalog(id);
  auto syms = operation_symbols(e);
  std::vector<int> pick(syms.size(), 0);
  int m = static_cast<int>(a.operations.size());
  while (true) {
    Interpretation interp{a.n, {}};
    for (std::size_t k = 0; k < syms.size(); ++k) interp.ops[syms[k]] = a.operations[pick[k]];
    auto r = verify_equation(interp, e);
    if (!r.ok()) return HyperResult{HyperCounterexample{pick, *r.counterexample}};
    std::size_t k = syms.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++pick[k] < m) {
        done = false;
        break;
      }
      pick[k] = 0;
    }
    if (done) return HyperResult{};
  }
}

std::optional<HyperRepresentation> represent_hyperalgebra(const Algebra& a, const EquationId&) {
  if (a.operations.empty()) throw Error("algebra has no operations");
  if (a.n > 6) throw Error("represent_hyperalgebra supports orders 1..6");
  for (const auto& g : groups_on_carrier(a.n, /*abelian_only=*/true)) {
    std::vector<OpParams> certs;
    bool ok = true;
    for (const auto& t : a.operations) {
      auto p = solve_linear(g, t);
      if (!p) {
        ok = false;
        break;
      }
      certs.push_back(*p);
    }
    if (!ok) continue;
    // pairwise constant compatibility: f_l(c_k, c_k) = f_k(c_l, c_l)
    for (std::size_t k = 0; k < certs.size() && ok; ++k)
      for (std::size_t l = k + 1; l < certs.size() && ok; ++l)
        if (a.operations[l].at(certs[k].c, certs[k].c) !=
            a.operations[k].at(certs[l].c, certs[l].c))
          ok = false;
    if (ok) return HyperRepresentation{g, std::move(certs)};
  }
  return std::nullopt;
}

}  // namespace qfe
