#include "qfe/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace qfe {

Term Term::var(std::string name) {
  Term t;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::app(std::string op, Term left, Term right) {
  Term t;
  t.symbol_ = std::move(op);
  t.children_.push_back(std::move(left));
  t.children_.push_back(std::move(right));
  return t;
}

const Term& Term::left() const {
  if (is_var()) throw Error("left() on a variable");
  return children_[0];
}

const Term& Term::right() const {
  if (is_var()) throw Error("right() on a variable");
  return children_[1];
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Equation parse() {
    Term lhs = term();
    skip_ws();
    expect('=');
    Term rhs = term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return Equation{std::move(lhs), std::move(rhs)};
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected identifier", pos_);
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    std::transform(id.begin(), id.end(), id.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return id;
  }

  Term term() {
    std::string id = identifier();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Term first = term();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')')
        throw ParseError("operation '" + id + "' applied to 1 argument", pos_);
      expect(',');
      Term second = term();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',')
        throw ParseError("operation '" + id + "' applied to more than 2 arguments", pos_);
      expect(')');
      return Term::app(std::move(id), std::move(first), std::move(second));
    }
    return Term::var(std::move(id));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_symbols(const Term& t, std::set<std::string>& vars, std::set<std::string>& ops) {
  if (t.is_var()) {
    vars.insert(t.symbol());
  } else {
    ops.insert(t.symbol());
    collect_symbols(t.left(), vars, ops);
    collect_symbols(t.right(), vars, ops);
  }
}

void count_vars(const Term& t, std::map<std::string, int>& counts) {
  if (t.is_var()) {
    ++counts[t.symbol()];
  } else {
    count_vars(t.left(), counts);
    count_vars(t.right(), counts);
  }
}

bool occurs(const std::string& var, const Term& t) {
  if (t.is_var()) return t.symbol() == var;
  return occurs(var, t.left()) || occurs(var, t.right());
}

void collect_subterm_contents(const Term& t, std::set<std::set<std::string>>& out) {
  VarSets vs = var_sets(t);
  out.insert(vs.all);
  if (t.is_app()) {
    collect_subterm_contents(t.left(), out);
    collect_subterm_contents(t.right(), out);
  }
}

}  // namespace

Equation parse_equation(std::string_view text) {
  Equation e = Parser(text).parse();
  std::set<std::string> vars, ops;
  collect_symbols(e.lhs, vars, ops);
  collect_symbols(e.rhs, vars, ops);
  if (ops.empty()) throw Error("not a functional equation: no operation symbol");
  for (const auto& v : vars)
    if (ops.count(v))
      throw Error("identifier '" + v + "' used both as variable and operation");
  return e;
}

std::string print(const Term& t) {
  if (t.is_var()) return t.symbol();
  return t.symbol() + "(" + print(t.left()) + "," + print(t.right()) + ")";
}

std::string print(const Equation& e) { return print(e.lhs) + "=" + print(e.rhs); }

VarSets var_sets(const Term& t) {
  std::map<std::string, int> counts;
  count_vars(t, counts);
  VarSets vs;
  for (const auto& [v, c] : counts) {
    vs.all.insert(v);
    if (c == 1) vs.once.insert(v);
    if (c == 2) vs.twice.insert(v);
  }
  return vs;
}

VarSets var_sets(const Equation& e) {
  std::map<std::string, int> counts;
  count_vars(e.lhs, counts);
  count_vars(e.rhs, counts);
  VarSets vs;
  for (const auto& [v, c] : counts) {
    vs.all.insert(v);
    if (c == 1) vs.once.insert(v);
    if (c == 2) vs.twice.insert(v);
  }
  return vs;
}

bool is_quadratic(const Equation& e) {
  std::map<std::string, int> counts;
  count_vars(e.lhs, counts);
  count_vars(e.rhs, counts);
  return std::all_of(counts.begin(), counts.end(),
                     [](const auto& kv) { return kv.second == 2; });
}

bool is_balanced(const Equation& e) {
  std::map<std::string, int> l, r;
  count_vars(e.lhs, l);
  count_vars(e.rhs, r);
  if (l.size() != r.size()) return false;
  for (const auto& [v, c] : l) {
    auto it = r.find(v);
    if (c != 1 || it == r.end() || it->second != 1) return false;
  }
  return true;
}

bool is_belousov(const Equation& e) {
  if (!is_balanced(e)) throw Error("is_belousov requires a balanced equation");
  std::set<std::set<std::string>> lhs_contents, rhs_contents;
  collect_subterm_contents(e.lhs, lhs_contents);
  collect_subterm_contents(e.rhs, rhs_contents);
  return lhs_contents == rhs_contents;
}

bool is_generalized(const Equation& e) {
  std::map<std::string, int> counts;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_app()) {
      ++counts[t.symbol()];
      walk(t.left());
      walk(t.right());
    }
  };
  walk(e.lhs);
  walk(e.rhs);
  return std::all_of(counts.begin(), counts.end(),
                     [](const auto& kv) { return kv.second == 1; });
}

Equation generalize(const Equation& e) {
  if (is_generalized(e)) return e;
  int next = 0;
  // Pre-order numbering: a node gets its symbol before its children.
  std::function<Term(const Term&)> walk = [&](const Term& t) -> Term {
    if (t.is_var()) return t;
    std::string fresh = "g" + std::to_string(++next);
    Term l = walk(t.left());
    Term r = walk(t.right());
    return Term::app(std::move(fresh), std::move(l), std::move(r));
  };
  Term lhs = walk(e.lhs);
  Term rhs = walk(e.rhs);
  return Equation{std::move(lhs), std::move(rhs)};
}

namespace {

int height(const std::string& var, const Term& t, bool left_height) {
  if (t.is_var()) {
    if (t.symbol() == var) return 0;
    throw Error("variable '" + var + "' does not occur");
  }
  bool in_left = occurs(var, t.left());
  bool in_right = occurs(var, t.right());
  if (!in_left && !in_right) throw Error("variable '" + var + "' does not occur");
  if (in_left && !in_right) return 1 + height(var, t.left(), left_height);
  if (!in_left && in_right) return 1 + height(var, t.right(), left_height);
  // both: Lh descends left, Rh descends right
  return 1 + height(var, left_height ? t.left() : t.right(), left_height);
}

}  // namespace

int lh(const std::string& var, const Term& t) { return height(var, t, true); }
int rh(const std::string& var, const Term& t) { return height(var, t, false); }

int lh(const std::string& var, const Equation& e) {
  if (occurs(var, e.lhs)) return lh(var, e.lhs);
  return lh(var, e.rhs);
}

int rh(const std::string& var, const Equation& e) {
  if (occurs(var, e.rhs)) return rh(var, e.rhs);
  return rh(var, e.lhs);
}

bool is_level(const Equation& e) {
  if (!is_quadratic(e)) throw Error("is_level requires a quadratic equation");
  VarSets vs = var_sets(e);
  int value = -1;
  for (const auto& v : vs.all) {
    int l = lh(v, e);
    int r = rh(v, e);
    if (value < 0) value = l;
    if (l != value || r != value) return false;
  }
  return true;
}

std::vector<VarProfile> var_profiles(const Equation& e) {
  if (!is_quadratic(e)) throw Error("var_profiles requires a quadratic equation");
  std::map<std::string, int> l, r;
  count_vars(e.lhs, l);
  count_vars(e.rhs, r);
  std::vector<VarProfile> out;
  for (const auto& v : variables_in_order(e)) {
    VarProfile p;
    p.variable = v;
    p.lhs = l.count(v) ? l[v] : 0;
    p.rhs = r.count(v) ? r[v] : 0;
    p.total = p.lhs + p.rhs;
    if (p.lhs == 1 && p.rhs == 1)
      p.kind = VarProfile::Kind::Linear;
    else if (p.lhs == 2 && p.rhs == 0)
      p.kind = VarProfile::Kind::LeftQuadratic;
    else if (p.lhs == 0 && p.rhs == 2)
      p.kind = VarProfile::Kind::RightQuadratic;
    else
      p.kind = VarProfile::Kind::Other;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::string> variables_in_order(const Equation& e) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_var()) {
      if (seen.insert(t.symbol()).second) order.push_back(t.symbol());
    } else {
      walk(t.left());
      walk(t.right());
    }
  };
  walk(e.lhs);
  walk(e.rhs);
  return order;
}

std::vector<std::string> operation_symbols(const Equation& e) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_app()) {
      if (seen.insert(t.symbol()).second) order.push_back(t.symbol());
      walk(t.left());
      walk(t.right());
    }
  };
  walk(e.lhs);
  walk(e.rhs);
  return order;
}

int operation_occurrences(const Equation& e) {
  int n = 0;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_app()) {
      ++n;
      walk(t.left());
      walk(t.right());
    }
  };
  walk(e.lhs);
  walk(e.rhs);
  return n;
}

}  // namespace qfe
