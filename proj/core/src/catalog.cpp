#include <array>
#include <map>

#include "qfe/branches.hpp"

namespace qfe {

namespace {

// Right-hand argument arrangements of the 16 balanced equations; the left
// side is always f1(f2(x,y),f2(u,v)).
constexpr std::array<const char*, 16> kFamily4Rhs = {
    "f2(f1(x,u),f1(y,v))", "f2(f1(x,u),f1(v,y))", "f2(f1(x,v),f1(y,u))",
    "f2(f1(x,v),f1(u,y))", "f2(f1(y,u),f1(x,v))", "f2(f1(y,u),f1(v,x))",
    "f2(f1(y,v),f1(x,u))", "f2(f1(y,v),f1(u,x))", "f2(f1(u,x),f1(y,v))",
    "f2(f1(u,x),f1(v,y))", "f2(f1(u,y),f1(x,v))", "f2(f1(u,y),f1(v,x))",
    "f2(f1(v,x),f1(y,u))", "f2(f1(v,x),f1(u,y))", "f2(f1(v,y),f1(x,u))",
    "f2(f1(v,y),f1(u,x))"};

// The 32 non-balanced equations come in four blocks of eight, one block
// per left side.
constexpr std::array<const char*, 4> kFamily5Lhs = {
    "f1(f2(x,y),f2(x,u))", "f1(f2(x,y),f2(y,u))", "f1(f2(x,y),f2(u,x))",
    "f1(f2(x,y),f2(u,y))"};

// Blocks 1 and 3 (quadratic x) use y as the remaining linear variable on
// the right; blocks 2 and 4 (quadratic y) use x.
constexpr std::array<const char*, 8> kFamily5RhsA = {
    "f2(f1(y,v),f1(u,v))", "f2(f1(y,v),f1(v,u))", "f2(f1(u,v),f1(y,v))",
    "f2(f1(u,v),f1(v,y))", "f2(f1(v,y),f1(u,v))", "f2(f1(v,y),f1(v,u))",
    "f2(f1(v,u),f1(y,v))", "f2(f1(v,u),f1(v,y))"};
constexpr std::array<const char*, 8> kFamily5RhsB = {
    "f2(f1(x,v),f1(u,v))", "f2(f1(x,v),f1(v,u))", "f2(f1(u,v),f1(x,v))",
    "f2(f1(u,v),f1(v,x))", "f2(f1(v,x),f1(u,v))", "f2(f1(v,x),f1(v,u))",
    "f2(f1(v,u),f1(x,v))", "f2(f1(v,u),f1(v,x))"};

const std::map<std::string, std::string>& named_texts() {
  static const std::map<std::string, std::string> texts = {
      {"commutativity", "f(x,y)=f(y,x)"},
      {"associativity", "f(f(x,y),z)=f(x,f(y,z))"},
      {"mediality", "f(f(x,y),f(u,v))=f(f(x,u),f(y,v))"},
      {"paramediality", "f(f(x,y),f(u,v))=f(f(v,y),f(u,x))"},
      {"distributivity", "f(x,f(y,z))=f(f(x,y),f(x,z))"},
      {"transitivity", "f(f(x,y),f(y,z))=f(x,z)"},
      {"intermediality", "f(f(x,y),f(y,u))=f(f(x,v),f(v,u))"},
      {"extramediality", "f(f(x,y),f(u,x))=f(f(v,y),f(u,v))"},
      {"4-palindromic", "f(f(x,y),f(u,v))=f(f(v,u),f(y,x))"},
      {"idempotency", "f(x,x)=x"},
      {"trivial", "f(x,y)=f(x,y)"},
      {"eq13", "f(x,f(y,z))=f(f(z,y),x)"},
  };
  return texts;
}

}  // namespace

const std::vector<std::string>& named_equations() {
  static const std::vector<std::string> names = {
      "commutativity", "associativity", "mediality",    "paramediality",
      "distributivity", "transitivity", "intermediality", "extramediality",
      "4-palindromic", "idempotency",  "trivial",       "eq13"};
  return names;
}

std::string EquationId::str() const {
  if (is_named()) return name;
  return std::to_string(family) + "." + std::to_string(index);
}

EquationId parse_equation_id(const std::string& text) {
  auto dot = text.find('.');
  if (dot != std::string::npos && text != "4-palindromic") {
    EquationId id;
    try {
      id.family = std::stoi(text.substr(0, dot));
      id.index = std::stoi(text.substr(dot + 1));
    } catch (const std::exception&) {
      throw Error("malformed equation id '" + text + "'");
    }
    if (id.family == 4 && id.index >= 1 && id.index <= 16) return id;
    if (id.family == 5 && id.index >= 1 && id.index <= 32) return id;
    throw Error("equation id '" + text + "' out of range");
  }
  for (const auto& n : named_equations())
    if (n == text) return EquationId{0, 0, n};
  throw Error("unknown equation id '" + text + "'");
}

Equation catalog(const EquationId& id) {
  if (id.is_named()) {
    auto it = named_texts().find(id.name);
    if (it == named_texts().end()) throw Error("unknown equation name '" + id.name + "'");
    return parse_equation(it->second);
  }
  if (id.family == 4) {
    if (id.index < 1 || id.index > 16) throw Error("family-4 index out of range");
    return parse_equation(std::string("f1(f2(x,y),f2(u,v))=") + kFamily4Rhs[id.index - 1]);
  }
  if (id.family == 5) {
    if (id.index < 1 || id.index > 32) throw Error("family-5 index out of range");
    int block = (id.index - 1) / 8;
    int slot = (id.index - 1) % 8;
    const char* rhs = (block == 0 || block == 2) ? kFamily5RhsA[slot] : kFamily5RhsB[slot];
    return parse_equation(std::string(kFamily5Lhs[block]) + "=" + rhs);
  }
  throw Error("unknown equation family " + std::to_string(id.family));
}

}  // namespace qfe
