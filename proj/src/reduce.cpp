#include "epistemic/reduce.hpp"

#include <algorithm>
#include <unordered_map>

#include "epistemic/error.hpp"
#include "epistemic/normal.hpp"
#include "epistemic/parser.hpp"

namespace epi {

namespace {

Formula substitute_letters(const Formula& f, const std::vector<std::string>& letters,
                           std::span<const Formula> parts) {
  switch (f.op()) {
    case Op::Atom: {
      auto it = std::find(letters.begin(), letters.end(), f.name());
      return it == letters.end() ? f : parts[it - letters.begin()];
    }
    case Op::Bottom: return f;
    case Op::Not: return neg(substitute_letters(f.child(0), letters, parts));
    case Op::Box: return box(substitute_letters(f.child(0), letters, parts));
    case Op::Diamond: return diamond(substitute_letters(f.child(0), letters, parts));
    case Op::And:
      return conj(substitute_letters(f.lhs(), letters, parts),
                  substitute_letters(f.rhs(), letters, parts));
    case Op::Or:
      return disj(substitute_letters(f.lhs(), letters, parts),
                  substitute_letters(f.rhs(), letters, parts));
    case Op::Cond:
      return cond(substitute_letters(f.lhs(), letters, parts),
                  substitute_letters(f.rhs(), letters, parts));
    case Op::Update:
      return update(substitute_letters(f.lhs(), letters, parts),
                    substitute_letters(f.rhs(), letters, parts));
  }
  return f;
}

std::vector<AxiomSchema> build_schemas() {
  // Letters are spelled as atoms so the schema text goes through the parser.
  return {
      {"K", {"phi", "psi"}, {}, "[](phi -> psi) -> ([]phi -> []psi)"},
      {"4", {"phi"}, {}, "<><>phi -> <>phi"},
      {"5", {"phi"}, {}, "<>[]phi -> []phi"},
      {"I1", {"phi", "pi"}, {1}, "(phi => pi) <-> [](phi -> pi)"},
      {"I2", {"phi", "alpha", "beta"}, {}, "(phi => (alpha & beta)) <-> ((phi => alpha) & (phi => beta))"},
      {"I3", {"phi", "alpha", "beta"}, {}, "(phi => alpha) -> (phi => (alpha | beta))"},
      {"I4", {"phi", "alpha"}, {}, "(phi => alpha) -> (phi => []alpha)"},
      {"I5", {"phi", "alpha", "beta"}, {}, "((phi => (alpha | []beta)) & ~(phi => beta)) -> (phi => alpha)"},
      {"I6", {"phi", "alpha", "beta"}, {}, "((phi => (alpha | <>beta)) & (phi => ~beta)) -> (phi => alpha)"},
      {"I7", {"phi", "beta"}, {}, "~(phi => beta) -> (phi => <>~beta)"},
      {"A1", {"phi", "pi"}, {1}, "(phi => pi) <-> [](phi -> pi)"},
      {"A2", {"phi", "alpha", "beta"}, {}, "(phi => (alpha & beta)) <-> ((phi => alpha) & (phi => beta))"},
      {"A3", {"phi", "alpha", "beta"}, {}, "(phi => (alpha | []beta)) <-> ((phi => alpha) | (phi => beta))"},
      {"A4", {"phi", "alpha", "beta"}, {}, "(phi => (alpha | <>beta)) <-> ((phi => alpha) | ~(phi => ~beta))"},
  };
}

struct Eliminator {
  std::unordered_map<const void*, Formula> memo;

  Formula run(const Formula& f) {
    if (!f.has_conditional() && !f.has_update()) return f;
    if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
    Formula out = build(f);
    memo.emplace(f.id(), out);
    return out;
  }

  Formula build(const Formula& f) {
    switch (f.op()) {
      case Op::Not: return neg(run(f.child(0)));
      case Op::Box: return box(run(f.child(0)));
      case Op::Diamond: return diamond(run(f.child(0)));
      case Op::And:
      case Op::Or: {
        std::vector<Formula> parts;
        for (const Formula& p : flatten(f, f.op())) parts.push_back(run(p));
        return f.op() == Op::And ? conj_all(parts) : disj_all(parts);
      }
      case Op::Cond: return reduce_step(cond(run(f.lhs()), run(f.rhs())));
      case Op::Update: {
        Formula a = run(f.lhs());
        if (f.rhs().op() == Op::Box) return reduce_step(cond(a, run(f.rhs().child(0))));
        return push_update(a, run(f.rhs()));
      }
      default: return f;
    }
  }
};

}  // namespace

const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> schemas = build_schemas();
  return schemas;
}

const AxiomSchema& axiom_schema(std::string_view name) {
  for (const AxiomSchema& s : axiom_schemas()) {
    if (s.name == name) return s;
  }
  throw PreconditionError("unknown axiom schema '" + std::string(name) + "'");
}

Formula instantiate(const AxiomSchema& schema, std::span<const Formula> parts) {
  if (parts.size() != schema.arity()) {
    throw PreconditionError("schema " + schema.name + " takes " + std::to_string(schema.arity()) +
                            " formulas, got " + std::to_string(parts.size()));
  }
  for (std::size_t i : schema.nonmodal) {
    if (!parts[i].is_nonmodal()) {
      throw PreconditionError("schema " + schema.name + " needs a nonmodal " + schema.params[i] +
                              ", got " + render(parts[i]));
    }
  }
  return substitute_letters(parse(schema.text), schema.params, parts);
}

Formula reduce_step(const Formula& f) {
  if (f.op() != Op::Cond) throw PreconditionError("reduce_step needs a conditional");
  const Formula& a = f.lhs();
  if (a.has_conditional() || a.has_update() || f.rhs().has_conditional() ||
      f.rhs().has_update()) {
    throw PreconditionError("reduce_step needs conditional-free sides");
  }
  std::vector<Formula> clauses;
  for (const CnfClause& c : to_k45_cnf(f.rhs())) {
    if (c.boxes.empty() && c.diamond_part.is_bottom()) {
      // A purely nonmodal clause: split its conjuncts, as repeated A2 would.
      for (const Formula& p : flatten(c.pi, Op::And)) clauses.push_back(box(implies(a, p)));
      continue;
    }
    Formula acc = box(implies(a, c.pi));
    for (const Formula& b : c.boxes) acc = disj(acc, box(implies(a, b)));
    if (!c.diamond_part.is_bottom()) acc = disj(acc, neg(box(implies(a, neg(c.diamond_part)))));
    clauses.push_back(acc);
  }
  return conj_all(clauses);
}

Formula push_update(const Formula& announcement, const Formula& body) {
  if (announcement.has_conditional() || announcement.has_update() || body.has_conditional() ||
      body.has_update()) {
    throw PreconditionError("push_update needs conditional-free formulas");
  }
  std::unordered_map<const void*, Formula> memo;
  auto go = [&](auto& self, const Formula& g) -> Formula {
    if (g.op() == Op::Atom || g.op() == Op::Bottom) return g;
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Formula out;
    switch (g.op()) {
      case Op::Not: out = neg(self(self, g.child(0))); break;
      case Op::And:
      case Op::Or: {
        std::vector<Formula> parts;
        for (const Formula& p : flatten(g, g.op())) parts.push_back(self(self, p));
        out = g.op() == Op::And ? conj_all(parts) : disj_all(parts);
        break;
      }
      case Op::Box: out = box(implies(announcement, self(self, g.child(0)))); break;
      case Op::Diamond: out = diamond(conj(announcement, self(self, g.child(0)))); break;
      default: break;
    }
    memo.emplace(g.id(), out);
    return out;
  };
  return go(go, body);
}

Formula eliminate_conditionals(const Formula& f) {
  return Eliminator().run(f);
}

}  // namespace epi
