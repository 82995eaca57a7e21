#include "epistemic/formula.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "epistemic/error.hpp"

namespace epi {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

const char* op_name(Op op) {
  switch (op) {
    case Op::Atom: return "Atom";
    case Op::Bottom: return "Bottom";
    case Op::Not: return "Not";
    case Op::And: return "And";
    case Op::Or: return "Or";
    case Op::Box: return "Box";
    case Op::Diamond: return "Diamond";
    case Op::Cond: return "Cond";
    case Op::Update: return "Update";
  }
  return "?";
}

Formula::Formula() : Formula(bottom()) {}

void Formula::destroy(const Node* n) {
  thread_local std::vector<const Node*> pending;
  thread_local bool draining = false;
  pending.push_back(n);
  if (draining) return;
  draining = true;
  while (!pending.empty()) {
    const Node* x = pending.back();
    pending.pop_back();
    delete x;
  }
  draining = false;
}

Formula Formula::make(Op op, std::string name, const Formula* a,
                      const Formula* b) {
  auto n = std::unique_ptr<Node>(new Node);
  n->op = op;
  n->name = std::move(name);
  n->size = 1;
  n->depth = 0;
  n->conds = op == Op::Cond ? 1 : 0;
  n->updates = op == Op::Update;
  n->nonmodal = op == Op::Atom || op == Op::Bottom || op == Op::Not ||
                op == Op::And || op == Op::Or;
  std::size_t h = std::hash<int>{}(static_cast<int>(op));
  if (op == Op::Atom) h = mix(h, std::hash<std::string>{}(n->name));
  std::uint32_t kid_depth = 0;
  for (int i = 0; i < 2; ++i) {
    const Formula* k = i == 0 ? a : b;
    if (!k) continue;
    n->kids[i] = *k;
    const Node& kn = *k->node_;
    n->size = sat_add(n->size, kn.size);
    n->conds = sat_add(n->conds, kn.conds);
    n->updates = n->updates || kn.updates;
    n->nonmodal = n->nonmodal && kn.nonmodal;
    kid_depth = std::max(kid_depth, kn.depth);
    h = mix(h, kn.hash);
  }
  bool modal = op == Op::Box || op == Op::Diamond || op == Op::Cond ||
               op == Op::Update;
  n->depth = kid_depth + (modal ? 1 : 0);
  n->hash = h;
  return Formula(std::shared_ptr<const Node>(n.release(), &Formula::destroy));
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw PreconditionError("invalid atom name '" + name + "'");
  }
  return make(Op::Atom, std::move(name), nullptr, nullptr);
}

Formula Formula::bottom() {
  static const Formula b = make(Op::Bottom, {}, nullptr, nullptr);
  return b;
}

Formula Formula::top() {
  static const Formula t = neg(bottom());
  return t;
}

std::size_t Formula::arity() const {
  switch (op()) {
    case Op::Atom:
    case Op::Bottom: return 0;
    case Op::Not:
    case Op::Box:
    case Op::Diamond: return 1;
    default: return 2;
  }
}

const Formula& Formula::child(std::size_t i) const {
  if (i >= arity()) throw PreconditionError("child index out of range");
  return node_->kids[i];
}

bool operator==(const Formula& a, const Formula& b) {
  std::vector<std::pair<const Formula::Node*, const Formula::Node*>> stack;
  stack.emplace_back(a.node_.get(), b.node_.get());
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->hash != y->hash || x->op != y->op || x->size != y->size ||
        x->name != y->name) {
      return false;
    }
    for (int i = 0; i < 2; ++i) {
      if (x->kids[i].node_) {
        stack.emplace_back(x->kids[i].node_.get(), y->kids[i].node_.get());
      }
    }
  }
  return true;
}

Formula neg(Formula a) { return Formula::make(Op::Not, {}, &a, nullptr); }
Formula conj(Formula a, Formula b) { return Formula::make(Op::And, {}, &a, &b); }
Formula disj(Formula a, Formula b) { return Formula::make(Op::Or, {}, &a, &b); }
Formula box(Formula a) { return Formula::make(Op::Box, {}, &a, nullptr); }
Formula diamond(Formula a) {
  return Formula::make(Op::Diamond, {}, &a, nullptr);
}
Formula cond(Formula a, Formula c) {
  return Formula::make(Op::Cond, {}, &a, &c);
}
Formula update(Formula a, Formula b) {
  return Formula::make(Op::Update, {}, &a, &b);
}

Formula implies(Formula a, Formula b) {
  return disj(neg(std::move(a)), std::move(b));
}

Formula iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}

Formula conj_all(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula disj_all(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::bottom();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

std::vector<Formula> flatten(const Formula& f, Op op) {
  std::vector<Formula> out;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->op() == op) {
      stack.push_back(&g->child(1));
      stack.push_back(&g->child(0));
    } else {
      out.push_back(*g);
    }
  }
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> names;
  std::unordered_set<const void*> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.insert(g->id()).second) continue;
    if (g->op() == Op::Atom) names.insert(g->name());
    for (std::size_t i = 0; i < g->arity(); ++i) stack.push_back(&g->child(i));
  }
  return {names.begin(), names.end()};
}

bool is_reserved_word(std::string_view name) {
  return name == "bot" || name == "top" || name == "true" || name == "false";
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return !is_reserved_word(name);
}

FormulaMetrics metrics(const Formula& f) {
  return {f.node_count(), f.modal_depth(), f.conditional_count()};
}

const Formula& subformula_at(const Formula& f, const OccurrencePath& path) {
  const Formula* g = &f;
  for (std::uint8_t i : path) {
    if (i >= g->arity()) throw PreconditionError("invalid occurrence path");
    g = &g->child(i);
  }
  return *g;
}

namespace {

Formula rebuild(const Formula& f, std::size_t i, Formula kid) {
  switch (f.op()) {
    case Op::Not: return neg(std::move(kid));
    case Op::Box: return box(std::move(kid));
    case Op::Diamond: return diamond(std::move(kid));
    case Op::And:
      return i == 0 ? conj(std::move(kid), f.child(1))
                    : conj(f.child(0), std::move(kid));
    case Op::Or:
      return i == 0 ? disj(std::move(kid), f.child(1))
                    : disj(f.child(0), std::move(kid));
    case Op::Cond:
      return i == 0 ? cond(std::move(kid), f.child(1))
                    : cond(f.child(0), std::move(kid));
    case Op::Update:
      return i == 0 ? update(std::move(kid), f.child(1))
                    : update(f.child(0), std::move(kid));
    default: throw PreconditionError("invalid occurrence path");
  }
}

}  // namespace

Formula substitute(const Formula& f, const OccurrencePath& path,
                   const Formula& replacement) {
  std::vector<const Formula*> spine{&f};
  for (std::uint8_t i : path) {
    const Formula& g = *spine.back();
    if (i >= g.arity()) throw PreconditionError("invalid occurrence path");
    spine.push_back(&g.child(i));
  }
  Formula acc = replacement;
  for (std::size_t k = path.size(); k-- > 0;) {
    acc = rebuild(*spine[k], path[k], std::move(acc));
  }
  return acc;
}

}  // namespace epi
