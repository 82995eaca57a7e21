#include "epistemic/normal.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "epistemic/error.hpp"
#include "epistemic/parser.hpp"
#include "epistemic/truth_table.hpp"

namespace epi {

namespace {

// Intermediate results are capped; past this the product is hopeless anyway.
constexpr std::size_t kMaxBlocks = 200000;

void require_plain(const Formula& f, const char* what) {
  if (f.has_conditional() || f.has_update()) {
    throw PreconditionError(std::string(what) + " needs a formula without '=>' or updates");
  }
}

class NnfBuilder {
 public:
  Formula run(const Formula& f, bool positive) {
    auto key = std::make_pair(f.id(), positive);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Formula out = build(f, positive);
    memo_.emplace(key, out);
    return out;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<const void*, bool>& k) const {
      return std::hash<const void*>{}(k.first) * 2 + k.second;
    }
  };

  Formula build(const Formula& f, bool positive) {
    switch (f.op()) {
      case Op::Atom: return positive ? f : neg(f);
      case Op::Bottom: return positive ? f : Formula::top();
      case Op::Not: return run(f.child(0), !positive);
      case Op::And:
      case Op::Or: {
        std::vector<Formula> parts;
        for (const Formula& p : flatten(f, f.op())) parts.push_back(run(p, positive));
        bool as_and = (f.op() == Op::And) == positive;
        return as_and ? conj_all(parts) : disj_all(parts);
      }
      case Op::Box: {
        Formula c = run(f.child(0), positive);
        return positive ? box(c) : diamond(c);
      }
      case Op::Diamond: {
        Formula c = run(f.child(0), positive);
        return positive ? diamond(c) : box(c);
      }
      default: throw PreconditionError("negation normal form of a conditional or update");
    }
  }

  std::unordered_map<std::pair<const void*, bool>, Formula, KeyHash> memo_;
};

// Nonmodal components as truth tables over a fixed atom universe.
class TableAlgebra {
 public:
  using Value = TruthTable;
  static constexpr bool kExact = true;

  explicit TableAlgebra(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {}

  Value lift(const Formula& f) {
    if (auto it = lifted_.find(f.id()); it != lifted_.end()) return it->second;
    Value v = truth_table(f, atoms_);
    lifted_.emplace(f.id(), v);
    return v;
  }
  Value top() const { return TruthTable(static_cast<int>(atoms_.size()), true); }
  Value bottom() const { return TruthTable(static_cast<int>(atoms_.size()), false); }
  Value and_(const Value& a, const Value& b) const { return a & b; }
  Value or_(const Value& a, const Value& b) const { return a | b; }
  bool is_false(const Value& a) const { return a.is_false(); }
  bool is_true(const Value& a) const { return a.is_true(); }
  bool leq(const Value& a, const Value& b) const { return a.subset_of(b); }
  bool equal(const Value& a, const Value& b) const { return a == b; }

  const Formula& formula(const Value& v) {
    auto it = materialized_.find(v);
    if (it == materialized_.end()) {
      Formula f = materialize(v, atoms_);
      it = materialized_.emplace(v, std::make_pair(f, render(f))).first;
    }
    return it->second.first;
  }
  const std::string& key(const Value& v) {
    formula(v);
    return materialized_.find(v)->second.second;
  }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<const void*, Value> lifted_;
  std::unordered_map<Value, std::pair<Formula, std::string>> materialized_;
};

// Nonmodal components kept as formulas; only constants and identical
// operands fold.
class SyntaxAlgebra {
 public:
  using Value = Formula;
  static constexpr bool kExact = false;

  Value lift(const Formula& f) const { return f; }
  Value top() const { return Formula::top(); }
  Value bottom() const { return Formula::bottom(); }
  Value and_(const Value& a, const Value& b) const {
    if (a.is_bottom() || b.is_bottom()) return Formula::bottom();
    if (a.is_top()) return b;
    if (b.is_top() || a == b) return a;
    return conj(a, b);
  }
  Value or_(const Value& a, const Value& b) const {
    if (a.is_top() || b.is_top()) return Formula::top();
    if (a.is_bottom()) return b;
    if (b.is_bottom() || a == b) return a;
    return disj(a, b);
  }
  bool is_false(const Value& a) const { return a.is_bottom(); }
  bool is_true(const Value& a) const { return a.is_top(); }
  bool leq(const Value& a, const Value& b) const {
    return a.is_bottom() || b.is_top() || a == b;
  }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  const Formula& formula(const Value& v) const { return v; }
  const std::string& key(const Value& v) {
    auto it = keys_.find(v.id());
    if (it == keys_.end()) it = keys_.emplace(v.id(), std::make_pair(v, render(v))).first;
    return it->second.second;
  }

 private:
  // Holds the formula so its address stays valid as a key.
  std::unordered_map<const void*, std::pair<Formula, std::string>> keys_;
};

template <typename Alg>
class Engine {
 public:
  using P = typename Alg::Value;

  // Conjunction of the components (a DNF block).
  struct Term {
    P pi, box;
    std::vector<P> dias;
  };
  // Disjunction of the components (a CNF block).
  struct Clause {
    P pi, dia;
    std::vector<P> boxes;
  };

  explicit Engine(Alg alg) : alg_(std::move(alg)) {}

  const std::vector<Term>& dnf(const Formula& f) {
    if (auto it = dnf_memo_.find(f.id()); it != dnf_memo_.end()) return it->second;
    std::vector<Term> out = build_dnf(f);
    return dnf_memo_.emplace(f.id(), std::move(out)).first->second;
  }

  const std::vector<Clause>& cnf(const Formula& f) {
    if (auto it = cnf_memo_.find(f.id()); it != cnf_memo_.end()) return it->second;
    std::vector<Clause> out = build_cnf(f);
    return cnf_memo_.emplace(f.id(), std::move(out)).first->second;
  }

  std::vector<DnfDisjunct> export_dnf(const std::vector<Term>& terms) {
    std::vector<DnfDisjunct> out;
    for (const Term& t : terms) {
      DnfDisjunct d{alg_.formula(t.pi), alg_.formula(t.box), {}};
      for (const P& c : t.dias) d.diamonds.push_back(alg_.formula(c));
      out.push_back(std::move(d));
    }
    return out;
  }

  std::vector<CnfClause> export_cnf(const std::vector<Clause>& clauses) {
    std::vector<CnfClause> out;
    for (const Clause& c : clauses) {
      CnfClause k{alg_.formula(c.pi), alg_.formula(c.dia), {}};
      for (const P& b : c.boxes) k.boxes.push_back(alg_.formula(b));
      out.push_back(std::move(k));
    }
    return out;
  }

 private:
  Term unit_term() const { return {alg_.top(), alg_.top(), {}}; }
  Clause unit_clause() const { return {alg_.bottom(), alg_.bottom(), {}}; }

  static void check_size(std::size_t n) {
    if (n > kMaxBlocks) throw ResourceLimit("normal form too large");
  }

  std::vector<Term> and_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
    check_size(a.size() * b.size());
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const Term& x : a) {
      for (const Term& y : b) {
        Term t{alg_.and_(x.pi, y.pi), alg_.and_(x.box, y.box), x.dias};
        t.dias.insert(t.dias.end(), y.dias.begin(), y.dias.end());
        out.push_back(std::move(t));
      }
    }
    return simplify(std::move(out));
  }

  std::vector<Clause> or_clauses(const std::vector<Clause>& a, const std::vector<Clause>& b) {
    check_size(a.size() * b.size());
    std::vector<Clause> out;
    out.reserve(a.size() * b.size());
    for (const Clause& x : a) {
      for (const Clause& y : b) {
        Clause c{alg_.or_(x.pi, y.pi), alg_.or_(x.dia, y.dia), x.boxes};
        c.boxes.insert(c.boxes.end(), y.boxes.begin(), y.boxes.end());
        out.push_back(std::move(c));
      }
    }
    return simplify(std::move(out));
  }

  std::vector<Term> build_dnf(const Formula& f) {
    if (f.is_nonmodal()) return simplify(std::vector<Term>{{alg_.lift(f), alg_.top(), {}}});
    switch (f.op()) {
      case Op::Or: {
        std::vector<Term> out;
        for (const Formula& p : flatten(f, Op::Or)) {
          const auto& part = dnf(p);
          out.insert(out.end(), part.begin(), part.end());
          check_size(out.size());
        }
        return simplify(std::move(out));
      }
      case Op::And: {
        std::vector<Term> acc{unit_term()};
        for (const Formula& p : flatten(f, Op::And)) {
          acc = and_terms(acc, dnf(p));
          if (acc.empty()) break;
        }
        return acc;
      }
      case Op::Box: {
        // [](pi | <>d | []b1 ...) == []pi | <>d | []b1 ...
        std::vector<Term> acc{unit_term()};
        for (const Clause& c : cnf(f.child(0))) {
          std::vector<Term> alts{{alg_.top(), c.pi, {}}};
          if (!alg_.is_false(c.dia)) alts.push_back({alg_.top(), alg_.top(), {c.dia}});
          for (const P& b : c.boxes) alts.push_back({alg_.top(), b, {}});
          acc = and_terms(acc, simplify(std::move(alts)));
        }
        return acc;
      }
      case Op::Diamond: {
        // <>(pi & []b & <>c ...) == <>pi & []b & <>c ...
        std::vector<Term> out;
        for (const Term& t : dnf(f.child(0))) {
          Term d{alg_.top(), t.box, {t.pi}};
          d.dias.insert(d.dias.end(), t.dias.begin(), t.dias.end());
          out.push_back(std::move(d));
        }
        return simplify(std::move(out));
      }
      default: throw PreconditionError("normal form of a formula outside negation normal form");
    }
  }

  std::vector<Clause> build_cnf(const Formula& f) {
    if (f.is_nonmodal()) {
      return simplify(std::vector<Clause>{{alg_.lift(f), alg_.bottom(), {}}});
    }
    switch (f.op()) {
      case Op::And: {
        std::vector<Clause> out;
        for (const Formula& p : flatten(f, Op::And)) {
          const auto& part = cnf(p);
          out.insert(out.end(), part.begin(), part.end());
          check_size(out.size());
        }
        return simplify(std::move(out));
      }
      case Op::Or: {
        std::vector<Clause> acc{unit_clause()};
        for (const Formula& p : flatten(f, Op::Or)) {
          acc = or_clauses(acc, cnf(p));
          if (acc.empty()) break;
        }
        return acc;
      }
      case Op::Diamond: {
        // <>t for each DNF block t, as a conjunction of unit clauses, then
        // distributed over the disjunction of blocks.
        std::vector<Clause> acc{unit_clause()};
        for (const Term& t : dnf(f.child(0))) {
          std::vector<Clause> units{{alg_.bottom(), t.pi, {}}, {alg_.bottom(), alg_.bottom(), {t.box}}};
          for (const P& c : t.dias) units.push_back({alg_.bottom(), c, {}});
          acc = or_clauses(acc, simplify(std::move(units)));
          if (acc.empty()) break;
        }
        return acc;
      }
      case Op::Box: {
        std::vector<Clause> out;
        for (const Clause& c : cnf(f.child(0))) {
          Clause k{alg_.bottom(), c.dia, {c.pi}};
          k.boxes.insert(k.boxes.end(), c.boxes.begin(), c.boxes.end());
          out.push_back(std::move(k));
        }
        return simplify(std::move(out));
      }
      default: throw PreconditionError("normal form of a formula outside negation normal form");
    }
  }

  // Keeps the members of `xs` not strictly dominated; `dominated(a, b)`
  // means a is redundant next to b. Of two mutually dominating members, the
  // earlier survives.
  template <typename T, typename F>
  static std::vector<T> prune(std::vector<T> xs, F dominated) {
    std::vector<bool> dead(xs.size(), false);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size() && !dead[i]; ++j) {
        if (i == j || dead[j]) continue;
        if (dominated(xs[i], xs[j]) && !(j > i && dominated(xs[j], xs[i]))) dead[i] = true;
      }
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!dead[i]) out.push_back(std::move(xs[i]));
    }
    return out;
  }

  void sort_components(std::vector<P>& xs) {
    std::vector<std::pair<std::string, P>> keyed;
    for (auto& x : xs) keyed.emplace_back(alg_.key(x), std::move(x));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    xs.clear();
    for (auto& [k, x] : keyed) xs.push_back(std::move(x));
  }

  bool same_list(const std::vector<P>& a, const std::vector<P>& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!alg_.equal(a[i], b[i])) return false;
    }
    return true;
  }

  std::string block_key(const P& a, const P& b, const std::vector<P>& rest) {
    std::string k = alg_.key(a);
    k += '\x01';
    k += alg_.key(b);
    for (const P& x : rest) {
      k += '\x01';
      k += alg_.key(x);
    }
    return k;
  }

  std::vector<Term> simplify(std::vector<Term> terms) {
    std::vector<Term> live;
    for (Term& t : terms) {
      if (alg_.is_false(t.pi)) continue;
      if constexpr (Alg::kExact) {
        // []b & <>c == []b & <>(b & c)
        for (P& c : t.dias) c = alg_.and_(c, t.box);
      } else {
        if (alg_.is_false(t.box) && !t.dias.empty()) continue;
      }
      if (std::any_of(t.dias.begin(), t.dias.end(), [&](const P& c) { return alg_.is_false(c); })) {
        continue;
      }
      // <>c is implied by <>c' when c' entails c.
      t.dias = prune(std::move(t.dias), [&](const P& a, const P& b) { return alg_.leq(b, a); });
      sort_components(t.dias);
      live.push_back(std::move(t));
    }
    // (pi1 & M) | (pi2 & M) == (pi1 | pi2) & M
    std::vector<Term> merged;
    for (Term& t : live) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const Term& m) {
        return alg_.equal(m.box, t.box) && same_list(m.dias, t.dias);
      });
      if (it == merged.end()) {
        merged.push_back(std::move(t));
      } else {
        it->pi = alg_.or_(it->pi, t.pi);
      }
    }
    // Drop a block that entails another block.
    merged = prune(std::move(merged), [&](const Term& small, const Term& big) {
      if (!alg_.leq(small.pi, big.pi) || !alg_.leq(small.box, big.box)) return false;
      return std::all_of(big.dias.begin(), big.dias.end(), [&](const P& c) {
        return std::any_of(small.dias.begin(), small.dias.end(),
                           [&](const P& s) { return alg_.leq(s, c); });
      });
    });
    std::vector<std::pair<std::string, Term>> keyed;
    for (Term& t : merged) keyed.emplace_back(block_key(t.pi, t.box, t.dias), std::move(t));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& [k, t] : keyed) out.push_back(std::move(t));
    return out;
  }

  std::vector<Clause> simplify(std::vector<Clause> clauses) {
    std::vector<Clause> live;
    for (Clause& c : clauses) {
      if (alg_.is_true(c.pi)) continue;
      if constexpr (Alg::kExact) {
        // []b | <>d == [](b | d) | <>d
        for (P& b : c.boxes) b = alg_.or_(b, c.dia);
      } else {
        if (alg_.is_true(c.dia) && !c.boxes.empty()) continue;
      }
      if (std::any_of(c.boxes.begin(), c.boxes.end(), [&](const P& b) { return alg_.is_true(b); })) {
        continue;
      }
      // []b is redundant next to []b' when b entails b'.
      c.boxes = prune(std::move(c.boxes), [&](const P& a, const P& b) { return alg_.leq(a, b); });
      sort_components(c.boxes);
      live.push_back(std::move(c));
    }
    // (pi1 | M) & (pi2 | M) == (pi1 & pi2) | M
    std::vector<Clause> merged;
    for (Clause& c : live) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const Clause& m) {
        return alg_.equal(m.dia, c.dia) && same_list(m.boxes, c.boxes);
      });
      if (it == merged.end()) {
        merged.push_back(std::move(c));
      } else {
        it->pi = alg_.and_(it->pi, c.pi);
      }
    }
    // Drop a clause entailed by another clause.
    merged = prune(std::move(merged), [&](const Clause& weak, const Clause& strong) {
      if (!alg_.leq(strong.pi, weak.pi) || !alg_.leq(strong.dia, weak.dia)) return false;
      return std::all_of(strong.boxes.begin(), strong.boxes.end(), [&](const P& b) {
        return std::any_of(weak.boxes.begin(), weak.boxes.end(),
                           [&](const P& w) { return alg_.leq(b, w); });
      });
    });
    std::vector<std::pair<std::string, Clause>> keyed;
    for (Clause& c : merged) keyed.emplace_back(block_key(c.pi, c.dia, c.boxes), std::move(c));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Clause> out;
    for (auto& [k, c] : keyed) out.push_back(std::move(c));
    return out;
  }

  Alg alg_;
  std::unordered_map<const void*, std::vector<Term>> dnf_memo_;
  std::unordered_map<const void*, std::vector<Clause>> cnf_memo_;
};

bool use_tables(const std::vector<std::string>& atoms, const NormalFormOptions& opts) {
  bool fits = static_cast<int>(atoms.size()) <= kMaxTableAtoms;
  switch (opts.simplification) {
    case Simplification::Syntactic: return false;
    case Simplification::Semantic:
      if (!fits) throw ResourceLimit("too many atoms for semantic simplification");
      return true;
    case Simplification::Auto: return fits;
  }
  return fits;
}

}  // namespace

Formula to_nnf(const Formula& f) {
  require_plain(f, "negation normal form");
  return NnfBuilder().run(f, true);
}

std::vector<DnfDisjunct> to_k45_dnf(const Formula& f, const NormalFormOptions& opts) {
  require_plain(f, "K45 normal form");
  Formula n = NnfBuilder().run(f, true);
  auto atoms = atoms_of(f);
  if (use_tables(atoms, opts)) {
    Engine<TableAlgebra> e{TableAlgebra(atoms)};
    return e.export_dnf(e.dnf(n));
  }
  Engine<SyntaxAlgebra> e{SyntaxAlgebra()};
  return e.export_dnf(e.dnf(n));
}

std::vector<CnfClause> to_k45_cnf(const Formula& f, const NormalFormOptions& opts) {
  require_plain(f, "K45 normal form");
  Formula n = NnfBuilder().run(f, true);
  auto atoms = atoms_of(f);
  if (use_tables(atoms, opts)) {
    Engine<TableAlgebra> e{TableAlgebra(atoms)};
    return e.export_cnf(e.cnf(n));
  }
  Engine<SyntaxAlgebra> e{SyntaxAlgebra()};
  return e.export_cnf(e.cnf(n));
}

Formula disjunct_to_formula(const DnfDisjunct& d) {
  Formula acc = conj(d.pi, box(d.box_part));
  for (const Formula& c : d.diamonds) acc = conj(acc, diamond(c));
  return acc;
}

Formula clause_to_formula(const CnfClause& c) {
  Formula acc = disj(c.pi, diamond(c.diamond_part));
  for (const Formula& b : c.boxes) acc = disj(acc, box(b));
  return acc;
}

Formula dnf_to_formula(std::span<const DnfDisjunct> dnf) {
  std::vector<Formula> parts;
  for (const auto& d : dnf) parts.push_back(disjunct_to_formula(d));
  return disj_all(parts);
}

Formula cnf_to_formula(std::span<const CnfClause> cnf) {
  std::vector<Formula> parts;
  for (const auto& c : cnf) parts.push_back(clause_to_formula(c));
  return conj_all(parts);
}

}  // namespace epi
