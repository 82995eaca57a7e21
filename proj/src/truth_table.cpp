#include "epistemic/truth_table.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "epistemic/error.hpp"
#include "epistemic/parser.hpp"

namespace epi {

TruthTable::TruthTable(int atom_count, bool value) : atoms_(atom_count) {
  if (atom_count < 0 || atom_count > 20) throw ResourceLimit("truth table too large");
  std::uint64_t nwords = ((1ULL << atom_count) + 63) / 64;
  words_.assign(nwords, value ? ~0ULL : 0ULL);
  mask_tail();
}

TruthTable TruthTable::variable(int atom_count, int index) {
  TruthTable t(atom_count, false);
  for (std::uint64_t r = 0; r < t.rows(); ++r) {
    if ((r >> index) & 1U) t.words_[r >> 6] |= 1ULL << (r & 63);
  }
  return t;
}

void TruthTable::mask_tail() {
  if (atoms_ < 6 && !words_.empty()) words_[0] &= (1ULL << (1U << atoms_)) - 1;
}

bool TruthTable::is_false() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool TruthTable::is_true() const { return (~*this).is_false(); }

bool TruthTable::subset_of(const TruthTable& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

TruthTable TruthTable::operator&(const TruthTable& o) const {
  TruthTable t = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) t.words_[i] &= o.words_[i];
  return t;
}

TruthTable TruthTable::operator|(const TruthTable& o) const {
  TruthTable t = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) t.words_[i] |= o.words_[i];
  return t;
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  for (auto& w : t.words_) w = ~w;
  t.mask_tail();
  return t;
}

std::size_t TruthTable::hash() const {
  std::size_t h = static_cast<std::size_t>(atoms_);
  for (auto w : words_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
  return h;
}

namespace {

class TableBuilder {
 public:
  explicit TableBuilder(const std::vector<std::string>& atoms)
      : n_(static_cast<int>(atoms.size())) {
    for (int i = 0; i < n_; ++i) index_[atoms[i]] = i;
  }

  TruthTable build(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    TruthTable t;
    switch (f.op()) {
      case Op::Atom: {
        auto it = index_.find(f.name());
        if (it == index_.end()) throw PreconditionError("atom '" + f.name() + "' not in universe");
        t = TruthTable::variable(n_, it->second);
        break;
      }
      case Op::Bottom: t = TruthTable(n_, false); break;
      case Op::Not: t = ~build(f.child(0)); break;
      case Op::And:
      case Op::Or: {
        bool is_and = f.op() == Op::And;
        t = TruthTable(n_, is_and);
        for (const Formula& part : flatten(f, f.op())) {
          t = is_and ? (t & build(part)) : (t | build(part));
        }
        break;
      }
      default:
        throw PreconditionError("truth table of a modal formula");
    }
    memo_.emplace(f.id(), t);
    return t;
  }

 private:
  int n_;
  std::unordered_map<std::string, int> index_;
  std::unordered_map<const void*, TruthTable> memo_;
};

// Implicant: `value` on the cared-for bits, `dashes` marks don't-cares.
struct Implicant {
  std::uint32_t value;
  std::uint32_t dashes;
  bool operator==(const Implicant&) const = default;
  bool covers(std::uint32_t row) const { return (row & ~dashes) == value; }
};

struct ImplicantHash {
  std::size_t operator()(const Implicant& i) const {
    return (static_cast<std::size_t>(i.dashes) << 32) ^ i.value;
  }
};

std::vector<Implicant> prime_implicants(const TruthTable& t) {
  int n = t.atom_count();
  std::unordered_set<Implicant, ImplicantHash> level;
  for (std::uint32_t r = 0; r < t.rows(); ++r) {
    if (t.at(r)) level.insert({r, 0});
  }
  std::vector<Implicant> primes;
  while (!level.empty()) {
    std::unordered_set<Implicant, ImplicantHash> next, used;
    for (const Implicant& imp : level) {
      for (int b = 0; b < n; ++b) {
        std::uint32_t bit = 1U << b;
        if ((imp.dashes & bit) || (imp.value & bit)) continue;
        Implicant partner{imp.value | bit, imp.dashes};
        if (level.count(partner)) {
          next.insert({imp.value, imp.dashes | bit});
          used.insert(imp);
          used.insert(partner);
        }
      }
    }
    for (const Implicant& imp : level) {
      if (!used.count(imp)) primes.push_back(imp);
    }
    level = std::move(next);
  }
  std::sort(primes.begin(), primes.end(), [](const Implicant& a, const Implicant& b) {
    return a.dashes != b.dashes ? a.dashes > b.dashes : a.value < b.value;
  });
  return primes;
}

std::vector<Implicant> cover(const TruthTable& t) {
  std::vector<Implicant> primes = prime_implicants(t);
  std::vector<std::uint32_t> todo;
  for (std::uint32_t r = 0; r < t.rows(); ++r) {
    if (t.at(r)) todo.push_back(r);
  }
  std::vector<Implicant> chosen;
  std::vector<bool> taken(primes.size(), false);
  // Essential primes first.
  for (std::uint32_t r : todo) {
    int only = -1, count = 0;
    for (std::size_t i = 0; i < primes.size() && count < 2; ++i) {
      if (primes[i].covers(r)) {
        only = static_cast<int>(i);
        ++count;
      }
    }
    if (count == 1 && !taken[only]) {
      taken[only] = true;
      chosen.push_back(primes[only]);
    }
  }
  auto uncovered = [&] {
    std::vector<std::uint32_t> rest;
    for (std::uint32_t r : todo) {
      bool hit = std::any_of(chosen.begin(), chosen.end(),
                             [&](const Implicant& c) { return c.covers(r); });
      if (!hit) rest.push_back(r);
    }
    return rest;
  };
  for (auto rest = uncovered(); !rest.empty(); rest = uncovered()) {
    std::size_t best = 0;
    int best_gain = -1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (taken[i]) continue;
      int gain = static_cast<int>(std::count_if(
          rest.begin(), rest.end(), [&](std::uint32_t r) { return primes[i].covers(r); }));
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    taken[best] = true;
    chosen.push_back(primes[best]);
  }
  return chosen;
}

Formula literal(const std::vector<std::string>& atoms, int i, bool positive) {
  Formula a = Formula::atom(atoms[i]);
  return positive ? a : neg(a);
}

// Sum of products when `sop`, else product of sums from the complement.
Formula two_level(const TruthTable& t, const std::vector<std::string>& atoms, bool sop) {
  TruthTable target = sop ? t : ~t;
  std::vector<Formula> groups;
  int n = t.atom_count();
  for (const Implicant& imp : cover(target)) {
    std::vector<Formula> lits;
    for (int i = 0; i < n; ++i) {
      if (imp.dashes & (1U << i)) continue;
      bool bit = (imp.value >> i) & 1U;
      lits.push_back(literal(atoms, i, sop ? bit : !bit));
    }
    groups.push_back(sop ? conj_all(lits) : disj_all(lits));
  }
  std::vector<std::pair<std::string, Formula>> keyed;
  for (auto& g : groups) keyed.emplace_back(render(g), g);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.node_count() != b.second.node_count()) {
      return a.second.node_count() < b.second.node_count();
    }
    return a.first < b.first;
  });
  groups.clear();
  for (auto& [k, g] : keyed) groups.push_back(g);
  return sop ? disj_all(groups) : conj_all(groups);
}

}  // namespace

TruthTable truth_table(const Formula& f, const std::vector<std::string>& atoms) {
  return TableBuilder(atoms).build(f);
}

Formula materialize(const TruthTable& t, const std::vector<std::string>& atoms) {
  if (static_cast<int>(atoms.size()) != t.atom_count()) {
    throw PreconditionError("atom list does not match truth table");
  }
  if (t.is_false()) return Formula::bottom();
  if (t.is_true()) return Formula::top();
  Formula sop = two_level(t, atoms, true);
  Formula pos = two_level(t, atoms, false);
  return pos.node_count() < sop.node_count() ? pos : sop;
}

}  // namespace epi
