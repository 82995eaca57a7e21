#include "epistemic/dependence.hpp"

#include <algorithm>
#include <set>

#include "epistemic/error.hpp"
#include "epistemic/translate.hpp"

namespace epi {

namespace {

Formula decided(const Formula& a) { return disj(box(a), box(neg(a))); }

}  // namespace

void DependenceQuery::validate() const {
  if (basis.empty()) throw PreconditionError("dependence needs at least one basis atom");
  std::set<std::string> seen;
  for (const std::string& a : basis) {
    if (!is_valid_atom_name(a)) throw PreconditionError("invalid atom name '" + a + "'");
    if (!seen.insert(a).second) throw PreconditionError("basis atom '" + a + "' repeated");
  }
  if (!is_valid_atom_name(target)) throw PreconditionError("invalid atom name '" + target + "'");
  if (seen.count(target)) throw PreconditionError("target '" + target + "' is in the basis");
}

bool depends_on(const Model& m, WorldSet x, const DependenceQuery& query) {
  query.validate();
  auto worlds = x.members();
  WorldSet q = m.valuation(query.target);
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    for (std::size_t j = i + 1; j < worlds.size(); ++j) {
      int u = worlds[i], v = worlds[j];
      bool agree = std::all_of(query.basis.begin(), query.basis.end(), [&](const std::string& p) {
        WorldSet s = m.valuation(p);
        return s.contains(u) == s.contains(v);
      });
      if (agree && q.contains(u) != q.contains(v)) return false;
    }
  }
  return true;
}

Formula depend_formula(const DependenceQuery& query) {
  query.validate();
  std::vector<Formula> parts;
  for (const std::string& p : query.basis) parts.push_back(decided(Formula::atom(p)));
  return cond(conj_all(parts), decided(Formula::atom(query.target)));
}

Formula expo_formula(const DependenceQuery& query) {
  query.validate();
  const std::size_t n = query.basis.size();
  if (n > kMaxExpoBasis) {
    throw PreconditionError("expo formula limited to " + std::to_string(kMaxExpoBasis) +
                            " basis atoms");
  }
  const Formula q = Formula::atom(query.target);
  std::vector<Formula> conjuncts;
  for (std::uint64_t pattern = (1ULL << n); pattern-- > 0;) {
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < n; ++i) {
      Formula p = Formula::atom(query.basis[i]);
      bool positive = (pattern >> (n - 1 - i)) & 1U;
      lits.push_back(positive ? p : neg(p));
    }
    Formula s = conj_all(lits);
    conjuncts.push_back(disj(box(implies(s, q)), box(implies(s, neg(q)))));
  }
  return conj_all(conjuncts);
}

std::vector<SuccinctnessRow> succinctness_report(std::size_t max_n) {
  if (max_n == 0 || max_n > kMaxSuccinctnessN) {
    throw PreconditionError("succinctness report covers n = 1.." +
                            std::to_string(kMaxSuccinctnessN));
  }
  std::vector<SuccinctnessRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    DependenceQuery q{"q", {}};
    for (std::size_t i = 1; i <= n; ++i) q.basis.push_back("p" + std::to_string(i));
    SuccinctnessRow row{n, depend_formula(q).node_count(), expo_formula(q).node_count(), {}};
    if (n <= kMaxDaggerBasis) {
      try {
        row.dagger_nodes = dagger(depend_formula(q)).node_count();
      } catch (const ResourceLimit&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace epi
