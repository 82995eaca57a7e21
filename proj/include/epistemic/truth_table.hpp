#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epistemic/formula.hpp"

namespace epi {

// Largest atom universe for which nonmodal formulas are handled as full
// truth tables.
inline constexpr int kMaxTableAtoms = 10;

// Truth table of a nonmodal formula over an ordered atom list. Row r assigns
// atom i the value of bit i of r.
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(int atom_count, bool value);

  static TruthTable variable(int atom_count, int index);

  int atom_count() const { return atoms_; }
  std::uint64_t rows() const { return 1ULL << atoms_; }
  bool at(std::uint64_t row) const { return (words_[row >> 6] >> (row & 63)) & 1U; }

  bool is_false() const;
  bool is_true() const;
  bool subset_of(const TruthTable& o) const;

  TruthTable operator&(const TruthTable& o) const;
  TruthTable operator|(const TruthTable& o) const;
  TruthTable operator~() const;
  bool operator==(const TruthTable& o) const = default;

  std::size_t hash() const;

 private:
  void mask_tail();

  int atoms_ = 0;
  std::vector<std::uint64_t> words_;
};

// f must be nonmodal and its atoms must all appear in `atoms`.
TruthTable truth_table(const Formula& f, const std::vector<std::string>& atoms);

// A small formula with the given table: the shorter of a prime-implicant
// sum of products and product of sums. Constants come out as bot / ~bot.
// Deterministic.
Formula materialize(const TruthTable& t, const std::vector<std::string>& atoms);

}  // namespace epi

template <>
struct std::hash<epi::TruthTable> {
  std::size_t operator()(const epi::TruthTable& t) const noexcept { return t.hash(); }
};
