#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace epi {

inline constexpr int kMaxWorlds = 62;

// A set of worlds drawn from 0..62, stored as a bitset.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet full(int world_count) {
    return WorldSet(world_count >= 64 ? ~0ULL : (1ULL << world_count) - 1);
  }
  static constexpr WorldSet single(int world) { return WorldSet(1ULL << world); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int world) const { return (bits_ >> world) & 1U; }
  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr WorldSet with(int world) const { return WorldSet(bits_ | (1ULL << world)); }

  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet minus(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const WorldSet&) const = default;

  std::vector<int> members() const;

 private:
  std::uint64_t bits_ = 0;
};

// Finite model: worlds 0..world_count-1 and a valuation. Atoms missing from
// the valuation are false everywhere.
class Model {
 public:
  explicit Model(int world_count);

  int world_count() const { return world_count_; }
  WorldSet worlds() const { return WorldSet::full(world_count_); }
  WorldSet valuation(const std::string& atom) const;
  const std::map<std::string, WorldSet>& valuations() const { return valuation_; }

  // Throws ModelError if the set mentions worlds outside the model.
  void set_valuation(const std::string& atom, WorldSet worlds);

  bool operator==(const Model&) const = default;

 private:
  int world_count_;
  std::map<std::string, WorldSet> valuation_;
};

struct PointedContext {
  int world = 0;
  WorldSet state;
  bool operator==(const PointedContext&) const = default;
};

// Model file format:
//   # comment
//   worlds N                  (first non-comment line, 1 <= N <= 62)
//   val <atom>: <i> <j> ...   (distinct indices, one line per atom)
Model parse_model(std::string_view text);
std::string render_model(const Model& m);

// "0,2,3" -> {0,2,3}; "" -> {}. Throws ModelError on bad input.
WorldSet parse_world_list(std::string_view text, int world_count);
std::string render_world_list(WorldSet x);

// Every model with 1..max_worlds worlds and every valuation of the given
// atoms, in a fixed order: by world count, then by valuation bits (atom i's
// set occupies bits [i*n, (i+1)*n) of the counter).
class ModelSpace {
 public:
  ModelSpace(std::vector<std::string> atoms, int max_worlds);

  std::uint64_t size() const { return total_; }
  Model at(std::uint64_t index) const;
  const std::vector<std::string>& atoms() const { return atoms_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Model;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Model;
    iterator(const ModelSpace* s, std::uint64_t i) : space_(s), i_(i) {}
    Model operator*() const { return space_->at(i_); }
    iterator& operator++() { ++i_; return *this; }
    bool operator==(const iterator& o) const { return i_ == o.i_; }
   private:
    const ModelSpace* space_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, total_}; }

 private:
  std::vector<std::string> atoms_;
  int max_worlds_;
  std::vector<std::uint64_t> offsets_;  // first index for each world count
  std::uint64_t total_ = 0;
};

std::vector<Model> enumerate_models(const std::vector<std::string>& atoms,
                                    int max_worlds);

// All n * 2^n pairs (w, X), ordered by X ascending, then w ascending.
std::vector<PointedContext> enumerate_contexts(const Model& m);

}  // namespace epi
