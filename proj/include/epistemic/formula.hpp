#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epi {

enum class Op : std::uint8_t {
  Atom,
  Bottom,
  Not,
  And,
  Or,
  Box,
  Diamond,
  Cond,    // indicative conditional  a => c
  Update,  // dynamic update          [a] b
};

const char* op_name(Op op);

// Immutable formula of the language with epistemic modals, the indicative
// conditional and the update operator. Copies share structure; equality is
// structural.
class Formula {
 public:
  // Default-constructed formula is bottom.
  Formula();

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();  // ~bot

  Op op() const;
  const std::string& name() const;
  std::size_t arity() const;
  // Children: Not/Box/Diamond have one (index 0); the binary operators have
  // two. For Cond, 0 is the antecedent; for Update, 0 is the announcement.
  const Formula& child(std::size_t i) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  std::size_t hash() const;
  // Size of the formula as a tree (saturates at UINT64_MAX).
  std::uint64_t node_count() const;
  std::uint32_t modal_depth() const;
  std::uint64_t conditional_count() const;
  // No Box, Diamond, Cond or Update anywhere below.
  bool is_nonmodal() const;
  bool has_conditional() const;
  bool has_update() const;

  bool is_bottom() const { return op() == Op::Bottom; }
  bool is_top() const { return op() == Op::Not && child(0).is_bottom(); }

  // Node identity, for memo tables over shared structure.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  struct NullTag {};
  explicit Formula(NullTag) {}
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  // Releases nodes iteratively so that dropping a very long chain does not
  // recurse once per level.
  static void destroy(const Node* n);
  static Formula make(Op op, std::string name, const Formula* a,
                      const Formula* b);

  friend Formula neg(Formula);
  friend Formula conj(Formula, Formula);
  friend Formula disj(Formula, Formula);
  friend Formula box(Formula);
  friend Formula diamond(Formula);
  friend Formula cond(Formula, Formula);
  friend Formula update(Formula, Formula);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  bool nonmodal;
  bool updates;
  std::uint32_t depth;
  std::uint64_t size;
  std::uint64_t conds;
  std::size_t hash;
  std::string name;
  Formula kids[2]{Formula(NullTag{}), Formula(NullTag{})};
};

inline Op Formula::op() const { return node_->op; }
inline const std::string& Formula::name() const { return node_->name; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::uint64_t Formula::node_count() const { return node_->size; }
inline std::uint32_t Formula::modal_depth() const { return node_->depth; }
inline std::uint64_t Formula::conditional_count() const { return node_->conds; }
inline bool Formula::is_nonmodal() const { return node_->nonmodal; }
inline bool Formula::has_conditional() const { return node_->conds != 0; }
inline bool Formula::has_update() const { return node_->updates; }

Formula neg(Formula a);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula box(Formula a);
Formula diamond(Formula a);
Formula cond(Formula antecedent, Formula consequent);
Formula update(Formula announcement, Formula body);

// Sugar; neither survives as a node.
Formula implies(Formula a, Formula b);  // ~a | b
Formula iff(Formula a, Formula b);      // (a -> b) & (b -> a)

// Left-nested chains. Empty conjunction is ~bot, empty disjunction is bot.
Formula conj_all(std::span<const Formula> parts);
Formula disj_all(std::span<const Formula> parts);

// Operands of the maximal op-chain rooted at f, left to right. Iterative, so
// safe on very long chains.
std::vector<Formula> flatten(const Formula& f, Op op);

// Sorted, deduplicated atom names occurring in f.
std::vector<std::string> atoms_of(const Formula& f);

bool is_valid_atom_name(std::string_view name);
bool is_reserved_word(std::string_view name);

struct FormulaMetrics {
  std::uint64_t node_count = 0;
  std::uint32_t modal_depth = 0;
  std::uint64_t conditional_count = 0;
};

FormulaMetrics metrics(const Formula& f);

inline bool is_nonmodal(const Formula& f) { return f.is_nonmodal(); }

// Child indices from the root; {} addresses the root itself.
using OccurrencePath = std::vector<std::uint8_t>;

const Formula& subformula_at(const Formula& f, const OccurrencePath& path);
Formula substitute(const Formula& f, const OccurrencePath& path,
                   const Formula& replacement);

}  // namespace epi

template <>
struct std::hash<epi::Formula> {
  std::size_t operator()(const epi::Formula& f) const noexcept {
    return f.hash();
  }
};
