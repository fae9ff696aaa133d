#ifndef KCERT_TABLEAU_TABLEAU_HPP
#define KCERT_TABLEAU_TABLEAU_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcert/logic/modal.hpp"

namespace kcert::tableau {

// One position of a prefix: a world number, or (free-variable tableaux only)
// a meta variable standing for a number still to be chosen.
struct PrefixElem {
  std::uint32_t value = 1;
  bool meta = false;
  friend bool operator==(PrefixElem, PrefixElem) = default;
  friend auto operator<=>(PrefixElem, PrefixElem) = default;
};

// Meta variable id -> world number.
using Substitution = std::map<std::uint32_t, std::uint32_t>;

class Prefix {
 public:
  // The prefix "1".
  Prefix() : elems_{PrefixElem{1, false}} {}
  static Prefix root() { return Prefix(); }

  [[nodiscard]] Prefix child(std::uint32_t n) const;
  [[nodiscard]] Prefix meta_child(std::uint32_t var) const;
  // Pre: size() > 1.
  [[nodiscard]] Prefix parent() const;
  [[nodiscard]] bool is_ground() const noexcept;
  [[nodiscard]] bool is_child_of(const Prefix& p) const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] const std::vector<PrefixElem>& elems() const noexcept { return elems_; }
  // Unbound meta variables are left in place.
  [[nodiscard]] Prefix apply(const Substitution& theta) const;

  friend bool operator==(const Prefix&, const Prefix&) = default;
  friend auto operator<=>(const Prefix&, const Prefix&) = default;

 private:
  std::vector<PrefixElem> elems_;
};

// "1.2.1"; meta variables print as x, y, z, x4, x5, ...
std::string to_string(const Prefix& p);

enum class Side : std::uint8_t { Left, Right };

struct PrefixedFormula {
  Prefix prefix;
  logic::ModalFormula body;
  // Path from the root formula to this occurrence; modal bodies are reached
  // through Left.
  std::vector<Side> origin;
};

std::string to_string(const PrefixedFormula& pf);

enum class Rule : std::uint8_t { Root, Conj, Disj, Dia, Box };

using NodeId = std::size_t;

struct TableauNode {
  PrefixedFormula pf;
  Rule rule = Rule::Root;
  // Node the rule was applied to (unset for the root).
  std::optional<NodeId> premise;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
};

// Closure of the branch ending at a leaf: two complementary literals, equal
// prefixes after applying theta.
struct BranchClosure {
  NodeId a;
  NodeId b;
  Substitution theta;
};

class TableauError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Prefixed tableau for K. The root node holds 1:A, asserting that A is false at
// world 1. Every rule application extends one branch, named by its current
// leaf, and names the premise it decomposes; the builder rejects premises that
// are not on that branch or have the wrong shape.
class Tableau {
 public:
  explicit Tableau(logic::ModalFormula root);
  // The refutation tableau of a theorem: root 1:negate_nnf(theorem).
  static Tableau refuting(const logic::ModalFormula& theorem);

  [[nodiscard]] NodeId root() const noexcept { return 0; }
  [[nodiscard]] const TableauNode& node(NodeId id) const { return nodes_.at(id); }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }

  // Each returns the new leaf (two leaves for a disjunction).
  NodeId conj(NodeId leaf, NodeId premise);
  std::pair<NodeId, NodeId> disj(NodeId leaf, NodeId premise);
  NodeId dia(NodeId leaf, NodeId premise, std::uint32_t n);
  NodeId box(NodeId leaf, NodeId premise, const Prefix& target);
  void close(NodeId leaf, NodeId a, NodeId b, Substitution theta = {});

  // Root first.
  [[nodiscard]] std::vector<NodeId> branch(NodeId leaf) const;
  [[nodiscard]] std::vector<NodeId> leaves() const;
  [[nodiscard]] const BranchClosure* closure(NodeId leaf) const;
  // Every branch carries a closure.
  [[nodiscard]] bool closed() const;
  [[nodiscard]] bool on_branch(NodeId leaf, NodeId n) const;

  // Rule provisos violated anywhere in the tableau: a diamond child prefix
  // that is not new on its branch, or a box target that is not used on its
  // branch. A meta target is reported as not used.
  [[nodiscard]] std::vector<std::string> proviso_violations() const;

  // Displayed prefixed formulas. A conjunctive root is displayed as its two
  // products, so it is not counted itself.
  [[nodiscard]] std::size_t node_count() const;

  [[nodiscard]] std::string to_string() const;

 private:
  NodeId add(NodeId parent, PrefixedFormula pf, Rule rule, NodeId premise);
  void require_leaf(NodeId leaf) const;
  const TableauNode& premise_on_branch(NodeId leaf, NodeId premise, logic::ModalKind kind) const;

  std::vector<TableauNode> nodes_;
  std::map<NodeId, BranchClosure> closures_;
};

}  // namespace kcert::tableau

#endif  // KCERT_TABLEAU_TABLEAU_HPP
