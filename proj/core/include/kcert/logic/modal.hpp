#ifndef KCERT_LOGIC_MODAL_HPP
#define KCERT_LOGIC_MODAL_HPP

#include <cstddef>
#include <memory>
#include <set>
#include <string>

#include "kcert/logic/symbol.hpp"

namespace kcert::logic {

enum class ModalKind : std::uint8_t { PosAtom, NegAtom, And, Or, Box, Dia };

// Propositional modal formula in negation normal form. Negation can only be
// attached to an atom, so every value is NNF by construction. Immutable and
// cheap to copy (shared structure).
class ModalFormula {
 public:
  static ModalFormula pos(Symbol atom);
  static ModalFormula neg(Symbol atom);
  static ModalFormula pos(std::string_view atom) { return pos(Symbol(atom)); }
  static ModalFormula neg(std::string_view atom) { return neg(Symbol(atom)); }
  static ModalFormula conj(ModalFormula left, ModalFormula right);
  static ModalFormula disj(ModalFormula left, ModalFormula right);
  static ModalFormula box(ModalFormula body);
  static ModalFormula dia(ModalFormula body);

  [[nodiscard]] ModalKind kind() const noexcept;
  [[nodiscard]] bool is_literal() const noexcept;
  [[nodiscard]] bool is_binary() const noexcept;
  [[nodiscard]] bool is_modal() const noexcept;

  // Pre: is_literal().
  [[nodiscard]] Symbol atom() const noexcept;
  // Pre: is_binary() for left/right; is_modal() for body.
  [[nodiscard]] const ModalFormula& left() const noexcept;
  [[nodiscard]] const ModalFormula& right() const noexcept;
  [[nodiscard]] const ModalFormula& body() const noexcept;

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);

 private:
  struct Node;
  explicit ModalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ModalFormula::Node {
  ModalKind kind;
  Symbol atom;
  ModalFormula left{nullptr};
  ModalFormula right{nullptr};
};

inline ModalKind ModalFormula::kind() const noexcept { return node_->kind; }
inline Symbol ModalFormula::atom() const noexcept { return node_->atom; }
inline const ModalFormula& ModalFormula::left() const noexcept { return node_->left; }
inline const ModalFormula& ModalFormula::right() const noexcept { return node_->right; }
inline const ModalFormula& ModalFormula::body() const noexcept { return node_->left; }
inline bool ModalFormula::is_literal() const noexcept {
  return kind() == ModalKind::PosAtom || kind() == ModalKind::NegAtom;
}
inline bool ModalFormula::is_binary() const noexcept {
  return kind() == ModalKind::And || kind() == ModalKind::Or;
}
inline bool ModalFormula::is_modal() const noexcept {
  return kind() == ModalKind::Box || kind() == ModalKind::Dia;
}

// De Morgan dual: And<->Or, Box<->Dia, PosAtom<->NegAtom. An involution.
ModalFormula negate_nnf(const ModalFormula& a);

// Connectives counted: and, or, box, dia, and the negation of a negated atom.
std::size_t connective_count(const ModalFormula& a);
std::size_t modal_depth(const ModalFormula& a);
// Number of box/dia occurrences.
std::size_t modal_occurrences(const ModalFormula& a);
std::set<Symbol> atoms_of(const ModalFormula& a);

// Canonical prefix notation: (+ p) (- p) (and f g) (or f g) (box f) (dia f).
std::string to_string(const ModalFormula& a);

}  // namespace kcert::logic

#endif  // KCERT_LOGIC_MODAL_HPP
