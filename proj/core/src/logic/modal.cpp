#include "kcert/logic/modal.hpp"

#include <algorithm>

namespace kcert::logic {

ModalFormula ModalFormula::pos(Symbol atom) {
  return ModalFormula(std::make_shared<const Node>(Node{ModalKind::PosAtom, atom}));
}
ModalFormula ModalFormula::neg(Symbol atom) {
  return ModalFormula(std::make_shared<const Node>(Node{ModalKind::NegAtom, atom}));
}
ModalFormula ModalFormula::conj(ModalFormula left, ModalFormula right) {
  return ModalFormula(std::make_shared<const Node>(Node{ModalKind::And, {}, std::move(left), std::move(right)}));
}
ModalFormula ModalFormula::disj(ModalFormula left, ModalFormula right) {
  return ModalFormula(std::make_shared<const Node>(Node{ModalKind::Or, {}, std::move(left), std::move(right)}));
}
ModalFormula ModalFormula::box(ModalFormula body) {
  return ModalFormula(std::make_shared<const Node>(Node{ModalKind::Box, {}, std::move(body)}));
}
ModalFormula ModalFormula::dia(ModalFormula body) {
  return ModalFormula(std::make_shared<const Node>(Node{ModalKind::Dia, {}, std::move(body)}));
}

bool operator==(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ModalKind::PosAtom:
    case ModalKind::NegAtom:
      return a.atom() == b.atom();
    case ModalKind::And:
    case ModalKind::Or:
      return a.left() == b.left() && a.right() == b.right();
    case ModalKind::Box:
    case ModalKind::Dia:
      return a.body() == b.body();
  }
  return false;
}

ModalFormula negate_nnf(const ModalFormula& a) {
  switch (a.kind()) {
    case ModalKind::PosAtom: return ModalFormula::neg(a.atom());
    case ModalKind::NegAtom: return ModalFormula::pos(a.atom());
    case ModalKind::And: return ModalFormula::disj(negate_nnf(a.left()), negate_nnf(a.right()));
    case ModalKind::Or: return ModalFormula::conj(negate_nnf(a.left()), negate_nnf(a.right()));
    case ModalKind::Box: return ModalFormula::dia(negate_nnf(a.body()));
    case ModalKind::Dia: return ModalFormula::box(negate_nnf(a.body()));
  }
  return a;
}

std::size_t connective_count(const ModalFormula& a) {
  switch (a.kind()) {
    case ModalKind::PosAtom: return 0;
    case ModalKind::NegAtom: return 1;
    case ModalKind::And:
    case ModalKind::Or: return 1 + connective_count(a.left()) + connective_count(a.right());
    case ModalKind::Box:
    case ModalKind::Dia: return 1 + connective_count(a.body());
  }
  return 0;
}

std::size_t modal_depth(const ModalFormula& a) {
  if (a.is_literal()) return 0;
  if (a.is_binary()) return std::max(modal_depth(a.left()), modal_depth(a.right()));
  return 1 + modal_depth(a.body());
}

std::size_t modal_occurrences(const ModalFormula& a) {
  if (a.is_literal()) return 0;
  if (a.is_binary()) return modal_occurrences(a.left()) + modal_occurrences(a.right());
  return 1 + modal_occurrences(a.body());
}

namespace {
void collect_atoms(const ModalFormula& a, std::set<Symbol>& out) {
  if (a.is_literal()) {
    out.insert(a.atom());
  } else if (a.is_binary()) {
    collect_atoms(a.left(), out);
    collect_atoms(a.right(), out);
  } else {
    collect_atoms(a.body(), out);
  }
}

void print(const ModalFormula& a, std::string& out) {
  switch (a.kind()) {
    case ModalKind::PosAtom: out += "(+ " + a.atom().name() + ")"; return;
    case ModalKind::NegAtom: out += "(- " + a.atom().name() + ")"; return;
    case ModalKind::And:
    case ModalKind::Or:
      out += a.kind() == ModalKind::And ? "(and " : "(or ";
      print(a.left(), out);
      out += ' ';
      print(a.right(), out);
      out += ')';
      return;
    case ModalKind::Box:
    case ModalKind::Dia:
      out += a.kind() == ModalKind::Box ? "(box " : "(dia ";
      print(a.body(), out);
      out += ')';
      return;
  }
}
}  // namespace

std::set<Symbol> atoms_of(const ModalFormula& a) {
  std::set<Symbol> out;
  collect_atoms(a, out);
  return out;
}

std::string to_string(const ModalFormula& a) {
  std::string out;
  print(a, out);
  return out;
}

}  // namespace kcert::logic
