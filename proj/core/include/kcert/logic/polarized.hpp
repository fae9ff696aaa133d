#ifndef KCERT_LOGIC_POLARIZED_HPP
#define KCERT_LOGIC_POLARIZED_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "kcert/logic/symbol.hpp"

namespace kcert::logic {

// World term of the correspondence language. World is the fixed initial world
// w0; Eigen terms are issued by the kernel. Bound is a de Bruijn index and only
// occurs under a binder (it is never visible in a closed formula).
class Term {
 public:
  enum class Kind : std::uint8_t { World, Eigen, Bound };

  constexpr Term() = default;
  static constexpr Term world() { return Term(Kind::World, 0); }
  static constexpr Term eigen(std::uint32_t id) { return Term(Kind::Eigen, id); }
  static constexpr Term bound(std::uint32_t index) { return Term(Kind::Bound, index); }

  [[nodiscard]] constexpr Kind kind() const noexcept { return kind_; }
  [[nodiscard]] constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr bool operator==(Term, Term) = default;
  friend constexpr auto operator<=>(Term, Term) = default;

 private:
  constexpr Term(Kind kind, std::uint32_t value) : kind_(kind), value_(value) {}
  Kind kind_ = Kind::World;
  std::uint32_t value_ = 0;
};

// "w0", "e<k>"; bound variables print as "#<k>".
std::string to_string(Term t);

// Either the binary accessibility predicate R or a unary predicate per
// propositional symbol.
struct Atom {
  bool relational = false;
  Symbol symbol;  // unused when relational
  std::array<Term, 2> args{};

  static Atom prop(Symbol p, Term x) { return Atom{false, p, {x, Term{}}}; }
  static Atom rel(Term x, Term y) { return Atom{true, Symbol{}, {x, y}}; }
  [[nodiscard]] std::size_t arity() const noexcept { return relational ? 2 : 1; }

  friend bool operator==(const Atom& a, const Atom& b) {
    if (a.relational != b.relational) return false;
    if (a.relational) return a.args == b.args;
    return a.symbol == b.symbol && a.args[0] == b.args[0];
  }
};

std::string to_string(const Atom& a);

enum class Connective : std::uint8_t {
  PAtom,
  NAtom,
  AndNeg,
  OrNeg,
  AndPos,
  OrPos,
  All,
  Exists,
  True,
  False,
  DelayPos,
  DelayNeg,
};

enum class Polarity : std::uint8_t { Positive, Negative };

// Polarized first-order formula over the correspondence language. Binders use
// de Bruijn indices, so instantiation is capture-free and total.
class Formula {
 public:
  static Formula patom(Atom a);
  static Formula natom(Atom a);
  static Formula and_neg(Formula l, Formula r);
  static Formula or_neg(Formula l, Formula r);
  static Formula and_pos(Formula l, Formula r);
  static Formula or_pos(Formula l, Formula r);
  static Formula all(Formula body);
  static Formula exists(Formula body);
  static Formula truth();
  static Formula falsity();
  static Formula delay_pos(Formula body);
  static Formula delay_neg(Formula body);

  [[nodiscard]] Connective kind() const noexcept;
  [[nodiscard]] const Atom& atom() const noexcept;
  [[nodiscard]] const Formula& left() const noexcept;
  [[nodiscard]] const Formula& right() const noexcept;
  // Body of All, Exists, DelayPos, DelayNeg.
  [[nodiscard]] const Formula& body() const noexcept;

  [[nodiscard]] bool is_atom() const noexcept {
    return kind() == Connective::PAtom || kind() == Connective::NAtom;
  }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  Atom atom;
  Formula left{nullptr};
  Formula right{nullptr};
};

inline Connective Formula::kind() const noexcept { return node_->kind; }
inline const Atom& Formula::atom() const noexcept { return node_->atom; }
inline const Formula& Formula::left() const noexcept { return node_->left; }
inline const Formula& Formula::right() const noexcept { return node_->right; }
inline const Formula& Formula::body() const noexcept { return node_->left; }

Polarity polarity(const Formula& f) noexcept;
inline bool is_positive(const Formula& f) noexcept { return polarity(f) == Polarity::Positive; }

// The delay-if-needed operator: f itself when f is an atom, a negated atom or
// positive; DelayPos(f) otherwise.
Formula delp(const Formula& f);

// Replaces the variable bound by the outermost binder with t.
// Pre: body is the body of a closed All/Exists.
Formula instantiate(const Formula& body, Term t);

// Shifts every loose de Bruijn index by one (used when moving under a binder).
Term shift(Term t);

std::string to_string(const Formula& f);

}  // namespace kcert::logic

#endif  // KCERT_LOGIC_POLARIZED_HPP
