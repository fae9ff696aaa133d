#include "kcert/logic/polarized.hpp"

namespace kcert::logic {

std::string to_string(Term t) {
  switch (t.kind()) {
    case Term::Kind::World: return "w0";
    case Term::Kind::Eigen: return "e" + std::to_string(t.value());
    case Term::Kind::Bound: return "#" + std::to_string(t.value());
  }
  return "?";
}

std::string to_string(const Atom& a) {
  if (a.relational) return "R(" + to_string(a.args[0]) + "," + to_string(a.args[1]) + ")";
  return a.symbol.name() + "(" + to_string(a.args[0]) + ")";
}

Formula Formula::patom(Atom a) { return Formula(std::make_shared<const Node>(Node{Connective::PAtom, a})); }
Formula Formula::natom(Atom a) { return Formula(std::make_shared<const Node>(Node{Connective::NAtom, a})); }
Formula Formula::and_neg(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Connective::AndNeg, {}, std::move(l), std::move(r)}));
}
Formula Formula::or_neg(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Connective::OrNeg, {}, std::move(l), std::move(r)}));
}
Formula Formula::and_pos(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Connective::AndPos, {}, std::move(l), std::move(r)}));
}
Formula Formula::or_pos(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Connective::OrPos, {}, std::move(l), std::move(r)}));
}
Formula Formula::all(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Connective::All, {}, std::move(body)}));
}
Formula Formula::exists(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Connective::Exists, {}, std::move(body)}));
}
Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>(Node{Connective::True}));
  return t;
}
Formula Formula::falsity() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::False}));
  return f;
}
Formula Formula::delay_pos(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Connective::DelayPos, {}, std::move(body)}));
}
Formula Formula::delay_neg(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Connective::DelayNeg, {}, std::move(body)}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::PAtom:
    case Connective::NAtom:
      return a.atom() == b.atom();
    case Connective::AndNeg:
    case Connective::OrNeg:
    case Connective::AndPos:
    case Connective::OrPos:
      return a.left() == b.left() && a.right() == b.right();
    case Connective::All:
    case Connective::Exists:
    case Connective::DelayPos:
    case Connective::DelayNeg:
      return a.body() == b.body();
    case Connective::True:
    case Connective::False:
      return true;
  }
  return false;
}

Polarity polarity(const Formula& f) noexcept {
  switch (f.kind()) {
    case Connective::PAtom:
    case Connective::AndPos:
    case Connective::OrPos:
    case Connective::Exists:
    case Connective::True:
    case Connective::DelayPos:
      return Polarity::Positive;
    case Connective::NAtom:
    case Connective::AndNeg:
    case Connective::OrNeg:
    case Connective::All:
    case Connective::False:
    case Connective::DelayNeg:
      return Polarity::Negative;
  }
  return Polarity::Negative;
}

Formula delp(const Formula& f) {
  if (f.is_atom() || is_positive(f)) return f;
  return Formula::delay_pos(f);
}

Term shift(Term t) { return t.kind() == Term::Kind::Bound ? Term::bound(t.value() + 1) : t; }

namespace {

Term substitute(Term t, std::uint32_t depth, Term replacement) {
  if (t.kind() == Term::Kind::Bound && t.value() == depth) return replacement;
  return t;
}

Formula substitute(const Formula& f, std::uint32_t depth, Term t) {
  switch (f.kind()) {
    case Connective::PAtom:
    case Connective::NAtom: {
      Atom a = f.atom();
      a.args[0] = substitute(a.args[0], depth, t);
      if (a.relational) a.args[1] = substitute(a.args[1], depth, t);
      if (a.args == f.atom().args) return f;
      return f.kind() == Connective::PAtom ? Formula::patom(a) : Formula::natom(a);
    }
    case Connective::AndNeg:
      return Formula::and_neg(substitute(f.left(), depth, t), substitute(f.right(), depth, t));
    case Connective::OrNeg:
      return Formula::or_neg(substitute(f.left(), depth, t), substitute(f.right(), depth, t));
    case Connective::AndPos:
      return Formula::and_pos(substitute(f.left(), depth, t), substitute(f.right(), depth, t));
    case Connective::OrPos:
      return Formula::or_pos(substitute(f.left(), depth, t), substitute(f.right(), depth, t));
    case Connective::All: return Formula::all(substitute(f.body(), depth + 1, t));
    case Connective::Exists: return Formula::exists(substitute(f.body(), depth + 1, t));
    case Connective::DelayPos: return Formula::delay_pos(substitute(f.body(), depth, t));
    case Connective::DelayNeg: return Formula::delay_neg(substitute(f.body(), depth, t));
    case Connective::True:
    case Connective::False:
      return f;
  }
  return f;
}

std::string bound_name(std::uint32_t depth, Term t) {
  if (t.kind() != Term::Kind::Bound) return to_string(t);
  if (t.value() >= depth) return to_string(t);  // loose index
  return "y" + std::to_string(depth - t.value());
}

void print(const Formula& f, std::uint32_t depth, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print(f.left(), depth, out);
    out += op;
    print(f.right(), depth, out);
    out += ')';
  };
  switch (f.kind()) {
    case Connective::PAtom:
    case Connective::NAtom: {
      const Atom& a = f.atom();
      if (f.kind() == Connective::NAtom) out += '~';
      if (a.relational) {
        out += "R(" + bound_name(depth, a.args[0]) + "," + bound_name(depth, a.args[1]) + ")";
      } else {
        out += a.symbol.name() + "(" + bound_name(depth, a.args[0]) + ")";
      }
      return;
    }
    case Connective::AndNeg: binary(" &- "); return;
    case Connective::OrNeg: binary(" |- "); return;
    case Connective::AndPos: binary(" &+ "); return;
    case Connective::OrPos: binary(" |+ "); return;
    case Connective::All:
    case Connective::Exists:
      out += f.kind() == Connective::All ? "all y" : "ex y";
      out += std::to_string(depth + 1) + ". ";
      print(f.body(), depth + 1, out);
      return;
    case Connective::True: out += "true"; return;
    case Connective::False: out += "false"; return;
    case Connective::DelayPos:
    case Connective::DelayNeg:
      out += f.kind() == Connective::DelayPos ? "d+(" : "d-(";
      print(f.body(), depth, out);
      out += ')';
      return;
  }
}

}  // namespace

Formula instantiate(const Formula& body, Term t) { return substitute(body, 0, t); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

}  // namespace kcert::logic
