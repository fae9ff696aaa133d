#include "kcert/logic/translate.hpp"

namespace kcert::logic {
namespace {

class FreshNames {
 public:
  explicit FreshNames(std::string avoid) : avoid_(std::move(avoid)) {}
  std::string next() {
    std::string name;
    do {
      name = "y" + std::to_string(++counter_);
    } while (name == avoid_);
    return name;
  }

 private:
  std::string avoid_;
  unsigned counter_ = 0;
};

FoFormula st(const ModalFormula& a, const std::string& x, FreshNames& names) {
  switch (a.kind()) {
    case ModalKind::PosAtom: return FoFormula::prop(a.atom(), x);
    case ModalKind::NegAtom: return FoFormula::negation(FoFormula::prop(a.atom(), x));
    case ModalKind::And: return FoFormula::conj(st(a.left(), x, names), st(a.right(), x, names));
    case ModalKind::Or: return FoFormula::disj(st(a.left(), x, names), st(a.right(), x, names));
    case ModalKind::Box: {
      std::string y = names.next();
      auto body = FoFormula::implies(FoFormula::rel(x, y), st(a.body(), y, names));
      return FoFormula::forall(std::move(y), std::move(body));
    }
    case ModalKind::Dia: {
      std::string y = names.next();
      auto body = FoFormula::conj(FoFormula::rel(x, y), st(a.body(), y, names));
      return FoFormula::exists(std::move(y), std::move(body));
    }
  }
  return FoFormula::falsity();
}

std::string term_name(Term t, const std::vector<std::string>& binders) {
  if (t.kind() == Term::Kind::Bound) return binders[binders.size() - 1 - t.value()];
  return to_string(t);
}

FoFormula strip(const Formula& f, std::vector<std::string>& binders, unsigned& counter) {
  switch (f.kind()) {
    case Connective::PAtom:
    case Connective::NAtom: {
      const Atom& a = f.atom();
      FoFormula atom = a.relational
                           ? FoFormula::rel(term_name(a.args[0], binders), term_name(a.args[1], binders))
                           : FoFormula::prop(a.symbol, term_name(a.args[0], binders));
      return f.kind() == Connective::PAtom ? atom : FoFormula::negation(atom);
    }
    case Connective::AndNeg:
    case Connective::AndPos:
      return FoFormula::conj(strip(f.left(), binders, counter), strip(f.right(), binders, counter));
    case Connective::OrNeg:
    case Connective::OrPos:
      return FoFormula::disj(strip(f.left(), binders, counter), strip(f.right(), binders, counter));
    case Connective::All:
    case Connective::Exists: {
      std::string y = "y" + std::to_string(++counter);
      binders.push_back(y);
      FoFormula body = strip(f.body(), binders, counter);
      binders.pop_back();
      return f.kind() == Connective::All ? FoFormula::forall(std::move(y), std::move(body))
                                         : FoFormula::exists(std::move(y), std::move(body));
    }
    case Connective::True: return FoFormula::truth();
    case Connective::False: return FoFormula::falsity();
    case Connective::DelayPos:
    case Connective::DelayNeg:
      return strip(f.body(), binders, counter);
  }
  return FoFormula::falsity();
}

}  // namespace

FoFormula standard_translation(const ModalFormula& a, const std::string& x) {
  FreshNames names(x);
  return st(a, x, names);
}

Formula polarized_translation(const ModalFormula& a, Term x) {
  switch (a.kind()) {
    case ModalKind::PosAtom: return Formula::patom(Atom::prop(a.atom(), x));
    case ModalKind::NegAtom: return Formula::natom(Atom::prop(a.atom(), x));
    case ModalKind::And:
      return Formula::and_neg(delp(polarized_translation(a.left(), x)), delp(polarized_translation(a.right(), x)));
    case ModalKind::Or:
      return Formula::or_neg(delp(polarized_translation(a.left(), x)), delp(polarized_translation(a.right(), x)));
    case ModalKind::Box: {
      const Term y = Term::bound(0);
      return Formula::all(Formula::or_neg(Formula::natom(Atom::rel(shift(x), y)),
                                          delp(polarized_translation(a.body(), y))));
    }
    case ModalKind::Dia: {
      const Term y = Term::bound(0);
      return Formula::exists(Formula::and_pos(Formula::patom(Atom::rel(shift(x), y)),
                                              Formula::delay_neg(delp(polarized_translation(a.body(), y)))));
    }
  }
  return Formula::falsity();
}

Formula translate_labeled(const LabeledItem& item) {
  if (const auto* l = std::get_if<Labeled>(&item)) return polarized_translation(l->body, l->world);
  const auto& r = std::get<Relational>(item);
  return Formula::patom(Atom::rel(r.from, r.to));
}

std::vector<Formula> translate_sequent(const std::vector<LabeledItem>& lhs, const std::vector<LabeledItem>& rhs) {
  std::vector<Formula> out;
  out.reserve(lhs.size() + rhs.size());
  for (const auto& item : lhs) {
    if (const auto* l = std::get_if<Labeled>(&item)) {
      out.push_back(delp(polarized_translation(negate_nnf(l->body), l->world)));
    } else {
      const auto& r = std::get<Relational>(item);
      out.push_back(Formula::natom(Atom::rel(r.from, r.to)));
    }
  }
  for (const auto& item : rhs) out.push_back(delp(translate_labeled(item)));
  return out;
}

FoFormula strip_polarities(const Formula& f) {
  std::vector<std::string> binders;
  unsigned counter = 0;
  return strip(f, binders, counter);
}

}  // namespace kcert::logic
