#ifndef KCERT_LOGIC_TRANSLATE_HPP
#define KCERT_LOGIC_TRANSLATE_HPP

#include <string>
#include <variant>
#include <vector>

#include "kcert/logic/first_order.hpp"
#include "kcert/logic/modal.hpp"
#include "kcert/logic/polarized.hpp"

namespace kcert::logic {

// Standard translation into the first-order correspondence language, evaluated
// at the world variable `x`. Quantified variables are named y1, y2, ... in
// order of introduction (skipping `x`).
FoFormula standard_translation(const ModalFormula& a, const std::string& x);

// Polarized translation [a]x. Delays ensure that a single modal or boolean
// connective is processed per bipole:
//   [A & B]x = delp[A]x &- delp[B]x        [A | B]x = delp[A]x |- delp[B]x
//   [box A]x = all y. (~R(x,y) |- delp[A]y)
//   [dia A]x = ex y. (R(x,y) &+ d-(delp[A]y))
Formula polarized_translation(const ModalFormula& a, Term x);

struct Labeled {
  Term world;
  ModalFormula body;
};
struct Relational {
  Term from;
  Term to;
};
// A labeled formula x:A or a relational atom xRy.
using LabeledItem = std::variant<Labeled, Relational>;

Formula translate_labeled(const LabeledItem& item);

// Maps the labeled sequent  lhs |- rhs  onto the initial workbench of an
// asynchronous kernel sequent: the delayed translations of the negated
// left-hand items followed by those of the right-hand items.
std::vector<Formula> translate_sequent(const std::vector<LabeledItem>& lhs, const std::vector<LabeledItem>& rhs);

// Erases polarities and delays. ~R(x,y) |- B erases to a disjunction, which is
// classically equivalent to the implication produced by the standard
// translation. Eigenvariables become free variables e<k>, w0 becomes "w0".
FoFormula strip_polarities(const Formula& f);

}  // namespace kcert::logic

#endif  // KCERT_LOGIC_TRANSLATE_HPP
