#include "kcert/lkf/negation.hpp"

namespace kcert::lkf {

using logic::Connective;
using logic::Formula;

Formula neg(const Formula& f) {
  switch (f.kind()) {
    case Connective::PAtom: return Formula::natom(f.atom());
    case Connective::NAtom: return Formula::patom(f.atom());
    case Connective::AndNeg: return Formula::or_pos(neg(f.left()), neg(f.right()));
    case Connective::OrPos: return Formula::and_neg(neg(f.left()), neg(f.right()));
    case Connective::OrNeg: return Formula::and_pos(neg(f.left()), neg(f.right()));
    case Connective::AndPos: return Formula::or_neg(neg(f.left()), neg(f.right()));
    case Connective::All: return Formula::exists(neg(f.body()));
    case Connective::Exists: return Formula::all(neg(f.body()));
    case Connective::True: return Formula::falsity();
    case Connective::False: return Formula::truth();
    case Connective::DelayPos: return Formula::delay_neg(neg(f.body()));
    case Connective::DelayNeg: return Formula::delay_pos(neg(f.body()));
  }
  return f;
}

}  // namespace kcert::lkf
