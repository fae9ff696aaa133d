#ifndef KCERT_LKF_NEGATION_HPP
#define KCERT_LKF_NEGATION_HPP

#include "kcert/logic/polarized.hpp"

namespace kcert::lkf {

// Polarity-flipping De Morgan negation used by the cut rule. An involution.
logic::Formula neg(const logic::Formula& f);

}  // namespace kcert::lkf

#endif  // KCERT_LKF_NEGATION_HPP
