#ifndef KCERT_LKF_FPC_HPP
#define KCERT_LKF_FPC_HPP

#include <concepts>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kcert/logic/polarized.hpp"

namespace kcert::lkf {

// Order in which the kernel offers stored positive formulas to decide_expert.
enum class DecideOrder { InsertionOrder, MostRecentFirst };

template <class Cert>
using AllContinuation = std::function<Cert(logic::Term)>;

template <class Cert>
struct CutChoice {
  Cert left;
  Cert right;
  logic::Formula cut_formula;
};

// A foundational proof certificate definition: the certificate and index
// types plus one clerk or expert relation per kernel rule. Each relation
// returns the finite set of certificates it admits; an empty set forbids the
// rule at that point.
template <class F>
concept Fpc = requires(const F& fpc, const typename F::Cert& cert, const typename F::Index& index,
                       const logic::Formula& formula) {
  typename F::Cert;
  typename F::Index;
  requires std::equality_comparable<typename F::Index>;
  { F::decide_order } -> std::convertible_to<DecideOrder>;
  { to_string(index) } -> std::convertible_to<std::string>;

  { fpc.decide_expert(cert, index) } -> std::same_as<std::vector<typename F::Cert>>;
  { fpc.release_expert(cert) } -> std::same_as<std::vector<typename F::Cert>>;
  { fpc.store_clerk(cert, formula) } -> std::same_as<std::vector<std::pair<typename F::Index, typename F::Cert>>>;
  { fpc.and_neg_clerk(cert) } -> std::same_as<std::vector<std::pair<typename F::Cert, typename F::Cert>>>;
  { fpc.or_neg_clerk(cert) } -> std::same_as<std::vector<typename F::Cert>>;
  { fpc.all_clerk(cert) } -> std::same_as<std::vector<AllContinuation<typename F::Cert>>>;
  { fpc.and_pos_expert(cert) } -> std::same_as<std::vector<std::pair<typename F::Cert, typename F::Cert>>>;
  { fpc.or_pos_expert(cert) } -> std::same_as<std::vector<std::pair<int, typename F::Cert>>>;
  { fpc.some_expert(cert) } -> std::same_as<std::vector<std::pair<logic::Term, typename F::Cert>>>;
  { fpc.initial_expert(cert, index) } -> std::same_as<bool>;
  { fpc.true_expert(cert) } -> std::same_as<bool>;
  { fpc.cut_expert(cert) } -> std::same_as<std::vector<CutChoice<typename F::Cert>>>;
};

}  // namespace kcert::lkf

#endif  // KCERT_LKF_FPC_HPP
