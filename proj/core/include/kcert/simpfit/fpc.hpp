#ifndef KCERT_SIMPFIT_FPC_HPP
#define KCERT_SIMPFIT_FPC_HPP

#include <memory>
#include <utility>
#include <vector>

#include "kcert/fittings/fpc.hpp"
#include "kcert/fittings/index.hpp"
#include "kcert/lkf/fpc.hpp"
#include "kcert/logic/polarized.hpp"

namespace kcert::simpfit {

using fittings::EigenBinding;
using fittings::FitIndex;

// Indexes of two complementary literals closing a branch.
struct Closure {
  FitIndex a;
  FitIndex b;
  friend bool operator==(const Closure&, const Closure&) = default;
};

// The existential at `ex` is instantiated with the eigenvariable of the
// universal at `univ`.
struct BoxInfo {
  FitIndex ex;
  FitIndex univ;
  friend bool operator==(const BoxInfo&, const BoxInfo&) = default;
};

// The essential evidence as loaded from a file.
struct Evidence {
  std::vector<Closure> closures;
  std::vector<BoxInfo> boxinfos;
};

struct SimpfitCert {
  // 1 right after a decide: the next connective belongs to the decided
  // formula and gets child indexes. 0 inside the translation of a modality.
  int flag = 1;
  std::vector<FitIndex> pending;
  std::shared_ptr<const std::vector<Closure>> closures;
  // Multisets (remove-one semantics).
  std::vector<BoxInfo> boxinfos;
  std::vector<EigenBinding> eigmap;
  std::vector<FitIndex> usable;
};

// Load-time state: flag 1, pending [eind], no eigenvariables, no tokens.
SimpfitCert initial_cert(const Evidence& evidence);

// The essential-information tableau FPC. Decides are not named by the
// evidence; the kernel finds them by search, so decide candidates are
// offered most recent first.
class SimpfitFpc {
 public:
  using Cert = SimpfitCert;
  using Index = FitIndex;
  static constexpr lkf::DecideOrder decide_order = lkf::DecideOrder::MostRecentFirst;

  std::vector<Cert> decide_expert(const Cert& c, const Index& l) const;
  std::vector<Cert> release_expert(const Cert& c) const;
  std::vector<std::pair<Index, Cert>> store_clerk(const Cert& c, const logic::Formula& f) const;
  std::vector<std::pair<Cert, Cert>> and_neg_clerk(const Cert& c) const;
  std::vector<Cert> or_neg_clerk(const Cert& c) const;
  std::vector<lkf::AllContinuation<Cert>> all_clerk(const Cert& c) const;
  std::vector<std::pair<Cert, Cert>> and_pos_expert(const Cert& c) const;
  std::vector<std::pair<int, Cert>> or_pos_expert(const Cert& c) const;
  std::vector<std::pair<logic::Term, Cert>> some_expert(const Cert& c) const;
  bool initial_expert(const Cert& c, const Index& l) const;
  bool true_expert(const Cert& c) const;
  std::vector<lkf::CutChoice<Cert>> cut_expert(const Cert& c) const;
};

static_assert(lkf::Fpc<SimpfitFpc>);

}  // namespace kcert::simpfit

#endif  // KCERT_SIMPFIT_FPC_HPP
