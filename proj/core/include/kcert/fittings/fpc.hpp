#ifndef KCERT_FITTINGS_FPC_HPP
#define KCERT_FITTINGS_FPC_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "kcert/fittings/index.hpp"
#include "kcert/lkf/fpc.hpp"
#include "kcert/logic/polarized.hpp"

namespace kcert::fittings {

struct DecTreeNode;
// Subtrees are shared, so certificates that point into the tree are cheap to
// copy.
using DecTree = std::shared_ptr<const DecTreeNode>;

// One node per bipole: the index to decide on, an auxiliary index (the
// complementary literal at a leaf, the creating universal at an existential,
// none otherwise) and at most two subtrees.
struct DecTreeNode {
  FitIndex decide_on;
  FitIndex aux;
  std::vector<DecTree> children;
};

DecTree dt(FitIndex decide_on, FitIndex aux, std::vector<DecTree> children = {});

std::size_t node_count(const DecTree& t);
bool same_tree(const DecTree& a, const DecTree& b);

struct EigenBinding {
  FitIndex index;
  logic::Term eigen;
  friend bool operator==(const EigenBinding&, const EigenBinding&) = default;
};

struct FitCert {
  std::vector<FitIndex> pending;
  DecTree tree;
  std::vector<EigenBinding> eigmap;
};

// Load-time state for a decide tree: pending [eind], empty eigmap.
FitCert initial_cert(DecTree tree);

// The detailed tableau FPC: every decide is named by the tree, so checking
// never backtracks.
class FittingsFpc {
 public:
  using Cert = FitCert;
  using Index = FitIndex;
  static constexpr lkf::DecideOrder decide_order = lkf::DecideOrder::InsertionOrder;

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

static_assert(lkf::Fpc<FittingsFpc>);

}  // namespace kcert::fittings

#endif  // KCERT_FITTINGS_FPC_HPP
