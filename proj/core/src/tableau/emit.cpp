#include "kcert/tableau/emit.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace kcert::tableau {

using fittings::DecTree;
using fittings::FitIndex;
using logic::ModalKind;

namespace {

// Theorem indexes of the formulas on one root-to-leaf path.
class PathIndexer {
 public:
  PathIndexer(const Tableau& t, std::vector<NodeId> path, Substitution theta)
      : t_(t), path_(std::move(path)), theta_(std::move(theta)) {
    // Box instances may precede the diamond that creates their world (free
    // variables), so resolve to a fixpoint.
    bool progress = true;
    while (progress) {
      progress = false;
      for (NodeId id : path_) {
        if (index_.count(id) != 0) continue;
        if (auto i = compute(id)) {
          index_.emplace(id, *i);
          const TableauNode& n = t_.node(id);
          if (n.rule == Rule::Dia) creators_.emplace(n.pf.prefix.apply(theta_), index_.at(*n.premise));
          progress = true;
        }
      }
    }
    for (NodeId id : path_) {
      if (index_.count(id) == 0) throw EmissionError("no creating diamond for the box instance at node " + std::to_string(id));
    }
  }

  [[nodiscard]] const FitIndex& index(NodeId id) const { return index_.at(id); }

  // Index of the diamond that created the world of a box instance.
  [[nodiscard]] const FitIndex& creator(NodeId box_node) const {
    return creators_.at(t_.node(box_node).pf.prefix.apply(theta_));
  }

 private:
  std::optional<FitIndex> compute(NodeId id) const {
    const TableauNode& n = t_.node(id);
    if (n.rule == Rule::Root) return FitIndex::eind();
    auto p = index_.find(*n.premise);
    if (p == index_.end()) return std::nullopt;
    const FitIndex& i = p->second;
    switch (n.rule) {
      case Rule::Conj:
      case Rule::Disj:
        return n.pf.origin.back() == Side::Left ? FitIndex::lind(i) : FitIndex::rind(i);
      case Rule::Dia:
        return FitIndex::lind(i);
      case Rule::Box: {
        auto c = creators_.find(n.pf.prefix.apply(theta_));
        if (c == creators_.end()) return std::nullopt;
        return FitIndex::bind(i, c->second);
      }
      case Rule::Root:
        break;
    }
    return std::nullopt;
  }

  const Tableau& t_;
  std::vector<NodeId> path_;
  Substitution theta_;
  std::map<NodeId, FitIndex> index_;
  std::map<Prefix, FitIndex> creators_;
};

// Closure oriented as (theorem-positive literal, theorem-negative literal).
// The tableau negates the theorem, so a tableau literal ~P is the theorem's P.
std::pair<NodeId, NodeId> oriented(const Tableau& t, const BranchClosure& c) {
  if (t.node(c.a).pf.body.kind() == ModalKind::NegAtom) return {c.a, c.b};
  return {c.b, c.a};
}

class TreeBuilder {
 public:
  explicit TreeBuilder(const Tableau& t) : t_(t) {}

  DecTree build(NodeId last, std::vector<NodeId>& path) {
    const auto& kids = t_.node(last).children;
    if (kids.empty()) {
      const BranchClosure* c = t_.closure(last);
      if (c == nullptr) throw EmissionError("open branch at node " + std::to_string(last));
      PathIndexer ix(t_, path, {});
      const auto [pos, neg] = oriented(t_, *c);
      return fittings::dt(ix.index(pos), ix.index(neg));
    }
    const TableauNode& first = t_.node(kids.front());
    const NodeId premise = *first.premise;
    PathIndexer ix(t_, path, {});
    const FitIndex& i = ix.index(premise);
    switch (first.rule) {
      case Rule::Conj: {
        if (kids.size() != 1 || t_.node(kids.front()).children.size() != 1) {
          throw EmissionError("malformed conjunction at node " + std::to_string(kids.front()));
        }
        const NodeId second = t_.node(kids.front()).children.front();
        path.push_back(kids.front());
        path.push_back(second);
        DecTree sub = build(second, path);
        path.resize(path.size() - 2);
        return fittings::dt(i, FitIndex::none(), {std::move(sub)});
      }
      case Rule::Disj: {
        if (kids.size() != 2) throw EmissionError("malformed disjunction at node " + std::to_string(kids.front()));
        std::vector<DecTree> subs;
        for (NodeId k : kids) {
          path.push_back(k);
          subs.push_back(build(k, path));
          path.pop_back();
        }
        return fittings::dt(i, FitIndex::none(), std::move(subs));
      }
      case Rule::Dia:
      case Rule::Box: {
        const NodeId k = kids.front();
        path.push_back(k);
        const FitIndex aux = first.rule == Rule::Box ? PathIndexer(t_, path, {}).creator(k) : FitIndex::none();
        DecTree sub = build(k, path);
        path.pop_back();
        return fittings::dt(i, aux, {std::move(sub)});
      }
      case Rule::Root:
        break;
    }
    throw EmissionError("malformed tableau");
  }

 private:
  const Tableau& t_;
};

template <class T>
void push_unique(std::vector<T>& v, T x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(std::move(x));
}

}  // namespace

DecTree emit_fitcert(const Tableau& t) {
  if (auto v = t.proviso_violations(); !v.empty()) throw EmissionError(v.front());
  if (!t.closed()) throw EmissionError("tableau is not closed");
  std::vector<NodeId> path{t.root()};
  return TreeBuilder(t).build(t.root(), path);
}

simpfit::Evidence emit_simpfitcert(const Tableau& t) {
  if (!t.closed()) throw EmissionError("tableau is not closed");
  simpfit::Evidence ev;
  for (NodeId leaf : t.leaves()) {
    const BranchClosure& c = *t.closure(leaf);
    const std::vector<NodeId> path = t.branch(leaf);
    PathIndexer ix(t, path, c.theta);
    const auto [pos, neg] = oriented(t, c);
    push_unique(ev.closures, simpfit::Closure{ix.index(pos), ix.index(neg)});
    for (NodeId id : path) {
      const TableauNode& n = t.node(id);
      if (n.rule == Rule::Box) push_unique(ev.boxinfos, simpfit::BoxInfo{ix.index(*n.premise), ix.creator(id)});
    }
  }
  return ev;
}

}  // namespace kcert::tableau
