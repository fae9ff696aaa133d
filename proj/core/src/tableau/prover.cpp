#include "kcert/tableau/prover.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kcert::tableau {

using logic::ModalKind;

namespace {

struct BranchState {
  NodeId leaf = 0;
  std::vector<NodeId> nodes;
  std::vector<char> done;
  std::vector<std::pair<NodeId, Prefix>> boxed;
  // Literal pairs among the first `checked` nodes have been compared.
  std::size_t checked = 0;
  void push(NodeId id) {
    nodes.push_back(id);
    done.push_back(0);
    leaf = id;
  }
};

class Prover {
 public:
  explicit Prover(Tableau& t) : t_(t) {}

  // Returns the state of an open saturated branch, if any.
  std::optional<BranchState> run(BranchState s) {
    while (true) {
      if (try_close(s)) return std::nullopt;
      const std::optional<std::size_t> k = first_pending_boolean(s);
      if (k && pf(s.nodes[*k]).body.kind() == ModalKind::And) {
        s.done[*k] = 1;
        const NodeId last = t_.conj(s.leaf, s.nodes[*k]);
        s.push(t_.node(last).parent.value());
        s.push(last);
        continue;
      }
      if (k) {
        s.done[*k] = 1;
        const auto [l, r] = t_.disj(s.leaf, s.nodes[*k]);
        BranchState right = s;
        s.push(l);
        right.push(r);
        if (auto open = run(std::move(s))) return open;
        return run(std::move(right));
      }
      if (apply_diamonds(s)) continue;
      if (apply_boxes(s)) continue;
      return s;
    }
  }

 private:
  const PrefixedFormula& pf(NodeId id) const { return t_.node(id).pf; }

  bool try_close(BranchState& s) {
    for (std::size_t j = s.checked; j < s.nodes.size(); ++j) {
      const PrefixedFormula& b = pf(s.nodes[j]);
      if (!b.body.is_literal()) continue;
      for (std::size_t i = 0; i < j; ++i) {
        const PrefixedFormula& a = pf(s.nodes[i]);
        if (a.body.is_literal() && a.body.kind() != b.body.kind() && a.body.atom() == b.body.atom() &&
            a.prefix == b.prefix) {
          t_.close(s.leaf, s.nodes[i], s.nodes[j]);
          return true;
        }
      }
    }
    s.checked = s.nodes.size();
    return false;
  }

  std::optional<std::size_t> first_pending_boolean(const BranchState& s) const {
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
      if (!s.done[k] && pf(s.nodes[k]).body.is_binary()) return k;
    }
    return std::nullopt;
  }

  bool apply_diamonds(BranchState& s) {
    bool any = false;
    const std::size_t n = s.nodes.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (s.done[k] || pf(s.nodes[k]).body.kind() != ModalKind::Dia) continue;
      s.done[k] = 1;
      const Prefix base = pf(s.nodes[k]).prefix;
      std::uint32_t next = 1;
      for (NodeId id : s.nodes) {
        const Prefix& q = pf(id).prefix;
        if (q.size() > base.size() && std::equal(base.elems().begin(), base.elems().end(), q.elems().begin())) {
          next = std::max(next, q.elems()[base.size()].value + 1);
        }
      }
      s.push(t_.dia(s.leaf, s.nodes[k], next));
      any = true;
    }
    return any;
  }

  bool apply_boxes(BranchState& s) {
    std::vector<Prefix> used;
    for (NodeId id : s.nodes) {
      const Prefix& q = pf(id).prefix;
      if (std::find(used.begin(), used.end(), q) == used.end()) used.push_back(q);
    }
    bool any = false;
    const std::size_t n = s.nodes.size();
    for (std::size_t k = 0; k < n; ++k) {
      const NodeId id = s.nodes[k];
      if (pf(id).body.kind() != ModalKind::Box) continue;
      const Prefix base = pf(id).prefix;
      for (const Prefix& target : used) {
        if (!target.is_child_of(base)) continue;
        auto key = std::make_pair(id, target);
        if (std::find(s.boxed.begin(), s.boxed.end(), key) != s.boxed.end()) continue;
        s.boxed.push_back(std::move(key));
        s.push(t_.box(s.leaf, id, target));
        any = true;
      }
    }
    return any;
  }

  Tableau& t_;
};

KripkeModel read_countermodel(const Tableau& t, const std::vector<NodeId>& branch) {
  KripkeModel m;
  std::vector<Prefix> worlds;
  auto world_of = [&](const Prefix& p) -> World {
    auto it = std::find(worlds.begin(), worlds.end(), p);
    if (it != worlds.end()) return static_cast<World>(it - worlds.begin());
    worlds.push_back(p);
    return m.add_world(to_string(p));
  };
  world_of(Prefix::root());
  for (NodeId id : branch) {
    const PrefixedFormula& f = t.node(id).pf;
    const World w = world_of(f.prefix);
    if (f.body.kind() == ModalKind::PosAtom) m.set_true(w, f.body.atom());
  }
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (worlds[i].size() < 2) continue;
    m.add_edge(world_of(worlds[i].parent()), i);
  }
  return m;
}

}  // namespace

ProofResult prove(const logic::ModalFormula& theorem) {
  Tableau t = Tableau::refuting(theorem);
  BranchState start;
  start.push(t.root());
  Prover prover(t);
  auto open = prover.run(std::move(start));
  if (!open) return Closed{std::move(t)};
  KripkeModel m = read_countermodel(t, open->nodes);
  if (!eval_modal(m, 0, t.node(t.root()).pf.body)) {
    throw std::logic_error("prover: open branch does not yield a countermodel");
  }
  return Open{std::move(t), std::move(m)};
}

}  // namespace kcert::tableau
