#include "kcert/tableau/tableau.hpp"

#include <algorithm>
#include <set>

namespace kcert::tableau {

using logic::ModalFormula;
using logic::ModalKind;

Prefix Prefix::child(std::uint32_t n) const {
  Prefix p = *this;
  p.elems_.push_back(PrefixElem{n, false});
  return p;
}

Prefix Prefix::meta_child(std::uint32_t var) const {
  Prefix p = *this;
  p.elems_.push_back(PrefixElem{var, true});
  return p;
}

Prefix Prefix::parent() const {
  Prefix p = *this;
  if (p.elems_.size() > 1) p.elems_.pop_back();
  return p;
}

bool Prefix::is_ground() const noexcept {
  return std::none_of(elems_.begin(), elems_.end(), [](PrefixElem e) { return e.meta; });
}

bool Prefix::is_child_of(const Prefix& p) const noexcept {
  return elems_.size() == p.elems_.size() + 1 && std::equal(p.elems_.begin(), p.elems_.end(), elems_.begin());
}

Prefix Prefix::apply(const Substitution& theta) const {
  Prefix p = *this;
  for (auto& e : p.elems_) {
    if (!e.meta) continue;
    auto it = theta.find(e.value);
    if (it != theta.end()) e = PrefixElem{it->second, false};
  }
  return p;
}

std::string to_string(const Prefix& p) {
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  for (const auto& e : p.elems()) {
    if (!out.empty()) out += '.';
    if (!e.meta) {
      out += std::to_string(e.value);
    } else if (e.value >= 1 && e.value <= 3) {
      out += names[e.value - 1];
    } else {
      out += "x" + std::to_string(e.value);
    }
  }
  return out;
}

std::string to_string(const PrefixedFormula& pf) { return to_string(pf.prefix) + ":" + logic::to_string(pf.body); }

Tableau::Tableau(ModalFormula root) {
  nodes_.push_back(TableauNode{PrefixedFormula{Prefix::root(), std::move(root), {}}, Rule::Root, std::nullopt,
                               std::nullopt, {}});
}

Tableau Tableau::refuting(const ModalFormula& theorem) { return Tableau(logic::negate_nnf(theorem)); }

NodeId Tableau::add(NodeId parent, PrefixedFormula pf, Rule rule, NodeId premise) {
  const NodeId id = nodes_.size();
  nodes_.push_back(TableauNode{std::move(pf), rule, premise, parent, {}});
  nodes_[parent].children.push_back(id);
  return id;
}

void Tableau::require_leaf(NodeId leaf) const {
  if (leaf >= nodes_.size()) throw TableauError("unknown node");
  if (!nodes_[leaf].children.empty()) throw TableauError("node " + std::to_string(leaf) + " is not a leaf");
  if (closures_.count(leaf) != 0) throw TableauError("branch is already closed");
}

bool Tableau::on_branch(NodeId leaf, NodeId n) const {
  std::optional<NodeId> cur = leaf;
  while (cur) {
    if (*cur == n) return true;
    cur = nodes_[*cur].parent;
  }
  return false;
}

const TableauNode& Tableau::premise_on_branch(NodeId leaf, NodeId premise, ModalKind kind) const {
  require_leaf(leaf);
  if (premise >= nodes_.size() || !on_branch(leaf, premise)) throw TableauError("premise is not on the branch");
  const TableauNode& p = nodes_[premise];
  if (p.pf.body.kind() != kind) throw TableauError("premise has the wrong main connective");
  return p;
}

namespace {

std::vector<Side> extend(std::vector<Side> origin, Side s) {
  origin.push_back(s);
  return origin;
}

}  // namespace

NodeId Tableau::conj(NodeId leaf, NodeId premise) {
  const TableauNode p = premise_on_branch(leaf, premise, ModalKind::And);
  const NodeId first =
      add(leaf, PrefixedFormula{p.pf.prefix, p.pf.body.left(), extend(p.pf.origin, Side::Left)}, Rule::Conj, premise);
  return add(first, PrefixedFormula{p.pf.prefix, p.pf.body.right(), extend(p.pf.origin, Side::Right)}, Rule::Conj,
             premise);
}

std::pair<NodeId, NodeId> Tableau::disj(NodeId leaf, NodeId premise) {
  const TableauNode p = premise_on_branch(leaf, premise, ModalKind::Or);
  const NodeId l =
      add(leaf, PrefixedFormula{p.pf.prefix, p.pf.body.left(), extend(p.pf.origin, Side::Left)}, Rule::Disj, premise);
  const NodeId r =
      add(leaf, PrefixedFormula{p.pf.prefix, p.pf.body.right(), extend(p.pf.origin, Side::Right)}, Rule::Disj, premise);
  return {l, r};
}

NodeId Tableau::dia(NodeId leaf, NodeId premise, std::uint32_t n) {
  const TableauNode p = premise_on_branch(leaf, premise, ModalKind::Dia);
  if (n == 0) throw TableauError("prefix components are positive");
  return add(leaf, PrefixedFormula{p.pf.prefix.child(n), p.pf.body.body(), extend(p.pf.origin, Side::Left)},
             Rule::Dia, premise);
}

NodeId Tableau::box(NodeId leaf, NodeId premise, const Prefix& target) {
  const TableauNode p = premise_on_branch(leaf, premise, ModalKind::Box);
  if (!target.is_child_of(p.pf.prefix)) throw TableauError("box target must extend the premise prefix by one");
  return add(leaf, PrefixedFormula{target, p.pf.body.body(), extend(p.pf.origin, Side::Left)}, Rule::Box, premise);
}

void Tableau::close(NodeId leaf, NodeId a, NodeId b, Substitution theta) {
  require_leaf(leaf);
  if (!on_branch(leaf, a) || !on_branch(leaf, b)) throw TableauError("closing literals must be on the branch");
  const auto& fa = nodes_[a].pf;
  const auto& fb = nodes_[b].pf;
  const bool complementary = fa.body.is_literal() && fb.body.is_literal() && fa.body.atom() == fb.body.atom() &&
                             fa.body.kind() != fb.body.kind();
  if (!complementary) throw TableauError("closing formulas are not complementary literals");
  const Prefix pa = fa.prefix.apply(theta);
  const Prefix pb = fb.prefix.apply(theta);
  if (!(pa == pb) || !pa.is_ground()) throw TableauError("closing prefixes differ under the substitution");
  closures_[leaf] = BranchClosure{a, b, std::move(theta)};
}

std::vector<NodeId> Tableau::branch(NodeId leaf) const {
  std::vector<NodeId> out;
  std::optional<NodeId> cur = leaf;
  while (cur) {
    out.push_back(*cur);
    cur = nodes_.at(*cur).parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Tableau::leaves() const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].children.empty()) out.push_back(i);
  }
  return out;
}

const BranchClosure* Tableau::closure(NodeId leaf) const {
  auto it = closures_.find(leaf);
  return it == closures_.end() ? nullptr : &it->second;
}

bool Tableau::closed() const {
  const auto ls = leaves();
  return std::all_of(ls.begin(), ls.end(), [&](NodeId l) { return closures_.count(l) != 0; });
}

std::vector<std::string> Tableau::proviso_violations() const {
  std::vector<std::string> out;
  for (NodeId id = 1; id < nodes_.size(); ++id) {
    const TableauNode& n = nodes_[id];
    if (n.rule != Rule::Dia && n.rule != Rule::Box) continue;
    bool used = false;
    for (std::optional<NodeId> cur = n.parent; cur; cur = nodes_[*cur].parent) {
      const Prefix& q = nodes_[*cur].pf.prefix;
      if (q == n.pf.prefix || (q.size() > n.pf.prefix.size() &&
                               std::equal(n.pf.prefix.elems().begin(), n.pf.prefix.elems().end(), q.elems().begin()))) {
        used = true;
        break;
      }
    }
    if (n.rule == Rule::Dia && used) {
      out.push_back("diamond rule at node " + std::to_string(id) + " reuses prefix " + tableau::to_string(n.pf.prefix));
    }
    if (n.rule == Rule::Box && (!used || !n.pf.prefix.is_ground())) {
      out.push_back("box rule at node " + std::to_string(id) + " targets unused prefix " +
                    tableau::to_string(n.pf.prefix));
    }
  }
  return out;
}

std::size_t Tableau::node_count() const {
  const auto& kids = nodes_[0].children;
  const bool folded = !kids.empty() && nodes_[kids.front()].rule == Rule::Conj;
  return folded ? nodes_.size() - 1 : nodes_.size();
}

std::string Tableau::to_string() const {
  std::string out;
  auto walk = [&](auto&& self, NodeId id, int depth) -> void {
    out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + tableau::to_string(nodes_[id].pf);
    if (const BranchClosure* c = closure(id)) {
      out += "  [closed by " + std::to_string(c->a) + "," + std::to_string(c->b);
      for (const auto& [v, n] : c->theta) {
        out += " " + tableau::to_string(Prefix::root().meta_child(v)).substr(2) + "->" + std::to_string(n);
      }
      out += "]";
    }
    out += '\n';
    const auto& kids = nodes_[id].children;
    const int next = kids.size() > 1 ? depth + 1 : depth;
    for (NodeId k : kids) self(self, k, next);
  };
  walk(walk, 0, 0);
  return out;
}

}  // namespace kcert::tableau
