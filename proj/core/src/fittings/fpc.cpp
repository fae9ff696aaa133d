#include "kcert/fittings/fpc.hpp"

#include <algorithm>

namespace kcert::fittings {
namespace {

bool is_relational(const logic::Formula& f) { return f.is_atom() && f.atom().relational; }

}  // namespace

DecTree dt(FitIndex decide_on, FitIndex aux, std::vector<DecTree> children) {
  return std::make_shared<const DecTreeNode>(DecTreeNode{std::move(decide_on), std::move(aux), std::move(children)});
}

std::size_t node_count(const DecTree& t) {
  std::size_t n = 1;
  for (const auto& c : t->children) n += node_count(c);
  return n;
}

bool same_tree(const DecTree& a, const DecTree& b) {
  if (a == b) return true;
  if (!(a->decide_on == b->decide_on) || !(a->aux == b->aux) || a->children.size() != b->children.size())
    return false;
  return std::equal(a->children.begin(), a->children.end(), b->children.begin(), same_tree);
}

FitCert initial_cert(DecTree tree) { return FitCert{{FitIndex::eind()}, std::move(tree), {}}; }

std::vector<FitCert> FittingsFpc::decide_expert(const FitCert& c, const FitIndex& l) const {
  if (!(l == c.tree->decide_on)) return {};
  return {FitCert{{}, c.tree, c.eigmap}};
}

std::vector<FitCert> FittingsFpc::release_expert(const FitCert& c) const { return {c}; }

std::vector<std::pair<FitIndex, FitCert>> FittingsFpc::store_clerk(const FitCert& c,
                                                                   const logic::Formula& f) const {
  if (is_relational(f)) return {{FitIndex::none(), c}};
  if (c.pending.empty()) return {};
  FitCert next{std::vector<FitIndex>(c.pending.begin() + 1, c.pending.end()), c.tree, c.eigmap};
  return {{c.pending.front(), std::move(next)}};
}

std::vector<std::pair<FitCert, FitCert>> FittingsFpc::and_neg_clerk(const FitCert& c) const {
  if (!c.pending.empty()) return {{c, c}};
  if (c.tree->children.size() < 2) return {};
  const FitIndex& i = c.tree->decide_on;
  return {{FitCert{{FitIndex::lind(i)}, c.tree->children[0], c.eigmap},
           FitCert{{FitIndex::rind(i)}, c.tree->children[1], c.eigmap}}};
}

std::vector<FitCert> FittingsFpc::or_neg_clerk(const FitCert& c) const {
  if (!c.pending.empty()) return {c};
  if (c.tree->children.empty()) return {};
  const FitIndex& i = c.tree->decide_on;
  return {FitCert{{FitIndex::lind(i), FitIndex::rind(i)}, c.tree->children[0], c.eigmap}};
}

std::vector<lkf::AllContinuation<FitCert>> FittingsFpc::all_clerk(const FitCert& c) const {
  if (!c.pending.empty() || c.tree->children.empty()) return {};
  const FitIndex i = c.tree->decide_on;
  const DecTree h = c.tree->children[0];
  const std::vector<EigenBinding> m = c.eigmap;
  return {[i, h, m](logic::Term y) {
    FitCert next{{FitIndex::lind(i)}, h, {}};
    next.eigmap.reserve(m.size() + 1);
    next.eigmap.push_back(EigenBinding{i, y});
    next.eigmap.insert(next.eigmap.end(), m.begin(), m.end());
    return next;
  }};
}

std::vector<std::pair<FitCert, FitCert>> FittingsFpc::and_pos_expert(const FitCert& c) const {
  FitCert left = c;
  if (!(c.tree->aux == FitIndex::none())) left.tree = dt(c.tree->decide_on, FitIndex::none(), c.tree->children);
  return {{std::move(left), c}};
}

std::vector<std::pair<int, FitCert>> FittingsFpc::or_pos_expert(const FitCert&) const { return {}; }

std::vector<std::pair<logic::Term, FitCert>> FittingsFpc::some_expert(const FitCert& c) const {
  if (!c.pending.empty() || c.tree->children.empty()) return {};
  const FitIndex& o = c.tree->aux;
  std::vector<std::pair<logic::Term, FitCert>> out;
  for (const auto& b : c.eigmap) {
    if (b.index == o) {
      out.emplace_back(b.eigen, FitCert{{FitIndex::bind(c.tree->decide_on, o)}, c.tree->children[0], c.eigmap});
    }
  }
  return out;
}

bool FittingsFpc::initial_expert(const FitCert& c, const FitIndex& l) const { return l == c.tree->aux; }

bool FittingsFpc::true_expert(const FitCert&) const { return false; }

std::vector<lkf::CutChoice<FitCert>> FittingsFpc::cut_expert(const FitCert&) const { return {}; }

}  // namespace kcert::fittings
