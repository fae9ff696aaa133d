#include "kcert/simpfit/fpc.hpp"

#include <algorithm>

namespace kcert::simpfit {
namespace {

bool is_relational(const logic::Formula& f) { return f.is_atom() && f.atom().relational; }

SimpfitCert with(const SimpfitCert& c, int flag, std::vector<FitIndex> pending) {
  SimpfitCert next = c;
  next.flag = flag;
  next.pending = std::move(pending);
  return next;
}

}  // namespace

SimpfitCert initial_cert(const Evidence& evidence) {
  SimpfitCert c;
  c.flag = 1;
  c.pending = {FitIndex::eind()};
  c.closures = std::make_shared<const std::vector<Closure>>(evidence.closures);
  c.boxinfos = evidence.boxinfos;
  return c;
}

std::vector<SimpfitCert> SimpfitFpc::decide_expert(const SimpfitCert& c, const FitIndex& l) const {
  std::vector<SimpfitCert> out;
  auto token = std::find(c.usable.begin(), c.usable.end(), l);
  if (token != c.usable.end()) {
    SimpfitCert next = with(c, 1, {l});
    next.usable.erase(next.usable.begin() + (token - c.usable.begin()));
    out.push_back(std::move(next));
  }
  if (l == FitIndex::none()) out.push_back(with(c, 1, {FitIndex::none()}));
  return out;
}

std::vector<SimpfitCert> SimpfitFpc::release_expert(const SimpfitCert& c) const { return {c}; }

std::vector<std::pair<FitIndex, SimpfitCert>> SimpfitFpc::store_clerk(const SimpfitCert& c,
                                                                      const logic::Formula& f) const {
  if (is_relational(f)) return {{FitIndex::none(), with(c, 0, c.pending)}};
  if (c.pending.empty()) return {};
  const FitIndex& h = c.pending.front();
  SimpfitCert next = with(c, 0, std::vector<FitIndex>(c.pending.begin() + 1, c.pending.end()));
  if (f.kind() != logic::Connective::NAtom) next.usable.insert(next.usable.begin(), h);
  return {{h, std::move(next)}};
}

std::vector<std::pair<SimpfitCert, SimpfitCert>> SimpfitFpc::and_neg_clerk(const SimpfitCert& c) const {
  std::vector<std::pair<SimpfitCert, SimpfitCert>> out;
  if (c.flag == 1 && c.pending.size() == 1) {
    const FitIndex& i = c.pending.front();
    out.emplace_back(with(c, 0, {FitIndex::lind(i)}), with(c, 0, {FitIndex::rind(i)}));
  }
  if (c.flag == 0) out.emplace_back(c, c);
  return out;
}

std::vector<SimpfitCert> SimpfitFpc::or_neg_clerk(const SimpfitCert& c) const {
  std::vector<SimpfitCert> out;
  if (c.flag == 1 && c.pending.size() == 1) {
    const FitIndex& i = c.pending.front();
    out.push_back(with(c, 0, {FitIndex::lind(i), FitIndex::rind(i)}));
  }
  if (c.flag == 0) out.push_back(c);
  return out;
}

std::vector<lkf::AllContinuation<SimpfitCert>> SimpfitFpc::all_clerk(const SimpfitCert& c) const {
  if (c.pending.size() != 1) return {};
  return {[c](logic::Term y) {
    const FitIndex i = c.pending.front();
    SimpfitCert next = with(c, 0, {FitIndex::lind(i)});
    next.eigmap.insert(next.eigmap.begin(), EigenBinding{i, y});
    return next;
  }};
}

std::vector<std::pair<SimpfitCert, SimpfitCert>> SimpfitFpc::and_pos_expert(const SimpfitCert& c) const {
  SimpfitCert next = with(c, 0, c.pending);
  return {{next, next}};
}

std::vector<std::pair<int, SimpfitCert>> SimpfitFpc::or_pos_expert(const SimpfitCert&) const { return {}; }

std::vector<std::pair<logic::Term, SimpfitCert>> SimpfitFpc::some_expert(const SimpfitCert& c) const {
  if (c.pending.size() != 1) return {};
  const FitIndex& i = c.pending.front();
  std::vector<std::pair<logic::Term, SimpfitCert>> out;
  std::vector<const BoxInfo*> tried;
  for (std::size_t k = 0; k < c.boxinfos.size(); ++k) {
    const BoxInfo& b = c.boxinfos[k];
    if (!(b.ex == i)) continue;
    // Equal multiset elements yield the same successor; offer it once.
    if (std::any_of(tried.begin(), tried.end(), [&](const BoxInfo* t) { return *t == b; })) continue;
    tried.push_back(&b);
    for (const auto& e : c.eigmap) {
      if (!(e.index == b.univ)) continue;
      SimpfitCert next = with(c, 0, {FitIndex::bind(i, b.univ)});
      next.boxinfos.erase(next.boxinfos.begin() + static_cast<std::ptrdiff_t>(k));
      next.usable.insert(next.usable.begin(), i);
      out.emplace_back(e.eigen, std::move(next));
    }
  }
  return out;
}

bool SimpfitFpc::initial_expert(const SimpfitCert& c, const FitIndex& l) const {
  if (c.pending.empty()) return false;
  if (l == FitIndex::none()) return true;
  const FitIndex& i = c.pending.front();
  return std::any_of(c.closures->begin(), c.closures->end(),
                     [&](const Closure& cl) { return (cl.a == i && cl.b == l) || (cl.b == i && cl.a == l); });
}

bool SimpfitFpc::true_expert(const SimpfitCert&) const { return false; }

std::vector<lkf::CutChoice<SimpfitCert>> SimpfitFpc::cut_expert(const SimpfitCert&) const { return {}; }

}  // namespace kcert::simpfit
