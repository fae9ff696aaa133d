#include "kcert/tableau/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace kcert::tableau {

using logic::ModalFormula;
using logic::ModalKind;

namespace {

using Mask = std::uint32_t;

struct Sub {
  ModalKind kind;
  std::size_t atom = 0;  // literals: position in the atom list
  std::size_t left = 0;
  std::size_t right = 0;
};

class TypeSpace {
 public:
  explicit TypeSpace(const ModalFormula& phi) {
    for (auto s : logic::atoms_of(phi)) atoms_.push_back(s);
    root_ = add(phi);
  }

  // True iff some tree model of the given depth and branching satisfies phi
  // at its root.
  bool satisfiable(std::size_t depth, std::size_t branching) const {
    std::vector<Mask> types = layer({Summary{0, ~Mask{0}}});
    for (std::size_t d = 0; d < depth; ++d) types = layer(summaries(types, branching));
    const Mask bit = Mask{1} << root_;
    return std::any_of(types.begin(), types.end(), [&](Mask t) { return (t & bit) != 0; });
  }

 private:
  // What a world's successors jointly satisfy: `any` holds for at least one
  // successor, `all` for every successor.
  struct Summary {
    Mask any;
    Mask all;
    friend bool operator==(Summary, Summary) = default;
  };

  std::size_t add(const ModalFormula& f) {
    Sub s{f.kind()};
    if (f.is_literal()) {
      s.atom = static_cast<std::size_t>(std::find(atoms_.begin(), atoms_.end(), f.atom()) - atoms_.begin());
    } else if (f.is_binary()) {
      s.left = add(f.left());
      s.right = add(f.right());
    } else {
      s.left = add(f.body());
      modal_bodies_ |= Mask{1} << s.left;
    }
    subs_.push_back(s);
    return subs_.size() - 1;
  }

  Mask type_of(std::uint32_t valuation, Summary kids) const {
    Mask t = 0;
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      const Sub& s = subs_[i];
      bool v = false;
      switch (s.kind) {
        case ModalKind::PosAtom: v = ((valuation >> s.atom) & 1U) != 0; break;
        case ModalKind::NegAtom: v = ((valuation >> s.atom) & 1U) == 0; break;
        case ModalKind::And: v = ((t >> s.left) & (t >> s.right) & 1U) != 0; break;
        case ModalKind::Or: v = (((t >> s.left) | (t >> s.right)) & 1U) != 0; break;
        case ModalKind::Box: v = ((kids.all >> s.left) & 1U) != 0; break;
        case ModalKind::Dia: v = ((kids.any >> s.left) & 1U) != 0; break;
      }
      if (v) t |= Mask{1} << i;
    }
    return t;
  }

  std::vector<Mask> layer(const std::vector<Summary>& kids) const {
    std::vector<Mask> out;
    const std::uint32_t valuations = std::uint32_t{1} << atoms_.size();
    for (std::uint32_t v = 0; v < valuations; ++v) {
      for (const Summary& k : kids) out.push_back(type_of(v, k));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Summaries of every multiset of at most `branching` successor types.
  std::vector<Summary> summaries(const std::vector<Mask>& types, std::size_t branching) const {
    std::vector<Mask> projected;
    for (Mask t : types) projected.push_back(t & modal_bodies_);
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

    std::vector<Summary> all{Summary{0, ~Mask{0}}};
    std::vector<Summary> frontier = all;
    for (std::size_t round = 0; round < branching && !frontier.empty(); ++round) {
      std::vector<Summary> next;
      for (const Summary& s : frontier) {
        for (Mask t : projected) {
          const Summary n{s.any | t, s.all & t};
          if (std::find(all.begin(), all.end(), n) == all.end() &&
              std::find(next.begin(), next.end(), n) == next.end()) {
            next.push_back(n);
          }
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return all;
  }

  std::vector<logic::Symbol> atoms_;
  std::vector<Sub> subs_;
  std::size_t root_ = 0;
  Mask modal_bodies_ = 0;
};

}  // namespace

bool bounded_validity_oracle(const ModalFormula& a) {
  if (logic::connective_count(a) > kOracleMaxConnectives) {
    throw BoundExceeded("oracle: formula has more than " + std::to_string(kOracleMaxConnectives) + " connectives");
  }
  const ModalFormula phi = logic::negate_nnf(a);
  const TypeSpace space(phi);
  return !space.satisfiable(logic::modal_depth(phi), logic::modal_occurrences(phi));
}

}  // namespace kcert::tableau
