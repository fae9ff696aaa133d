#include "kcert/fittings/index.hpp"

namespace kcert::fittings {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

FitIndex FitIndex::eind() {
  static const FitIndex e(std::make_shared<const Node>(Node{Kind::Eind, 0x51, 1}));
  return e;
}

FitIndex FitIndex::none() {
  static const FitIndex n(std::make_shared<const Node>(Node{Kind::None, 0xa3, 1}));
  return n;
}

FitIndex FitIndex::lind(FitIndex i) {
  const std::size_t h = mix(0x11, i.hash());
  const std::size_t s = i.size() + 1;
  return FitIndex(std::make_shared<const Node>(Node{Kind::Lind, h, s, std::move(i)}));
}

FitIndex FitIndex::rind(FitIndex i) {
  const std::size_t h = mix(0x23, i.hash());
  const std::size_t s = i.size() + 1;
  return FitIndex(std::make_shared<const Node>(Node{Kind::Rind, h, s, std::move(i)}));
}

FitIndex FitIndex::bind(FitIndex i, FitIndex o) {
  const std::size_t h = mix(mix(0x37, i.hash()), o.hash());
  const std::size_t s = i.size() + o.size() + 1;
  return FitIndex(std::make_shared<const Node>(Node{Kind::Bind, h, s, std::move(i), std::move(o)}));
}

bool operator==(const FitIndex& a, const FitIndex& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case FitIndex::Kind::Eind:
    case FitIndex::Kind::None:
      return true;
    case FitIndex::Kind::Lind:
    case FitIndex::Kind::Rind:
      return a.first() == b.first();
    case FitIndex::Kind::Bind:
      return a.first() == b.first() && a.second() == b.second();
  }
  return false;
}

std::strong_ordering operator<=>(const FitIndex& a, const FitIndex& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case FitIndex::Kind::Eind:
    case FitIndex::Kind::None:
      return std::strong_ordering::equal;
    case FitIndex::Kind::Lind:
    case FitIndex::Kind::Rind:
      return a.first() <=> b.first();
    case FitIndex::Kind::Bind:
      if (auto c = a.first() <=> b.first(); c != 0) return c;
      return a.second() <=> b.second();
  }
  return std::strong_ordering::equal;
}

std::string to_string(const FitIndex& i) {
  switch (i.kind()) {
    case FitIndex::Kind::Eind: return "eind";
    case FitIndex::Kind::None: return "none";
    case FitIndex::Kind::Lind: return "(lind " + to_string(i.first()) + ")";
    case FitIndex::Kind::Rind: return "(rind " + to_string(i.first()) + ")";
    case FitIndex::Kind::Bind: return "(bind " + to_string(i.first()) + " " + to_string(i.second()) + ")";
  }
  return "?";
}

}  // namespace kcert::fittings
