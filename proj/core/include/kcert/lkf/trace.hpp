#ifndef KCERT_LKF_TRACE_HPP
#define KCERT_LKF_TRACE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcert/logic/polarized.hpp"

namespace kcert::lkf {

enum class Branch : std::uint8_t { Left, Right };

enum class EventKind : std::uint8_t {
  Decide,
  Store,
  Init,
  Release,
  OrNeg,
  AndNeg,
  All,
  Some,
  AndPos,
  OrPos,
  True,
  Cut,
  Strip,
};

// One rule application of a checked derivation. Branching rules emit one
// event per premise (tagged Left/Right) immediately before that premise's
// events, so the derivation tree can be rebuilt from the flat trace.
template <class Index>
struct Event {
  EventKind kind = EventKind::Release;
  Index index{};           // Decide, Store, Init
  logic::Term term{};      // All, Some
  Branch branch{};         // AndNeg, AndPos, Cut
  int disjunct = 0;        // OrPos: 1 or 2
  std::optional<logic::Formula> cut_formula;  // Cut

  friend bool operator==(const Event& a, const Event& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case EventKind::Decide:
      case EventKind::Store:
      case EventKind::Init:
        return a.index == b.index;
      case EventKind::All:
      case EventKind::Some:
        return a.term == b.term;
      case EventKind::AndNeg:
      case EventKind::AndPos:
        return a.branch == b.branch;
      case EventKind::OrPos:
        return a.disjunct == b.disjunct;
      case EventKind::Cut:
        return a.branch == b.branch && a.cut_formula == b.cut_formula;
      default:
        return true;
    }
  }
};

template <class Index>
using ProofTrace = std::vector<Event<Index>>;

template <class Index>
std::string to_string(const Event<Index>& e) {
  auto side = [&] { return e.branch == Branch::Left ? std::string("L") : std::string("R"); };
  switch (e.kind) {
    case EventKind::Decide: return "decide " + to_string(e.index);
    case EventKind::Store: return "store " + to_string(e.index);
    case EventKind::Init: return "init " + to_string(e.index);
    case EventKind::Release: return "release";
    case EventKind::OrNeg: return "orneg";
    case EventKind::AndNeg: return "andneg " + side();
    case EventKind::All: return "all " + logic::to_string(e.term);
    case EventKind::Some: return "some " + logic::to_string(e.term);
    case EventKind::AndPos: return "andpos " + side();
    case EventKind::OrPos: return "orpos " + std::to_string(e.disjunct);
    case EventKind::True: return "true";
    case EventKind::Cut: return "cut " + side() + " " + logic::to_string(*e.cut_formula);
    case EventKind::Strip: return "strip";
  }
  return "?";
}

// One event per line.
template <class Index>
std::string format_trace(const ProofTrace<Index>& trace) {
  std::string out;
  for (const auto& e : trace) {
    out += to_string(e);
    out += '\n';
  }
  return out;
}

template <class Index>
std::size_t count_events(const ProofTrace<Index>& trace, EventKind kind) {
  return static_cast<std::size_t>(
      std::count_if(trace.begin(), trace.end(), [kind](const Event<Index>& e) { return e.kind == kind; }));
}

}  // namespace kcert::lkf

#endif  // KCERT_LKF_TRACE_HPP
