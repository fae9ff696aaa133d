#ifndef KCERT_TESTS_SUPPORT_BIPOLE_HPP
#define KCERT_TESTS_SUPPORT_BIPOLE_HPP

#include <cstddef>

#include "kcert/lkf/trace.hpp"

namespace kcert::testing {

// Replays the event sequence against the phase discipline: a decide opens a
// synchronous phase that only positive rules may extend, and which ends at a
// release or an initial/true leaf before any asynchronous rule or decide.
template <class Index>
std::size_t bipole_violations(const lkf::ProofTrace<Index>& trace) {
  using lkf::EventKind;
  std::size_t bad = 0;
  bool in_sync = false;
  for (const auto& e : trace) {
    switch (e.kind) {
      case EventKind::Decide:
        bad += in_sync;
        in_sync = true;
        break;
      case EventKind::Release:
      case EventKind::Init:
      case EventKind::True:
        bad += !in_sync;
        in_sync = false;
        break;
      case EventKind::AndPos:
        // The right premise resumes focus after the left one finished.
        if (e.branch == lkf::Branch::Left) bad += !in_sync;
        in_sync = true;
        break;
      case EventKind::OrPos:
      case EventKind::Some:
        bad += !in_sync;
        break;
      case EventKind::Store:
      case EventKind::OrNeg:
      case EventKind::AndNeg:
      case EventKind::All:
      case EventKind::Cut:
        bad += in_sync;
        break;
      case EventKind::Strip:
        break;
    }
  }
  return bad + in_sync;
}

}  // namespace kcert::testing

#endif  // KCERT_TESTS_SUPPORT_BIPOLE_HPP
