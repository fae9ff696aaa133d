#ifndef KCERT_LKF_KERNEL_HPP
#define KCERT_LKF_KERNEL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "kcert/lkf/fpc.hpp"
#include "kcert/lkf/negation.hpp"
#include "kcert/lkf/trace.hpp"
#include "kcert/logic/modal.hpp"
#include "kcert/logic/polarized.hpp"
#include "kcert/logic/translate.hpp"

namespace kcert::lkf {

struct KernelStats {
  std::size_t steps = 0;
  // Rule applications at which the certificate admitted more than one
  // alternative.
  std::size_t choice_points = 0;
  std::size_t backtracks = 0;
  std::size_t max_depth = 0;
  // Largest number of decides, and largest excess of decides over stores,
  // seen on any single root-to-node path of the search.
  std::size_t max_path_decides = 0;
  std::ptrdiff_t max_path_decide_surplus = 0;
};

template <class Index>
struct Accept {
  ProofTrace<Index> trace;
  KernelStats stats;
};

template <class Index>
struct Reject {
  std::string reason;
  // Longest trace prefix reached before the search gave up.
  ProofTrace<Index> deepest;
  KernelStats stats;
};

template <class Index>
using CheckResult = std::variant<Accept<Index>, Reject<Index>>;

template <class Index>
bool accepted(const CheckResult<Index>& r) {
  return std::holds_alternative<Accept<Index>>(r);
}

template <class Index>
const KernelStats& stats_of(const CheckResult<Index>& r) {
  return std::visit([](const auto& v) -> const KernelStats& { return v.stats; }, r);
}

// The augmented focused classical sequent calculus. Certificates steer the
// search through the clerk/expert relations of F; the kernel itself only
// enforces the inference rules. Search is depth-first and deterministic:
// alternatives are tried in the order the FPC returns them, decide
// candidates in F::decide_order, and decide before cut.
//
// Premises of a branching rule share no unification state, so once the left
// premise has a derivation a failure of the right premise fails the whole
// rule instance; alternative left derivations are not re-enumerated.
template <Fpc F>
class Kernel {
 public:
  using Cert = typename F::Cert;
  using Index = typename F::Index;

  struct Options {
    // Abort with Reject after this many rule applications (0 = unlimited).
    std::size_t step_limit = 0;
    // When set, only derivations whose events match this trace are explored.
    // Eigenvariables are matched up to renaming.
    const ProofTrace<Index>* guide = nullptr;
  };

  explicit Kernel(const F& fpc) : fpc_(fpc) {}
  Kernel(const F& fpc, Options options) : fpc_(fpc), options_(options) {}

  // Entry sequent: async, empty storage, workbench [delp([goal]w0)].
  CheckResult<Index> check(const logic::ModalFormula& goal, const Cert& cert) {
    return check_sequent({logic::delp(logic::polarized_translation(goal, logic::Term::world()))}, cert);
  }

  // Pre: `workbench` lists the async formulas left to right.
  CheckResult<Index> check_sequent(std::vector<logic::Formula> workbench, const Cert& cert) {
    reset();
    std::reverse(workbench.begin(), workbench.end());
    const bool ok = async(cert, std::move(workbench), 0);
    if (ok) return Accept<Index>{std::move(trace_), stats_};
    std::string reason = aborted_ ? "step limit exceeded" : "no derivation admitted by the certificate";
    if (deepest_.size() < trace_.size()) deepest_ = trace_;
    return Reject<Index>{std::move(reason), std::move(deepest_), stats_};
  }

  // Issues a term never issued before in this check.
  logic::Term fresh_eigen() { return logic::Term::eigen(++eigen_counter_); }

 private:
  struct Entry {
    Index index;
    logic::Formula formula;
  };
  // Head of the workbench is at the back.
  using Workbench = std::vector<logic::Formula>;

  void reset() {
    storage_.clear();
    trace_.clear();
    deepest_.clear();
    stats_ = {};
    eigen_counter_ = 0;
    aborted_ = false;
    path_decides_ = 0;
    path_stores_ = 0;
    renaming_.clear();
  }

  bool tick(std::size_t depth) {
    ++stats_.steps;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (options_.step_limit != 0 && stats_.steps > options_.step_limit) aborted_ = true;
    return !aborted_;
  }

  // Appends an event; false when it contradicts the guide.
  bool emit(Event<Index> e) {
    if (options_.guide != nullptr) {
      const auto& guide = *options_.guide;
      if (trace_.size() >= guide.size()) return false;
      const Event<Index>& expected = guide[trace_.size()];
      if (e.kind == EventKind::All && expected.kind == EventKind::All) {
        renaming_[expected.term.value()] = e.term;
      } else if (e.kind == EventKind::Some && expected.kind == EventKind::Some &&
                 expected.term.kind() == logic::Term::Kind::Eigen) {
        auto it = renaming_.find(expected.term.value());
        if (it == renaming_.end() || it->second != e.term) return false;
      } else if (!(e == expected)) {
        return false;
      }
    }
    trace_.push_back(std::move(e));
    return true;
  }

  void note_failure(std::size_t mark) {
    if (trace_.size() > deepest_.size()) deepest_ = trace_;
    trace_.resize(mark);
    ++stats_.backtracks;
  }

  static Event<Index> simple(EventKind kind) { return Event<Index>{kind}; }
  static Event<Index> indexed(EventKind kind, Index index) {
    Event<Index> e{kind};
    e.index = std::move(index);
    return e;
  }
  static Event<Index> with_term(EventKind kind, logic::Term t) {
    Event<Index> e{kind};
    e.term = t;
    return e;
  }
  static Event<Index> sided(EventKind kind, Branch b) {
    Event<Index> e{kind};
    e.branch = b;
    return e;
  }

  template <class Alternatives>
  void count_choice(const Alternatives& alts) {
    if (alts.size() > 1) ++stats_.choice_points;
  }

  // Runs `attempt` after recording `kind`; undoes the trace on failure.
  template <class Attempt>
  bool step(Event<Index> event, Attempt&& attempt) {
    const std::size_t mark = trace_.size();
    if (!emit(std::move(event))) return false;
    if (attempt()) return true;
    note_failure(mark);
    return false;
  }

  bool async(const Cert& cert, Workbench gamma, std::size_t depth) {
    if (!tick(depth)) return false;
    if (gamma.empty()) return decide_or_cut(cert, depth);

    logic::Formula head = std::move(gamma.back());
    gamma.pop_back();

    switch (head.kind()) {
      case logic::Connective::AndNeg: {
        auto alts = fpc_.and_neg_clerk(cert);
        count_choice(alts);
        for (const auto& [left_cert, right_cert] : alts) {
          const std::size_t mark = trace_.size();
          Workbench left = gamma;
          left.push_back(head.left());
          gamma.push_back(head.right());
          const bool ok = step(sided(EventKind::AndNeg, Branch::Left),
                               [&] { return async(left_cert, std::move(left), depth + 1); }) &&
                          step(sided(EventKind::AndNeg, Branch::Right),
                               [&] { return async(right_cert, gamma, depth + 1); });
          gamma.pop_back();
          if (ok) return true;
          note_failure(mark);
        }
        return false;
      }
      case logic::Connective::OrNeg: {
        auto alts = fpc_.or_neg_clerk(cert);
        count_choice(alts);
        gamma.push_back(head.right());
        gamma.push_back(head.left());
        for (const auto& next : alts) {
          if (step(simple(EventKind::OrNeg), [&] { return async(next, gamma, depth + 1); })) return true;
        }
        return false;
      }
      case logic::Connective::All: {
        auto alts = fpc_.all_clerk(cert);
        count_choice(alts);
        for (const auto& continuation : alts) {
          const logic::Term y = fresh_eigen();
          Workbench next = gamma;
          next.push_back(logic::instantiate(head.body(), y));
          if (step(with_term(EventKind::All, y), [&] { return async(continuation(y), std::move(next), depth + 1); }))
            return true;
        }
        return false;
      }
      case logic::Connective::DelayNeg:
        gamma.push_back(head.body());
        return step(simple(EventKind::Strip), [&] { return async(cert, std::move(gamma), depth + 1); });
      case logic::Connective::False:
        // No rule applies.
        return false;
      default:
        break;
    }

    // Positive formula or negated atom: store.
    auto alts = fpc_.store_clerk(cert, head);
    count_choice(alts);
    for (const auto& [index, next] : alts) {
      storage_.push_back(Entry{index, head});
      ++path_stores_;
      const bool ok = step(indexed(EventKind::Store, index), [&] { return async(next, gamma, depth + 1); });
      --path_stores_;
      storage_.pop_back();
      if (ok) return true;
    }
    return false;
  }

  bool decide_or_cut(const Cert& cert, std::size_t depth) {
    struct Candidate {
      std::size_t entry;
      Cert cert;
    };
    std::vector<Candidate> candidates;
    const std::size_t n = storage_.size();
    auto consider = [&](std::size_t i) {
      if (!logic::is_positive(storage_[i].formula)) return;
      for (auto& c : fpc_.decide_expert(cert, storage_[i].index)) candidates.push_back(Candidate{i, std::move(c)});
    };
    if constexpr (F::decide_order == DecideOrder::MostRecentFirst) {
      for (std::size_t i = n; i-- > 0;) consider(i);
    } else {
      for (std::size_t i = 0; i < n; ++i) consider(i);
    }
    auto cuts = fpc_.cut_expert(cert);
    if (candidates.size() + cuts.size() > 1) ++stats_.choice_points;

    for (const auto& candidate : candidates) {
      const Entry entry = storage_[candidate.entry];
      ++path_decides_;
      stats_.max_path_decides = std::max(stats_.max_path_decides, path_decides_);
      stats_.max_path_decide_surplus =
          std::max(stats_.max_path_decide_surplus,
                   static_cast<std::ptrdiff_t>(path_decides_) - static_cast<std::ptrdiff_t>(path_stores_));
      const bool ok = step(indexed(EventKind::Decide, entry.index),
                           [&] { return sync(candidate.cert, entry.formula, depth + 1); });
      --path_decides_;
      if (ok) return true;
      if (aborted_) return false;
    }

    for (const auto& cut : cuts) {
      const std::size_t mark = trace_.size();
      Event<Index> left_event = sided(EventKind::Cut, Branch::Left);
      left_event.cut_formula = cut.cut_formula;
      Event<Index> right_event = sided(EventKind::Cut, Branch::Right);
      right_event.cut_formula = cut.cut_formula;
      const bool ok =
          step(std::move(left_event), [&] { return async(cut.left, Workbench{cut.cut_formula}, depth + 1); }) &&
          step(std::move(right_event), [&] { return async(cut.right, Workbench{neg(cut.cut_formula)}, depth + 1); });
      if (ok) return true;
      note_failure(mark);
    }
    return false;
  }

  bool sync(const Cert& cert, const logic::Formula& focus, std::size_t depth) {
    if (!tick(depth)) return false;
    switch (focus.kind()) {
      case logic::Connective::AndPos: {
        auto alts = fpc_.and_pos_expert(cert);
        count_choice(alts);
        for (const auto& [left_cert, right_cert] : alts) {
          const std::size_t mark = trace_.size();
          const bool ok =
              step(sided(EventKind::AndPos, Branch::Left), [&] { return sync(left_cert, focus.left(), depth + 1); }) &&
              step(sided(EventKind::AndPos, Branch::Right), [&] { return sync(right_cert, focus.right(), depth + 1); });
          if (ok) return true;
          note_failure(mark);
        }
        return false;
      }
      case logic::Connective::OrPos: {
        auto alts = fpc_.or_pos_expert(cert);
        count_choice(alts);
        for (const auto& [i, next] : alts) {
          if (i != 1 && i != 2) continue;
          Event<Index> e{EventKind::OrPos};
          e.disjunct = i;
          const logic::Formula& disjunct = i == 1 ? focus.left() : focus.right();
          if (step(std::move(e), [&] { return sync(next, disjunct, depth + 1); })) return true;
        }
        return false;
      }
      case logic::Connective::Exists: {
        auto alts = fpc_.some_expert(cert);
        count_choice(alts);
        for (const auto& [t, next] : alts) {
          if (step(with_term(EventKind::Some, t),
                   [&] { return sync(next, logic::instantiate(focus.body(), t), depth + 1); }))
            return true;
        }
        return false;
      }
      case logic::Connective::True:
        return fpc_.true_expert(cert) && emit(simple(EventKind::True));
      case logic::Connective::PAtom: {
        for (std::size_t i = 0; i < storage_.size(); ++i) {
          const Entry& entry = storage_[i];
          if (entry.formula.kind() != logic::Connective::NAtom || !(entry.formula.atom() == focus.atom())) continue;
          if (fpc_.initial_expert(cert, entry.index) && emit(indexed(EventKind::Init, entry.index))) return true;
        }
        return false;
      }
      case logic::Connective::DelayPos:
        return step(simple(EventKind::Strip), [&] { return sync(cert, focus.body(), depth + 1); });
      default:
        break;
    }

    // Negative focus: release.
    auto alts = fpc_.release_expert(cert);
    count_choice(alts);
    for (const auto& next : alts) {
      if (step(simple(EventKind::Release), [&] { return async(next, Workbench{focus}, depth + 1); })) return true;
    }
    return false;
  }

  const F& fpc_;
  Options options_{};
  std::vector<Entry> storage_;
  ProofTrace<Index> trace_;
  ProofTrace<Index> deepest_;
  KernelStats stats_;
  std::uint32_t eigen_counter_ = 0;
  bool aborted_ = false;
  std::size_t path_decides_ = 0;
  std::size_t path_stores_ = 0;
  std::unordered_map<std::uint32_t, logic::Term> renaming_;
};

// Convenience wrapper: one fresh kernel per call.
template <Fpc F>
CheckResult<typename F::Index> check(const logic::ModalFormula& goal, const typename F::Cert& cert, const F& fpc) {
  return Kernel<F>(fpc).check(goal, cert);
}

}  // namespace kcert::lkf

#endif  // KCERT_LKF_KERNEL_HPP
