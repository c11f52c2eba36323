#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "characterization.hpp"

namespace dfly {

/// One observation: an input vector (unknown entries allowed) together with
/// the expert's global evaluation, which may itself be unknown.
template <class V = Level>
struct Datum {
  InputVector<V> f;
  DValue<V> alpha = DValue<V>::star();
};

/// Pointwise bounds enclosing every capacity that reproduces a dataset.
template <class V = Level>
struct CapacityInterval {
  Capacity<V> lower;
  Capacity<V> upper;
};

/// Tightest lower bound for one datum: alpha wherever the subset contains
/// every criterion with f_i >= alpha linearly, bottom elsewhere; the empty
/// and full sets are pinned to bottom and top.
template <class Sys, class V = typename Sys::value_type>
Capacity<V> lower_bound_capacity(const Sys& sys, const Universe& u,
                                 const Datum<V>& datum) {
  if (datum.f.size() != static_cast<std::size_t>(u.size()))
    throw DomainError("datum length does not match the universe");
  SubsetMask threshold = 0;
  for (std::size_t i = 0; i < datum.f.size(); ++i)
    if (le_linear(datum.alpha, datum.f[i])) threshold |= SubsetMask{1} << i;

  Capacity<V> out = Capacity<V>::minimal(u, sys.bottom(), sys.top());
  for (SubsetMask a = 1; a < u.full_mask(); ++a)
    if ((threshold & ~a) == 0) out.set(a, datum.alpha);
  return out;
}

/// Tightest upper bound for one datum: alpha on every subset of the strict
/// threshold set {i : f_i > alpha}, top elsewhere; boundaries pinned.
template <class Sys, class V = typename Sys::value_type>
Capacity<V> upper_bound_capacity(const Sys& sys, const Universe& u,
                                 const Datum<V>& datum) {
  if (datum.f.size() != static_cast<std::size_t>(u.size()))
    throw DomainError("datum length does not match the universe");
  SubsetMask strict = 0;
  for (std::size_t i = 0; i < datum.f.size(); ++i)
    if (lt_linear(datum.alpha, datum.f[i])) strict |= SubsetMask{1} << i;

  Capacity<V> out = Capacity<V>::maximal(u, sys.bottom(), sys.top());
  for (SubsetMask a = 1; a < u.full_mask(); ++a)
    if ((a & ~strict) == 0) out.set(a, datum.alpha);
  return out;
}

/// A subset where the intersected bounds cross, with the data rows that
/// forced each side (-1 when a side kept its vacuous default).
struct IntervalConflict {
  SubsetMask subset = 0;
  int lower_datum = -1;
  int upper_datum = -1;
};

template <class V = Level>
struct IdentificationResult {
  CapacityInterval<V> interval;
  std::vector<IntervalConflict> conflicts;
  // Per-subset index of the datum whose bound is active; -1 for defaults.
  std::vector<int> lower_source, upper_source;
  bool repair_changed_lower = false, repair_changed_upper = false;

  bool consistent() const { return conflicts.empty(); }
};

/// Folds the per-datum bounds over a dataset: lower is the pointwise linear
/// maximum of the lower bounds, upper the pointwise minimum of the upper
/// bounds. A monotone repair pass follows (expected to change nothing, since
/// per-datum bounds are monotone and the fold preserves that); crossings are
/// reported with the responsible data rows. An empty dataset gives the
/// vacuous interval.
template <class Sys, class V = typename Sys::value_type>
IdentificationResult<V> intersect(const Sys& sys, const Universe& u,
                                  const std::vector<Datum<V>>& data) {
  IdentificationResult<V> result{
      CapacityInterval<V>{Capacity<V>::minimal(u, sys.bottom(), sys.top()),
                          Capacity<V>::maximal(u, sys.bottom(), sys.top())},
      {},
      std::vector<int>(u.subset_count(), -1),
      std::vector<int>(u.subset_count(), -1)};
  auto& lower = result.interval.lower;
  auto& upper = result.interval.upper;

  for (std::size_t j = 0; j < data.size(); ++j) {
    const auto lo = lower_bound_capacity(sys, u, data[j]);
    const auto hi = upper_bound_capacity(sys, u, data[j]);
    for (SubsetMask a = 0; a <= u.full_mask(); ++a) {
      if (lt_linear(lower.at(a), lo.at(a))) {
        lower.set(a, lo.at(a));
        result.lower_source[a] = static_cast<int>(j);
      }
      if (lt_linear(hi.at(a), upper.at(a))) {
        upper.set(a, hi.at(a));
        result.upper_source[a] = static_cast<int>(j);
      }
    }
  }

  // Monotone repair: smallest monotone majorant of the lower bound (upward
  // sweep over covers), largest monotone minorant of the upper bound
  // (downward sweep).
  for (SubsetMask b = 1; b <= u.full_mask(); ++b)
    for (int i = 0; i < u.size(); ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (!(b & bit)) continue;
      const auto& below = lower.at(b & ~bit);
      if (lt_linear(lower.at(b), below)) {
        lower.set(b, below);
        result.repair_changed_lower = true;
      }
    }
  for (SubsetMask a = u.full_mask(); a-- > 0;)
    for (int i = 0; i < u.size(); ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (a & bit) continue;
      const auto& above = upper.at(a | bit);
      if (lt_linear(above, upper.at(a))) {
        upper.set(a, above);
        result.repair_changed_upper = true;
      }
    }

  for (SubsetMask a = 0; a <= u.full_mask(); ++a)
    if (lt_linear(upper.at(a), lower.at(a)))
      result.conflicts.push_back(IntervalConflict{
          a, result.lower_source[a], result.upper_source[a]});
  return result;
}

/// True iff mu lies between the bounds pointwise under the linear order.
template <class V>
bool interval_contains(const CapacityInterval<V>& interval,
                       const Capacity<V>& mu) {
  const auto& u = mu.universe();
  for (SubsetMask a = 0; a <= u.full_mask(); ++a)
    if (!le_linear(interval.lower.at(a), mu.at(a)) ||
        !le_linear(mu.at(a), interval.upper.at(a)))
      return false;
  return true;
}

template <class V = Level>
struct DatumCheck {
  DValue<V> computed;
  DValue<V> expected;
  bool passed = false;
};

template <class V = Level>
struct AdmissibilityReport {
  std::vector<DatumCheck<V>> checks;
  int passed_count = 0;
  bool all_passed = true;
};

/// Evaluates the multiplication-based integral of every datum under mu and
/// compares it with the recorded global evaluation.
template <class Sys, class V = typename Sys::value_type>
AdmissibilityReport<V> check_admissible(const Sys& sys, const Capacity<V>& mu,
                                        const std::vector<Datum<V>>& data) {
  AdmissibilityReport<V> report;
  report.checks.reserve(data.size());
  for (const auto& d : data) {
    const auto computed = integral_tnorm_d(sys, mu, d.f);
    const bool ok = computed == d.alpha;
    report.checks.push_back(DatumCheck<V>{computed, d.alpha, ok});
    report.passed_count += ok ? 1 : 0;
    report.all_passed = report.all_passed && ok;
  }
  return report;
}

/// Exhaustive comparison of interval membership against admissibility for a
/// single datum. `admissible_outside` counts capacities reproducing alpha
/// outside the interval; `members_not_admissible` counts interval members
/// that fail to reproduce alpha.
struct IntervalCharacterization {
  long long capacities = 0;
  long long admissible = 0;
  long long members = 0;
  long long admissible_outside = 0;
  long long members_not_admissible = 0;
  bool feasible = false;  // bottom-meet of f <= alpha <= join of f linearly
  std::optional<Capacity<Level>> first_admissible_outside;
  std::optional<Capacity<Level>> first_member_not_admissible;

  bool iff_holds() const {
    return admissible_outside == 0 && members_not_admissible == 0;
  }
};

inline IntervalCharacterization verify_interval_characterization(
    const ChainSystem& sys, const Universe& u, const Datum<Level>& datum) {
  if (u.size() > 3 || sys.scale().size() > 4)
    throw GuardError(
        "interval characterization oracle refused (guard: n <= 3, size <= 4)");

  const auto bounds_lo = lower_bound_capacity(sys, u, datum);
  const auto bounds_hi = upper_bound_capacity(sys, u, datum);
  const CapacityInterval<Level> interval{bounds_lo, bounds_hi};

  IntervalCharacterization report;
  DValue<Level> meet = DValue<Level>::known(sys.top());
  DValue<Level> join = DValue<Level>::known(sys.bottom());
  for (const auto& v : datum.f) {
    meet = d_meet(meet, v);
    join = d_join(join, v);
  }
  report.feasible =
      le_linear(meet, datum.alpha) && le_linear(datum.alpha, join);

  enumerate_capacities(sys, u, /*allow_star=*/true,
                       [&](const Capacity<Level>& mu) {
    ++report.capacities;
    const bool admissible =
        integral_tnorm_d(sys, mu, datum.f) == datum.alpha;
    const bool member = interval_contains(interval, mu);
    report.admissible += admissible ? 1 : 0;
    report.members += member ? 1 : 0;
    if (admissible && !member) {
      ++report.admissible_outside;
      if (!report.first_admissible_outside) report.first_admissible_outside = mu;
    }
    if (member && !admissible) {
      ++report.members_not_admissible;
      if (!report.first_member_not_admissible)
        report.first_member_not_admissible = mu;
    }
  });
  return report;
}

}  // namespace dfly
