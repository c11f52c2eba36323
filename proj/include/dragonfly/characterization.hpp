#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "integrals.hpp"

namespace dfly {

// ---------------------------------------------------------------------------
// Threshold sets. Each predicate below is decided from these masks and at
// most two capacity lookups; the exhaustive oracles check that this O(n)
// route always agrees with the O(2^n) integral.
// ---------------------------------------------------------------------------

/// {i : f_i > bottom} linearly, i.e. unknown or positive. Coincides with
/// {i : f_i >= *}.
template <class V>
SubsetMask positive_support(const InputVector<V>& f) {
  SubsetMask m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (classify(f[i]) != ValueClass::zero) m |= SubsetMask{1} << i;
  return m;
}

/// {i : f_i > *} linearly, i.e. known and positive.
template <class V>
SubsetMask known_positive_set(const InputVector<V>& f) {
  SubsetMask m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (classify(f[i]) == ValueClass::positive) m |= SubsetMask{1} << i;
  return m;
}

template <class V>
SubsetMask zero_set(const InputVector<V>& f) {
  SubsetMask m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (classify(f[i]) == ValueClass::zero) m |= SubsetMask{1} << i;
  return m;
}

template <class V>
SubsetMask star_set(const InputVector<V>& f) {
  SubsetMask m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].is_star()) m |= SubsetMask{1} << i;
  return m;
}

/// {i : f_i <= *} linearly, i.e. bottom or unknown.
template <class V>
SubsetMask at_most_star_set(const InputVector<V>& f) {
  return zero_set(f) | star_set(f);
}

namespace detail {

/// Conjugate value at a single subset without building the whole table.
template <class Sys, class V>
DValue<V> conjugate_at(const Sys& sys, const Capacity<V>& mu, SubsetMask a) {
  return d_negation(sys, mu.at(mu.universe().full_mask() & ~a));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Known/unknown-result predicates. Each one states a condition on mu and the
// threshold sets of f that is equivalent to the multiplication- or
// residuum-based integral landing in a given class.
// ---------------------------------------------------------------------------

/// Condition equivalent to: the multiplication-based integral is bottom.
template <class V>
bool predict_tnorm_zero(const Capacity<V>& mu, const InputVector<V>& f) {
  return classify(mu.at(positive_support(f))) == ValueClass::zero;
}

/// Condition equivalent to: the multiplication-based integral is known and
/// positive.
template <class V>
bool predict_tnorm_known(const Capacity<V>& mu, const InputVector<V>& f) {
  return classify(mu.at(known_positive_set(f))) == ValueClass::positive;
}

/// Condition equivalent to: the multiplication-based integral is unknown.
/// Requires mu({f > *}) <= *, mu({f >= *}) >= * and a positive entry in f.
template <class V>
bool predict_tnorm_star(const Capacity<V>& mu, const InputVector<V>& f) {
  const SubsetMask support = positive_support(f);
  return classify(mu.at(known_positive_set(f))) != ValueClass::positive &&
         classify(mu.at(support)) != ValueClass::zero && support != 0;
}

/// Condition equivalent to: the residuum-based integral is bottom.
template <class Sys, class V = typename Sys::value_type>
bool predict_res_zero(const Sys& sys, const Capacity<V>& mu,
                      const InputVector<V>& f) {
  const auto conj = detail::conjugate_at(sys, mu, zero_set(f));
  return conj == DValue<V>::known(sys.top());
}

/// Condition equivalent to: the residuum-based integral is known and
/// positive.
template <class Sys, class V = typename Sys::value_type>
bool predict_res_known(const Sys& sys, const Capacity<V>& mu,
                       const InputVector<V>& f) {
  const auto at_zero = detail::conjugate_at(sys, mu, zero_set(f));
  const auto at_low = detail::conjugate_at(sys, mu, at_most_star_set(f));
  return classify(at_zero) == ValueClass::zero &&
         at_low != DValue<V>::known(sys.top());
}

/// Condition equivalent to: the residuum-based integral is unknown. Some
/// entry of f must be bottom or unknown, and one of three conjugate
/// conditions holds: (a) conj at the zero set is unknown; (b) f has a bottom
/// entry, conj at the zero set is bottom and conj at {f <= *} is top;
/// (c) f has no bottom entry and conj at the unknown set is top.
template <class Sys, class V = typename Sys::value_type>
bool predict_res_star(const Sys& sys, const Capacity<V>& mu,
                      const InputVector<V>& f) {
  const SubsetMask full = mu.universe().full_mask();
  if (known_positive_set(f) == full) return false;  // every entry known positive

  const SubsetMask zeros = zero_set(f);
  const auto at_zero = detail::conjugate_at(sys, mu, zeros);
  const auto top = DValue<V>::known(sys.top());

  const bool a = at_zero.is_star();
  const bool b = zeros != 0 && classify(at_zero) == ValueClass::zero &&
                 detail::conjugate_at(sys, mu, at_most_star_set(f)) == top;
  const bool c = zeros == 0 && detail::conjugate_at(sys, mu, star_set(f)) == top;
  return a || b || c;
}

// ---------------------------------------------------------------------------
// Verdicts and the exhaustive trichotomy oracle.
// ---------------------------------------------------------------------------

/// One predicate evaluated against the computed integral. Agreement means the
/// condition holds exactly when the computed value falls in the target class.
struct TheoremVerdict {
  std::string theorem_id;
  bool condition = false;
  ValueClass target = ValueClass::zero;
  DValue<Level> computed = DValue<Level>::star();
  bool agrees = false;

  std::string render(const ChainSystem& sys) const {
    std::ostringstream os;
    os << "theorem=" << theorem_id << " status=" << (agrees ? "pass" : "fail")
       << " witness=computed:" << to_string(sys, computed)
       << ",condition:" << (condition ? "true" : "false");
    return os.str();
  }
};

inline TheoremVerdict make_verdict(std::string id, bool condition,
                                   ValueClass target,
                                   const DValue<Level>& computed) {
  TheoremVerdict v{std::move(id), condition, target, computed, false};
  v.agrees = condition == (classify(computed) == target);
  return v;
}

/// The three multiplication-based verdicts for one (capacity, vector) pair.
inline std::vector<TheoremVerdict> tnorm_verdicts(const ChainSystem& sys,
                                                  const Capacity<Level>& mu,
                                                  const InputVector<Level>& f) {
  const auto computed = integral_tnorm_d(sys, mu, f);
  return {
      make_verdict("tnorm-zero", predict_tnorm_zero(mu, f), ValueClass::zero,
                   computed),
      make_verdict("tnorm-star", predict_tnorm_star(mu, f), ValueClass::star,
                   computed),
      make_verdict("tnorm-known", predict_tnorm_known(mu, f),
                   ValueClass::positive, computed),
  };
}

/// The three residuum-based verdicts for one (capacity, vector) pair.
inline std::vector<TheoremVerdict> residuum_verdicts(
    const ChainSystem& sys, const Capacity<Level>& mu,
    const InputVector<Level>& f) {
  const auto computed = integral_residuum_d(sys, mu, f);
  return {
      make_verdict("residuum-zero", predict_res_zero(sys, mu, f),
                   ValueClass::zero, computed),
      make_verdict("residuum-star", predict_res_star(sys, mu, f),
                   ValueClass::star, computed),
      make_verdict("residuum-known", predict_res_known(sys, mu, f),
                   ValueClass::positive, computed),
  };
}

/// Every input vector over the star-extended domain, ascending per position.
inline std::vector<InputVector<Level>> all_input_vectors(
    const ChainSystem& sys, int n) {
  const auto elems = star_elements(sys);
  std::vector<InputVector<Level>> out;
  InputVector<Level> cur(static_cast<std::size_t>(n), DValue<Level>::star());
  std::function<void(int)> fill = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& v : elems) {
      cur[static_cast<std::size_t>(i)] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

struct TrichotomyMismatch {
  Capacity<Level> mu;
  InputVector<Level> f;
  TheoremVerdict verdict;
};

struct TrichotomyReport {
  long long pairs = 0;
  long long mismatches = 0;
  std::optional<TrichotomyMismatch> first;
};

/// Runs all six predicates against the computed integrals over every
/// (capacity, vector) pair, also checking that exactly one condition per trio
/// holds. Default guard: n <= 2 on chains of 2 or 3 levels; `extended` opens
/// n = 3 on 3 levels.
inline TrichotomyReport run_trichotomy_oracle(const ChainSystem& sys, int n,
                                              bool extended = false) {
  const int max_n = extended ? 3 : 2;
  const int max_size = 3;
  if (n > max_n || sys.scale().size() > max_size) {
    std::ostringstream os;
    os << "trichotomy oracle refused: n=" << n << " on "
       << sys.scale().size() << " levels (guard: n <= " << max_n
       << ", size <= " << max_size << ")";
    throw GuardError(os.str());
  }

  const Universe u(n);
  const auto vectors = all_input_vectors(sys, n);
  TrichotomyReport report;
  enumerate_capacities(sys, u, /*allow_star=*/true,
                       [&](const Capacity<Level>& mu) {
    for (const auto& f : vectors) {
      ++report.pairs;
      auto verdicts = tnorm_verdicts(sys, mu, f);
      auto res = residuum_verdicts(sys, mu, f);
      verdicts.insert(verdicts.end(), res.begin(), res.end());
      int conditions_mul = 0, conditions_res = 0;
      for (const auto& v : verdicts) {
        const bool mul = v.theorem_id.rfind("tnorm", 0) == 0;
        (mul ? conditions_mul : conditions_res) += v.condition ? 1 : 0;
        if (!v.agrees) {
          ++report.mismatches;
          if (!report.first) report.first = TrichotomyMismatch{mu, f, v};
        }
      }
      if (conditions_mul != 1 || conditions_res != 1) {
        ++report.mismatches;
        if (!report.first)
          report.first = TrichotomyMismatch{mu, f, verdicts.front()};
      }
    }
  });
  return report;
}

// ---------------------------------------------------------------------------
// Completions and the lower-estimation check.
// ---------------------------------------------------------------------------

/// Calls fn with every vector obtained from f by substituting a positive
/// known level for each unknown entry. A vector without unknowns yields
/// exactly itself.
template <class Fn>
void for_each_completion(const ChainSystem& sys, const InputVector<Level>& f,
                         Fn&& fn) {
  int stars = 0;
  for (const auto& v : f) stars += v.is_star() ? 1 : 0;
  const double count = std::pow(static_cast<double>(sys.top()), stars);
  if (count > 1e6) {
    std::ostringstream os;
    os << "completion enumeration refused: " << stars << " unknown entries on "
       << sys.scale().size() << " levels would mean " << count << " vectors";
    throw GuardError(os.str());
  }

  InputVector<Level> g = f;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == f.size()) {
      fn(std::as_const(g));
      return;
    }
    if (f[i].is_known()) {
      fill(i + 1);
      return;
    }
    for (Level v = 1; v <= sys.top(); ++v) {
      g[i] = DValue<Level>::known(v);
      fill(i + 1);
    }
    g[i] = DValue<Level>::star();
  };
  fill(0);
}

inline std::vector<InputVector<Level>> completions(const ChainSystem& sys,
                                                   const InputVector<Level>& f) {
  std::vector<InputVector<Level>> out;
  for_each_completion(sys, f,
                      [&](const InputVector<Level>& g) { out.push_back(g); });
  return out;
}

/// Which qualitative integral a check runs against.
enum class QIntegral { multiplication, residuum };

/// Outcome of checking that an integral of f bounds the integral of every
/// completion of f from below.
struct LowerEstimationReport {
  bool passed = true;
  bool residuum_checked = false;
  std::optional<InputVector<Level>> counterexample;
  DValue<Level> value_at_f = DValue<Level>::star();
  DValue<Level> value_at_completion = DValue<Level>::star();
};

/// Verifies the lower-estimation principle for one integral: the value at f
/// must bound the value at every completion of f from below. For the
/// residuum integral with an unknown-valued capacity a failure is a
/// legitimate outcome, reported with the witnessing completion.
inline LowerEstimationReport verify_lower_estimation(
    const ChainSystem& sys, const Capacity<Level>& mu,
    const InputVector<Level>& f, QIntegral kind) {
  LowerEstimationReport report;
  report.residuum_checked = kind == QIntegral::residuum;
  const auto evaluate = [&](const InputVector<Level>& v) {
    return kind == QIntegral::multiplication ? integral_tnorm_d(sys, mu, v)
                                             : integral_residuum_d(sys, mu, v);
  };
  const auto base = evaluate(f);
  for_each_completion(sys, f, [&](const InputVector<Level>& g) {
    if (!report.passed) return;
    const auto val = evaluate(g);
    if (!le_linear(base, val)) {
      report.passed = false;
      report.counterexample = g;
      report.value_at_f = base;
      report.value_at_completion = val;
    }
  });
  return report;
}

/// Combined form: the multiplication integral always, the residuum integral
/// only when mu carries no unknown values (the only case where its
/// monotonicity is guaranteed).
inline LowerEstimationReport verify_lower_estimation(
    const ChainSystem& sys, const Capacity<Level>& mu,
    const InputVector<Level>& f) {
  auto report = verify_lower_estimation(sys, mu, f, QIntegral::multiplication);
  if (!report.passed) return report;
  for (SubsetMask a = 0; a <= mu.universe().full_mask(); ++a)
    if (mu.at(a).is_star()) return report;
  auto res = verify_lower_estimation(sys, mu, f, QIntegral::residuum);
  res.residuum_checked = true;
  return res;
}

}  // namespace dfly
