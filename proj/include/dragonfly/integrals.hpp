#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capacity.hpp"

namespace dfly {

/// Per-criterion evaluations; classical integrals require every entry known.
template <class V = Level>
using InputVector = std::vector<DValue<V>>;

/// The subset attaining the integral's outer extremum (first one in
/// ascending mask order), with its inner extremum and term value.
template <class V = Level>
struct IntegralTrace {
  SubsetMask subset = 0;
  DValue<V> inner = DValue<V>::star();
  DValue<V> term = DValue<V>::star();
};

namespace detail {

template <class V>
void require_shape(const Capacity<V>& mu, const InputVector<V>& f) {
  if (f.size() != static_cast<std::size_t>(mu.universe().size()))
    throw DomainError("input vector length does not match the universe");
}

template <class Sys, class V>
void require_boundaries(const Sys& sys, const Capacity<V>& mu) {
  if (mu.at(0) != DValue<V>::known(sys.bottom()) ||
      mu.at(mu.universe().full_mask()) != DValue<V>::known(sys.top()))
    throw DomainError(
        "capacity boundaries must be known bottom/top for integration");
}

template <class Sys>
void require_no_zero_divisors(const Sys& sys) {
  if (has_zero_divisors(sys))
    throw DomainError(
        "integrals over the star-extended domain need a system without zero "
        "divisors");
}

template <class Sys, class V>
void require_all_known(const Sys&, const Capacity<V>& mu,
                       const InputVector<V>& f) {
  for (SubsetMask a = 0; a <= mu.universe().full_mask(); ++a)
    if (mu.at(a).is_star())
      throw DomainError(
          "capacity carries unknown values; use the star-extended integral");
  for (const auto& v : f)
    if (v.is_star())
      throw DomainError(
          "input vector carries unknown values; use the star-extended "
          "integral");
}

/// Infimum of f over the members of mask; top for the empty subset.
template <class Sys, class V>
DValue<V> meet_over(const Sys& sys, const InputVector<V>& f, SubsetMask mask) {
  DValue<V> acc = DValue<V>::known(sys.top());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (mask & (SubsetMask{1} << i)) acc = d_meet(acc, f[i]);
  return acc;
}

/// Supremum of f over the members of mask; bottom for the empty subset.
template <class Sys, class V>
DValue<V> join_over(const Sys& sys, const InputVector<V>& f, SubsetMask mask) {
  DValue<V> acc = DValue<V>::known(sys.bottom());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (mask & (SubsetMask{1} << i)) acc = d_join(acc, f[i]);
  return acc;
}

}  // namespace detail

/// Multiplication-based integral over the star-extended domain: the linear
/// supremum over all subsets A of mu(A) (x) inf_{i in A} f_i. Defined only
/// over systems without zero divisors.
template <class Sys, class V = typename Sys::value_type>
DValue<V> integral_tnorm_d(const Sys& sys, const Capacity<V>& mu,
                           const InputVector<V>& f,
                           IntegralTrace<V>* trace = nullptr) {
  detail::require_shape(mu, f);
  detail::require_boundaries(sys, mu);
  detail::require_no_zero_divisors(sys);

  DValue<V> best = DValue<V>::known(sys.bottom());
  IntegralTrace<V> best_trace;
  for (SubsetMask a = 0; a <= mu.universe().full_mask(); ++a) {
    const DValue<V> inner = detail::meet_over(sys, f, a);
    const DValue<V> term = d_tnorm(sys, mu.at(a), inner);
    if (a == 0 || lt_linear(best, term)) {
      best = term;
      best_trace = IntegralTrace<V>{a, inner, term};
    }
  }
  if (trace) *trace = best_trace;
  return best;
}

/// Residuum-based integral over the star-extended domain: the linear infimum
/// over all subsets A of conj(A) -> sup_{i in A} f_i, with the conjugate
/// conj(A) = neg(mu(complement of A)).
template <class Sys, class V = typename Sys::value_type>
DValue<V> integral_residuum_d(const Sys& sys, const Capacity<V>& mu,
                              const InputVector<V>& f,
                              IntegralTrace<V>* trace = nullptr) {
  detail::require_shape(mu, f);
  detail::require_boundaries(sys, mu);
  detail::require_no_zero_divisors(sys);

  const SubsetMask full = mu.universe().full_mask();
  DValue<V> worst = DValue<V>::known(sys.top());
  IntegralTrace<V> worst_trace;
  for (SubsetMask a = 0; a <= full; ++a) {
    const DValue<V> conj = d_negation(sys, mu.at(full & ~a));
    const DValue<V> inner = detail::join_over(sys, f, a);
    const DValue<V> term = d_residuum(sys, conj, inner);
    if (a == 0 || lt_linear(term, worst)) {
      worst = term;
      worst_trace = IntegralTrace<V>{a, inner, term};
    }
  }
  if (trace) *trace = worst_trace;
  return worst;
}

/// Classical multiplication-based integral; every value must be known.
template <class Sys, class V = typename Sys::value_type>
V integral_tnorm(const Sys& sys, const Capacity<V>& mu, const InputVector<V>& f,
                 IntegralTrace<V>* trace = nullptr) {
  detail::require_shape(mu, f);
  detail::require_boundaries(sys, mu);
  detail::require_all_known(sys, mu, f);

  V best = sys.bottom();
  IntegralTrace<V> best_trace;
  for (SubsetMask a = 0; a <= mu.universe().full_mask(); ++a) {
    V inner = sys.top();
    for (std::size_t i = 0; i < f.size(); ++i)
      if (a & (SubsetMask{1} << i)) inner = std::min(inner, f[i].value());
    const V term = sys.tnorm(mu.at(a).value(), inner);
    if (a == 0 || best < term) {
      best = term;
      best_trace = IntegralTrace<V>{a, DValue<V>::known(inner),
                                    DValue<V>::known(term)};
    }
  }
  if (trace) *trace = best_trace;
  return best;
}

/// Classical residuum-based integral with the strict-negation conjugate.
template <class Sys, class V = typename Sys::value_type>
V integral_residuum(const Sys& sys, const Capacity<V>& mu,
                    const InputVector<V>& f,
                    IntegralTrace<V>* trace = nullptr) {
  detail::require_shape(mu, f);
  detail::require_boundaries(sys, mu);
  detail::require_all_known(sys, mu, f);

  const SubsetMask full = mu.universe().full_mask();
  V worst = sys.top();
  IntegralTrace<V> worst_trace;
  for (SubsetMask a = 0; a <= full; ++a) {
    const V conj = sys.negation(mu.at(full & ~a).value());
    V inner = sys.bottom();
    for (std::size_t i = 0; i < f.size(); ++i)
      if (a & (SubsetMask{1} << i)) inner = std::max(inner, f[i].value());
    const V term = sys.residuum(conj, inner);
    if (a == 0 || term < worst) {
      worst = term;
      worst_trace = IntegralTrace<V>{a, DValue<V>::known(inner),
                                     DValue<V>::known(term)};
    }
  }
  if (trace) *trace = worst_trace;
  return worst;
}

/// Residuum-based integral in the max(complement, .) implication variant,
/// whose conjugate uses the order-reversing complement. On any chain it
/// reproduces the classical multiplication-based integral of the minimum
/// system.
inline Level integral_residuum_kd(const ChainSystem& sys,
                                  const Capacity<Level>& mu,
                                  const InputVector<Level>& f,
                                  IntegralTrace<Level>* trace = nullptr) {
  detail::require_shape(mu, f);
  detail::require_boundaries(sys, mu);
  detail::require_all_known(sys, mu, f);

  const SubsetMask full = mu.universe().full_mask();
  const auto& scale = sys.scale();
  Level worst = sys.top();
  IntegralTrace<Level> worst_trace;
  for (SubsetMask a = 0; a <= full; ++a) {
    const Level conj = scale.top() - mu.at(full & ~a).value();
    Level inner = sys.bottom();
    for (std::size_t i = 0; i < f.size(); ++i)
      if (a & (SubsetMask{1} << i)) inner = std::max(inner, f[i].value());
    const Level term = kd_implication(scale, conj, inner);
    if (a == 0 || term < worst) {
      worst = term;
      worst_trace = IntegralTrace<Level>{a, DValue<Level>::known(inner),
                                         DValue<Level>::known(term)};
    }
  }
  if (trace) *trace = worst_trace;
  return worst;
}

}  // namespace dfly
