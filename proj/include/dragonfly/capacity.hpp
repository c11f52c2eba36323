#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "dvalue.hpp"
#include "errors.hpp"

namespace dfly {

/// Canonical subset representation: bit i set means criterion i is a member.
using SubsetMask = std::uint32_t;

/// A finite universe of criteria. Subsets are addressed by bitmask; names are
/// used by the text formats and default to "1".."n".
class Universe {
 public:
  explicit Universe(int n) : n_(n) {
    check_n();
    names_.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) names_.push_back(std::to_string(i));
  }

  explicit Universe(std::vector<std::string> names)
      : n_(static_cast<int>(names.size())), names_(std::move(names)) {
    check_n();
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty())
        throw DomainError("criterion names must be non-empty");
      if (names_[i].find_first_of(",{} \t") != std::string::npos)
        throw DomainError("criterion name '" + names_[i] +
                          "' contains a delimiter character");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw DomainError("duplicate criterion name '" + names_[i] + "'");
    }
  }

  int size() const { return n_; }
  SubsetMask full_mask() const { return (SubsetMask{1} << n_) - 1; }
  std::size_t subset_count() const { return std::size_t{1} << n_; }

  const std::string& name(int i) const {
    return names_[static_cast<std::size_t>(i)];
  }

  std::optional<int> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  std::string subset_name(SubsetMask mask) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
      if (!(mask & (SubsetMask{1} << i))) continue;
      if (!first) out += ',';
      out += names_[static_cast<std::size_t>(i)];
      first = false;
    }
    out += '}';
    return out;
  }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  void check_n() const {
    if (n_ < 1 || n_ > 20)
      throw DomainError("universe size must be between 1 and 20");
  }

  int n_;
  std::vector<std::string> names_;
};

/// All subsets of an n-element universe ordered by (cardinality, mask); the
/// order every renderer and report uses.
inline std::vector<SubsetMask> subsets_by_cardinality(int n) {
  std::vector<SubsetMask> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), SubsetMask{0});
  std::stable_sort(masks.begin(), masks.end(),
                   [](SubsetMask a, SubsetMask b) {
                     return std::popcount(a) < std::popcount(b);
                   });
  return masks;
}

/// A set function on all subsets of a universe, valued in the star-extended
/// domain. Construction only fixes the shape; validate_capacity checks the
/// boundary and monotonicity constraints.
template <class V = Level>
class Capacity {
 public:
  Capacity(Universe universe, std::vector<DValue<V>> table)
      : universe_(std::move(universe)), table_(std::move(table)) {
    if (table_.size() != universe_.subset_count())
      throw DomainError("capacity table must assign every subset exactly once");
  }

  /// The smallest capacity: bottom everywhere except the full set.
  static Capacity minimal(Universe universe, const V& bottom, const V& top) {
    std::vector<DValue<V>> t(universe.subset_count(), DValue<V>::known(bottom));
    t.back() = DValue<V>::known(top);
    return Capacity(std::move(universe), std::move(t));
  }

  /// The largest capacity: top everywhere except the empty set.
  static Capacity maximal(Universe universe, const V& bottom, const V& top) {
    std::vector<DValue<V>> t(universe.subset_count(), DValue<V>::known(top));
    t.front() = DValue<V>::known(bottom);
    return Capacity(std::move(universe), std::move(t));
  }

  const Universe& universe() const { return universe_; }

  const DValue<V>& at(SubsetMask mask) const {
    assert(mask < table_.size());
    return table_[mask];
  }

  void set(SubsetMask mask, DValue<V> v) {
    assert(mask < table_.size());
    table_[mask] = std::move(v);
  }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Universe universe_;
  std::vector<DValue<V>> table_;
};

struct CapacityIssue {
  enum class Kind { boundary_empty, boundary_full, monotonicity };
  Kind kind;
  SubsetMask smaller = 0, larger = 0;  // witnessing pair for monotonicity
};

struct CapacityValidation {
  bool passed = true;
  std::optional<CapacityIssue> issue;

  std::string describe(const Universe& u) const {
    if (passed) return "capacity is valid";
    switch (issue->kind) {
      case CapacityIssue::Kind::boundary_empty:
        return "the empty set must map to bottom";
      case CapacityIssue::Kind::boundary_full:
        return "the full set must map to top";
      case CapacityIssue::Kind::monotonicity:
        return "monotonicity fails between " + u.subset_name(issue->smaller) +
               " and " + u.subset_name(issue->larger);
    }
    return {};
  }
};

/// Checks the boundary normalization and linear-order monotonicity over all
/// covering pairs, reporting the first violated constraint in ascending mask
/// order.
template <class Sys, class V = typename Sys::value_type>
CapacityValidation validate_capacity(const Sys& sys, const Capacity<V>& mu) {
  CapacityValidation r;
  const auto& u = mu.universe();
  if (mu.at(0) != DValue<V>::known(sys.bottom())) {
    r.passed = false;
    r.issue = CapacityIssue{CapacityIssue::Kind::boundary_empty};
    return r;
  }
  if (mu.at(u.full_mask()) != DValue<V>::known(sys.top())) {
    r.passed = false;
    r.issue = CapacityIssue{CapacityIssue::Kind::boundary_full};
    return r;
  }
  for (SubsetMask b = 1; b <= u.full_mask(); ++b)
    for (int i = 0; i < u.size(); ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (!(b & bit)) continue;
      const SubsetMask a = b & ~bit;
      if (!le_linear(mu.at(a), mu.at(b))) {
        r.passed = false;
        r.issue =
            CapacityIssue{CapacityIssue::Kind::monotonicity, a, b};
        return r;
      }
    }
  return r;
}

/// The conjugate set function A -> neg(mu(complement of A)). On systems
/// without zero divisors its range is {bottom, *, top} and it is again a
/// capacity; with zero divisors the result may fail monotonicity, which is
/// why it is returned unvalidated.
template <class Sys, class V = typename Sys::value_type>
Capacity<V> conjugate(const Sys& sys, const Capacity<V>& mu) {
  const auto& u = mu.universe();
  std::vector<DValue<V>> table;
  table.reserve(u.subset_count());
  for (SubsetMask a = 0; a <= u.full_mask(); ++a)
    table.push_back(d_negation(sys, mu.at(u.full_mask() & ~a)));
  return Capacity<V>(u, std::move(table));
}

namespace detail {

inline void enumeration_guard(const Universe& u, const ChainSystem& sys,
                              bool allow_star, int max_n, int max_size) {
  if (u.size() <= max_n && sys.scale().size() <= max_size) return;
  const double options = sys.scale().size() + (allow_star ? 1 : 0);
  const double estimate =
      std::pow(options, static_cast<double>(u.subset_count() - 2));
  std::ostringstream os;
  os << "capacity enumeration refused: n=" << u.size() << ", "
     << sys.scale().size() << " levels would mean up to " << estimate
     << " candidate tables (guard: n <= " << max_n << ", size <= " << max_size
     << ")";
  throw GuardError(os.str());
}

}  // namespace detail

/// Calls fn with every valid capacity on the universe exactly once, in a
/// deterministic order (free subsets assigned in ascending mask order, values
/// in ascending linear order). Guarded to n <= 3 and chains of at most 4
/// levels.
template <class Fn>
void enumerate_capacities(const ChainSystem& sys, const Universe& u,
                          bool allow_star, Fn&& fn) {
  detail::enumeration_guard(u, sys, allow_star, 3, 4);

  std::vector<DValue<Level>> options;
  options.push_back(DValue<Level>::known(sys.bottom()));
  if (allow_star) options.push_back(DValue<Level>::star());
  for (Level v = 1; v <= sys.top(); ++v)
    options.push_back(DValue<Level>::known(v));

  Capacity<Level> mu = Capacity<Level>::minimal(u, sys.bottom(), sys.top());
  const SubsetMask full = u.full_mask();

  // Covering subsets all have smaller masks, so assigning in ascending mask
  // order lets us prune non-monotone prefixes immediately.
  std::function<void(SubsetMask)> assign = [&](SubsetMask m) {
    if (m == full) {
      fn(std::as_const(mu));
      return;
    }
    for (const auto& v : options) {
      bool ok = true;
      for (int i = 0; i < u.size() && ok; ++i) {
        const SubsetMask bit = SubsetMask{1} << i;
        if (m & bit) ok = le_linear(mu.at(m & ~bit), v);
      }
      if (!ok) continue;
      mu.set(m, v);
      assign(m + 1);
    }
    mu.set(m, DValue<Level>::known(sys.bottom()));
  };
  assign(1);
}

inline std::vector<Capacity<Level>> all_capacities(const ChainSystem& sys,
                                                   const Universe& u,
                                                   bool allow_star) {
  std::vector<Capacity<Level>> out;
  enumerate_capacities(sys, u, allow_star,
                       [&](const Capacity<Level>& mu) { out.push_back(mu); });
  return out;
}

}  // namespace dfly
