#pragma once

#include <algorithm>
#include <boost/rational.hpp>
#include <vector>

#include "dvalue.hpp"
#include "errors.hpp"
#include "scale.hpp"

namespace dfly {

enum class ChainKind { godel, lukasiewicz };

/// An adjoint multiplication/residuum pair on a finite chain of levels.
///
/// The Lukasiewicz kind interprets level i as the rational i/k, i.e. the
/// equidistant chain {0, 1/k, ..., 1}; that is the only finite subchain of
/// [0,1] closed under its operations, so no other carrier is representable.
class ChainSystem {
 public:
  using value_type = Level;

  ChainSystem(ChainKind kind, ChainScale scale)
      : kind_(kind), scale_(std::move(scale)) {}

  ChainKind kind() const { return kind_; }
  const ChainScale& scale() const { return scale_; }

  Level bottom() const { return ChainScale::bottom(); }
  Level top() const { return scale_.top(); }

  Level tnorm(Level a, Level b) const {
    scale_.require(a);
    scale_.require(b);
    switch (kind_) {
      case ChainKind::godel:
        return std::min(a, b);
      case ChainKind::lukasiewicz:
        return std::max(0, a + b - top());
    }
    return 0;  // unreachable
  }

  Level residuum(Level a, Level b) const {
    scale_.require(a);
    scale_.require(b);
    switch (kind_) {
      case ChainKind::godel:
        return a <= b ? top() : b;
      case ChainKind::lukasiewicz:
        return std::min(top(), top() - a + b);
    }
    return 0;  // unreachable
  }

  Level negation(Level a) const { return residuum(a, bottom()); }

  friend bool operator==(const ChainSystem&, const ChainSystem&) = default;

 private:
  ChainKind kind_;
  ChainScale scale_;
};

/// Exact rational arithmetic keeps the adjointness property testable; floats
/// would not.
using Rational = boost::rational<long long>;

/// The product system on exact rationals in [0,1]. Supports pointwise
/// operations and integrals; its carrier is infinite, so every
/// enumeration-based check refuses it.
class ProductSystem {
 public:
  using value_type = Rational;

  Rational bottom() const { return Rational(0); }
  Rational top() const { return Rational(1); }

  void require(const Rational& v) const {
    if (v < Rational(0) || v > Rational(1))
      throw DomainError("product system values must lie in [0,1]");
  }

  Rational tnorm(const Rational& a, const Rational& b) const {
    require(a);
    require(b);
    return a * b;
  }

  Rational residuum(const Rational& a, const Rational& b) const {
    require(a);
    require(b);
    if (a <= b) return Rational(1);
    return b / a;  // a > b >= 0, so a != 0
  }

  Rational negation(const Rational& a) const { return residuum(a, bottom()); }

  friend bool operator==(const ProductSystem&, const ProductSystem&) {
    return true;
  }
};

/// True iff two positive levels multiply to bottom, found by exhaustive scan.
inline bool has_zero_divisors(const ChainSystem& sys) {
  for (Level a = 1; a <= sys.top(); ++a)
    for (Level b = a; b <= sys.top(); ++b)
      if (sys.tnorm(a, b) == sys.bottom()) return true;
  return false;
}

/// The product of two positive rationals is positive; no scan is possible or
/// needed on the infinite carrier.
constexpr bool has_zero_divisors(const ProductSystem&) { return false; }

/// max(complement(a), b) with the order-reversing complement of level i being
/// level k-i.
inline Level kd_implication(const ChainScale& scale, Level a, Level b) {
  scale.require(a);
  scale.require(b);
  return std::max(scale.top() - a, b);
}

// ---------------------------------------------------------------------------
// Star-extended operations.
//
// The published tables distinguish bottom, top, interior and unknown
// arguments; on known pairs every entry coincides with the underlying
// operation, which the case analysis below relies on. The literal table
// transcription in laws.hpp cross-checks it entry by entry.
// ---------------------------------------------------------------------------

template <class Sys, class V = typename Sys::value_type>
DValue<V> d_tnorm(const Sys& sys, const DValue<V>& a, const DValue<V>& b) {
  if (a.is_known() && b.is_known())
    return DValue<V>::known(sys.tnorm(a.value(), b.value()));
  // At least one unknown: bottom annihilates, every other pairing is unknown.
  if (a.is_known() && a.value() == sys.bottom()) return a;
  if (b.is_known() && b.value() == sys.bottom()) return b;
  return DValue<V>::star();
}

template <class Sys, class V = typename Sys::value_type>
DValue<V> d_residuum(const Sys& sys, const DValue<V>& a, const DValue<V>& b) {
  if (a.is_known() && b.is_known())
    return DValue<V>::known(sys.residuum(a.value(), b.value()));
  if (a.is_star()) {
    if (b.is_star()) return DValue<V>::known(sys.top());
    if (b.value() == sys.bottom()) return DValue<V>::star();
    return b;  // * -> beta = beta, including beta = top
  }
  // a known, b unknown
  if (a.value() == sys.bottom()) return DValue<V>::known(sys.top());
  return DValue<V>::star();
}

template <class Sys, class V = typename Sys::value_type>
DValue<V> d_negation(const Sys& sys, const DValue<V>& a) {
  return d_residuum(sys, a, DValue<V>::known(sys.bottom()));
}

/// Result of comparing under the lower-estimation partial order, where the
/// unknown value is comparable only to bottom and top.
enum class PartialLe { yes, no, incomparable };

template <class Sys, class V = typename Sys::value_type>
PartialLe le_partial(const Sys& sys, const DValue<V>& a, const DValue<V>& b) {
  if (a == b) return PartialLe::yes;
  if (a.is_known() && b.is_known())
    return a.value() <= b.value() ? PartialLe::yes : PartialLe::no;
  if (a.is_star()) {
    if (b.value() == sys.top()) return PartialLe::yes;   // * <= top
    if (b.value() == sys.bottom()) return PartialLe::no; // bottom <= *
    return PartialLe::incomparable;
  }
  // a known, b unknown
  if (a.value() == sys.bottom()) return PartialLe::yes;
  if (a.value() == sys.top()) return PartialLe::no;
  return PartialLe::incomparable;
}

inline std::string to_string(const ChainSystem& sys, const DValue<Level>& v) {
  if (v.is_star()) return "*";
  if (sys.scale().has_labels()) return sys.scale().label(v.value());
  return std::to_string(v.value());
}

/// Every element of the star-extended domain in ascending linear order:
/// bottom, *, then the positive levels.
inline std::vector<DValue<Level>> star_elements(const ChainSystem& sys) {
  std::vector<DValue<Level>> out;
  out.reserve(static_cast<std::size_t>(sys.scale().size()) + 1);
  out.push_back(DValue<Level>::known(sys.bottom()));
  out.push_back(DValue<Level>::star());
  for (Level v = 1; v <= sys.top(); ++v) out.push_back(DValue<Level>::known(v));
  return out;
}

}  // namespace dfly
