#pragma once

#include <utility>

namespace dfly {

/// An element of the star-extended value domain: either a known scale value
/// or the unknown marker. The unknown value is a distinct tag, never a
/// sentinel level.
template <class V>
class DValue {
 public:
  static DValue star() { return DValue(true, V{}); }
  static DValue known(V v) { return DValue(false, std::move(v)); }

  bool is_star() const { return star_; }
  bool is_known() const { return !star_; }

  /// Only meaningful when is_known().
  const V& value() const { return value_; }

  friend bool operator==(const DValue&, const DValue&) = default;

 private:
  DValue(bool star, V v) : star_(star), value_(std::move(v)) {}

  bool star_;
  V value_;  // V{} whenever star_, so defaulted equality is exact
};

/// Coarse position of a value on the extended chain.
enum class ValueClass { zero, star, positive };

template <class V>
ValueClass classify(const DValue<V>& d) {
  if (d.is_star()) return ValueClass::star;
  if (d.value() == V{}) return ValueClass::zero;
  return ValueClass::positive;
}

/// The total order on the extended domain: bottom < unknown < every positive
/// known value, known values ordered as on the underlying chain.
template <class V>
bool le_linear(const DValue<V>& a, const DValue<V>& b) {
  if (a.is_known() && b.is_known()) return !(b.value() < a.value());
  if (a.is_star() && b.is_star()) return true;
  if (a.is_star()) return V{} < b.value();   // * <= beta iff beta positive
  return a.value() == V{};                   // alpha <= * iff alpha is bottom
}

template <class V>
bool lt_linear(const DValue<V>& a, const DValue<V>& b) {
  return !le_linear(b, a);
}

/// Minimum under the total order. Realizes the published meet table.
template <class V>
DValue<V> d_meet(const DValue<V>& a, const DValue<V>& b) {
  return le_linear(a, b) ? a : b;
}

/// Maximum under the total order. Realizes the published join table.
template <class V>
DValue<V> d_join(const DValue<V>& a, const DValue<V>& b) {
  return le_linear(a, b) ? b : a;
}

}  // namespace dfly
