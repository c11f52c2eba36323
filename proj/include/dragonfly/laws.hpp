#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "algebra.hpp"

namespace dfly {

// ---------------------------------------------------------------------------
// Literal transcriptions of the published operation tables. Rows and columns
// are classified as interior / unknown / bottom / top and each entry is
// spelled out, independently of the operational definitions in algebra.hpp,
// so the two routes can be compared exhaustively.
// ---------------------------------------------------------------------------
namespace transcription {

enum class Kind { interior, star, bottom, top };

inline Kind kind_of(const ChainSystem& sys, const DValue<Level>& v) {
  if (v.is_star()) return Kind::star;
  if (v.value() == sys.bottom()) return Kind::bottom;
  if (v.value() == sys.top()) return Kind::top;
  return Kind::interior;
}

inline DValue<Level> d_tnorm_table(const ChainSystem& sys,
                                   const DValue<Level>& a,
                                   const DValue<Level>& b) {
  using D = DValue<Level>;
  const D star = D::star(), zero = D::known(sys.bottom()),
          one = D::known(sys.top());
  switch (kind_of(sys, a)) {
    case Kind::interior:
      switch (kind_of(sys, b)) {
        case Kind::interior: return D::known(sys.tnorm(a.value(), b.value()));
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return a;
      }
      break;
    case Kind::star:
      switch (kind_of(sys, b)) {
        case Kind::interior: return star;
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return star;
      }
      break;
    case Kind::bottom:
      return zero;
    case Kind::top:
      switch (kind_of(sys, b)) {
        case Kind::interior: return b;
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return one;
      }
      break;
  }
  return zero;  // unreachable
}

inline DValue<Level> d_join_table(const ChainSystem& sys,
                                  const DValue<Level>& a,
                                  const DValue<Level>& b) {
  using D = DValue<Level>;
  const D star = D::star(), zero = D::known(sys.bottom()),
          one = D::known(sys.top());
  switch (kind_of(sys, a)) {
    case Kind::interior:
      switch (kind_of(sys, b)) {
        case Kind::interior:
          return D::known(std::max(a.value(), b.value()));
        case Kind::star: return a;
        case Kind::bottom: return a;
        case Kind::top: return one;
      }
      break;
    case Kind::star:
      switch (kind_of(sys, b)) {
        case Kind::interior: return b;
        case Kind::star: return star;
        case Kind::bottom: return star;
        case Kind::top: return one;
      }
      break;
    case Kind::bottom:
      switch (kind_of(sys, b)) {
        case Kind::interior: return b;
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return one;
      }
      break;
    case Kind::top:
      return one;
  }
  return zero;  // unreachable
}

inline DValue<Level> d_meet_table(const ChainSystem& sys,
                                  const DValue<Level>& a,
                                  const DValue<Level>& b) {
  using D = DValue<Level>;
  const D star = D::star(), zero = D::known(sys.bottom()),
          one = D::known(sys.top());
  switch (kind_of(sys, a)) {
    case Kind::interior:
      switch (kind_of(sys, b)) {
        case Kind::interior:
          return D::known(std::min(a.value(), b.value()));
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return a;
      }
      break;
    case Kind::star:
      switch (kind_of(sys, b)) {
        case Kind::interior: return star;
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return star;
      }
      break;
    case Kind::bottom:
      return zero;
    case Kind::top:
      switch (kind_of(sys, b)) {
        case Kind::interior: return b;
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return one;
      }
      break;
  }
  return zero;  // unreachable
}

inline DValue<Level> d_residuum_table(const ChainSystem& sys,
                                      const DValue<Level>& a,
                                      const DValue<Level>& b) {
  using D = DValue<Level>;
  const D star = D::star(), zero = D::known(sys.bottom()),
          one = D::known(sys.top());
  switch (kind_of(sys, a)) {
    case Kind::interior:
      switch (kind_of(sys, b)) {
        case Kind::interior:
          return D::known(sys.residuum(a.value(), b.value()));
        case Kind::star: return star;
        case Kind::bottom: return D::known(sys.negation(a.value()));
        case Kind::top: return one;
      }
      break;
    case Kind::star:
      switch (kind_of(sys, b)) {
        case Kind::interior: return b;
        case Kind::star: return one;
        case Kind::bottom: return star;
        case Kind::top: return one;
      }
      break;
    case Kind::bottom:
      return one;
    case Kind::top:
      switch (kind_of(sys, b)) {
        case Kind::interior: return b;
        case Kind::star: return star;
        case Kind::bottom: return zero;
        case Kind::top: return one;
      }
      break;
  }
  return zero;  // unreachable
}

}  // namespace transcription

/// First disagreement between the operational definitions and the literal
/// table transcription, scanning all pairs of extended values.
struct TableMismatch {
  std::string op;
  DValue<Level> lhs, rhs;
  DValue<Level> implemented, transcribed;
};

inline std::optional<TableMismatch> find_table_mismatch(
    const ChainSystem& sys) {
  const auto elems = star_elements(sys);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (auto t = transcription::d_tnorm_table(sys, a, b);
          d_tnorm(sys, a, b) != t)
        return TableMismatch{"tnorm", a, b, d_tnorm(sys, a, b), t};
      if (auto t = transcription::d_join_table(sys, a, b); d_join(a, b) != t)
        return TableMismatch{"join", a, b, d_join(a, b), t};
      if (auto t = transcription::d_meet_table(sys, a, b); d_meet(a, b) != t)
        return TableMismatch{"meet", a, b, d_meet(a, b), t};
      if (auto t = transcription::d_residuum_table(sys, a, b);
          d_residuum(sys, a, b) != t)
        return TableMismatch{"residuum", a, b, d_residuum(sys, a, b), t};
    }
  return std::nullopt;
}

/// Outcome of the exhaustive monoid check for the star-extended
/// multiplication: unit, commutativity and associativity over all triples.
struct MonoidReport {
  enum class Law { unit, commutativity, associativity };

  bool passed = true;
  Law law = Law::unit;
  std::array<DValue<Level>, 3> witness = {DValue<Level>::star(),
                                          DValue<Level>::star(),
                                          DValue<Level>::star()};

  std::string describe(const ChainSystem& sys) const {
    if (passed) return "monoid laws hold";
    std::ostringstream os;
    switch (law) {
      case Law::unit:
        os << "unit fails at " << to_string(sys, witness[0]);
        break;
      case Law::commutativity:
        os << "commutativity fails at (" << to_string(sys, witness[0]) << ", "
           << to_string(sys, witness[1]) << ")";
        break;
      case Law::associativity:
        os << "associativity fails at (" << to_string(sys, witness[0]) << ", "
           << to_string(sys, witness[1]) << ", " << to_string(sys, witness[2])
           << ")";
        break;
    }
    return os.str();
  }
};

inline MonoidReport check_monoid(const ChainSystem& sys) {
  const auto elems = star_elements(sys);
  const auto one = DValue<Level>::known(sys.top());
  MonoidReport r;
  for (const auto& a : elems) {
    if (d_tnorm(sys, a, one) != a || d_tnorm(sys, one, a) != a) {
      r.passed = false;
      r.law = MonoidReport::Law::unit;
      r.witness = {a, one, one};
      return r;
    }
  }
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (d_tnorm(sys, a, b) != d_tnorm(sys, b, a)) {
        r.passed = false;
        r.law = MonoidReport::Law::commutativity;
        r.witness = {a, b, b};
        return r;
      }
    }
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        const auto lhs = d_tnorm(sys, d_tnorm(sys, a, b), c);
        const auto rhs = d_tnorm(sys, a, d_tnorm(sys, b, c));
        if (lhs != rhs) {
          r.passed = false;
          r.law = MonoidReport::Law::associativity;
          r.witness = {a, b, c};
          return r;
        }
      }
  return r;
}

/// First pair of positive levels multiplying to bottom, if any.
inline std::optional<std::pair<Level, Level>> find_zero_divisor_pair(
    const ChainSystem& sys) {
  for (Level a = 1; a <= sys.top(); ++a)
    for (Level b = 1; b <= sys.top(); ++b)
      if (sys.tnorm(a, b) == sys.bottom()) return std::make_pair(a, b);
  return std::nullopt;
}

/// Witnesses showing that the adjointness property breaks on the extended
/// domain: the unknown element against bottom, and the unit against an
/// interior level. Needs at least one interior level to be applicable.
struct AdjointnessFailureReport {
  bool applicable = false;
  bool star_bottom_witness = false;  // *x* not<= 0 while * <= *->0
  std::optional<Level> unit_witness; // *x1 <= beta while 1 not<= *->beta
  bool confirmed() const {
    return applicable && star_bottom_witness && unit_witness.has_value();
  }
};

inline AdjointnessFailureReport check_adjointness_failure(
    const ChainSystem& sys) {
  AdjointnessFailureReport r;
  if (sys.scale().size() < 3) return r;  // no interior levels
  r.applicable = true;

  using D = DValue<Level>;
  const D star = D::star();
  const D zero = D::known(sys.bottom());
  r.star_bottom_witness = !le_linear(d_tnorm(sys, star, star), zero) &&
                          le_linear(star, d_residuum(sys, star, zero));

  const D one = D::known(sys.top());
  for (Level v = 1; v < sys.top(); ++v) {
    const D beta = D::known(v);
    if (le_linear(d_tnorm(sys, star, one), beta) &&
        !le_linear(one, d_residuum(sys, star, beta))) {
      r.unit_witness = v;
      break;
    }
  }
  return r;
}

/// First violation of the adjointness equivalence on the underlying chain
/// (none is expected for any finite system).
inline std::optional<std::array<Level, 3>> find_adjointness_violation(
    const ChainSystem& sys) {
  for (Level a = 0; a <= sys.top(); ++a)
    for (Level b = 0; b <= sys.top(); ++b)
      for (Level c = 0; c <= sys.top(); ++c)
        if ((sys.tnorm(a, b) <= c) != (a <= sys.residuum(b, c)))
          return std::array<Level, 3>{a, b, c};
  return std::nullopt;
}

/// A monotonicity violation of a binary extended operation: arguments
/// (a, b) vs (a, c) with b <= c linearly but op(a,b) > op(a,c).
struct MonotonicityWitness {
  DValue<Level> fixed, smaller, larger;
  DValue<Level> at_smaller, at_larger;
};

/// Scans the extended multiplication for second-argument monotonicity under
/// the linear order (commutativity covers the first argument). Expected to
/// find nothing on zero-divisor-free systems.
inline std::optional<MonotonicityWitness> find_d_tnorm_monotonicity_violation(
    const ChainSystem& sys) {
  const auto elems = star_elements(sys);
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        if (!le_linear(b, c)) continue;
        const auto vb = d_tnorm(sys, a, b);
        const auto vc = d_tnorm(sys, a, c);
        if (!le_linear(vb, vc)) return MonotonicityWitness{a, b, c, vb, vc};
      }
  return std::nullopt;
}

/// Scans the extended residuum for second-argument monotonicity. Any chain
/// with an interior level yields the witness (*, *, gamma).
inline std::optional<MonotonicityWitness>
find_d_residuum_monotonicity_violation(const ChainSystem& sys) {
  const auto elems = star_elements(sys);
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        if (!le_linear(b, c)) continue;
        const auto vb = d_residuum(sys, a, b);
        const auto vc = d_residuum(sys, a, c);
        if (!le_linear(vb, vc)) return MonotonicityWitness{a, b, c, vb, vc};
      }
  return std::nullopt;
}

/// Same scan restricted to known first arguments, where monotonicity does
/// hold. Expected to find nothing on any chain.
inline std::optional<MonotonicityWitness>
find_d_residuum_known_first_monotonicity_violation(const ChainSystem& sys) {
  const auto elems = star_elements(sys);
  for (const auto& a : elems) {
    if (a.is_star()) continue;
    for (const auto& b : elems)
      for (const auto& c : elems) {
        if (!le_linear(b, c)) continue;
        const auto vb = d_residuum(sys, a, b);
        const auto vc = d_residuum(sys, a, c);
        if (!le_linear(vb, vc)) return MonotonicityWitness{a, b, c, vb, vc};
      }
  }
  return std::nullopt;
}

}  // namespace dfly
