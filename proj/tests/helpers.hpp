#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dragonfly/dragonfly.hpp"

namespace testutil {

using namespace dfly;

inline DValue<Level> star() { return DValue<Level>::star(); }
inline DValue<Level> kv(Level v) { return DValue<Level>::known(v); }

inline ChainSystem godel(int size) {
  return ChainSystem(ChainKind::godel, ChainScale(size));
}

inline ChainSystem lukasiewicz(int size) {
  return ChainSystem(ChainKind::lukasiewicz, ChainScale(size));
}

/// Capacity from sparse subset assignments; unlisted subsets get `fallback`,
/// boundaries are pinned to bottom/top.
inline Capacity<Level> make_capacity(
    const ChainSystem& sys, const Universe& u,
    const std::map<SubsetMask, DValue<Level>>& values,
    DValue<Level> fallback = DValue<Level>::known(0)) {
  Capacity<Level> mu = Capacity<Level>::minimal(u, sys.bottom(), sys.top());
  for (SubsetMask a = 1; a < u.full_mask(); ++a) {
    auto it = values.find(a);
    mu.set(a, it != values.end() ? it->second : fallback);
  }
  return mu;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(DFLY_DATA_DIR) + "/" + name;
}

/// Independent route to the minimum-system multiplication integral on known
/// values: sort the inputs descending and scan the nested coalitions. Used as
/// an oracle against the subset-scan implementation.
inline Level sugeno_sorted_oracle(const Capacity<Level>& mu,
                                  const std::vector<Level>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<int> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return f[a] > f[b]; });
  Level best = 0;
  SubsetMask acc = 0;
  for (int i = 0; i < n; ++i) {
    acc |= SubsetMask{1} << order[i];
    const auto& m = mu.at(acc);
    best = std::max(best, std::min(f[order[i]], m.value()));
  }
  return best;
}

inline InputVector<Level> known_vector(const std::vector<Level>& values) {
  InputVector<Level> out;
  for (Level v : values) out.push_back(kv(v));
  return out;
}

// ---------------------------------------------------------------------------
// The water-quality case study: four indicators rated on a five-point scale,
// 14 observations, two of them with a missing second indicator. Frozen here
// as levels (label n = level n-1) so the tests do not depend on the parsers.
// Masks: A = bit 0 ... D = bit 3.
// ---------------------------------------------------------------------------

inline ChainSystem lyon_system() {
  return ChainSystem(ChainKind::godel,
                     ChainScale(5, {"1", "2", "3", "4", "5"}));
}

inline Universe lyon_universe() { return Universe({"A", "B", "C", "D"}); }

inline std::vector<Datum<Level>> lyon_data() {
  const auto S = star();
  auto row = [](std::vector<DValue<Level>> f, DValue<Level> alpha) {
    return Datum<Level>{std::move(f), alpha};
  };
  return {
      row({kv(3), kv(1), kv(2), kv(2)}, kv(2)),
      row({kv(3), kv(1), kv(0), kv(0)}, kv(1)),
      row({kv(1), S, kv(2), kv(0)}, kv(1)),
      row({kv(1), kv(3), kv(1), kv(0)}, kv(1)),
      row({kv(4), kv(3), kv(2), kv(0)}, kv(2)),
      row({kv(2), S, kv(3), kv(2)}, kv(2)),
      row({kv(0), kv(2), kv(4), kv(3)}, kv(2)),
      row({kv(0), kv(4), kv(2), kv(2)}, kv(2)),
      row({kv(0), kv(0), kv(3), kv(1)}, kv(1)),
      row({kv(1), kv(2), kv(2), kv(2)}, kv(2)),
      row({kv(4), kv(1), kv(1), kv(0)}, kv(1)),
      row({kv(3), kv(4), kv(3), kv(1)}, kv(3)),
      row({kv(2), kv(3), kv(2), kv(0)}, kv(2)),
      row({kv(0), kv(0), kv(4), kv(4)}, kv(2)),
  };
}

/// Published interval for the 12 complete observations (levels).
inline Capacity<Level> table3_lower() {
  const auto sys = lyon_system();
  return make_capacity(sys, lyon_universe(),
                       {{0b0011, kv(1)},
                        {0b1100, kv(2)},
                        {0b0111, kv(3)},
                        {0b1011, kv(1)},
                        {0b1101, kv(2)},
                        {0b1110, kv(2)}});
}

inline Capacity<Level> table3_upper() {
  const auto sys = lyon_system();
  return make_capacity(sys, lyon_universe(),
                       {{0b0001, kv(1)},
                        {0b0010, kv(1)},
                        {0b0100, kv(1)},
                        {0b1000, kv(2)},
                        {0b0011, kv(2)},
                        {0b1100, kv(2)}},
                       kv(4));
}

/// Published interval for all 14 observations: one lower-bound entry moves.
inline Capacity<Level> table4_lower() {
  auto mu = table3_lower();
  mu.set(0b0101, kv(1));  // {A,C} rises from bottom to the second label
  return mu;
}

inline Capacity<Level> table4_upper() { return table3_upper(); }

}  // namespace testutil
