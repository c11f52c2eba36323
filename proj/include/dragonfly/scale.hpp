#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace dfly {

/// Index of a truth level on a finite chain: 0 is the bottom element,
/// size()-1 the top.
using Level = int;

/// A finite linearly ordered scale of truth levels 0..k, optionally carrying
/// one display label per level (bottom first). Labels are what dataset and
/// capacity files use; unlabeled scales read and write raw level numbers.
class ChainScale {
 public:
  explicit ChainScale(int size) : size_(size) { check_size(); }

  ChainScale(int size, std::vector<std::string> labels)
      : size_(size), labels_(std::move(labels)) {
    check_size();
    if (labels_.size() != static_cast<std::size_t>(size_))
      throw DomainError("scale labels must cover every level exactly once");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty())
        throw DomainError("scale labels must be non-empty");
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw DomainError("duplicate scale label '" + labels_[i] + "'");
    }
    // Numeric label lists must be given bottom-to-top.
    if (all_numeric()) {
      for (std::size_t i = 1; i < labels_.size(); ++i)
        if (numeric_value(labels_[i - 1]) >= numeric_value(labels_[i]))
          throw DomainError("numeric scale labels must be ascending");
    }
  }

  int size() const { return size_; }
  Level top() const { return size_ - 1; }
  static constexpr Level bottom() { return 0; }

  bool contains(Level v) const { return v >= 0 && v < size_; }

  void require(Level v) const {
    if (!contains(v))
      throw DomainError("level " + std::to_string(v) +
                        " is outside the scale (size " +
                        std::to_string(size_) + ")");
  }

  bool has_labels() const { return !labels_.empty(); }

  const std::string& label(Level v) const {
    require(v);
    return labels_[static_cast<std::size_t>(v)];
  }

  std::optional<Level> level_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<Level>(i);
    return std::nullopt;
  }

  friend bool operator==(const ChainScale&, const ChainScale&) = default;

 private:
  void check_size() const {
    if (size_ < 2) throw DomainError("a chain scale needs at least two levels");
  }

  bool all_numeric() const {
    for (const auto& l : labels_)
      if (!numeric_value(l)) return false;
    return true;
  }

  static std::optional<long> numeric_value(std::string_view s) {
    long out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return out;
  }

  int size_;
  std::vector<std::string> labels_;
};

}  // namespace dfly
