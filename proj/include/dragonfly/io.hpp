#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "identification.hpp"
#include "laws.hpp"

namespace dfly {

// ---------------------------------------------------------------------------
// Small text helpers.
// ---------------------------------------------------------------------------
namespace text {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

inline std::optional<long> parse_int(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> out;
  for (auto part : split(s, '\n')) out.emplace_back(trim(part));
  // Drop a trailing blank produced by a final newline.
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace text

// ---------------------------------------------------------------------------
// Scale specifications: one line, e.g. "scale godel 5 1,2,3,4,5",
// "scale lukasiewicz 3" or "scale product". The leading keyword is optional
// on the command line.
// ---------------------------------------------------------------------------

struct ScaleSpec {
  enum class Kind { godel, lukasiewicz, product };
  Kind kind = Kind::godel;
  int size = 0;
  std::vector<std::string> labels;
};

inline ScaleSpec parse_scale_spec(std::string_view line) {
  auto tokens = text::words(text::trim(line));
  if (!tokens.empty() && text::ascii_lower(tokens.front()) == "scale")
    tokens.erase(tokens.begin());
  if (tokens.empty()) throw ParseError("empty scale specification");

  const std::string kind = text::ascii_lower(tokens.front());
  ScaleSpec spec;
  if (kind == "godel" || kind == "g\xc3\xb6" "del") {
    spec.kind = ScaleSpec::Kind::godel;
  } else if (kind == "lukasiewicz" || kind == "\xc5\x82" "ukasiewicz") {
    spec.kind = ScaleSpec::Kind::lukasiewicz;
  } else if (kind == "product") {
    spec.kind = ScaleSpec::Kind::product;
    if (tokens.size() > 1)
      throw ParseError("the product scale takes no size or labels");
    return spec;
  } else {
    throw ParseError("unknown scale kind '" + std::string(tokens.front()) +
                     "'");
  }

  if (tokens.size() < 2)
    throw ParseError("finite scales need a size, e.g. 'scale godel 5'");
  const auto size = text::parse_int(tokens[1]);
  if (!size || *size < 2)
    throw ParseError("scale size must be an integer of at least 2");
  spec.size = static_cast<int>(*size);

  if (tokens.size() >= 3) {
    for (auto l : text::split(tokens[2], ','))
      spec.labels.emplace_back(text::trim(l));
  }
  if (tokens.size() > 3) throw ParseError("trailing tokens after scale labels");
  return spec;
}

inline ChainSystem make_chain_system(const ScaleSpec& spec) {
  if (spec.kind == ScaleSpec::Kind::product)
    throw ParseError("a finite chain scale is required here");
  const ChainKind kind = spec.kind == ScaleSpec::Kind::godel
                             ? ChainKind::godel
                             : ChainKind::lukasiewicz;
  if (spec.labels.empty()) return ChainSystem(kind, ChainScale(spec.size));
  return ChainSystem(kind, ChainScale(spec.size, spec.labels));
}

inline std::string render_scale_spec(const ChainSystem& sys) {
  std::string out = "scale ";
  out += sys.kind() == ChainKind::godel ? "godel" : "lukasiewicz";
  out += ' ';
  out += std::to_string(sys.scale().size());
  if (sys.scale().has_labels()) {
    out += ' ';
    for (Level v = 0; v <= sys.top(); ++v) {
      if (v > 0) out += ',';
      out += sys.scale().label(v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Values: "*" for the unknown marker; labels (or bare levels on unlabeled
// scales) for chain systems; integers or fractions "p/q" for the product
// system.
// ---------------------------------------------------------------------------

inline std::string render_value(const ChainSystem& sys,
                                const DValue<Level>& v) {
  return to_string(sys, v);
}

inline DValue<Level> parse_value(const ChainSystem& sys,
                                 std::string_view token) {
  token = text::trim(token);
  if (token == "*") return DValue<Level>::star();
  if (sys.scale().has_labels()) {
    if (auto level = sys.scale().level_of(token))
      return DValue<Level>::known(*level);
    throw ParseError("'" + std::string(token) +
                     "' is not a label of the scale");
  }
  const auto level = text::parse_int(token);
  if (!level || !sys.scale().contains(static_cast<Level>(*level)))
    throw ParseError("'" + std::string(token) +
                     "' is not a level of the scale");
  return DValue<Level>::known(static_cast<Level>(*level));
}

inline std::string render_value(const ProductSystem&,
                                const DValue<Rational>& v) {
  if (v.is_star()) return "*";
  if (v.value().denominator() == 1)
    return std::to_string(v.value().numerator());
  return std::to_string(v.value().numerator()) + "/" +
         std::to_string(v.value().denominator());
}

inline DValue<Rational> parse_value(const ProductSystem& sys,
                                    std::string_view token) {
  token = text::trim(token);
  if (token == "*") return DValue<Rational>::star();
  const auto parts = text::split(token, '/');
  Rational v;
  if (parts.size() == 1) {
    const auto num = text::parse_int(parts[0]);
    if (!num) throw ParseError("'" + std::string(token) + "' is not a number");
    v = Rational(*num);
  } else if (parts.size() == 2) {
    const auto num = text::parse_int(parts[0]);
    const auto den = text::parse_int(parts[1]);
    if (!num || !den || *den == 0)
      throw ParseError("'" + std::string(token) + "' is not a fraction");
    v = Rational(*num, *den);
  } else {
    throw ParseError("'" + std::string(token) + "' is not a value");
  }
  try {
    sys.require(v);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return DValue<Rational>::known(v);
}

// ---------------------------------------------------------------------------
// Capacity files: a header "capacity <names...>" followed by one line per
// subset, e.g. "{A,C} -> 2". Every subset must appear exactly once.
// ---------------------------------------------------------------------------

inline SubsetMask parse_subset(const Universe& u, std::string_view token) {
  token = text::trim(token);
  if (token.size() < 2 || token.front() != '{' || token.back() != '}')
    throw ParseError("subset '" + std::string(token) +
                     "' must be brace-delimited");
  token = token.substr(1, token.size() - 2);
  SubsetMask mask = 0;
  if (text::trim(token).empty()) return mask;
  for (auto part : text::split(token, ',')) {
    const auto name = text::trim(part);
    const auto idx = u.index_of(name);
    if (!idx)
      throw ParseError("unknown criterion '" + std::string(name) + "'");
    const SubsetMask bit = SubsetMask{1} << *idx;
    if (mask & bit)
      throw ParseError("criterion '" + std::string(name) + "' listed twice");
    mask |= bit;
  }
  return mask;
}

template <class Sys, class V = typename Sys::value_type>
Capacity<V> parse_capacity(const Sys& sys, std::string_view content) {
  const auto lines = text::split_lines(content);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size()) throw ParseError("capacity file is empty");

  auto header = text::words(lines[i]);
  if (header.empty() || text::ascii_lower(header.front()) != "capacity")
    throw ParseError("line " + std::to_string(i + 1) +
                     ": expected 'capacity <names...>'");
  header.erase(header.begin());
  std::vector<std::string> names;
  for (auto w : header) names.emplace_back(w);
  Universe u(std::move(names));

  std::vector<DValue<V>> table(u.subset_count(), DValue<V>::star());
  std::vector<bool> seen(u.subset_count(), false);
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string_view line = lines[i];
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("line " + std::to_string(i + 1) +
                       ": expected '<subset> -> <value>'");
    try {
      const SubsetMask mask = parse_subset(u, line.substr(0, arrow));
      if (seen[mask])
        throw ParseError("subset " + u.subset_name(mask) + " assigned twice");
      seen[mask] = true;
      table[mask] = parse_value(sys, line.substr(arrow + 2));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  for (SubsetMask a = 0; a <= u.full_mask(); ++a)
    if (!seen[a])
      throw ParseError("subset " + u.subset_name(a) +
                       " is missing (no defaulting)");
  return Capacity<V>(std::move(u), std::move(table));
}

template <class Sys, class V = typename Sys::value_type>
std::string render_capacity(const Sys& sys, const Capacity<V>& mu) {
  const auto& u = mu.universe();
  std::string out = "capacity";
  for (int i = 0; i < u.size(); ++i) {
    out += ' ';
    out += u.name(i);
  }
  out += '\n';
  for (SubsetMask a : subsets_by_cardinality(u.size())) {
    out += u.subset_name(a);
    out += " -> ";
    out += render_value(sys, mu.at(a));
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Interval files: a "lower" block followed by an "upper" block, each holding
// a capacity in the format above.
// ---------------------------------------------------------------------------

template <class Sys, class V = typename Sys::value_type>
std::string render_interval(const Sys& sys,
                            const CapacityInterval<V>& interval) {
  return "lower\n" + render_capacity(sys, interval.lower) + "upper\n" +
         render_capacity(sys, interval.upper);
}

template <class Sys, class V = typename Sys::value_type>
CapacityInterval<V> parse_interval(const Sys& sys, std::string_view content) {
  const auto lines = text::split_lines(content);
  std::vector<std::string> lower_block, upper_block;
  int section = 0;  // 0 = preamble, 1 = lower, 2 = upper
  for (const auto& line : lines) {
    if (text::ascii_lower(line) == "lower") {
      if (section != 0) throw ParseError("duplicate 'lower' block");
      section = 1;
      continue;
    }
    if (text::ascii_lower(line) == "upper") {
      if (section != 1) throw ParseError("'upper' block must follow 'lower'");
      section = 2;
      continue;
    }
    if (section == 1) lower_block.push_back(line);
    else if (section == 2) upper_block.push_back(line);
    else if (!line.empty())
      throw ParseError("interval files start with a 'lower' block");
  }
  if (section != 2) throw ParseError("interval file needs both blocks");

  auto join = [](const std::vector<std::string>& block) {
    std::string out;
    for (const auto& l : block) {
      out += l;
      out += '\n';
    }
    return out;
  };
  auto lower = parse_capacity<Sys, V>(sys, join(lower_block));
  auto upper = parse_capacity<Sys, V>(sys, join(upper_block));
  if (lower.universe() != upper.universe())
    throw ParseError("interval blocks disagree on the universe");
  return CapacityInterval<V>{std::move(lower), std::move(upper)};
}

// ---------------------------------------------------------------------------
// Datasets: an optional scale line, a CSV header of criterion names plus a
// final alpha column, then one row per observation. Missing cells are empty
// or "*".
// ---------------------------------------------------------------------------

struct ParsedDataset {
  ChainSystem system;
  Universe universe;
  std::vector<Datum<Level>> data;
};

inline ParsedDataset parse_dataset(
    std::string_view content,
    const std::optional<ChainSystem>& fallback = std::nullopt) {
  const auto lines = text::split_lines(content);
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size()) throw ParseError("dataset file is empty");

  std::optional<ChainSystem> sys;
  const auto first = text::words(lines[i]);
  if (!first.empty() && text::ascii_lower(first.front()) == "scale") {
    sys = make_chain_system(parse_scale_spec(lines[i]));
    ++i;
    while (i < lines.size() && lines[i].empty()) ++i;
  }
  if (!sys) sys = fallback;
  if (!sys)
    throw ParseError(
        "dataset carries no scale line and no scale was supplied");

  if (i == lines.size()) throw ParseError("dataset has no header row");
  auto header = text::split(lines[i], ',');
  if (header.size() < 2 ||
      text::ascii_lower(text::trim(header.back())) != "alpha")
    throw ParseError("line " + std::to_string(i + 1) +
                     ": header must list criteria and end with 'alpha'");
  std::vector<std::string> names;
  for (std::size_t c = 0; c + 1 < header.size(); ++c)
    names.emplace_back(text::trim(header[c]));
  Universe u(std::move(names));

  std::vector<Datum<Level>> data;
  for (++i; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto cells = text::split(lines[i], ',');
    if (cells.size() != static_cast<std::size_t>(u.size()) + 1)
      throw ParseError("line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(u.size() + 1) + " cells");
    Datum<Level> d;
    try {
      for (int c = 0; c < u.size(); ++c) {
        const auto cell = text::trim(cells[static_cast<std::size_t>(c)]);
        d.f.push_back(cell.empty() ? DValue<Level>::star()
                                   : parse_value(*sys, cell));
      }
      const auto alpha_cell = text::trim(cells.back());
      d.alpha = alpha_cell.empty() ? DValue<Level>::star()
                                   : parse_value(*sys, alpha_cell);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(i + 1) + ": " + e.what());
    }
    data.push_back(std::move(d));
  }
  return ParsedDataset{*sys, std::move(u), std::move(data)};
}

inline std::string render_dataset(const ChainSystem& sys, const Universe& u,
                                  const std::vector<Datum<Level>>& data) {
  std::string out = render_scale_spec(sys);
  out += '\n';
  for (int i = 0; i < u.size(); ++i) {
    out += u.name(i);
    out += ',';
  }
  out += "alpha\n";
  for (const auto& d : data) {
    for (const auto& v : d.f) {
      out += render_value(sys, v);
      out += ',';
    }
    out += render_value(sys, d.alpha);
    out += '\n';
  }
  return out;
}

/// Comma-separated values, e.g. "2,*,3,1".
template <class Sys, class V = typename Sys::value_type>
InputVector<V> parse_input_vector(const Sys& sys, std::string_view csv) {
  InputVector<V> out;
  for (auto cell : text::split(csv, ',')) {
    const auto trimmed = text::trim(cell);
    out.push_back(trimmed.empty() ? DValue<V>::star()
                                  : parse_value(sys, trimmed));
  }
  return out;
}

}  // namespace dfly
