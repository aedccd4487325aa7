#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pairid {

/// Outcome of repeated trials of a security game or reduction.
struct GameReport {
  std::string game;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  /// Named tallies: oracle queries, budget or ordering violations, redraws.
  std::map<std::string, std::uint64_t> counts;
  double seconds = 0;
  /// Bound the win rate was checked against, if any.
  std::string bound_label;
  std::optional<double> bound;
  std::optional<bool> pass;

  double advantage() const { return trials == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(trials); }
  void add_param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
  /// Line-oriented "key value" text record.
  std::string to_record() const;
};

}  // namespace pairid
