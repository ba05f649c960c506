#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace dlx {

/// Exact-cover instance. Primary columns must be covered exactly once by the
/// selected rows, secondary columns at most once. Rows are identified by
/// their position: row ids are 0..rows.size()-1.
struct ExactCoverInstance {
  std::vector<std::string> primary;
  std::vector<std::string> secondary;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const ExactCoverInstance&, const ExactCoverInstance&) = default;
};

/// One exact cover: the selected row ids, ascending.
struct Solution {
  std::vector<std::size_t> row_ids;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Checks the instance invariants; throws std::invalid_argument naming the
/// offending column or row. Column names must be unique across primary and
/// secondary, rows must be nonempty sets of declared columns.
inline void validate_instance(const ExactCoverInstance& instance) {
  std::unordered_set<std::string> declared;
  for (const auto& name : instance.primary) {
    if (!declared.insert(name).second) {
      throw std::invalid_argument("duplicate column \"" + name + "\"");
    }
  }
  for (const auto& name : instance.secondary) {
    if (!declared.insert(name).second) {
      throw std::invalid_argument("duplicate column \"" + name + "\"");
    }
  }
  for (std::size_t i = 0; i < instance.rows.size(); ++i) {
    const auto& row = instance.rows[i];
    if (row.empty()) {
      throw std::invalid_argument("row " + std::to_string(i) + ": empty row");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : row) {
      if (!declared.contains(name)) {
        throw std::invalid_argument("row " + std::to_string(i) +
                                    ": unknown column \"" + name + "\"");
      }
      if (!seen.insert(name).second) {
        throw std::invalid_argument("row " + std::to_string(i) +
                                    ": duplicate column \"" + name + "\"");
      }
    }
  }
}

}  // namespace dlx
