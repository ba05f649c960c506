#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dlx/exact_cover.hpp"

namespace dlx {

enum class SolveMode { kFirst, kAll, kCount };

struct SolverConfig {
  SolveMode mode = SolveMode::kAll;
  std::optional<std::size_t> solution_limit;  // stop after this many solutions
  std::optional<std::size_t> node_limit;      // search budget in row trials
  bool audit = false;  // recount column sizes at every column choice
};

struct SearchStats {
  std::size_t steps = 0;  // row trials
  std::size_t max_depth = 0;
  bool budget_exhausted = false;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SolveResult {
  std::vector<Solution> solutions;  // discovery order; empty in kCount mode
  std::size_t solution_count = 0;
  SearchStats stats;
};

/// Four-way-linked sparse matrix for Algorithm X. Headers, root and row
/// cells share one arena; links are indices. cover()/uncover() are the
/// dancing-links remove/restore pair lifted to a whole column plus every
/// row that intersects it: unlinked cells keep all four of their own links,
/// so uncover() can stitch everything back in reverse order.
class DlxMatrix {
 public:
  static constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();

  explicit DlxMatrix(const ExactCoverInstance& instance) {
    validate_instance(instance);
    const std::size_t columns = instance.primary.size() + instance.secondary.size();
    cells_.reserve(1 + columns);
    names_.resize(1 + columns);
    sizes_.assign(1 + columns, 0);
    primary_count_ = instance.primary.size();

    // Root plus one header per column. Only primary headers sit on the
    // root's left/right ring; secondary headers are self-linked rings.
    cells_.push_back(Cell{0, 0, 0, 0, 0, kNoRow});
    std::unordered_map<std::string_view, std::size_t> index;
    std::size_t h = 1;
    for (const auto& name : instance.primary) {
      cells_.push_back(Cell{h - 1, 0, h, h, h, kNoRow});
      cells_[h - 1].right = h;
      cells_[0].left = h;
      names_[h] = name;
      index.emplace(names_[h], h);
      ++h;
    }
    for (const auto& name : instance.secondary) {
      cells_.push_back(Cell{h, h, h, h, h, kNoRow});
      names_[h] = name;
      index.emplace(names_[h], h);
      ++h;
    }

    for (std::size_t r = 0; r < instance.rows.size(); ++r) {
      const std::size_t first = cells_.size();
      for (const auto& name : instance.rows[r]) {
        const std::size_t col = index.at(name);
        const std::size_t cell = cells_.size();
        // vertical: append at the bottom of the column
        cells_.push_back(Cell{cell, cell, cells_[col].up, col, col, r});
        cells_[cells_[col].up].down = cell;
        cells_[col].up = cell;
        ++sizes_[col];
        // horizontal: append at the end of the row ring
        if (cell != first) {
          cells_[cell].left = cells_[first].left;
          cells_[cell].right = first;
          cells_[cells_[first].left].right = cell;
          cells_[first].left = cell;
        }
      }
    }
  }

  std::size_t cell_count() const { return cells_.size(); }
  std::size_t column_count() const { return names_.size() - 1; }
  std::size_t primary_count() const { return primary_count_; }
  const std::string& column_name(std::size_t col) const { return names_.at(col); }
  std::size_t column_size(std::size_t col) const { return sizes_.at(col); }

  /// Header index for a column name; throws if unknown.
  std::size_t header(std::string_view name) const {
    for (std::size_t h = 1; h < names_.size(); ++h) {
      if (names_[h] == name) return h;
    }
    throw std::invalid_argument("unknown column \"" + std::string(name) + "\"");
  }

  /// Uncovered primary columns, left to right on the root ring.
  std::vector<std::string> ring_columns() const {
    std::vector<std::string> out;
    for (std::size_t h = cells_[0].right; h != 0; h = cells_[h].right) {
      out.push_back(names_[h]);
    }
    return out;
  }

  /// Unlink column c from the header ring and hide every row intersecting
  /// it. The hidden cells keep their own links untouched.
  void cover(std::size_t c) {
    cells_[cells_[c].right].left = cells_[c].left;
    cells_[cells_[c].left].right = cells_[c].right;
    for (std::size_t i = cells_[c].down; i != c; i = cells_[i].down) {
      for (std::size_t j = cells_[i].right; j != i; j = cells_[j].right) {
        cells_[cells_[j].down].up = cells_[j].up;
        cells_[cells_[j].up].down = cells_[j].down;
        --sizes_[cells_[j].col];
      }
    }
  }

  /// Exact reverse of the matching cover(); must be called LIFO.
  void uncover(std::size_t c) {
    for (std::size_t i = cells_[c].up; i != c; i = cells_[i].up) {
      for (std::size_t j = cells_[i].left; j != i; j = cells_[j].left) {
        ++sizes_[cells_[j].col];
        cells_[cells_[j].down].up = j;
        cells_[cells_[j].up].down = j;
      }
    }
    cells_[cells_[c].right].left = c;
    cells_[cells_[c].left].right = c;
  }

  /// Uncovered primary column of minimum size; leftmost wins ties. The ring
  /// must be nonempty.
  std::size_t choose_column() const {
    std::size_t best = 0;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t h = cells_[0].right; h != 0; h = cells_[h].right) {
      if (sizes_[h] < best_size) {
        best = h;
        best_size = sizes_[h];
      }
    }
    if (best == 0) throw std::logic_error("choose_column on empty ring");
    return best;
  }

  using Emit = std::function<void(const std::vector<std::size_t>&)>;

  /// Algorithm X. Emits each exact cover as ascending row ids, in discovery
  /// order, until the configured limits are hit. The matrix is restored to
  /// its entry state before returning, whether or not the search ran to
  /// completion.
  SearchStats search(const SolverConfig& cfg, const Emit& emit) {
    SearchStats stats;
    std::vector<std::size_t> partial;
    std::size_t emitted = 0;
    std::size_t limit = std::numeric_limits<std::size_t>::max();
    if (cfg.solution_limit) limit = *cfg.solution_limit;
    if (cfg.mode == SolveMode::kFirst) limit = std::min<std::size_t>(limit, 1);
    bool stop = false;

    auto descend = [&](auto&& self) -> void {
      if (cells_[0].right == 0) {
        std::vector<std::size_t> rows = partial;
        std::sort(rows.begin(), rows.end());
        emit(rows);
        if (++emitted >= limit) stop = true;
        return;
      }
      if (cfg.audit) audit_sizes();
      const std::size_t c = choose_column();
      cover(c);
      for (std::size_t r = cells_[c].down; r != c; r = cells_[r].down) {
        if (cfg.node_limit && stats.steps >= *cfg.node_limit) {
          stats.budget_exhausted = true;
          stop = true;
          break;
        }
        ++stats.steps;
        partial.push_back(cells_[r].row);
        stats.max_depth = std::max(stats.max_depth, partial.size());
        for (std::size_t j = cells_[r].right; j != r; j = cells_[j].right) {
          cover(cells_[j].col);
        }
        self(self);
        for (std::size_t j = cells_[r].left; j != r; j = cells_[j].left) {
          uncover(cells_[j].col);
        }
        partial.pop_back();
        if (stop) break;
      }
      uncover(c);
    };
    descend(descend);
    return stats;
  }

  friend bool operator==(const DlxMatrix&, const DlxMatrix&) = default;

 private:
  struct Cell {
    std::size_t left, right, up, down;
    std::size_t col;  // owning header index; headers point at themselves
    std::size_t row;  // row id; kNoRow for the root and headers

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  void audit_sizes() const {
    for (std::size_t h = 1; h < names_.size(); ++h) {
      std::size_t reachable = 0;
      for (std::size_t i = cells_[h].down; i != h; i = cells_[i].down) ++reachable;
      if (reachable != sizes_[h]) {
        throw std::logic_error("size audit failed for column \"" + names_[h] +
                               "\": counter " + std::to_string(sizes_[h]) +
                               ", reachable " + std::to_string(reachable));
      }
    }
  }

  std::vector<Cell> cells_;
  std::vector<std::size_t> sizes_;
  std::vector<std::string> names_;
  std::size_t primary_count_ = 0;
};

/// Build + search in one call. Solutions arrive in discovery order with
/// ascending row ids; in kCount mode only the count is kept.
inline SolveResult solve(const ExactCoverInstance& instance, const SolverConfig& cfg = {}) {
  DlxMatrix matrix(instance);
  SolveResult result;
  result.stats = matrix.search(cfg, [&](const std::vector<std::size_t>& rows) {
    ++result.solution_count;
    if (cfg.mode != SolveMode::kCount) result.solutions.push_back(Solution{rows});
  });
  return result;
}

}  // namespace dlx
