#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlx/exact_cover.hpp"

namespace dlx {

/// Parse failure with the 1-based line/column of the first offending
/// character or token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

// ---------------------------------------------------------------------------
// Exact-cover text format
//
//   # comment lines start with '#'
//   A B C | S T        <- primary columns, then optional '|' and secondary
//   A B                <- one row per non-empty line, row ids in file order
//   C
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  std::string text;
  std::size_t col = 0;  // 1-based start position in the line
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
    } else if (line[i] == '|') {
      out.push_back({"|", i + 1});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r' && line[i] != '|') {
        ++i;
      }
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
  }
  return out;
}

inline bool blank_or_comment(std::string_view line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (ch != ' ' && ch != '\t' && ch != '\r') return false;
  }
  return true;  // blank
}

}  // namespace detail

/// Parses the exact-cover text format above. Throws ParseError with the
/// location of the first problem.
inline ExactCoverInstance parse_matrix(std::string_view text) {
  ExactCoverInstance instance;
  std::vector<std::string> declared;  // primary then secondary, for lookups

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (detail::blank_or_comment(line)) continue;
    const auto tokens = detail::tokenize(line);

    if (!have_header) {
      bool in_secondary = false;
      for (const auto& tok : tokens) {
        if (tok.text == "|") {
          if (in_secondary) {
            throw ParseError(line_no, tok.col, "malformed header: repeated '|'");
          }
          in_secondary = true;
          continue;
        }
        for (const auto& existing : declared) {
          if (existing == tok.text) {
            throw ParseError(line_no, tok.col, "duplicate column \"" + tok.text + "\"");
          }
        }
        declared.push_back(tok.text);
        (in_secondary ? instance.secondary : instance.primary).push_back(tok.text);
      }
      have_header = true;
      continue;
    }

    std::vector<std::string> row;
    for (const auto& tok : tokens) {
      if (tok.text == "|") {
        throw ParseError(line_no, tok.col, "unexpected '|' in row");
      }
      bool known = false;
      for (const auto& existing : declared) {
        if (existing == tok.text) {
          known = true;
          break;
        }
      }
      if (!known) {
        throw ParseError(line_no, tok.col, "unknown column \"" + tok.text + "\"");
      }
      for (const auto& prior : row) {
        if (prior == tok.text) {
          throw ParseError(line_no, tok.col,
                           "duplicate column \"" + tok.text + "\" in row");
        }
      }
      row.push_back(tok.text);
    }
    if (row.empty()) {
      throw ParseError(line_no, 1, "empty row");
    }
    instance.rows.push_back(std::move(row));
  }

  if (!have_header) {
    throw ParseError(line_no, 1, "missing header line");
  }
  return instance;
}

// ---------------------------------------------------------------------------
// Sudoku
// ---------------------------------------------------------------------------

/// 9x9 grid, row-major; 0 is a blank cell.
struct SudokuGrid {
  std::array<int, 81> cells{};

  int at(std::size_t r, std::size_t c) const { return cells[r * 9 + c]; }
  void set(std::size_t r, std::size_t c, int d) { cells[r * 9 + c] = d; }

  friend bool operator==(const SudokuGrid&, const SudokuGrid&) = default;
};

/// 81 cells from {1-9, '.', '0'}, whitespace ignored, row-major.
inline SudokuGrid parse_sudoku(std::string_view text) {
  SudokuGrid grid;
  std::size_t filled = 0;
  std::size_t line = 1;
  std::size_t col = 0;
  for (char ch : text) {
    if (ch == '\n') {
      ++line;
      col = 0;
      continue;
    }
    ++col;
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    if (ch != '.' && ch != '0' && (ch < '1' || ch > '9')) {
      throw ParseError(line, col, std::string("invalid character '") + ch + "'");
    }
    if (filled == 81) {
      throw ParseError(line, col, "more than 81 cells");
    }
    grid.cells[filled++] = (ch == '.' || ch == '0') ? 0 : ch - '0';
  }
  if (filled != 81) {
    throw ParseError(line, col + 1,
                     "expected 81 cells, found " + std::to_string(filled));
  }
  return grid;
}

/// 81 digits, row-major. Meant for complete grids; blanks come out as '0',
/// which the parser accepts back.
inline std::string format_sudoku(const SudokuGrid& grid) {
  std::string out;
  out.reserve(81);
  for (int d : grid.cells) out.push_back(static_cast<char>('0' + d));
  return out;
}

/// Throws std::invalid_argument naming the first unit (row, column or box)
/// that holds a repeated given.
inline void validate_sudoku(const SudokuGrid& grid) {
  const auto check = [](const std::array<int, 9>& unit, const std::string& where) {
    std::array<int, 10> seen{};
    for (int d : unit) {
      if (d == 0) continue;
      if (seen[d]++) {
        throw std::invalid_argument("duplicate given " + std::to_string(d) +
                                    " in " + where);
      }
    }
  };
  for (std::size_t r = 0; r < 9; ++r) {
    std::array<int, 9> unit{};
    for (std::size_t c = 0; c < 9; ++c) unit[c] = grid.at(r, c);
    check(unit, "row " + std::to_string(r));
  }
  for (std::size_t c = 0; c < 9; ++c) {
    std::array<int, 9> unit{};
    for (std::size_t r = 0; r < 9; ++r) unit[r] = grid.at(r, c);
    check(unit, "column " + std::to_string(c));
  }
  for (std::size_t b = 0; b < 9; ++b) {
    std::array<int, 9> unit{};
    for (std::size_t k = 0; k < 9; ++k) {
      unit[k] = grid.at((b / 3) * 3 + k / 3, (b % 3) * 3 + k % 3);
    }
    check(unit, "box " + std::to_string(b));
  }
}

/// One candidate digit placement; the decoding table entry for a row.
struct SudokuPlacement {
  std::size_t row, col;
  int digit;

  friend bool operator==(const SudokuPlacement&, const SudokuPlacement&) = default;
};

struct SudokuEncoding {
  ExactCoverInstance instance;
  std::vector<SudokuPlacement> placements;  // indexed by row id
};

/// Encodes a grid as exact cover over 324 primary columns: one per cell
/// (p{r}{c}), per row-digit (r{r}{d}), per column-digit (c{c}{d}) and per
/// box-digit (b{b}{d}), all 0-based except digits. One row per placement
/// that does not contradict a given; a given cell contributes only its own
/// placement row.
inline SudokuEncoding encode_sudoku(const SudokuGrid& grid) {
  validate_sudoku(grid);
  SudokuEncoding enc;
  auto& inst = enc.instance;
  inst.primary.reserve(324);
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c)
      inst.primary.push_back("p" + std::to_string(r) + std::to_string(c));
  for (std::size_t r = 0; r < 9; ++r)
    for (int d = 1; d <= 9; ++d)
      inst.primary.push_back("r" + std::to_string(r) + std::to_string(d));
  for (std::size_t c = 0; c < 9; ++c)
    for (int d = 1; d <= 9; ++d)
      inst.primary.push_back("c" + std::to_string(c) + std::to_string(d));
  for (std::size_t b = 0; b < 9; ++b)
    for (int d = 1; d <= 9; ++d)
      inst.primary.push_back("b" + std::to_string(b) + std::to_string(d));

  const auto admissible = [&grid](std::size_t r, std::size_t c, int d) {
    const int given = grid.at(r, c);
    if (given != 0) return d == given;
    for (std::size_t k = 0; k < 9; ++k) {
      if (grid.at(r, k) == d || grid.at(k, c) == d) return false;
    }
    const std::size_t br = (r / 3) * 3, bc = (c / 3) * 3;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (grid.at(br + i, bc + j) == d) return false;
    return true;
  };

  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) {
      for (int d = 1; d <= 9; ++d) {
        if (!admissible(r, c, d)) continue;
        const std::size_t b = (r / 3) * 3 + c / 3;
        inst.rows.push_back({"p" + std::to_string(r) + std::to_string(c),
                             "r" + std::to_string(r) + std::to_string(d),
                             "c" + std::to_string(c) + std::to_string(d),
                             "b" + std::to_string(b) + std::to_string(d)});
        enc.placements.push_back({r, c, d});
      }
    }
  }
  return enc;
}

/// Maps a solution of the paired instance back to a (complete) grid.
inline SudokuGrid decode_sudoku(const Solution& solution, const SudokuEncoding& enc) {
  SudokuGrid grid;
  for (std::size_t id : solution.row_ids) {
    const auto& p = enc.placements.at(id);
    grid.set(p.row, p.col, p.digit);
  }
  return grid;
}

// ---------------------------------------------------------------------------
// N queens
// ---------------------------------------------------------------------------

struct QueensEncoding {
  ExactCoverInstance instance;
  std::size_t n = 0;
};

/// Ranks and files are primary columns (exactly one queen each); the 2n-1
/// diagonals in each direction are secondary (at most one queen). One row
/// per square, row id = rank * n + file.
inline QueensEncoding encode_nqueens(std::size_t n) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("board size must be in 1..16, got " + std::to_string(n));
  }
  QueensEncoding enc;
  enc.n = n;
  auto& inst = enc.instance;
  for (std::size_t i = 0; i < n; ++i) inst.primary.push_back("R" + std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) inst.primary.push_back("F" + std::to_string(j));
  for (std::size_t k = 0; k < 2 * n - 1; ++k)
    inst.secondary.push_back("A" + std::to_string(k));
  for (std::size_t k = 0; k < 2 * n - 1; ++k)
    inst.secondary.push_back("B" + std::to_string(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inst.rows.push_back({"R" + std::to_string(i), "F" + std::to_string(j),
                           "A" + std::to_string(i + j),
                           "B" + std::to_string(i + (n - 1) - j)});
    }
  }
  return enc;
}

/// File index of the queen on each rank, rank-ascending.
inline std::vector<std::size_t> decode_queens(const Solution& solution,
                                              const QueensEncoding& enc) {
  std::vector<std::size_t> files(enc.n, 0);
  for (std::size_t id : solution.row_ids) {
    files.at(id / enc.n) = id % enc.n;
  }
  return files;
}

}  // namespace dlx
