#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dlx/dlx_matrix.hpp"
#include "dlx/encoders.hpp"
#include "support/oracle.hpp"

using dlx::ExactCoverInstance;
using dlx::ParseError;
using dlx::SudokuGrid;

namespace {

const char* kFourRowText =
    "# exact cover example\n"
    "A B C\n"
    "A\n"
    "B C\n"
    "A B\n"
    "C\n";

SudokuGrid solved_grid() {
  // any valid complete grid; checked against the backtracking oracle below
  return dlx::parse_sudoku(
      "123456789"
      "456789123"
      "789123456"
      "214365897"
      "365897214"
      "897214365"
      "531642978"
      "642978531"
      "978531642");
}

}  // namespace

TEST_CASE("matrix text parses into the documented instance") {
  const auto inst = dlx::parse_matrix(kFourRowText);
  CHECK(inst.primary == std::vector<std::string>{"A", "B", "C"});
  CHECK(inst.secondary.empty());
  REQUIRE(inst.rows.size() == 4);
  CHECK(inst.rows[0] == std::vector<std::string>{"A"});
  CHECK(inst.rows[1] == std::vector<std::string>{"B", "C"});
  CHECK(inst.rows[2] == std::vector<std::string>{"A", "B"});
  CHECK(inst.rows[3] == std::vector<std::string>{"C"});

  SECTION("and solves to the documented pair") {
    const auto result = dlx::solve(inst);
    REQUIRE(result.solutions.size() == 2);
    CHECK(result.solutions[0].row_ids == std::vector<std::size_t>{0, 1});
    CHECK(result.solutions[1].row_ids == std::vector<std::size_t>{2, 3});
  }
}

TEST_CASE("matrix text supports secondary columns after a bar") {
  const auto inst = dlx::parse_matrix("A B | S T\nA S\nB T\n");
  CHECK(inst.primary == std::vector<std::string>{"A", "B"});
  CHECK(inst.secondary == std::vector<std::string>{"S", "T"});
  CHECK(inst.rows.size() == 2);
}

TEST_CASE("matrix parse errors carry the first offending location") {
  SECTION("unknown column in a row") {
    try {
      dlx::parse_matrix("A B C\nA D\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.col() == 3);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("unknown column \"D\""));
    }
  }
  SECTION("duplicate column in the header") {
    try {
      dlx::parse_matrix("A B A\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.col() == 5);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("duplicate column \"A\""));
    }
  }
  SECTION("duplicate column in a row") {
    CHECK_THROWS_AS(dlx::parse_matrix("A B\nA A\n"), ParseError);
  }
  SECTION("repeated bar in the header") {
    CHECK_THROWS_WITH(dlx::parse_matrix("A | B | C\n"),
                      Catch::Matchers::ContainsSubstring("repeated '|'"));
  }
  SECTION("bar in a row") {
    CHECK_THROWS_WITH(dlx::parse_matrix("A B\nA | B\n"),
                      Catch::Matchers::ContainsSubstring("unexpected '|'"));
  }
  SECTION("missing header") {
    CHECK_THROWS_AS(dlx::parse_matrix("# nothing here\n\n"), ParseError);
  }
  SECTION("comments and blank lines are ignored") {
    CHECK_NOTHROW(dlx::parse_matrix("\n# c\nA\n\n# c\nA\n"));
  }
}

TEST_CASE("sudoku text parsing") {
  SECTION("81 dots make the empty grid") {
    const auto grid = dlx::parse_sudoku(std::string(81, '.'));
    CHECK(grid == SudokuGrid{});
  }
  SECTION("whitespace and zeros are accepted") {
    std::string text;
    for (int r = 0; r < 9; ++r) text += "0.0 0.0 0.0\n";
    CHECK(dlx::parse_sudoku(text) == SudokuGrid{});
  }
  SECTION("round-trips through format_sudoku") {
    const auto grid = solved_grid();
    CHECK(dlx::parse_sudoku(dlx::format_sudoku(grid)) == grid);
  }
  SECTION("bad character is located") {
    try {
      dlx::parse_sudoku(std::string(40, '.') + "\nx" + std::string(40, '.'));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.col() == 1);
    }
  }
  SECTION("too few cells") {
    CHECK_THROWS_WITH(dlx::parse_sudoku(std::string(80, '.')),
                      Catch::Matchers::ContainsSubstring("expected 81 cells"));
  }
  SECTION("too many cells") {
    CHECK_THROWS_WITH(dlx::parse_sudoku(std::string(82, '.')),
                      Catch::Matchers::ContainsSubstring("more than 81"));
  }
}

TEST_CASE("sudoku encoding shape") {
  SECTION("empty grid: 324 columns, 729 rows") {
    const auto enc = dlx::encode_sudoku(SudokuGrid{});
    CHECK(enc.instance.primary.size() == 324);
    CHECK(enc.instance.secondary.empty());
    CHECK(enc.instance.rows.size() == 729);
    CHECK(enc.placements.size() == 729);
  }
  SECTION("solved grid: one row per cell, unique solution is all of them") {
    const auto enc = dlx::encode_sudoku(solved_grid());
    REQUIRE(enc.instance.rows.size() == 81);
    const auto result = dlx::solve(enc.instance);
    REQUIRE(result.solution_count == 1);
    std::vector<std::size_t> all(81);
    std::iota(all.begin(), all.end(), 0);
    CHECK(result.solutions[0].row_ids == all);
    CHECK(dlx::decode_sudoku(result.solutions[0], enc) == solved_grid());
  }
  SECTION("conflicting givens are rejected with the unit named") {
    auto grid = SudokuGrid{};
    grid.set(3, 1, 5);
    grid.set(3, 7, 5);
    CHECK_THROWS_WITH(dlx::encode_sudoku(grid),
                      Catch::Matchers::ContainsSubstring("row 3"));
    grid = SudokuGrid{};
    grid.set(1, 2, 4);
    grid.set(7, 2, 4);
    CHECK_THROWS_WITH(dlx::encode_sudoku(grid),
                      Catch::Matchers::ContainsSubstring("column 2"));
    grid = SudokuGrid{};
    grid.set(0, 0, 9);
    grid.set(1, 1, 9);
    CHECK_THROWS_WITH(dlx::encode_sudoku(grid),
                      Catch::Matchers::ContainsSubstring("box 0"));
  }
}

TEST_CASE("sudoku solving round-trips against the backtracking oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    SudokuGrid oracle_solution;
    const auto puzzle = oracle::make_unique_puzzle(rng, oracle_solution, 45);
    const auto enc = dlx::encode_sudoku(puzzle);
    const auto result = dlx::solve(enc.instance);
    REQUIRE(result.solution_count == 1);
    const auto grid = dlx::decode_sudoku(result.solutions[0], enc);
    CHECK(grid == oracle_solution);
    // every unit complete
    CHECK_NOTHROW(dlx::validate_sudoku(grid));
    for (int d : grid.cells) CHECK(d != 0);
  }
}

TEST_CASE("valid but contradictory grids encode to unsatisfiable instances") {
  // row 0 holds 2..9, and the 1 that cell (0,0) would need already sits in
  // column 0: no admissible placement remains for (0,0)
  SudokuGrid grid;
  for (std::size_t c = 1; c < 9; ++c) grid.set(0, c, static_cast<int>(c) + 1);
  grid.set(5, 0, 1);
  const auto enc = dlx::encode_sudoku(grid);  // unit-valid, so no throw
  const auto result = dlx::solve(enc.instance);
  CHECK(result.solution_count == 0);
  {
    auto copy = grid;
    CHECK(oracle::sudoku_count(copy, 2) == 0);
  }
}

TEST_CASE("queens encoding shape and counts") {
  const auto enc = dlx::encode_nqueens(4);
  CHECK(enc.instance.primary.size() == 8);
  CHECK(enc.instance.secondary.size() == 14);  // 2 * (2n - 1)
  CHECK(enc.instance.rows.size() == 16);

  SECTION("solution counts match the permutation oracle") {
    for (std::size_t n : {1, 2, 3, 4, 5, 6}) {
      const auto expected = oracle::queens_placements(n).size();
      const auto result =
          dlx::solve(dlx::encode_nqueens(n).instance, {dlx::SolveMode::kCount, {}, {}});
      CHECK(result.solution_count == expected);
    }
  }
  SECTION("decoded placements are exactly the oracle's placements") {
    const auto result = dlx::solve(enc.instance);
    std::vector<std::vector<std::size_t>> got;
    for (const auto& s : result.solutions) got.push_back(dlx::decode_queens(s, enc));
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::queens_placements(4));
  }
  SECTION("board size bounds") {
    CHECK_THROWS_AS(dlx::encode_nqueens(0), std::invalid_argument);
    CHECK_THROWS_AS(dlx::encode_nqueens(17), std::invalid_argument);
    CHECK_NOTHROW(dlx::encode_nqueens(1));
  }
}

TEST_CASE("encoders are deterministic") {
  CHECK(dlx::encode_nqueens(6).instance == dlx::encode_nqueens(6).instance);
  const auto grid = solved_grid();
  CHECK(dlx::encode_sudoku(grid).instance == dlx::encode_sudoku(grid).instance);
  CHECK(dlx::parse_matrix(kFourRowText) == dlx::parse_matrix(kFourRowText));
}
