// Command-line front end: exact-cover solving from text files, sudoku and
// n-queens encodings, a scripted list demo, and a small benchmark.
//
// Exit codes: 0 = at least one solution (or demo/bench ran), 1 = zero
// solutions, 2 = input or usage error. Solutions go to stdout, statistics
// and diagnostics to stderr.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dlx/arena_list.hpp"
#include "dlx/dlx_matrix.hpp"
#include "dlx/encoders.hpp"
#include "dlx/list_model.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void print_stats(const dlx::SolveResult& result) {
  std::cerr << "solutions=" << result.solution_count
            << " steps=" << result.stats.steps
            << " max_depth=" << result.stats.max_depth;
  if (result.stats.budget_exhausted) std::cerr << " (node budget exhausted)";
  std::cerr << "\n";
}

int exit_for(std::size_t solution_count) { return solution_count > 0 ? 0 : 1; }

std::string solution_line(const dlx::Solution& solution) {
  std::string line;
  for (std::size_t i = 0; i < solution.row_ids.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(solution.row_ids[i]);
  }
  return line;
}

int run_solve(const std::string& path, dlx::SolverConfig cfg) {
  const auto instance = dlx::parse_matrix(read_input(path));
  const auto result = dlx::solve(instance, cfg);
  if (cfg.mode == dlx::SolveMode::kCount) {
    std::cout << result.solution_count << "\n";
  } else {
    for (const auto& solution : result.solutions) {
      std::cout << solution_line(solution) << "\n";
    }
  }
  print_stats(result);
  return exit_for(result.solution_count);
}

int run_sudoku(const std::string& path, bool all) {
  const auto grid = dlx::parse_sudoku(read_input(path));
  const auto enc = dlx::encode_sudoku(grid);
  dlx::SolverConfig cfg;
  cfg.mode = all ? dlx::SolveMode::kAll : dlx::SolveMode::kFirst;
  const auto result = dlx::solve(enc.instance, cfg);
  for (const auto& solution : result.solutions) {
    std::cout << dlx::format_sudoku(dlx::decode_sudoku(solution, enc)) << "\n";
  }
  print_stats(result);
  return exit_for(result.solution_count);
}

int run_queens(std::size_t n, bool all) {
  const auto enc = dlx::encode_nqueens(n);
  dlx::SolverConfig cfg;
  cfg.mode = all ? dlx::SolveMode::kAll : dlx::SolveMode::kCount;
  const auto result = dlx::solve(enc.instance, cfg);
  if (all) {
    for (const auto& solution : result.solutions) {
      const auto files = dlx::decode_queens(solution, enc);
      std::string line;
      for (std::size_t i = 0; i < files.size(); ++i) {
        if (i) line += ' ';
        line += std::to_string(files[i]);
      }
      std::cout << line << "\n";
    }
  } else {
    std::cout << result.solution_count << "\n";
  }
  print_stats(result);
  return exit_for(result.solution_count);
}

// Scripted walk through the list operations, printing the abstract state
// after each step. The removal leaves slot 0 detached with its links still
// pointing at its old neighbours; the restore stitches it back with two
// writes.
int run_demo() {
  using List = dlx::ArenaList<8>;
  List list;

  const auto show = [](const std::string& op, const List& l) {
    const auto model = dlx::abstract(l);
    std::cout << op << std::string(op.size() < 14 ? 14 - op.size() : 1, ' ')
              << "count=" << l.count << " list=[";
    bool first = true;
    for (const auto& [slot, val] : model->linked) {
      if (!first) std::cout << ' ';
      std::cout << slot << ':' << val;
      first = false;
    }
    std::cout << ']';
    if (!model->detached.empty()) {
      std::cout << " detached=[";
      first = true;
      for (const auto& [slot, info] : model->detached) {
        if (!first) std::cout << ' ';
        std::cout << slot << ':' << info.val << "(prev=" << info.prev
                  << " next=" << info.next << ')';
        first = false;
      }
      std::cout << ']';
    }
    std::cout << "\n";
  };
  const auto show_value = [](const std::string& op, std::int64_t v) {
    std::cout << op << std::string(op.size() < 14 ? 14 - op.size() : 1, ' ')
              << "-> " << v << "\n";
  };

  show("new", list);
  list = dlx::push_front(7, std::move(list));
  show("push_front 7", list);
  list = dlx::push_front(5, std::move(list));
  show("push_front 5", list);
  list = dlx::push_back(9, std::move(list));
  show("push_back 9", list);
  show_value("nth 0", dlx::nth(0, list));
  show_value("nth 1", dlx::nth(1, list));
  show_value("nth 2", dlx::nth(2, list));
  list = dlx::remove_node(0, std::move(list));
  show("remove 0", list);
  show_value("nth 1", dlx::nth(1, list));
  list = dlx::restore_node(0, std::move(list));
  show("restore 0", list);
  list = dlx::pop_front(std::move(list));
  show("pop_front", list);
  list = dlx::pop_back(std::move(list));
  show("pop_back", list);
  return 0;
}

int run_bench(std::size_t max_n) {
  for (std::size_t n = 8; n <= max_n; ++n) {
    const auto enc = dlx::encode_nqueens(n);
    dlx::SolverConfig cfg;
    cfg.mode = dlx::SolveMode::kCount;
    const auto start = std::chrono::steady_clock::now();
    const auto result = dlx::solve(enc.instance, cfg);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cout << "queens n=" << n << " solutions=" << result.solution_count
              << " steps=" << result.stats.steps << "\n";
    std::cerr << "n=" << n << " time_ms=" << elapsed.count() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-cover solving with dancing links"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve an exact-cover instance file");
  std::string solve_file;
  solve->add_option("FILE", solve_file, "instance file, or - for stdin")->required();
  bool solve_all = false, solve_first = false, solve_count = false;
  auto* flag_all = solve->add_flag("--all", solve_all, "emit every solution (default)");
  auto* flag_first = solve->add_flag("--first", solve_first, "stop after the first solution");
  auto* flag_count = solve->add_flag("--count", solve_count, "print only the number of solutions");
  flag_all->excludes(flag_first)->excludes(flag_count);
  flag_first->excludes(flag_count);
  std::size_t limit = 0, nodes = 0;
  auto* opt_limit = solve->add_option("--limit", limit, "stop after N solutions")
                        ->check(CLI::PositiveNumber);
  auto* opt_nodes = solve->add_option("--nodes", nodes, "search budget in row trials")
                        ->check(CLI::PositiveNumber);

  auto* sudoku = app.add_subcommand("sudoku", "solve a sudoku puzzle file");
  std::string sudoku_file;
  sudoku->add_option("FILE", sudoku_file, "puzzle file, or - for stdin")->required();
  bool sudoku_all = false;
  sudoku->add_flag("--all", sudoku_all, "emit every completion, not just the first");

  auto* queens = app.add_subcommand("queens", "n-queens via exact cover");
  std::size_t queens_n = 0;
  queens->add_option("N", queens_n, "board size (1..16)")->required();
  bool queens_all = false, queens_count = false;
  auto* qall = queens->add_flag("--all", queens_all, "emit every placement");
  auto* qcount = queens->add_flag("--count", queens_count, "print only the count (default)");
  qall->excludes(qcount);

  auto* demo = app.add_subcommand("demo", "scripted dancing-links list session");

  auto* bench = app.add_subcommand("bench", "time queens solves");
  std::size_t bench_max = 13;
  bench->add_option("--max", bench_max, "largest board size (8..16)")
      ->check(CLI::Range(std::size_t{8}, std::size_t{16}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) {
      dlx::SolverConfig cfg;
      cfg.mode = solve_first  ? dlx::SolveMode::kFirst
                 : solve_count ? dlx::SolveMode::kCount
                               : dlx::SolveMode::kAll;
      if (opt_limit->count()) cfg.solution_limit = limit;
      if (opt_nodes->count()) cfg.node_limit = nodes;
      return run_solve(solve_file, cfg);
    }
    if (sudoku->parsed()) return run_sudoku(sudoku_file, sudoku_all);
    if (queens->parsed()) return run_queens(queens_n, queens_all);
    if (demo->parsed()) return run_demo();
    if (bench->parsed()) return run_bench(bench_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
