// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line front end. Exit codes: 0 ok, 1 solver mismatch, 2 usage or
// input error, 3 internal contract violation.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyckpath/generators.hpp"
#include "dyckpath/graph.hpp"
#include "dyckpath/oracle.hpp"
#include "dyckpath/report.hpp"
#include "dyckpath/solvers.hpp"

namespace dyckpath::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

using LayerSolver = std::function<TriMatrix(const Ldg&, Mode)>;

struct SolverSet {
  LayerSolver matrix;
  LayerSolver cubic;
  LayerSolver oracle;
};

inline SolverSet default_solvers() {
  return {
      [](const Ldg& g, Mode m) { return solve(g, m).layers(); },
      [](const Ldg& g, Mode m) { return cubic_exact_paths(g, m); },
      [](const Ldg& g, Mode m) { return oracle::oracle_reach(g, m); },
  };
}

struct Mismatch {
  Mode mode;
  int cost;
  std::size_t i;
  std::size_t j;
  bool matrix;
  bool cubic;
  bool oracle;
};

/// First cell (both modes, classes -1/0/+1, row-major) where the three solvers disagree.
inline std::optional<Mismatch> compare_solvers(const Ldg& g, const SolverSet& solvers) {
  for (Mode mode : {Mode::Dyck, Mode::SemiDyck}) {
    const TriMatrix a = solvers.matrix(g, mode);
    const TriMatrix b = solvers.cubic(g, mode);
    const TriMatrix c = solvers.oracle(g, mode);
    const std::size_t n = g.vertex_count();
    for (int cost : {-1, 0, +1})
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const bool x = a.layer(cost).at(i, j);
          const bool y = b.layer(cost).at(i, j);
          const bool z = c.layer(cost).at(i, j);
          if (x != y || y != z) return Mismatch{mode, cost, i, j, x, y, z};
        }
  }
  return std::nullopt;
}

namespace detail {

inline Mode parse_mode(const std::string& s) { return s == "dyck" ? Mode::Dyck : Mode::SemiDyck; }

inline Ldg read_graph_file(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return parse_graph(stdin_stream);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

// Writes through `out` unless --out names a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

inline std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(csv);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(tok, &used);
    if (used != tok.size() || v == 0) throw std::invalid_argument("bad size '" + tok + "'");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  if (sizes.empty()) throw std::invalid_argument("--sizes is empty");
  return sizes;
}

// Graph used by `bench` for size n: a worst-case Dyck path when n = 2^(k+2) - 1,
// otherwise a random graph with 2n edges.
inline Ldg bench_graph(std::size_t n, std::uint64_t seed) {
  for (int k = 1; k < 30; ++k)
    if ((std::size_t{1} << (k + 2)) - 1 == n) return gen::gen_worst_case_dyck(k);
  return gen::gen_random(n, 2 * n, seed);
}

template <class F>
double time_min_ms(int reps, F&& f) {
  double best = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin, const SolverSet& solvers = default_solvers()) {
  CLI::App app{"Exact -1/0/+1 reachability for Dyck and semi-Dyck labeled digraphs", "dyckpath"};
  app.require_subcommand(1);

  std::string mode_name = "dyck";
  std::string solver_name = "matrix";
  std::string format = "pairs";
  std::string out_path;
  std::string graph_path;
  bool want_report = false;

  auto* solve_cmd = app.add_subcommand("solve", "Compute the three reachability layers of a graph");
  solve_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"dyck", "semidyck"}));
  solve_cmd->add_option("--solver", solver_name)->check(CLI::IsMember({"matrix", "cubic", "oracle"}));
  solve_cmd->add_option("--format", format)->check(CLI::IsMember({"pairs", "json"}));
  solve_cmd->add_option("--out", out_path, "Output file (default stdout)");
  solve_cmd->add_flag("--report", want_report, "Write a JSON run report to stderr");
  solve_cmd->add_option("graph", graph_path, "Graph file, '-' for stdin")->required();

  auto* compare_cmd =
      app.add_subcommand("compare", "Check matrix, cubic and oracle solvers agree in both modes");
  compare_cmd->add_option("graph", graph_path, "Graph file, '-' for stdin")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->require_subcommand(1);
  int k = 1;
  std::size_t gen_n = 1;
  std::size_t gen_m = 0;
  std::uint64_t seed = 1;
  std::string peaks;
  std::string gen_mode = "dyck";
  auto* gen_wd = gen_cmd->add_subcommand("worst-dyck", "Reduced worst-case Dyck path with 2^k peaks");
  gen_wd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  gen_wd->add_option("--out", out_path);
  auto* gen_ws =
      gen_cmd->add_subcommand("worst-semidyck", "Reduced worst-case semi-Dyck path with 4^k blocks");
  gen_ws->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  gen_ws->add_option("--out", out_path);
  auto* gen_flat = gen_cmd->add_subcommand("flat", "Flat path; heights comma separated, negative = valley");
  gen_flat->add_option("--peaks", peaks)->required();
  gen_flat->add_option("--mode", gen_mode)->check(CLI::IsMember({"dyck", "semidyck"}));
  gen_flat->add_option("--out", out_path);
  auto* gen_rand = gen_cmd->add_subcommand("random", "Uniform random graph");
  gen_rand->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
  gen_rand->add_option("--m", gen_m)->required();
  gen_rand->add_option("--seed", seed);
  gen_rand->add_option("--out", out_path);

  auto* grid_cmd = app.add_subcommand("grid", "Export the grid path of a word");
  std::string word;
  std::string grid_format = "csv";
  grid_cmd->add_option("--word", word, "Word over a (open) and A (close)")->required();
  grid_cmd->add_option("--format", grid_format)->check(CLI::IsMember({"csv", "dot"}));
  grid_cmd->add_option("--out", out_path);

  auto* bench_cmd = app.add_subcommand("bench", "Time cubic vs matrix solvers across sizes (CSV)");
  std::string sizes = "15,31,63,127,255";
  int reps = 3;
  bench_cmd->add_option("--sizes", sizes);
  bench_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"dyck", "semidyck"}));
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--reps", reps)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const Ldg g = detail::read_graph_file(graph_path, in);
      const Mode mode = detail::parse_mode(mode_name);
      const auto t0 = std::chrono::steady_clock::now();
      TriMatrix layers;
      std::size_t outer = 0;
      std::size_t inner = 0;
      if (solver_name == "matrix") {
        const ReachResult r = solve(g, mode);
        layers = r.layers();
        outer = r.outer_iterations;
        inner = r.inner_iterations;
      } else if (solver_name == "cubic") {
        layers = solvers.cubic(g, mode);
      } else {
        layers = solvers.oracle(g, mode);
      }
      const auto t1 = std::chrono::steady_clock::now();
      detail::Sink sink(out_path, out);
      if (format == "json")
        sink.stream() << report::to_json(layers, mode).dump() << '\n';
      else
        report::write_pairs(layers, sink.stream());
      if (want_report) {
        report::RunReport rr{graph_path, mode, solver_name, g.vertex_count(), g.edge_count(), outer,
                             inner, std::chrono::duration<double, std::milli>(t1 - t0).count(),
                             report::digest_hex(layers, mode)};
        err << rr.to_json().dump() << '\n';
      }
      return kOk;
    }

    if (compare_cmd->parsed()) {
      const Ldg g = detail::read_graph_file(graph_path, in);
      if (auto bad = compare_solvers(g, solvers)) {
        err << "mismatch: mode=" << to_string(bad->mode) << " class=" << bad->cost << " cell=("
            << bad->i << ',' << bad->j << ") matrix=" << bad->matrix << " cubic=" << bad->cubic
            << " oracle=" << bad->oracle << '\n';
        return kMismatch;
      }
      out << "agree: n=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
      return kOk;
    }

    if (gen_cmd->parsed()) {
      Ldg g;
      // generator preconditions are flag errors here
      try {
        if (gen_wd->parsed()) {
          g = gen::gen_worst_case_dyck(k);
        } else if (gen_ws->parsed()) {
          g = gen::gen_worst_case_semidyck(k);
        } else if (gen_flat->parsed()) {
          std::vector<gen::FlatBlock> blocks;
          std::stringstream ss(peaks);
          for (std::string tok; std::getline(ss, tok, ',');) {
            std::size_t used = 0;
            const int h = std::stoi(tok, &used);
            if (used != tok.size() || h == 0) throw std::invalid_argument("bad peak height '" + tok + "'");
            blocks.push_back({h < 0 ? -h : h, h < 0});
          }
          g = gen::gen_flat(blocks, detail::parse_mode(gen_mode));
        } else {
          g = gen::gen_random(gen_n, gen_m, seed);
        }
      } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      detail::Sink sink(out_path, out);
      serialize_graph(g, sink.stream());
      return kOk;
    }

    if (grid_cmd->parsed()) {
      const gen::GridPath path = gen::to_grid(gen::parse_word(word));
      detail::Sink sink(out_path, out);
      if (grid_format == "dot")
        gen::write_dot(path, sink.stream());
      else
        gen::write_csv(path, sink.stream());
      return kOk;
    }

    if (bench_cmd->parsed()) {
      const Mode mode = detail::parse_mode(mode_name);
      detail::Sink sink(out_path, out);
      std::ostream& os = sink.stream();
      os << "n,edges,mode,outer_iterations,inner_iterations,products,agree,digest,cubic_ms,matrix_ms\n";
      for (std::size_t n : detail::parse_sizes(sizes)) {
        const Ldg g = detail::bench_graph(n, seed);
        TriMatrix cubic;
        ReachResult matrix;
        const double cubic_ms = detail::time_min_ms(reps, [&] { cubic = cubic_exact_paths(g, mode); });
        const double matrix_ms = detail::time_min_ms(reps, [&] { matrix = solve(g, mode); });
        const TriMatrix layers = matrix.layers();
        os << n << ',' << g.edge_count() << ',' << to_string(mode) << ',' << matrix.outer_iterations
           << ',' << matrix.inner_iterations << ',' << matrix.stats.products << ','
           << (layers == cubic ? 1 : 0) << ',' << report::digest_hex(layers, mode) << ','
           << cubic_ms << ',' << matrix_ms << '\n';
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::logic_error& e) {
    // std::invalid_argument / out_of_range from flag values
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dyckpath::cli
