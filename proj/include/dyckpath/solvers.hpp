// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "dyckpath/agmy.hpp"
#include "dyckpath/graph.hpp"

namespace dyckpath {

/// Work counters shared by the matrix solvers.
struct SolveStats {
  std::size_t products = 0;         // algebraic matrix products executed
  std::size_t inner_iterations = 0;  // passes of the flat solver loop
  std::size_t outer_passes = 0;      // general iterations executed, including a final no-op one
  std::uint64_t max_coefficient = 0;
  std::uint64_t max_digit_bound = 0;  // 3n of the product that reached max_coefficient
};

struct ReachResult {
  Mode mode = Mode::Dyck;
  BoolMatrix neg;
  BoolMatrix zero;
  BoolMatrix pos;
  // General iterations that discovered at least one new 0 edge; the last one
  // of these is where the fixpoint was reached.
  std::size_t outer_iterations = 0;
  std::size_t inner_iterations = 0;
  SolveStats stats;

  TriMatrix layers() const {
    TriMatrix t;
    t.neg = neg;
    t.zero = zero;
    t.pos = pos;
    return t;
  }
};

/// The set E* of discovered exact-0 edges.
struct ZeroEdgeSet {
  BoolMatrix edges;
  std::size_t outer_iterations = 0;
};

// ---------------------------------------------------------------------------
// Cubic baseline

/// Fixpoint of the cubic -1/0/+1 update rules.
///
///   0  <- (+1)(-1), and (-1)(+1) in semi-Dyck mode
///   +1 <- (+1)(0) | (0)(+1)
///   -1 <- (-1)(0) | (0)(-1)
///
/// Passes repeat until one full pass changes nothing.
inline TriMatrix cubic_exact_paths(const Ldg& g, Mode mode) {
  TriMatrix d = to_tri_matrix(g);
  const std::size_t n = g.vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (!d.zero.at(i, j) &&
              ((d.pos.at(i, k) && d.neg.at(k, j)) ||
               (mode == Mode::SemiDyck && d.neg.at(i, k) && d.pos.at(k, j)))) {
            d.zero.set(i, j);
            changed = true;
          }
          if (!d.pos.at(i, j) &&
              ((d.pos.at(i, k) && d.zero.at(k, j)) || (d.zero.at(i, k) && d.pos.at(k, j)))) {
            d.pos.set(i, j);
            changed = true;
          }
          if (!d.neg.at(i, j) &&
              ((d.neg.at(i, k) && d.zero.at(k, j)) || (d.zero.at(i, k) && d.neg.at(k, j)))) {
            d.neg.set(i, j);
            changed = true;
          }
        }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Matrix pipeline

namespace detail {

inline agmy::AgmyMatrix product(const agmy::AgmyMatrix& a, const agmy::AgmyMatrix& b,
                                SolveStats& stats) {
  agmy::AgmyMatrix p = agmy::matrix_mul(a, b);
  agmy::check_digit_bound(p);
  ++stats.products;
  const std::uint64_t c = p.max_coefficient();
  if (c > stats.max_coefficient) {
    stats.max_coefficient = c;
    stats.max_digit_bound = 3 * std::uint64_t{p.size()};
  }
  return p;
}

// M' M in Dyck mode, M M otherwise.
inline agmy::AgmyMatrix square(const agmy::AgmyMatrix& m, Mode mode, SolveStats& stats) {
  if (mode == Mode::Dyck) return product(agmy::markup_minus_one_edges(m), m, stats);
  return product(m, m, stats);
}

inline BoolMatrix zero_layer(const agmy::AgmyMatrix& m) {
  BoolMatrix z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) z.set(i, j, m.coefficient(i, j, 0) != 0);
  return z;
}

inline void add_zero_layer(agmy::AgmyMatrix& m, const BoolMatrix& zero) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (zero.at(i, j) && m.coefficient(i, j, 0) == 0) m.add(i, j, 0, 1);
}

}  // namespace detail

/// Matrix sign-closure over one cost scale.
///
/// Each pass squares the coded matrix (marking -1 cells first in Dyck mode),
/// drops the single-edge +-1 pathways, halves +-2 pathways back to +-1, and
/// extends the result on both sides by the 0 edges found so far (plus the
/// identity). 0 edges accumulate across passes; +-1 edges are at cost scale
/// 2^(pass-1) and are replaced each pass.
inline agmy::AgmyMatrix flat_exact_paths(const TriMatrix& t, Mode mode, SolveStats& stats) {
  const std::size_t n = t.size();
  agmy::AgmyMatrix m = agmy::encode(t);
  BoolMatrix zeros = t.zero;
  const std::size_t last = ceil_log2(n) + 1;
  for (std::size_t pass = 2; pass <= last; ++pass) {
    ++stats.inner_iterations;
    agmy::AgmyMatrix p = detail::square(m, mode, stats);
    p = agmy::remove_pm1_edges(std::move(p));
    m = agmy::normalize_and_divide_by_2(p, mode);
    detail::add_zero_layer(m, zeros);
    const agmy::AgmyMatrix z = agmy::get_zero_edges(m);
    m = agmy::normalize_and_divide_by_2(detail::product(z, m, stats), mode);
    m = agmy::normalize_and_divide_by_2(detail::product(m, z, stats), mode);
    zeros |= detail::zero_layer(m);
  }
  return m;
}

inline agmy::AgmyMatrix flat_exact_paths(const TriMatrix& t, Mode mode) {
  SolveStats stats;
  return flat_exact_paths(t, mode, stats);
}

struct GeneralOptions {
  // Upper bound on general iterations; defaults to ceil(log2 n) + 1.
  std::optional<std::size_t> max_iterations;
  // 0 edges known before solving (e.g. a sub-block replaced by a direct 0 edge).
  std::optional<BoolMatrix> seed_zero;
};

/// Iterates flat invocations, each followed by re-adding the original edges
/// and one squaring that extends them by the accumulated 0 edges.
inline ZeroEdgeSet general_exact_zero_paths(const Ldg& g, Mode mode, SolveStats& stats,
                                            const GeneralOptions& options = {}) {
  const std::size_t n = g.vertex_count();
  const TriMatrix original = to_tri_matrix(g);
  ZeroEdgeSet result;
  result.edges = options.seed_zero.value_or(BoolMatrix(n));
  if (result.edges.size() != n) throw ContractViolation("seed_zero: dimension mismatch");

  // +-1 layers carried into the next flat invocation: original edges plus
  // their one-sided extensions by 0 edges.
  TriMatrix carried = original;
  carried.zero = result.edges;

  const std::size_t limit = options.max_iterations.value_or(ceil_log2(n) + 1);
  for (std::size_t iter = 1; iter <= limit; ++iter) {
    ++stats.outer_passes;
    BoolMatrix found = result.edges;

    const agmy::AgmyMatrix flat = flat_exact_paths(carried, mode, stats);
    found |= detail::zero_layer(flat);

    TriMatrix with_originals = original;
    with_originals.zero = found;
    const agmy::AgmyMatrix sq = detail::square(agmy::encode(with_originals), mode, stats);
    found |= detail::zero_layer(agmy::normalize_and_divide_by_2(sq, mode));

    const TriMatrix extended = agmy::decode(agmy::normalize_and_divide_by_2(agmy::unit_pathways(sq), mode));
    carried = original;
    carried.neg |= extended.neg;
    carried.pos |= extended.pos;
    carried.zero = found;

    if (found == result.edges) break;
    result.edges = std::move(found);
    result.outer_iterations = iter;
  }
  return result;
}

inline ZeroEdgeSet general_exact_zero_paths(const Ldg& g, Mode mode) {
  SolveStats stats;
  return general_exact_zero_paths(g, mode, stats);
}

/// +-1 layers as the coded product (E* + I) E1 (E* + I).
inline TriMatrix pm1_reachability(const BoolMatrix& zero_edges, const Ldg& g, Mode mode,
                                  SolveStats& stats) {
  const std::size_t n = g.vertex_count();
  TriMatrix zt(n);
  zt.zero = zero_edges;
  const agmy::AgmyMatrix z = agmy::get_zero_edges(agmy::encode(zt));
  const agmy::AgmyMatrix e1 = agmy::encode(to_tri_matrix(g));
  agmy::AgmyMatrix m = agmy::normalize_and_divide_by_2(detail::product(z, e1, stats), mode);
  m = detail::product(m, z, stats);

  TriMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const agmy::AgmyValue v = m.cell(i, j);
      out.neg.set(i, j, agmy::detect_cost_class(v, n, agmy::CostClass::Minus));
      out.pos.set(i, j, agmy::detect_cost_class(v, n, agmy::CostClass::Plus));
    }
  out.zero = zero_edges;
  return out;
}

inline TriMatrix pm1_reachability(const ZeroEdgeSet& e, const Ldg& g, Mode mode) {
  SolveStats stats;
  return pm1_reachability(e.edges, g, mode, stats);
}

inline ReachResult solve(const Ldg& g, Mode mode, const GeneralOptions& options = {}) {
  ReachResult r;
  r.mode = mode;
  const ZeroEdgeSet e = general_exact_zero_paths(g, mode, r.stats, options);
  const TriMatrix layers = pm1_reachability(e.edges, g, mode, r.stats);
  r.zero = e.edges;
  r.neg = layers.neg;
  r.pos = layers.pos;
  r.outer_iterations = e.outer_iterations;
  r.inner_iterations = r.stats.inner_iterations;
  return r;
}

}  // namespace dyckpath
