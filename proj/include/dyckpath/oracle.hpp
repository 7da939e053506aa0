// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Ground truth by CFL-reachability saturation.
//
// The Dyck grammar  D -> e | D D | a D a^-1  (semi-Dyck adds  a^-1 D a) is
// binarized without the e production:
//
//   D  -> a A | a X | D D          X -> D A
//   D  -> A a | A Y                Y -> D a      (semi-Dyck only)
//
// where `a` / `A` are the Open / Close terminals. Facts are (symbol, i, j)
// triples; e is accounted for as an i == j condition when answering queries.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "dyckpath/graph.hpp"

namespace dyckpath::oracle {

enum Symbol : std::uint8_t { kOpen = 0, kClose, kD, kX, kY, kSymbolCount };

/// A -> B C with each side at most binary.
struct Production {
  Symbol head;
  Symbol first;
  Symbol second;
};

inline std::vector<Production> grammar(Mode mode) {
  std::vector<Production> rules = {
      {kD, kOpen, kClose},
      {kD, kOpen, kX},
      {kD, kD, kD},
      {kX, kD, kClose},
  };
  if (mode == Mode::SemiDyck) {
    rules.push_back({kD, kClose, kOpen});
    rules.push_back({kD, kClose, kY});
    rules.push_back({kY, kD, kOpen});
  }
  return rules;
}

/// cell (i,j) true iff a nonempty walk i ~> j spells a word of the mode's 0-language.
inline BoolMatrix oracle_zero_reach(const Ldg& g, Mode mode) {
  const std::size_t n = g.vertex_count();
  const auto rules = grammar(mode);

  // holds[s][i * n + j]
  std::vector<std::vector<std::uint8_t>> holds(kSymbolCount, std::vector<std::uint8_t>(n * n, 0));
  std::vector<std::vector<std::vector<Vertex>>> out(kSymbolCount, std::vector<std::vector<Vertex>>(n));
  std::vector<std::vector<std::vector<Vertex>>> in(kSymbolCount, std::vector<std::vector<Vertex>>(n));

  struct Fact {
    Symbol sym;
    Vertex i;
    Vertex j;
  };
  std::deque<Fact> work;

  auto assert_fact = [&](Symbol s, Vertex i, Vertex j) {
    auto& cell = holds[s][static_cast<std::size_t>(i) * n + j];
    if (cell) return;
    cell = 1;
    out[s][i].push_back(j);
    in[s][j].push_back(i);
    work.push_back({s, i, j});
  };

  for (const Edge& e : g.edges()) assert_fact(e.label == Label::Open ? kOpen : kClose, e.src, e.dst);

  while (!work.empty()) {
    const Fact f = work.front();
    work.pop_front();
    for (const Production& r : rules) {
      // f plays the first symbol: (first, i, j) + (second, j, k) => (head, i, k)
      if (r.first == f.sym) {
        const auto succ = out[r.second][f.j];  // copy: assert_fact may grow the list
        for (Vertex k : succ) assert_fact(r.head, f.i, k);
      }
      // f plays the second symbol: (first, k, i) + (second, i, j) => (head, k, j)
      if (r.second == f.sym) {
        const auto pred = in[r.first][f.i];
        for (Vertex k : pred) assert_fact(r.head, k, f.j);
      }
    }
  }

  BoolMatrix zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) zero.set(i, j, holds[kD][i * n + j] != 0);
  return zero;
}

/// cell (i,j) true iff i ~> j spells Z x Z with Z the 0-language plus e and x the signed terminal.
inline BoolMatrix oracle_pm1_reach(const Ldg& g, [[maybe_unused]] Mode mode, int sign,
                                   const BoolMatrix& zero) {
  if (sign != 1 && sign != -1) throw ContractViolation("oracle_pm1_reach: sign must be +1 or -1");
  const std::size_t n = g.vertex_count();
  const Label wanted = sign > 0 ? Label::Open : Label::Close;
  BoolMatrix reach(n);
  for (const Edge& e : g.edges()) {
    if (e.label != wanted) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != e.src && !zero.at(i, e.src)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (j == e.dst || zero.at(e.dst, j)) reach.set(i, j);
    }
  }
  return reach;
}

inline BoolMatrix oracle_pm1_reach(const Ldg& g, Mode mode, int sign) {
  return oracle_pm1_reach(g, mode, sign, oracle_zero_reach(g, mode));
}

/// All three layers at once.
inline TriMatrix oracle_reach(const Ldg& g, Mode mode) {
  TriMatrix t;
  t.zero = oracle_zero_reach(g, mode);
  t.neg = oracle_pm1_reach(g, mode, -1, t.zero);
  t.pos = oracle_pm1_reach(g, mode, +1, t.zero);
  return t;
}

}  // namespace dyckpath::oracle
