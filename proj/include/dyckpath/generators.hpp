// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dyckpath/graph.hpp"

namespace dyckpath::gen {

using Word = std::vector<Label>;

inline Word parse_word(std::string_view text) {
  Word w;
  for (char c : text) {
    if (c == 'a')
      w.push_back(Label::Open);
    else if (c == 'A')
      w.push_back(Label::Close);
    else if (c != ' ')
      throw std::invalid_argument(std::string("word: unknown symbol '") + c + "'");
  }
  return w;
}

inline std::string to_string(const Word& w) {
  std::string s;
  for (Label l : w) s.push_back(label_token(l));
  return s;
}

/// The path graph 0 -> 1 -> ... -> |w| spelling w.
inline Ldg path_graph(const Word& w) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < w.size(); ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), w[i]});
  return Ldg(w.size() + 1, std::move(edges));
}

inline Word word_of_path(const Ldg& g) {
  Word w;
  for (const Edge& e : g.edges()) w.push_back(e.label);
  return w;
}

// ---------------------------------------------------------------------------
// Grid view

struct GridPoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Prefix-sum trace of a word: Open steps (+1,+1), Close steps (+1,-1).
struct GridPath {
  std::vector<GridPoint> points{GridPoint{}};

  long peak_level() const {
    long best = 0;
    for (const GridPoint& p : points) best = std::max(best, p.y);
    return best;
  }
  long min_level() const {
    long best = 0;
    for (const GridPoint& p : points) best = std::min(best, p.y);
    return best;
  }
};

inline GridPath to_grid(const Word& w) {
  GridPath g;
  GridPoint at;
  for (Label l : w) {
    at.x += 1;
    at.y += label_cost(l);
    g.points.push_back(at);
  }
  return g;
}

inline void write_csv(const GridPath& g, std::ostream& os) {
  os << "x,y\n";
  for (const GridPoint& p : g.points) os << p.x << ',' << p.y << '\n';
}

inline void write_dot(const GridPath& g, std::ostream& os) {
  os << "digraph grid {\n  node [shape=point];\n";
  for (std::size_t i = 0; i < g.points.size(); ++i)
    os << "  p" << i << " [pos=\"" << g.points[i].x << ',' << g.points[i].y << "!\"];\n";
  for (std::size_t i = 1; i < g.points.size(); ++i)
    os << "  p" << (i - 1) << " -> p" << i << " [label=\""
       << (g.points[i].y > g.points[i - 1].y ? "a" : "A") << "\"];\n";
  os << "}\n";
}

// Membership checks over a single pair; used to validate generated words.
inline bool is_semi_dyck_word(const Word& w) {
  long sum = 0;
  for (Label l : w) sum += label_cost(l);
  return sum == 0;
}

inline bool is_dyck_word(const Word& w) {
  long sum = 0;
  for (Label l : w) {
    sum += label_cost(l);
    if (sum < 0) return false;
  }
  return sum == 0;
}

// ---------------------------------------------------------------------------
// Worst-case families

namespace detail {

inline void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

inline Word reversed_orientation(Word w) {
  for (Label& l : w) l = l == Label::Open ? Label::Close : Label::Open;
  return w;
}

}  // namespace detail

/// Reduced worst-case Dyck word with 2^k peaks:  W(1) = a A,  W(2m) = a W(m) W(m) A.
inline Word worst_case_dyck_word(int k) {
  if (k < 1) throw ContractViolation("gen_worst_case_dyck: k must be >= 1");
  Word w = {Label::Open, Label::Close};
  for (int level = 1; level <= k; ++level) {
    Word next = {Label::Open};
    detail::append(next, w);
    detail::append(next, w);
    next.push_back(Label::Close);
    w = std::move(next);
  }
  return w;
}

inline Ldg gen_worst_case_dyck(int k) { return path_graph(worst_case_dyck_word(k)); }

/// Reduced worst-case semi-Dyck word with 4^k pyramids and valleys.
///
/// S(1) = a A and S(4m) = x S(m) S(m) S(m) S(m) x', where the exterior pair is
/// a .. A on odd levels and A .. a (a valley base) on even levels.
inline Word worst_case_semidyck_word(int k) {
  if (k < 1) throw ContractViolation("gen_worst_case_semidyck: k must be >= 1");
  Word w = {Label::Open, Label::Close};
  for (int level = 1; level <= k; ++level) {
    const bool valley = level % 2 == 0;
    Word next = {valley ? Label::Close : Label::Open};
    for (int copy = 0; copy < 4; ++copy) detail::append(next, w);
    next.push_back(valley ? Label::Open : Label::Close);
    w = std::move(next);
  }
  return w;
}

inline Ldg gen_worst_case_semidyck(int k) { return path_graph(worst_case_semidyck_word(k)); }

/// A graph together with 0 edges that stand in for removed sub-blocks.
struct SeededGraph {
  Ldg graph;
  BoolMatrix seed_zero;
};

/// The worst-case Dyck path with its first peak (a A) replaced by one direct 0 edge.
inline SeededGraph gen_worst_case_dyck_one_peak_replaced(int k) {
  Word w = worst_case_dyck_word(k);
  // The first peak is the first Open immediately followed by a Close.
  std::size_t at = 0;
  while (!(w[at] == Label::Open && w[at + 1] == Label::Close)) ++at;

  const std::size_t n = w.size();  // one vertex fewer than the intact path
  std::vector<Edge> edges;
  BoolMatrix seed(n);
  Vertex v = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == at) {
      seed.set(v, v + 1);
      ++v;
      ++i;  // skip the Close of the peak
      continue;
    }
    edges.push_back({v, v + 1, w[i]});
    ++v;
  }
  return {Ldg(n, std::move(edges)), std::move(seed)};
}

// ---------------------------------------------------------------------------
// Flat paths

struct FlatBlock {
  int height = 1;
  bool valley = false;  // a^-h a^h instead of a^h a^-h
};

/// Blocks at a single base level: a^h1 A^h1 a^h2 A^h2 ... (valleys only in semi-Dyck mode).
inline Word flat_word(const std::vector<FlatBlock>& blocks, Mode mode) {
  if (blocks.empty()) throw ContractViolation("gen_flat: block list must be nonempty");
  Word w;
  for (const FlatBlock& b : blocks) {
    if (b.height <= 0) throw ContractViolation("gen_flat: heights must be positive");
    if (b.valley && mode == Mode::Dyck)
      throw ContractViolation("gen_flat: valleys are not flat Dyck blocks");
    const Label up = b.valley ? Label::Close : Label::Open;
    const Label down = b.valley ? Label::Open : Label::Close;
    w.insert(w.end(), static_cast<std::size_t>(b.height), up);
    w.insert(w.end(), static_cast<std::size_t>(b.height), down);
  }
  return w;
}

inline Ldg gen_flat(const std::vector<FlatBlock>& blocks, Mode mode) {
  return path_graph(flat_word(blocks, mode));
}

inline Ldg gen_flat(const std::vector<int>& peaks, Mode mode) {
  std::vector<FlatBlock> blocks;
  for (int h : peaks) blocks.push_back({h, false});
  return gen_flat(blocks, mode);
}

// ---------------------------------------------------------------------------
// Random graphs

/// n vertices, m edges with endpoints and labels uniform; duplicates collapse.
inline Ldg gen_random(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("gen_random: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const auto src = static_cast<Vertex>(rng() % n);
    const auto dst = static_cast<Vertex>(rng() % n);
    const Label label = (rng() & 1) ? Label::Open : Label::Close;
    edges.push_back({src, dst, label});
  }
  return Ldg(n, std::move(edges));
}

/// Each of the 2n^2 possible labeled edges present independently with probability `density`.
inline Ldg gen_random_density(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("gen_random_density: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  // 53-bit uniform in [0, 1); avoids distribution objects whose output is library-specific.
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (Label l : {Label::Open, Label::Close})
        if (unit() < density) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), l});
  return Ldg(n, std::move(edges));
}

}  // namespace dyckpath::gen
