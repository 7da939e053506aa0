// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyckpath {

/// Raised when a documented precondition of a library call does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by parse_graph; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The two alphabet symbols: `a` opens, `a^-1` closes.
enum class Label : std::uint8_t { Open, Close };

/// Selects the reduction rules: Dyck allows only `a a^-1 -> e`, semi-Dyck also `a^-1 a -> e`.
enum class Mode : std::uint8_t { Dyck, SemiDyck };

constexpr int label_cost(Label label) noexcept { return label == Label::Open ? +1 : -1; }

constexpr std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Dyck ? "dyck" : "semidyck";
}

using Vertex = std::uint32_t;

struct Edge {
  Vertex src = 0;
  Vertex dst = 0;
  Label label = Label::Open;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Dense row-major n x n boolean matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  static BoolMatrix identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const noexcept { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    cells_[i * n_ + j] = value ? 1 : 0;
  }

  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
  }
  std::size_t row_count(std::size_t i) const noexcept {
    return static_cast<std::size_t>(
        std::count(cells_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                   cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_), std::uint8_t{1}));
  }
  bool none() const noexcept { return count() == 0; }

  /// Cellwise implication: every true cell of *this is true in `other`.
  bool subset_of(const BoolMatrix& other) const noexcept {
    if (other.n_ != n_) return false;
    for (std::size_t c = 0; c < cells_.size(); ++c)
      if (cells_[c] && !other.cells_[c]) return false;
    return true;
  }

  BoolMatrix& operator|=(const BoolMatrix& other) {
    if (other.n_ != n_) throw ContractViolation("BoolMatrix: dimension mismatch");
    for (std::size_t c = 0; c < cells_.size(); ++c) cells_[c] |= other.cells_[c];
    return *this;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Exact -1 / 0 / +1 reachability layers. Absence is "no edge / no walk".
struct TriMatrix {
  BoolMatrix neg;
  BoolMatrix zero;
  BoolMatrix pos;

  TriMatrix() = default;
  explicit TriMatrix(std::size_t n) : neg(n), zero(n), pos(n) {}

  std::size_t size() const noexcept { return zero.size(); }

  const BoolMatrix& layer(int cost) const {
    switch (cost) {
      case -1: return neg;
      case 0: return zero;
      case +1: return pos;
      default: throw ContractViolation("TriMatrix: cost class must be -1, 0 or +1");
    }
  }

  /// Out-degree of `i` summed across the three layers (at most 3n).
  std::size_t out_degree(std::size_t i) const noexcept {
    return neg.row_count(i) + zero.row_count(i) + pos.row_count(i);
  }

  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;
};

/// Labeled directed multigraph over vertices 0..n-1 with set semantics on (src, dst, label).
class Ldg {
 public:
  Ldg() = default;

  explicit Ldg(std::size_t n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      if (e.src >= n_ || e.dst >= n_)
        throw std::out_of_range("vertex id out of range: edge " + std::to_string(e.src) + " -> " +
                                std::to_string(e.dst) + " with n = " + std::to_string(n_));
      if (e.label != Label::Open && e.label != Label::Close)
        throw std::invalid_argument("unknown edge label");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex src, Vertex dst, Label label) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{src, dst, label});
  }

  friend bool operator==(const Ldg&, const Ldg&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Open edges go to the +1 layer, Close edges to the -1 layer; the 0 layer starts empty.
inline TriMatrix to_tri_matrix(const Ldg& g) {
  TriMatrix t(g.vertex_count());
  for (const Edge& e : g.edges()) (e.label == Label::Open ? t.pos : t.neg).set(e.src, e.dst);
  return t;
}

inline char label_token(Label label) noexcept { return label == Label::Open ? 'a' : 'A'; }

// Graph file format:
//   n m
//   src dst label      (m lines; label is `a` for Open, `A` for Close)
// '#' starts a comment, blank lines are ignored.
inline Ldg parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;

    auto to_count = [&](const std::string& tok, const char* what) -> std::size_t {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return c >= '0' && c <= '9';
          }))
        throw ParseError(line_no, std::string("expected non-negative integer ") + what + ", got '" +
                                      tok + "'");
      try {
        return static_cast<std::size_t>(std::stoull(tok));
      } catch (const std::out_of_range&) {
        throw ParseError(line_no, std::string(what) + " too large");
      }
    };

    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "malformed header, expected 'n m'");
      n = to_count(tokens[0], "vertex count");
      m = to_count(tokens[1], "edge count");
      if (n > UINT32_MAX) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      header_line = line_no;
      continue;
    }

    if (tokens.size() != 3) throw ParseError(line_no, "malformed edge, expected 'src dst label'");
    std::size_t src = to_count(tokens[0], "source vertex");
    std::size_t dst = to_count(tokens[1], "target vertex");
    if (src >= n || dst >= n) throw ParseError(line_no, "vertex id out of range");
    Label label;
    if (tokens[2] == "a")
      label = Label::Open;
    else if (tokens[2] == "A")
      label = Label::Close;
    else
      throw ParseError(line_no, "unknown label token '" + tokens[2] + "'");
    edges.push_back({static_cast<Vertex>(src), static_cast<Vertex>(dst), label});
  }

  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "malformed header, missing 'n m'");
  if (edges.size() != m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return Ldg(n, std::move(edges));
}

inline Ldg parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline void serialize_graph(const Ldg& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.src << ' ' << e.dst << ' ' << label_token(e.label) << '\n';
}

inline std::string serialize_graph(const Ldg& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

/// Smallest k with 2^k >= n (0 for n <= 1).
constexpr std::size_t ceil_log2(std::size_t n) noexcept {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace dyckpath
