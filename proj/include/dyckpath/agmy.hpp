// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact arithmetic on base-b coded adjacency matrices.
//
// A -1 / 0 / +1 edge is coded as b^-1 / b^0 / b^1 with b = 3(n+1), and a cell
// holds a sum of such powers. One algebraic product of normalized matrices
// keeps every coefficient at most 3n < b, so a value is stored as a digit
// vector over exponents in [kMinExponent, kMaxExponent] and never carries.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dyckpath/graph.hpp"

namespace dyckpath::agmy {

inline constexpr int kMinExponent = -8;
inline constexpr int kMaxExponent = 4;
inline constexpr std::size_t kWidth = kMaxExponent - kMinExponent + 1;

// Exponent of the marker added to -1 cells before a Dyck product; a marked -1
// edge times a +1 edge leaves a residue at kMarkExponent + 1.
inline constexpr int kMarkExponent = -4;
inline constexpr int kForbiddenPairExponent = kMarkExponent + 1;

using Coefficient = std::uint32_t;

constexpr std::size_t slot(int exponent) noexcept {
  return static_cast<std::size_t>(exponent - kMinExponent);
}
constexpr bool in_window(int exponent) noexcept {
  return exponent >= kMinExponent && exponent <= kMaxExponent;
}

/// Coded base for an n-vertex graph.
constexpr std::uint64_t base_for(std::size_t n) noexcept { return 3 * (std::uint64_t{n} + 1); }

/// sum_e c_e * b^e with non-negative digits; the all-zero value means "no edge".
class AgmyValue {
 public:
  AgmyValue() = default;

  static AgmyValue term(int exponent, Coefficient c = 1) {
    AgmyValue v;
    v.add(exponent, c);
    return v;
  }

  Coefficient coefficient(int exponent) const noexcept {
    return in_window(exponent) ? digits_[slot(exponent)] : 0;
  }

  void add(int exponent, Coefficient c) {
    if (!in_window(exponent))
      throw ContractViolation("AgmyValue: exponent " + std::to_string(exponent) +
                              " outside the coded window");
    digits_[slot(exponent)] += c;
  }

  void clear(int exponent) noexcept {
    if (in_window(exponent)) digits_[slot(exponent)] = 0;
  }

  bool is_zero() const noexcept {
    return std::all_of(digits_.begin(), digits_.end(), [](Coefficient c) { return c == 0; });
  }

  Coefficient max_coefficient() const noexcept {
    return *std::max_element(digits_.begin(), digits_.end());
  }

  friend AgmyValue operator+(AgmyValue lhs, const AgmyValue& rhs) {
    for (std::size_t s = 0; s < kWidth; ++s) lhs.digits_[s] += rhs.digits_[s];
    return lhs;
  }

  // Exponents add, coefficients convolve.
  friend AgmyValue operator*(const AgmyValue& lhs, const AgmyValue& rhs) {
    AgmyValue out;
    for (int ea = kMinExponent; ea <= kMaxExponent; ++ea) {
      Coefficient ca = lhs.coefficient(ea);
      if (ca == 0) continue;
      for (int eb = kMinExponent; eb <= kMaxExponent; ++eb) {
        Coefficient cb = rhs.coefficient(eb);
        if (cb != 0) out.add(ea + eb, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const AgmyValue&, const AgmyValue&) = default;

  // "{e:c,...}" over nonzero digits in ascending exponent order.
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e = kMinExponent; e <= kMaxExponent; ++e) {
      if (coefficient(e) == 0) continue;
      if (!first) os << ',';
      os << e << ':' << coefficient(e);
      first = false;
    }
    os << '}';
    return os.str();
  }

 private:
  std::array<Coefficient, kWidth> digits_{};
};

inline std::ostream& operator<<(std::ostream& os, const AgmyValue& v) { return os << v.to_string(); }

/// n x n matrix of AgmyValue, stored as one dense integer layer per exponent.
class AgmyMatrix {
 public:
  AgmyMatrix() = default;
  explicit AgmyMatrix(std::size_t n) : n_(n), base_(base_for(n)) {}

  static AgmyMatrix identity(std::size_t n) {
    AgmyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.add(i, i, 0, 1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  std::uint64_t base() const noexcept { return base_; }

  Coefficient coefficient(std::size_t i, std::size_t j, int exponent) const noexcept {
    if (!in_window(exponent)) return 0;
    const auto& layer = layers_[slot(exponent)];
    return layer.empty() ? 0 : layer[i * n_ + j];
  }

  AgmyValue cell(std::size_t i, std::size_t j) const {
    AgmyValue v;
    for (int e = kMinExponent; e <= kMaxExponent; ++e)
      if (Coefficient c = coefficient(i, j, e)) v.add(e, c);
    return v;
  }

  void set(std::size_t i, std::size_t j, const AgmyValue& v) {
    for (int e = kMinExponent; e <= kMaxExponent; ++e) {
      Coefficient c = v.coefficient(e);
      if (c != 0)
        mutable_layer(e)[i * n_ + j] = c;
      else if (!layers_[slot(e)].empty())
        layers_[slot(e)][i * n_ + j] = 0;
    }
  }

  void add(std::size_t i, std::size_t j, int exponent, Coefficient c) {
    if (!in_window(exponent))
      throw ContractViolation("AgmyMatrix: exponent " + std::to_string(exponent) +
                              " outside the coded window");
    if (c != 0) mutable_layer(exponent)[i * n_ + j] += c;
  }

  void clear_exponent(int exponent) noexcept {
    if (in_window(exponent)) layers_[slot(exponent)].clear();
  }

  /// True when some cell has a nonzero digit at `exponent`.
  bool has_exponent(int exponent) const noexcept {
    if (!in_window(exponent)) return false;
    const auto& layer = layers_[slot(exponent)];
    return std::any_of(layer.begin(), layer.end(), [](Coefficient c) { return c != 0; });
  }

  Coefficient max_coefficient() const noexcept {
    Coefficient best = 0;
    for (const auto& layer : layers_)
      if (!layer.empty()) best = std::max(best, *std::max_element(layer.begin(), layer.end()));
    return best;
  }

  bool is_zero() const noexcept { return max_coefficient() == 0; }

  /// Dense row-major view of one exponent's digits; empty when that exponent is unused.
  const std::vector<Coefficient>& layer(int exponent) const { return layers_.at(slot(exponent)); }

  friend bool operator==(const AgmyMatrix& a, const AgmyMatrix& b) {
    if (a.n_ != b.n_ || a.base_ != b.base_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!(a.cell(i, j) == b.cell(i, j))) return false;
    return true;
  }

 private:
  std::vector<Coefficient>& mutable_layer(int exponent) {
    auto& layer = layers_[slot(exponent)];
    if (layer.empty()) layer.assign(n_ * n_, 0);
    return layer;
  }

  std::size_t n_ = 0;
  std::uint64_t base_ = 3;
  std::array<std::vector<Coefficient>, kWidth> layers_;
};

/// Debug dump: one line per nonzero cell, "i j {e:c,...}".
inline void dump(const AgmyMatrix& m, std::ostream& os) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (AgmyValue v = m.cell(i, j); !v.is_zero()) os << i << ' ' << j << ' ' << v << '\n';
}

inline std::string dump(const AgmyMatrix& m) {
  std::ostringstream os;
  dump(m, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Coding

inline AgmyMatrix encode(const TriMatrix& t) {
  const std::size_t n = t.size();
  AgmyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t.neg.at(i, j)) m.add(i, j, -1, 1);
      if (t.zero.at(i, j)) m.add(i, j, 0, 1);
      if (t.pos.at(i, j)) m.add(i, j, +1, 1);
    }
  return m;
}

/// True when every cell has digits only at -1/0/+1 (and optionally the mark) with values in {0,1}.
inline bool is_normalized(const AgmyMatrix& m, bool allow_mark = false) {
  for (int e = kMinExponent; e <= kMaxExponent; ++e) {
    const bool unit = e == -1 || e == 0 || e == 1 || (allow_mark && e == kMarkExponent);
    const auto& layer = m.layer(e);
    for (Coefficient c : layer)
      if (c > (unit ? 1u : 0u)) return false;
  }
  return true;
}

inline TriMatrix decode(const AgmyMatrix& m) {
  if (!is_normalized(m, /*allow_mark=*/true))
    throw ContractViolation("decode: matrix is not normalized");
  const std::size_t n = m.size();
  TriMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.neg.set(i, j, m.coefficient(i, j, -1) != 0);
      t.zero.set(i, j, m.coefficient(i, j, 0) != 0);
      t.pos.set(i, j, m.coefficient(i, j, +1) != 0);
    }
  return t;
}

// ---------------------------------------------------------------------------
// Product

/// Exact algebraic product; cell (i,j) = sum_k A(i,k) * B(k,j).
///
/// Computed as one integer matrix product per pair of occupied exponents.
/// Integer addition is associative, so row order does not affect the result.
inline AgmyMatrix matrix_mul(const AgmyMatrix& a, const AgmyMatrix& b) {
  if (a.size() != b.size() || a.base() != b.base())
    throw ContractViolation("matrix_mul: dimension or base mismatch");
  const std::size_t n = a.size();
  AgmyMatrix out(n);
  if (n == 0) return out;

  std::vector<Coefficient> acc(n * n);
  for (int ea = kMinExponent; ea <= kMaxExponent; ++ea) {
    const auto& la = a.layer(ea);
    if (la.empty() || !a.has_exponent(ea)) continue;
    for (int eb = kMinExponent; eb <= kMaxExponent; ++eb) {
      const auto& lb = b.layer(eb);
      if (lb.empty() || !b.has_exponent(eb)) continue;
      const int e = ea + eb;
      if (!in_window(e))
        throw ContractViolation("matrix_mul: product exponent " + std::to_string(e) +
                                " outside the coded window");
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        Coefficient* row = acc.data() + i * n;
        for (std::size_t k = 0; k < n; ++k) {
          const Coefficient x = la[i * n + k];
          if (x == 0) continue;
          const Coefficient* brow = lb.data() + k * n;
          for (std::size_t j = 0; j < n; ++j) row[j] += x * brow[j];
          any = true;
        }
      }
      if (!any) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (Coefficient c = acc[i * n + j]) out.add(i, j, e, c);
    }
  }
  return out;
}

/// Digit bound after one product of normalized (or marked) matrices: every coefficient <= 3n.
inline void check_digit_bound(const AgmyMatrix& product) {
  const std::uint64_t bound = 3 * std::uint64_t{product.size()};
  if (product.max_coefficient() > bound)
    throw ContractViolation("digit bound violated: coefficient " +
                            std::to_string(product.max_coefficient()) + " > 3n = " +
                            std::to_string(bound));
}

// ---------------------------------------------------------------------------
// Detectors
//
// Digit-level readings of the three fractional-part / truncate / mod
// detectors. They assume every digit is below b, which the digit bound
// guarantees after a single product.

enum class CostClass : int { Minus = -1, Zero = 0, Plus = +1 };

inline bool detect_cost_class(const AgmyValue& v, std::size_t n, CostClass cls) {
  const std::uint64_t two_n = 2 * std::uint64_t{n};
  const std::uint64_t three_n = 3 * std::uint64_t{n};
  switch (cls) {
    case CostClass::Minus: {
      // b * frac(v) = c_{-1} + (lower digits)/b, the lower part lying in [0, 1).
      const std::uint64_t whole = v.coefficient(-1);
      bool tail = false;
      for (int e = kMinExponent; e <= -2; ++e) tail = tail || v.coefficient(e) != 0;
      return whole >= 1 && (whole < two_n || (whole == two_n && !tail));
    }
    case CostClass::Plus: {
      // trunc(v / b) = c_1 + c_2 b + c_3 b^2 + ...
      for (int e = 2; e <= kMaxExponent; ++e)
        if (v.coefficient(e) != 0) return false;
      const std::uint64_t check = v.coefficient(+1);
      return check >= 1 && check <= two_n;
    }
    case CostClass::Zero: {
      // trunc(v) mod b = c_0
      const std::uint64_t check = v.coefficient(0);
      return check > 0 && check <= three_n;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Normalization and bookkeeping around a product

/// Zeroes the -1 and +1 digits of every cell.
inline AgmyMatrix remove_pm1_edges(AgmyMatrix m) {
  m.clear_exponent(-1);
  m.clear_exponent(+1);
  return m;
}

/// Keeps only the -1, 0 and +1 digits of every cell.
inline AgmyMatrix unit_pathways(AgmyMatrix m) {
  for (int e = kMinExponent; e <= kMaxExponent; ++e)
    if (e < -1 || e > 1) m.clear_exponent(e);
  return m;
}

/// Collapses a post-product matrix back to presence flags at exponents -1/0/+1.
///
/// A +-2 pathway becomes a +-1 edge (the cost scale halves). In Dyck mode a 0
/// pathway counts only if not every one of them is a marked -1 edge followed
/// by a +1 edge, i.e. c_0 > c_{-3}.
inline AgmyMatrix normalize_and_divide_by_2(const AgmyMatrix& m, Mode mode) {
  check_digit_bound(m);
  const std::size_t n = m.size();
  AgmyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AgmyValue v = m.cell(i, j);
      if (v.is_zero()) continue;
      if (detect_cost_class(v, n, CostClass::Minus) || v.coefficient(-2) > 0) out.add(i, j, -1, 1);
      if (detect_cost_class(v, n, CostClass::Plus) || v.coefficient(+2) > 0) out.add(i, j, +1, 1);
      bool zero = detect_cost_class(v, n, CostClass::Zero);
      if (mode == Mode::Dyck) zero = zero && v.coefficient(0) > v.coefficient(kForbiddenPairExponent);
      if (zero) out.add(i, j, 0, 1);
    }
  return out;
}

/// Adds b^-4 to every -1 cell of a normalized matrix.
inline AgmyMatrix markup_minus_one_edges(const AgmyMatrix& m) {
  if (!is_normalized(m)) throw ContractViolation("markup_minus_one_edges: input not normalized");
  AgmyMatrix out = m;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.coefficient(i, j, -1) == 1) out.add(i, j, kMarkExponent, 1);
  return out;
}

/// The 0 edges of a normalized matrix plus the identity.
inline AgmyMatrix get_zero_edges(const AgmyMatrix& m) {
  const std::size_t n = m.size();
  AgmyMatrix z = AgmyMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.coefficient(i, j, 0) == 1) z.add(i, j, 0, 1);
  return z;
}

}  // namespace dyckpath::agmy
