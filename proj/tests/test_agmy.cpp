// Copyright (c) dyckpath contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "dyckpath/agmy.hpp"
#include "dyckpath/generators.hpp"
#include "rational_detectors.hpp"

using namespace dyckpath;
using namespace dyckpath::agmy;

namespace {

AgmyValue value(std::initializer_list<std::pair<int, Coefficient>> digits) {
  AgmyValue v;
  for (auto [e, c] : digits) v.add(e, c);
  return v;
}

AgmyMatrix single_cell(std::size_t n, std::size_t i, std::size_t j, const AgmyValue& v) {
  AgmyMatrix m(n);
  m.set(i, j, v);
  return m;
}

TriMatrix random_tri(std::size_t n, std::mt19937_64& rng, unsigned percent) {
  TriMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.neg.set(i, j, rng() % 100 < percent);
      t.zero.set(i, j, rng() % 100 < percent);
      t.pos.set(i, j, rng() % 100 < percent);
    }
  return t;
}

}  // namespace

TEST(Encode, SingleOpenEdgeIsBase) {
  TriMatrix t(2);
  t.pos.set(0, 1);
  const AgmyMatrix m = encode(t);
  EXPECT_EQ(m.base(), 9u);
  EXPECT_EQ(m.cell(0, 1), AgmyValue::term(+1));
  EXPECT_EQ(reference::rational_value(m.cell(0, 1), 2), reference::Rational(9));
}

TEST(Encode, ParallelEdgesSumTheirCodes) {
  TriMatrix t(2);
  t.pos.set(0, 1);
  t.neg.set(0, 1);
  const AgmyMatrix m = encode(t);
  EXPECT_EQ(m.cell(0, 1), value({{+1, 1}, {-1, 1}}));
  EXPECT_EQ(reference::rational_value(m.cell(0, 1), 2), reference::Rational(82, 9));
}

TEST(Encode, EmptyIsZero) { EXPECT_TRUE(encode(TriMatrix(4)).is_zero()); }

TEST(MatrixMul, ExponentsAdd) {
  AgmyMatrix a(3), b(3);
  a.add(0, 1, +1, 1);
  b.add(1, 2, -1, 1);
  const AgmyMatrix p = matrix_mul(a, b);
  EXPECT_EQ(p.cell(0, 2), AgmyValue::term(0));
  EXPECT_EQ(dump(p), "0 2 {0:1}\n");
}

TEST(MatrixMul, IdentityIsNeutral) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    const AgmyMatrix m = encode(random_tri(n, rng, 40));
    EXPECT_EQ(matrix_mul(AgmyMatrix::identity(n), m), m);
    EXPECT_EQ(matrix_mul(m, AgmyMatrix::identity(n)), m);
  }
}

TEST(MatrixMul, TwoIntermediariesGiveCoefficientTwo) {
  // 0 -> 1 -> 3 and 0 -> 2 -> 3, each +1 then -1
  TriMatrix t(4);
  t.pos.set(0, 1);
  t.pos.set(0, 2);
  t.neg.set(1, 3);
  t.neg.set(2, 3);
  const AgmyMatrix m = encode(t);
  const AgmyMatrix p = matrix_mul(m, m);
  EXPECT_EQ(p.coefficient(0, 3, 0), 2u);
}

TEST(MatrixMul, MatchesBruteForceConvolution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const AgmyMatrix a = encode(random_tri(n, rng, 50));
    const AgmyMatrix b = markup_minus_one_edges(encode(random_tri(n, rng, 50)));
    const AgmyMatrix p = matrix_mul(a, b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        AgmyValue expect;
        for (std::size_t k = 0; k < n; ++k) expect = expect + a.cell(i, k) * b.cell(k, j);
        ASSERT_EQ(p.cell(i, j), expect);
      }
  }
}

TEST(MatrixMul, RejectsDimensionMismatch) {
  EXPECT_THROW(matrix_mul(AgmyMatrix(2), AgmyMatrix(3)), ContractViolation);
}

TEST(MatrixMul, RejectsExponentOverflow) {
  const AgmyMatrix a = single_cell(2, 0, 0, AgmyValue::term(kMaxExponent));
  EXPECT_THROW(matrix_mul(a, a), ContractViolation);
}

TEST(Exactness, ProductMatchesRationalEvaluation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    AgmyValue x, y;
    for (int e = -4; e <= 2; ++e) {
      if (rng() % 2) x.add(e, static_cast<Coefficient>(rng() % 5));
      if (rng() % 2) y.add(e < -2 ? -1 : e, static_cast<Coefficient>(rng() % 5));
    }
    EXPECT_EQ(reference::rational_value(x * y, n),
              reference::rational_value(x, n) * reference::rational_value(y, n));
    EXPECT_EQ(reference::rational_value(x + y, n),
              reference::rational_value(x, n) + reference::rational_value(y, n));
  }
}

TEST(DigitBound, EveryProductOfNormalizedMatricesStaysWithinThreeN) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const AgmyMatrix a = encode(random_tri(n, rng, 100));
    const AgmyMatrix p = matrix_mul(markup_minus_one_edges(a), a);
    EXPECT_LE(p.max_coefficient(), 3 * n);
    EXPECT_NO_THROW(check_digit_bound(p));
  }
}

TEST(DigitBound, ViolationThrows) {
  EXPECT_THROW(check_digit_bound(single_cell(2, 0, 1, AgmyValue::term(0, 7))), ContractViolation);
}

TEST(Detect, NegativeOneAtSmallN) {
  EXPECT_TRUE(detect_cost_class(AgmyValue::term(-1), 2, CostClass::Minus));
  EXPECT_FALSE(detect_cost_class(AgmyValue::term(-2), 2, CostClass::Minus));
  EXPECT_FALSE(detect_cost_class(AgmyValue::term(-1, 5), 2, CostClass::Minus));
  EXPECT_TRUE(detect_cost_class(AgmyValue::term(-1, 4), 2, CostClass::Minus));
  // check = 4 + 1/9 exceeds 2n
  EXPECT_FALSE(detect_cost_class(value({{-1, 4}, {-2, 1}}), 2, CostClass::Minus));
}

TEST(Detect, ZeroAtSmallN) {
  EXPECT_TRUE(detect_cost_class(AgmyValue::term(0, 5), 2, CostClass::Zero));
  EXPECT_FALSE(detect_cost_class(AgmyValue::term(+1), 2, CostClass::Zero));
  // a +2 pathway alone aliases to 0 mod b; no zero is reported
  EXPECT_FALSE(detect_cost_class(AgmyValue::term(+2), 2, CostClass::Zero));
  EXPECT_FALSE(reference::rational_detect_zero(AgmyValue::term(+2), 2));
}

TEST(Detect, PositiveOneAtSmallN) {
  EXPECT_TRUE(detect_cost_class(AgmyValue::term(+1), 2, CostClass::Plus));
  EXPECT_TRUE(detect_cost_class(value({{+1, 4}, {0, 6}}), 2, CostClass::Plus));
  EXPECT_FALSE(detect_cost_class(value({{+1, 1}, {+2, 1}}), 2, CostClass::Plus));
}

// Full sweep of the five central digits at every magnitude a product can produce.
TEST(Detect, AgreesWithRationalTranscription) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Coefficient top = static_cast<Coefficient>(3 * n);
    for (Coefficient m2 = 0; m2 <= top; ++m2)
      for (Coefficient m1 = 0; m1 <= top; ++m1)
        for (Coefficient z = 0; z <= top; ++z)
          for (Coefficient p1 = 0; p1 <= top; ++p1)
            for (Coefficient p2 = 0; p2 <= top; ++p2) {
              const AgmyValue v = value({{-2, m2}, {-1, m1}, {0, z}, {1, p1}, {2, p2}});
              ASSERT_EQ(detect_cost_class(v, n, CostClass::Minus),
                        reference::rational_detect_negative_one(v, n))
                  << n << ' ' << v;
              ASSERT_EQ(detect_cost_class(v, n, CostClass::Plus),
                        reference::rational_detect_positive_one(v, n))
                  << n << ' ' << v;
              ASSERT_EQ(detect_cost_class(v, n, CostClass::Zero), reference::rational_detect_zero(v, n))
                  << n << ' ' << v;
            }
  }
}

TEST(Detect, MarkResiduesDoNotChangeTheReading) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Coefficient top = static_cast<Coefficient>(3 * n);
    for (Coefficient m1 = 0; m1 <= top; ++m1)
      for (Coefficient residue : {Coefficient{0}, Coefficient{1}, top}) {
        AgmyValue v = AgmyValue::term(-1, m1);
        for (int e : {-3, -4, -5, -8}) v.add(e, residue);
        v.add(0, 1);
        EXPECT_EQ(detect_cost_class(v, n, CostClass::Minus), reference::rational_detect_negative_one(v, n));
        EXPECT_EQ(detect_cost_class(v, n, CostClass::Zero), reference::rational_detect_zero(v, n));
      }
  }
}

TEST(Normalize, SemiDyckHalvesPlusTwo) {
  const AgmyMatrix m = single_cell(5, 0, 4, value({{0, 2}, {+2, 1}}));
  const AgmyMatrix out = normalize_and_divide_by_2(m, Mode::SemiDyck);
  EXPECT_EQ(out.cell(0, 4), value({{0, 1}, {+1, 1}}));
  EXPECT_TRUE(is_normalized(out));
}

TEST(Normalize, DyckDropsZeroMadeOnlyOfMarkedPairings) {
  const AgmyMatrix m = single_cell(4, 0, 2, value({{0, 1}, {-3, 1}}));
  EXPECT_TRUE(normalize_and_divide_by_2(m, Mode::Dyck).cell(0, 2).is_zero());
  EXPECT_EQ(normalize_and_divide_by_2(m, Mode::SemiDyck).cell(0, 2), AgmyValue::term(0));
}

TEST(Normalize, DyckKeepsZeroWithALegitimatePairing) {
  const AgmyMatrix m = single_cell(4, 0, 2, value({{0, 2}, {-3, 1}}));
  EXPECT_EQ(normalize_and_divide_by_2(m, Mode::Dyck).cell(0, 2), AgmyValue::term(0));
}

TEST(Normalize, MinusTwoBecomesMinusOne) {
  const AgmyMatrix m = single_cell(3, 1, 2, AgmyValue::term(-2, 3));
  EXPECT_EQ(normalize_and_divide_by_2(m, Mode::Dyck).cell(1, 2), AgmyValue::term(-1));
}

TEST(Normalize, IdempotentThroughIdentityProduct) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 8;
    for (Mode mode : {Mode::Dyck, Mode::SemiDyck}) {
      const AgmyMatrix a = encode(random_tri(n, rng, 50));
      const AgmyMatrix once = normalize_and_divide_by_2(matrix_mul(a, a), mode);
      const AgmyMatrix twice =
          normalize_and_divide_by_2(matrix_mul(AgmyMatrix::identity(n), once), mode);
      EXPECT_EQ(once, twice);
    }
  }
}

// In Dyck mode a 0 survives iff some intermediary pairs a +1 then -1, or 0 then 0.
TEST(Markup, SoundAgainstPairingEnumeration) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const TriMatrix t = random_tri(n, rng, 35);
    const AgmyMatrix m = encode(t);
    const AgmyMatrix out = normalize_and_divide_by_2(matrix_mul(markup_minus_one_edges(m), m), Mode::Dyck);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool good = false;
        for (std::size_t k = 0; k < n; ++k)
          good = good || (t.pos.at(i, k) && t.neg.at(k, j)) || (t.zero.at(i, k) && t.zero.at(k, j));
        ASSERT_EQ(out.coefficient(i, j, 0) == 1, good) << "trial " << trial << " cell " << i << ',' << j;
      }
  }
}

TEST(Markup, MarksOnlyMinusOneCells) {
  AgmyMatrix m(2);
  m.add(0, 1, -1, 1);
  m.add(1, 0, +1, 1);
  const AgmyMatrix out = markup_minus_one_edges(m);
  EXPECT_EQ(out.cell(0, 1), value({{-1, 1}, {-4, 1}}));
  EXPECT_EQ(out.cell(1, 0), AgmyValue::term(+1));
  EXPECT_EQ(markup_minus_one_edges(AgmyMatrix(3)), AgmyMatrix(3));
}

TEST(Markup, RejectsUnnormalizedInput) {
  EXPECT_THROW(markup_minus_one_edges(single_cell(2, 0, 1, AgmyValue::term(0, 2))), ContractViolation);
}

TEST(RemovePm1, ClearsOnlyUnitSignedDigits) {
  EXPECT_EQ(remove_pm1_edges(single_cell(2, 0, 1, value({{+1, 1}, {+2, 1}}))).cell(0, 1),
            AgmyValue::term(+2));
  EXPECT_EQ(remove_pm1_edges(single_cell(2, 0, 1, AgmyValue::term(0, 3))).cell(0, 1), AgmyValue::term(0, 3));
  EXPECT_EQ(remove_pm1_edges(single_cell(2, 0, 1, value({{-1, 2}, {-2, 1}, {0, 1}}))).cell(0, 1),
            value({{-2, 1}, {0, 1}}));
}

TEST(UnitPathways, KeepsOnlyUnitExponents) {
  EXPECT_EQ(unit_pathways(single_cell(2, 0, 1, value({{-3, 1}, {-1, 2}, {0, 1}, {2, 4}}))).cell(0, 1),
            value({{-1, 2}, {0, 1}}));
}

TEST(GetZeroEdges, AddsIdentity) {
  const AgmyMatrix z = get_zero_edges(single_cell(5, 1, 3, AgmyValue::term(0)));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      EXPECT_EQ(z.cell(i, j), (i == j || (i == 1 && j == 3)) ? AgmyValue::term(0) : AgmyValue());
  EXPECT_EQ(get_zero_edges(AgmyMatrix(2)), AgmyMatrix::identity(2));
  AgmyMatrix signed_only(3);
  signed_only.add(0, 1, +1, 1);
  signed_only.add(2, 0, -1, 1);
  EXPECT_EQ(get_zero_edges(signed_only), AgmyMatrix::identity(3));
}

TEST(Decode, InvertsEncode) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const TriMatrix t = random_tri(1 + trial % 8, rng, 45);
    EXPECT_EQ(decode(encode(t)), t);
  }
}

TEST(Decode, IdentityAndEmpty) {
  EXPECT_EQ(decode(AgmyMatrix::identity(4)).zero, BoolMatrix::identity(4));
  EXPECT_EQ(decode(AgmyMatrix(3)), TriMatrix(3));
}

TEST(Decode, RejectsUnnormalized) {
  EXPECT_THROW(decode(single_cell(2, 0, 1, AgmyValue::term(+2))), ContractViolation);
}

TEST(Dump, OneLinePerNonzeroCell) {
  AgmyMatrix m(3);
  m.add(0, 2, -1, 1);
  m.add(0, 2, +1, 2);
  m.add(2, 1, 0, 1);
  EXPECT_EQ(dump(m), "0 2 {-1:1,1:2}\n2 1 {0:1}\n");
}
