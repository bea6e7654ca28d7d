#include <gtest/gtest.h>

#include "ccc/chow.hpp"
#include "ccc/errors.hpp"
#include "support.hpp"

namespace ccc {
namespace {

using test::ints;

ChowClass cls(int n, std::initializer_list<long> c) { return ChowClass(n, ints(c)); }

ChowClass random_class(Rng& rng, int n) {
  std::vector<BigInt> c;
  for (int j = 0; j <= n; ++j) c.emplace_back(static_cast<long>(rng.uniform(2001)) - 1000);
  return ChowClass(n, std::move(c));
}

TEST(Chow, Multiplication) {
  EXPECT_EQ(chow_mul(cls(2, {1, 1}), cls(2, {1, -1})), cls(2, {1, 0, -1}));
  ChowClass h1 = cls(2, {1, 1});
  EXPECT_EQ(h1 * h1 * h1, cls(2, {1, 3, 3}));
  ChowClass a = cls(2, {4, -2, 7});
  EXPECT_EQ(a * ChowClass::one(2), a);
  EXPECT_THROW(chow_mul(cls(2, {1}), cls(3, {1})), InvalidInput);
}

TEST(Chow, Dual) {
  EXPECT_EQ(chow_dual(ChowClass::hyperplane_power(3, 1)), cls(3, {0, -1}));
  EXPECT_EQ(chow_dual(ChowClass::hyperplane_power(3, 2)), ChowClass::hyperplane_power(3, 2));
  ChowClass a = cls(3, {2, 3, -5, 7});
  EXPECT_EQ(chow_dual(chow_dual(a)), a);
}

TEST(Chow, TensorLine) {
  EXPECT_EQ(chow_tensor_line(ChowClass::hyperplane_power(2, 1), 3), cls(2, {0, 1, -3}));
  EXPECT_EQ(chow_tensor_line(ChowClass::hyperplane_power(2, 2), 3), ChowClass::hyperplane_power(2, 2));
  ChowClass a = cls(2, {5, -1, 2});
  EXPECT_EQ(chow_tensor_line(a, 0), a);
}

TEST(Chow, LinearPower) {
  EXPECT_EQ(ChowClass::linear_power(3, 1, 4), cls(3, {1, 4, 6, 4}));
  EXPECT_EQ(ChowClass::linear_power(3, 2, -1), cls(3, {1, -2, 4, -8}));
  EXPECT_EQ(ChowClass::linear_power(3, 2, 0), ChowClass::one(3));
  for (int k = -4; k <= 4; ++k) {
    EXPECT_EQ(ChowClass::linear_power(4, 3, k) * ChowClass::linear_power(4, 3, -k), ChowClass::one(4));
  }
}

TEST(Chow, Printing) {
  EXPECT_EQ(cls(3, {0, 0, 3, 2}).to_string(), "3*H^2 + 2*H^3");
  EXPECT_EQ(cls(3, {0, 0, 3, -10}).to_string(), "3*H^2 - 10*H^3");
  EXPECT_EQ(cls(3, {1, 4, 6, 4}).to_string(), "1 + 4*H + 6*H^2 + 4*H^3");
  EXPECT_EQ(cls(2, {0, -1, 1}).to_string(), "-H + H^2");
  EXPECT_EQ(ChowClass(3).to_string(), "0");
}

TEST(Chow, ParseAcceptsAnyTermOrder) {
  EXPECT_EQ(parse_chow("2H^3 + 3H^2", 3), cls(3, {0, 0, 3, 2}));
  EXPECT_EQ(parse_chow("2*H^3 + 3*H^2", 3), cls(3, {0, 0, 3, 2}));
  EXPECT_EQ(parse_chow("-H + 1 + H^1", 2), cls(2, {1}));
  EXPECT_EQ(parse_chow("0", 2), ChowClass(2));
  EXPECT_THROW(parse_chow("H^4", 3), ParseError);
  EXPECT_THROW(parse_chow("2*", 3), ParseError);
}

TEST(Chow, PropertiesOnRandomClasses) {
  Rng rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform(6));
    ChowClass a = random_class(rng, n);
    const BigInt d1 = static_cast<long>(rng.uniform(11)) - 5;
    const BigInt d2 = static_cast<long>(rng.uniform(11)) - 5;
    EXPECT_EQ(chow_dual(chow_dual(a)), a);
    EXPECT_EQ(chow_tensor_line(chow_tensor_line(a, d1), d2), chow_tensor_line(a, d1 + d2));
    EXPECT_EQ(chow_tensor_line(chow_tensor_line(a, d1), -d1), a);
    EXPECT_EQ(parse_chow(a.to_string(), n), a);
    ChowClass b = random_class(rng, n);
    EXPECT_EQ(chow_dual(a * b), chow_dual(a) * chow_dual(b));
    EXPECT_EQ(a * b, b * a);
  }
}

}  // namespace
}  // namespace ccc
