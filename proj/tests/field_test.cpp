#include <gtest/gtest.h>

#include "ccc/errors.hpp"
#include "ccc/field.hpp"
#include "ccc/random.hpp"

namespace ccc {
namespace {

TEST(PrimeField, InverseSmallPrime) {
  PrimeField f(7);
  EXPECT_EQ(f.inverse(1), 1u);
  EXPECT_EQ(f.inverse(3), 5u);
  EXPECT_THROW(f.inverse(0), DivisionByZero);
}

TEST(PrimeField, InverseIsInverseForEveryElement) {
  for (std::uint32_t p : {3u, 5u, 7u, 101u, 32003u}) {
    PrimeField f(p);
    for (std::uint32_t a = 1; a < std::min(p, 2000u); ++a) {
      EXPECT_EQ(f.mul(a, f.inverse(a)), 1u) << "p=" << p << " a=" << a;
    }
  }
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(2), InvalidInput);
  EXPECT_THROW(PrimeField(9), InvalidInput);
  EXPECT_THROW(PrimeField(0), InvalidInput);
  EXPECT_THROW(PrimeField(1), InvalidInput);
  EXPECT_NO_THROW(PrimeField(2147483647u));
  EXPECT_THROW(PrimeField(2147483659u), InvalidInput);
}

TEST(PrimeField, DefaultIs32003) { EXPECT_EQ(PrimeField().prime(), 32003u); }

TEST(PrimeField, CanonicalRepresentatives) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_int(15), 1u);
  EXPECT_EQ(f.add(5, 2), 0u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.to_signed(6), -1);
  EXPECT_EQ(f.to_signed(3), 3);
  EXPECT_EQ(f.div(1, 3), 5u);
}

TEST(PrimeField, IsPrime) {
  std::vector<int> primes;
  for (int n = 0; n < 60; ++n) {
    if (is_prime(static_cast<std::uint64_t>(n))) primes.push_back(n);
  }
  EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
  EXPECT_TRUE(is_prime(32003));
  EXPECT_FALSE(is_prime(32001));
}

TEST(Rng, DeterministicForSeed) {
  Rng a(42), b(42), c(43);
  std::vector<std::uint64_t> va, vb, vc;
  for (int i = 0; i < 16; ++i) {
    va.push_back(a.next());
    vb.push_back(b.next());
    vc.push_back(c.next());
  }
  EXPECT_EQ(va, vb);
  EXPECT_NE(va, vc);
}

TEST(Rng, UniformStaysInRange) {
  Rng r(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto v = r.uniform(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_EQ(derive_seed(5, {1, 2}), derive_seed(5, {1, 2}));
  EXPECT_NE(derive_seed(5, {1, 2}), derive_seed(5, {2, 1}));
  EXPECT_NE(derive_seed(5, {1}), derive_seed(6, {1}));
  EXPECT_NE(derive_seed(5, {1}), derive_seed(5, {1, 0}));
}

}  // namespace
}  // namespace ccc
