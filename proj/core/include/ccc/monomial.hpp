#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace ccc {

// Upper bound on the number of variables of any ring, including one
// auxiliary variable adjoined internally for elimination and saturation.
inline constexpr std::size_t kMaxVariables = 16;

using Exponent = std::uint16_t;

// Exponent vector over a fixed-capacity array; unused slots stay zero so
// comparisons and hashing never need the variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  // Bit i*4+k is set when exponent i is at least 2^k (k = 0..3). If a | b
  // then (mask(a) & ~mask(b)) == 0.
  std::uint64_t divmask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      Exponent e = exps_[i];
      if (e >= 1) m |= std::uint64_t{1} << (4 * i);
      if (e >= 2) m |= std::uint64_t{1} << (4 * i + 1);
      if (e >= 4) m |= std::uint64_t{1} << (4 * i + 2);
      if (e >= 8) m |= std::uint64_t{1} << (4 * i + 3);
    }
    return m;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      h ^= exps_[i];
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

// Degree reverse lexicographic order (optionally with positive integer
// variable weights defining the degree), or the block order that compares
// the exponent of variable 0 first and breaks ties by degrevlex on the
// remaining variables.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, BlockElim };

  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder weighted_degrevlex(std::span<const std::uint32_t> weights);
  static MonomialOrder block_elim(std::size_t nvars);

  Kind kind() const { return kind_; }
  std::size_t num_variables() const { return nvars_; }
  std::uint32_t weight(std::size_t i) const { return weights_[i]; }
  bool is_standard_graded() const;

  std::uint32_t weighted_degree(const Monomial& m) const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += weights_[i] * m[i];
    return d;
  }

  Ordering compare(const Monomial& a, const Monomial& b) const {
    std::size_t first = 0;
    if (kind_ == Kind::BlockElim) {
      if (a[0] != b[0]) return a[0] > b[0] ? Ordering::Greater : Ordering::Less;
      first = 1;
    }
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = first; i < nvars_; ++i) {
      da += weights_[i] * a[i];
      db += weights_[i] * b[i];
    }
    if (da != db) return da > db ? Ordering::Greater : Ordering::Less;
    for (std::size_t i = nvars_; i-- > first;) {
      if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::Greater;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

  Kind kind_;
  std::size_t nvars_;
  std::array<std::uint32_t, kMaxVariables> weights_{};
};

// Checked comparison: throws RingMismatch when either monomial uses a
// variable the order does not know about.
Ordering monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace ccc
