#pragma once

#include <cstdint>

namespace ccc {

// Prime modulus of the coefficient field. Elements are plain uint32_t
// values in [0, p); the field object carries the arithmetic.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  // Throws InvalidInput unless p is a prime with 3 <= p < 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  // Throws DivisionByZero for a == 0.
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inverse(b));
  }

  // Reduces an arbitrary signed integer into [0, p).
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  // Symmetric lift into (-p/2, p/2], used when printing.
  std::int64_t to_signed(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace ccc
