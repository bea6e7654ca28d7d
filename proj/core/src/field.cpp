#include "ccc/field.hpp"

#include <string>

#include "ccc/errors.hpp"

namespace ccc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw InvalidInput("field characteristic " + std::to_string(p) +
                       " is not a prime in [3, 2^31)");
  }
}

std::uint32_t PrimeField::inverse(std::uint32_t a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

}  // namespace ccc
