#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccc/ideal.hpp"

namespace ccc {

// Element of A_*(P^n) = Z[H]/(H^{n+1}); coefficient j multiplies H^j, so
// the index is the codimension.
class ChowClass {
 public:
  explicit ChowClass(int n);
  // Coefficients beyond H^n are dropped; missing ones are zero.
  ChowClass(int n, std::vector<BigInt> coeffs);

  static ChowClass one(int n) { return hyperplane_power(n, 0); }
  static ChowClass hyperplane_power(int n, int j);
  // (1 + d*H)^k for any integer k, truncated.
  static ChowClass linear_power(int n, const BigInt& d, int k);

  int n() const { return n_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const BigInt& c, ChowClass a);

  // Ascending codimension, e.g. "3*H^2 - 10*H^3"; "0" for the zero class.
  std::string to_string() const;

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

 private:
  int n_;
  std::vector<BigInt> coeffs_;
};

// Product truncated at H^{n+1}; throws InvalidInput on different n.
ChowClass chow_mul(const ChowClass& a, const ChowClass& b);

// sum_j (-1)^j c_j H^j.
ChowClass chow_dual(const ChowClass& a);

// sum_j c_j H^j (1 + d H)^{-j}: twist of a class by the line bundle O(d).
ChowClass chow_tensor_line(const ChowClass& a, const BigInt& d);

// Inverse of ChowClass::to_string (accepts any term order, "H" or "H^1",
// optional '*', integer coefficients). Throws ParseError.
ChowClass parse_chow(std::string_view text, int n);

}  // namespace ccc
