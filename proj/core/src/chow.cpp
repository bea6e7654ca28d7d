#include "ccc/chow.hpp"

#include <cctype>

#include "ccc/errors.hpp"

namespace ccc {

ChowClass::ChowClass(int n) : n_(n), coeffs_(static_cast<std::size_t>(n + 1)) {
  if (n < 0) throw InvalidInput("ambient dimension must be nonnegative");
}

ChowClass::ChowClass(int n, std::vector<BigInt> coeffs) : ChowClass(n) {
  for (std::size_t j = 0; j < coeffs.size() && j < coeffs_.size(); ++j) {
    coeffs_[j] = std::move(coeffs[j]);
  }
}

ChowClass ChowClass::hyperplane_power(int n, int j) {
  ChowClass c(n);
  if (j >= 0 && j <= n) c.coeffs_[static_cast<std::size_t>(j)] = 1;
  return c;
}

ChowClass ChowClass::linear_power(int n, const BigInt& d, int k) {
  ChowClass c(n);
  if (k >= 0) {
    // binomial expansion, C(k, j) d^j
    BigInt binom = 1, dpow = 1;
    for (int j = 0; j <= n && j <= k; ++j) {
      c.coeffs_[static_cast<std::size_t>(j)] = binom * dpow;
      binom = binom * (k - j) / (j + 1);
      dpow *= d;
    }
  } else {
    // (1 + dH)^{-m} = sum_j C(m + j - 1, j) (-d)^j H^j
    const int m = -k;
    BigInt binom = 1, dpow = 1;
    for (int j = 0; j <= n; ++j) {
      c.coeffs_[static_cast<std::size_t>(j)] = binom * dpow;
      binom = binom * (m + j) / (j + 1);
      dpow *= -d;
    }
  }
  return c;
}

bool ChowClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  if (n_ != other.n_) throw InvalidInput("Chow classes of different projective spaces");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  if (n_ != other.n_) throw InvalidInput("Chow classes of different projective spaces");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  if (a.n_ != b.n_) throw InvalidInput("Chow classes of different projective spaces");
  ChowClass out(a.n_);
  for (int i = 0; i <= a.n_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= a.n_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

ChowClass operator*(const BigInt& c, ChowClass a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

std::string ChowClass::to_string() const {
  std::string s;
  for (int j = 0; j <= n_; ++j) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (j == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += "H";
    if (j > 1) s += "^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

ChowClass chow_mul(const ChowClass& a, const ChowClass& b) { return a * b; }

ChowClass chow_dual(const ChowClass& a) {
  std::vector<BigInt> c = a.coeffs();
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return ChowClass(a.n(), std::move(c));
}

ChowClass chow_tensor_line(const ChowClass& a, const BigInt& d) {
  ChowClass out(a.n());
  for (int j = 0; j <= a.n(); ++j) {
    if (a.coeff(j) == 0) continue;
    out += a.coeff(j) * (ChowClass::hyperplane_power(a.n(), j) *
                         ChowClass::linear_power(a.n(), d, -j));
  }
  return out;
}

ChowClass parse_chow(std::string_view text, int n) {
  if (n < 0) throw InvalidInput("ambient dimension must be nonnegative");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n + 1));
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, 1, pos + 1); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&]() -> std::string {
    std::string d;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      d += text[pos++];
    }
    return d;
  };
  skip();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  for (;;) {
    skip();
    BigInt coeff = 1;
    std::string num = digits();
    bool have_num = !num.empty();
    if (have_num) coeff = BigInt(num);
    skip();
    int power = 0;
    if (have_num && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != 'H') fail("expected 'H'");
    }
    if (pos < text.size() && text[pos] == 'H') {
      ++pos;
      power = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        std::string e = digits();
        if (e.empty()) fail("expected an exponent");
        power = std::stoi(e);
      }
    } else if (!have_num) {
      fail("expected a term");
    }
    if (power > n) fail("power of H exceeds the ambient dimension");
    coeffs[static_cast<std::size_t>(power)] += negative ? BigInt(-coeff) : coeff;
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') fail("expected '+' or '-'");
    negative = text[pos] == '-';
    ++pos;
  }
  return ChowClass(n, std::move(coeffs));
}

}  // namespace ccc
