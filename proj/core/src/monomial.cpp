#include "ccc/monomial.hpp"

#include <string>

#include "ccc/errors.hpp"

namespace ccc {

namespace {

void check_count(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw InvalidInput("at most " + std::to_string(kMaxVariables) +
                       " variables are supported, got " + std::to_string(nvars));
  }
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  check_count(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff) {
      throw InvalidInput("exponent out of range: " + std::to_string(exponents[i]));
    }
    exps_[i] = static_cast<Exponent>(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::variable(std::size_t index, Exponent power) {
  check_count(index + 1);
  Monomial m;
  m.set(index, power);
  return m;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  check_count(nvars);
  MonomialOrder o(Kind::DegRevLex, nvars);
  for (std::size_t i = 0; i < nvars; ++i) o.weights_[i] = 1;
  return o;
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::span<const std::uint32_t> weights) {
  check_count(weights.size());
  MonomialOrder o(Kind::DegRevLex, weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) throw InvalidInput("monomial order weights must be positive");
    o.weights_[i] = weights[i];
  }
  return o;
}

MonomialOrder MonomialOrder::block_elim(std::size_t nvars) {
  check_count(nvars);
  if (nvars < 2) throw InvalidInput("block elimination order needs at least two variables");
  MonomialOrder o(Kind::BlockElim, nvars);
  for (std::size_t i = 0; i < nvars; ++i) o.weights_[i] = 1;
  return o;
}

bool MonomialOrder::is_standard_graded() const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (weights_[i] != 1) return false;
  }
  return true;
}

Ordering monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  for (std::size_t i = order.num_variables(); i < kMaxVariables; ++i) {
    if (a[i] != 0 || b[i] != 0) {
      throw RingMismatch("monomial has more variables than the order's ring");
    }
  }
  return order.compare(a, b);
}

}  // namespace ccc
