#pragma once

#include <span>
#include <vector>

#include "ccc/polynomial.hpp"

namespace ccc {

// Reduced Gröbner basis: monic elements, none of whose terms is divisible
// by the leading monomial of another element, sorted by descending leading
// monomial. Unique for a given ideal and monomial order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const {
    return elements_.size() == 1 && elements_.front().is_constant();
  }
  std::vector<Monomial> leading_monomials() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

// Buchberger's algorithm with the normal (sugar) selection strategy and the
// Gebauer-Möller installation of the product and chain criteria. Works
// under the order of the generators' ring; zero generators are ignored.
GroebnerBasis buchberger_reduced_gb(std::span<const Polynomial> generators);

// Same, after moving the generators into a ring with the given order.
GroebnerBasis buchberger_reduced_gb(std::span<const Polynomial> generators,
                                    const MonomialOrder& order);

// Fully reduced remainder of f modulo gb.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb);

// Throws RingMismatch if the bases use different rings or orders.
bool ideal_equality(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace ccc
