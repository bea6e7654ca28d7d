#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/field.hpp"
#include "ccc/monomial.hpp"

namespace ccc {

class Rng;

// Polynomial ring F_p[x_0, ..., x_{v-1}] together with the monomial order
// its polynomials are sorted by. Variables are ordered x_0 > x_1 > ... in
// declaration order.
class Ring {
 public:
  Ring(std::vector<std::string> names, PrimeField field, MonomialOrder order);

  // Standard graded degrevlex ring. Allows at most kMaxVariables - 1
  // variables, leaving one slot for internal auxiliary variables.
  static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                          std::uint32_t prime = PrimeField::kDefaultPrime);

  std::size_t num_variables() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  // Same variables and field, different order.
  std::shared_ptr<const Ring> with_order(const MonomialOrder& order) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Throws RingMismatch unless both rings are equal.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  std::uint32_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse distributed polynomial. Terms are strictly descending in the
// ring's monomial order, coefficients are nonzero, monomials distinct.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Canonicalizes: sorts, merges duplicates, drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Trusts the caller that `terms` is already canonical.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }

  // Require a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  std::uint32_t leading_coeff() const { return terms_.front().coeff; }

  // Maximal total (unweighted) degree; -1 for zero.
  int total_degree() const;
  // All terms share one total degree (the zero polynomial counts).
  bool is_homogeneous() const;
  // All terms share one degree in the ring order's weights.
  bool is_weighted_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  Polynomial pow(unsigned k) const;
  // Scales so the leading coefficient is 1. Zero stays zero.
  Polynomial monic() const;

  // Moves the polynomial into a ring with the same variables and a
  // different order (re-sorts terms).
  Polynomial reordered(RingPtr target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t var_index);

// Exact quotient f / g; throws InvalidInput if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// All monomials of the given total degree in the first nvars variables,
// in lexicographic order of their exponent vectors (x_0 power highest
// first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

// Dense form: each monomial of `degree` gets an independent uniform field
// coefficient, drawn in the order of monomials_of_degree. The whole form
// is redrawn if every coefficient came out zero.
Polynomial random_form(unsigned degree, const RingPtr& ring, Rng& rng);

}  // namespace ccc
