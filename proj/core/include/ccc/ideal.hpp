#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <span>
#include <vector>

#include "ccc/groebner.hpp"
#include "ccc/polynomial.hpp"

namespace ccc {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate integer polynomial, index = power of t.
using IntPoly = std::vector<BigInt>;

// Hilbert series data of R/I for a homogeneous ideal I in v variables,
// HS(t) = numerator(t) / (1 - t)^v.
struct HilbertData {
  IntPoly numerator;
  // Dimension of Proj(R/I); -1 when the scheme is empty.
  int proj_dim = -1;
  // Degree of the top-dimensional part; 0 when empty.
  BigInt degree = 0;
};

// Homogeneous ideal of a standard graded degrevlex ring. Generators are
// immutable; the reduced Gröbner basis and Hilbert data are computed on
// first use and cached (thread-safe, write once).
class Ideal {
 public:
  // Zero generators are dropped. Throws InvalidInput naming the first
  // non-homogeneous generator (1-based), RingMismatch on mixed rings.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  // Maximal generator degree; -1 for the zero ideal.
  int max_degree() const;

  const GroebnerBasis& groebner() const;
  const HilbertData& hilbert() const;

  bool contains(const Polynomial& f) const;
  bool is_unit() const { return groebner().is_unit_ideal(); }

  std::string to_string() const;

 private:
  struct Cache;
  Ideal(RingPtr ring, std::vector<Polynomial> generators, GroebnerBasis gb);

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;

  friend Ideal intersection(const Ideal&, const Ideal&);
};

// Same ideal (compares reduced Gröbner bases).
bool same_ideal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

// I ∩ J by eliminating t from t*I + (1-t)*J.
Ideal intersection(const Ideal& i, const Ideal& j);

// (I : f) = (I ∩ (f)) / f. f must be nonzero and homogeneous.
Ideal quotient_by_poly(const Ideal& i, const Polynomial& f);

// (I : J) as the intersection of (I : g) over the generators g of J.
Ideal quotient_by_ideal(const Ideal& i, const Ideal& j);

// (I : f^∞). Adjoins y of weight deg f, saturates I + (y - f) by y using
// the weighted degrevlex order with y last, and substitutes y = f back.
Ideal saturation_by_poly(const Ideal& i, const Polynomial& f);

// Hilbert data of R/(I : f^∞) read off the same computation, without
// forming generators in R or a second Gröbner basis.
HilbertData saturation_hilbert(const Ideal& i, const Polynomial& f);

// (J : I^∞) as the intersection of (J : f^∞) over the generators f of I.
Ideal saturation_by_ideal(const Ideal& j, const Ideal& i);

// Hilbert numerator of R/(m_1, ..., m_r) over v standard graded variables,
// by the pivot recursion N(M) = N(M + (p)) + t^deg(p) * N(M : p).
IntPoly hilbert_numerator(std::span<const Monomial> monomials, std::size_t v);

// Same for variables of the given positive weights; the series is then
// N(t) / prod_i (1 - t^{w_i}).
IntPoly hilbert_numerator(std::span<const Monomial> monomials,
                          std::span<const std::uint32_t> weights);

// Dimension and degree from a standard graded numerator over v variables.
HilbertData hilbert_data_from_numerator(IntPoly numerator, std::size_t v);

// Dimension and degree of Proj(R/I). The zero ideal gives all of P^n
// (dimension n, degree 1); the unit ideal dimension -1.
HilbertData proj_dim_and_degree(const Ideal& i);

bool is_projectively_empty(const Ideal& i);

// (f, df/dx_0, ..., df/dx_n) for a nonzero homogeneous f.
Ideal jacobian_ideal(const Polynomial& f);

// sum_i u_i * f_i with u_i = random_form(d - deg f_i), redrawn while zero.
// Throws InvalidInput if d is below some generator degree or I = 0.
Polynomial random_ideal_element(const Ideal& i, int d, Rng& rng);

}  // namespace ccc
