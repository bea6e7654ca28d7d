#pragma once

#include <string>
#include <vector>

#include "ccc/classes.hpp"
#include "ccc/groebner.hpp"
#include "ccc/parse.hpp"
#include "ccc/random.hpp"

namespace ccc::test {

inline RingPtr ring(std::vector<std::string> names, std::uint32_t p = PrimeField::kDefaultPrime) {
  return Ring::make(std::move(names), p);
}

inline RingPtr xyzw() { return ring({"x", "y", "z", "w"}); }
inline RingPtr xyz() { return ring({"x", "y", "z"}); }

inline Polynomial poly(const RingPtr& r, const std::string& text) {
  return parse_polynomial(text, r);
}

inline Ideal ideal(const RingPtr& r, const std::string& text) {
  return Ideal(r, parse_generators(text, r));
}

inline std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline const char* kTwistedCubic = "y^2 - x*z, y*z - x*w, z^2 - y*w";
inline const char* kWhitney = "x^2*w - y^2*z";
inline const char* kCensoring = "2*p0*p1*p2 + p1^2*p2 + p1*p2^2 - p0^2*p12 + p1*p2*p12";
inline const char* kBoundary = "p0*p1*p2*p12*(p0 + p1 + p2 + p12)";

// Sparse random polynomial with small exponents, not necessarily homogeneous.
inline Polynomial random_polynomial(const RingPtr& r, Rng& rng, int max_terms, int max_exp) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng.uniform(static_cast<std::uint32_t>(max_terms + 1)));
  for (int t = 0; t < count; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < r->num_variables(); ++i) {
      m.set(i, static_cast<Exponent>(rng.uniform(static_cast<std::uint32_t>(max_exp + 1))));
    }
    terms.push_back({m, rng.uniform(r->field().prime())});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

// Random homogeneous polynomial of the given degree with at most `max_terms`
// terms; may be zero.
inline Polynomial random_homogeneous(const RingPtr& r, Rng& rng, unsigned degree, int max_terms) {
  const auto basis = monomials_of_degree(r->num_variables(), degree);
  std::vector<Term> terms;
  const int count = 1 + static_cast<int>(rng.uniform(static_cast<std::uint32_t>(max_terms)));
  for (int t = 0; t < count; ++t) {
    terms.push_back({basis[rng.uniform(static_cast<std::uint32_t>(basis.size()))],
                     rng.uniform(r->field().prime())});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace ccc::test
