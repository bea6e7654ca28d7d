#pragma once

#include <unordered_map>
#include <vector>

#include "support.hpp"

namespace ccc::test {

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim (R/I)_t from HS(t) = N(t)/(1-t)^v.
inline BigInt hilbert_function(const IntPoly& numerator, std::size_t v, long t) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const long j = t - static_cast<long>(i);
    if (j >= 0) sum += numerator[i] * binomial(j + static_cast<long>(v) - 1, j);
  }
  return sum;
}

// Rank over F_p of a dense matrix, by Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint32_t inv = field.inverse(rows[rank][c]);
    for (auto& x : rows[rank]) x = field.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint32_t factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

// dim (R/I)_t by spanning I_t with monomial multiples of the generators.
inline long brute_force_hilbert(const std::vector<Polynomial>& gens, const RingPtr& r, unsigned t) {
  const auto basis = monomials_of_degree(r->num_variables(), t);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    const int dg = g.total_degree();
    if (dg < 0 || static_cast<unsigned>(dg) > t) continue;
    for (const auto& m : monomials_of_degree(r->num_variables(), t - static_cast<unsigned>(dg))) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& term : g.terms()) row[column.at(term.monomial * m)] = term.coeff;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long>(basis.size() - rank_mod_p(std::move(rows), r->field()));
}

// Random ideal with at most 3 generators of degree at most 3 in 2 to 4
// variables, drawn from `seed`.
inline Ideal random_small_ideal(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t nv = 2 + rng.uniform(3);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nv; ++i) names.push_back("x" + std::to_string(i));
  auto r = ring(names);
  std::vector<Polynomial> gens;
  const int m = 1 + static_cast<int>(rng.uniform(3));
  for (int k = 0; k < m; ++k) {
    const unsigned d = 1 + rng.uniform(3);
    gens.push_back(rng.uniform(3) == 0 ? random_form(d, r, rng) : random_homogeneous(r, rng, d, 3));
  }
  return Ideal(r, gens);
}

// Compares the Hilbert function from the numerator with the linear-algebra
// oracle for t = 0..6.
inline bool hilbert_agrees(const Ideal& i) {
  const std::size_t nv = i.ring()->num_variables();
  for (unsigned t = 0; t <= 6; ++t) {
    if (hilbert_function(i.hilbert().numerator, nv, t) != brute_force_hilbert(i.generators(), i.ring(), t)) {
      return false;
    }
  }
  return true;
}

// The identity d^e = R_e + sum_q C(e, q-p) d^{q-p} s_q for every e used by
// a Segre computation, with residuals recomputed under the same policy.
inline bool residual_round_trip(const Ideal& i, const ClassReport& s, const RandomPolicy& policy) {
  if (s.k < 0 || !s.d) return true;
  const int n = s.n, k = s.k, d = *s.d;
  for (int p = k; p >= 0; --p) {
    const int e = n - p;
    BigInt rhs = residual_degree(i, d, e, policy).degree;
    for (int q = p; q <= k; ++q) {
      BigInt dp = 1;
      for (int t = 0; t < q - p; ++t) dp *= d;
      rhs += binomial(e, q - p) * dp * s.degrees[static_cast<std::size_t>(k - q)];
    }
    BigInt de = 1;
    for (int t = 0; t < e; ++t) de *= d;
    if (rhs != de) return false;
  }
  return true;
}

}  // namespace ccc::test
