#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccc/chow.hpp"
#include "ccc/ideal.hpp"

namespace ccc {

// How random hypersurfaces are drawn and how hard to retry. Identical
// inputs and seed give identical results, retries included.
struct RandomPolicy {
  std::uint64_t seed = 0;
  int max_retries = 5;
  // Recompute everything from an independent derived seed and require the
  // same answer.
  bool verify = false;
};

enum class ClassKind { Segre, Chern, Csm };

std::string to_string(ClassKind kind);

// Degrees of a characteristic class of X ⊂ P^n, both as the list
// [a_k, ..., a_0] by descending dimension and as the pushforward
// sum_p a_p H^{n-p} in A_*(P^n).
struct ClassReport {
  ClassKind kind = ClassKind::Segre;
  int n = 0;
  // dim X; -1 for the empty scheme (then `degrees` is empty).
  int k = -1;
  // Working hypersurface degree (Segre and Chern classes of nonzero ideals).
  std::optional<int> d;
  std::vector<BigInt> degrees;
  ChowClass chow{0};
  std::uint64_t seed = 0;
  // Coefficient of H^n (CSM classes only).
  std::optional<BigInt> euler;
  // Genericity retries spent over the whole computation.
  int retries = 0;
  std::vector<std::string> warnings;

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

// Reads the degree list for dimensions k..0 off a pushforward.
std::vector<BigInt> degrees_from_chow(const ChowClass& chow, int k);

struct ResidualOutcome {
  BigInt degree;
  int retries = 0;
};

// Degree of the residual to X = V(I) in the intersection of e random
// degree-d hypersurfaces containing X: with J = (g_1, ..., g_e) random
// elements of I_d, the residual ideal is (J : I^∞), which for a further
// random h in I_d equals (J : h^∞). Empty or too small residuals count 0;
// a residual of dimension above n - e is a genericity failure and is
// redrawn, up to policy.max_retries times, before GenericityFailure.
ResidualOutcome residual_degree(const Ideal& i, int d, int e, const RandomPolicy& policy);

// Solves d^{n-p} = R_{n-p} + sum_{q=p}^{k} C(n-p, q-p) d^{q-p} s_q for
// p = k, ..., 0. `residuals` is [R_{n-k}, ..., R_n]; returns [s_k, ..., s_0].
std::vector<BigInt> segre_from_residuals(int n, int k, int d, const std::vector<BigInt>& residuals);

// Degrees of s(X, P^n). `jobs` > 1 computes residuals concurrently; the
// result does not depend on it.
ClassReport segre_class(const Ideal& i, const RandomPolicy& policy, unsigned jobs = 1);

// (1 + H)^{n+1} * s(X, P^n): c(T_X) for smooth X, the Chern-Fulton class
// otherwise.
ClassReport chern_class(const Ideal& i, const RandomPolicy& policy, unsigned jobs = 1);

// Pushforward of c_SM(V(f)) for a squarefree form f of degree d, from the
// Segre class of the singularity subscheme Y = V(jacobian_ideal(f)):
//   c_SM = (1+H)^{n+1} ( dH/(1+dH) + (1+dH)^{-1} (s(Y)^dual ⊗ O(d)) ).
ChowClass csm_hypersurface(const Polynomial& f, const RandomPolicy& policy, unsigned jobs = 1);

// c_SM(V(f_1, ..., f_m)) by inclusion-exclusion over the hypersurfaces
// V(prod_{i in S} f_i), S a nonempty subset of the generators.
ClassReport csm_class(const Ideal& i, const RandomPolicy& policy, unsigned jobs = 1);

BigInt euler_characteristic(const Ideal& i, const RandomPolicy& policy, unsigned jobs = 1);

// χ(V(I) \ V(J)) = χ(V(I)) - χ(V(I + J)).
BigInt euler_complement(const Ideal& i, const Ideal& j, const RandomPolicy& policy,
                        unsigned jobs = 1);

}  // namespace ccc
