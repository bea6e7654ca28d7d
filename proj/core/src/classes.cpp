#include "ccc/classes.hpp"

#include <string>

#include "ccc/errors.hpp"
#include "ccc/random.hpp"
#include "parallel.hpp"

namespace ccc {

namespace {

// Stream tags for derive_seed.
constexpr std::uint64_t kResidualStream = 1;
constexpr std::uint64_t kVerifyStream = 2;
constexpr std::uint64_t kSubsetStream = 3;

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

BigInt power(const BigInt& base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int ambient_dim(const Ideal& i) { return static_cast<int>(i.ring()->num_variables()) - 1; }

ChowClass chow_from_degrees(int n, int k, const std::vector<BigInt>& degrees) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n + 1));
  for (int p = k; p >= 0; --p) coeffs[static_cast<std::size_t>(n - p)] = degrees[k - p];
  return ChowClass(n, std::move(coeffs));
}

// The residual identity d^e = R_e + sum_q C(e, q - (n - e)) d^{q - (n - e)} s_q.
void check_round_trip(int n, int k, int d, const std::vector<BigInt>& residuals,
                      const std::vector<BigInt>& segre) {
  for (int p = k; p >= 0; --p) {
    const int e = n - p;
    BigInt rhs = residuals[static_cast<std::size_t>(k - p)];
    for (int q = p; q <= k; ++q) {
      rhs += binomial(e, q - p) * power(d, q - p) * segre[static_cast<std::size_t>(k - q)];
    }
    if (rhs != power(d, e)) {
      throw InvariantViolation("residual round trip failed for e = " + std::to_string(e));
    }
  }
}

ClassReport segre_once(const Ideal& i, const RandomPolicy& policy, unsigned jobs) {
  const int n = ambient_dim(i);
  ClassReport report;
  report.kind = ClassKind::Segre;
  report.n = n;
  report.seed = policy.seed;
  report.chow = ChowClass(n);
  if (i.is_zero()) {
    report.k = n;
    report.degrees.assign(static_cast<std::size_t>(n + 1), BigInt(0));
    report.degrees.front() = 1;
    report.chow = ChowClass::one(n);
    return report;
  }
  const HilbertData& hd = proj_dim_and_degree(i);
  if (hd.proj_dim < 0) return report;
  const int k = hd.proj_dim;
  const int d = i.max_degree();
  report.k = k;
  report.d = d;

  std::vector<ResidualOutcome> outcomes(static_cast<std::size_t>(k + 1));
  detail::parallel_for(outcomes.size(), jobs, [&](std::size_t idx) {
    outcomes[idx] = residual_degree(i, d, n - k + static_cast<int>(idx), policy);
  });
  std::vector<BigInt> residuals;
  for (const auto& o : outcomes) {
    residuals.push_back(o.degree);
    report.retries += o.retries;
  }
  report.degrees = segre_from_residuals(n, k, d, residuals);
  check_round_trip(n, k, d, residuals, report.degrees);
  report.chow = chow_from_degrees(n, k, report.degrees);
  return report;
}

struct CsmOutcome {
  ChowClass chow;
  int retries = 0;
};

CsmOutcome csm_hypersurface_impl(const Polynomial& f, const RandomPolicy& policy, unsigned jobs) {
  if (f.is_zero()) throw InvalidInput("CSM class of the zero polynomial");
  if (!f.is_homogeneous()) throw InvalidInput("CSM class of a non-homogeneous polynomial");
  const int n = static_cast<int>(f.ring()->num_variables()) - 1;
  const int d = f.total_degree();
  if (d == 0) return {ChowClass(n), 0};  // nonzero constant: empty hypersurface
  if (static_cast<std::uint32_t>(d) % f.ring()->field().prime() == 0) {
    throw InvalidInput("field characteristic divides the hypersurface degree " +
                       std::to_string(d));
  }
  const BigInt dd = d;
  // s(V(f)) = dH / (1 + dH)
  const ChowClass hyper_segre =
      dd * (ChowClass::hyperplane_power(n, 1) * ChowClass::linear_power(n, dd, -1));
  const ClassReport sing = segre_class(jacobian_ideal(f), policy, jobs);
  const ChowClass correction = ChowClass::linear_power(n, dd, -1) *
                               chow_tensor_line(chow_dual(sing.chow), dd);
  return {ChowClass::linear_power(n, 1, n + 1) * (hyper_segre + correction), sing.retries};
}

ClassReport csm_once(const Ideal& i, const RandomPolicy& policy, unsigned jobs) {
  const int n = ambient_dim(i);
  ClassReport report;
  report.kind = ClassKind::Csm;
  report.n = n;
  report.seed = policy.seed;
  if (i.is_zero()) {
    report.k = n;
    report.chow = ChowClass::linear_power(n, 1, n + 1);
  } else if (is_projectively_empty(i)) {
    report.k = -1;
    report.chow = ChowClass(n);
  } else {
    report.k = proj_dim_and_degree(i).proj_dim;
    const auto& gens = i.generators();
    const std::size_t m = gens.size();
    if (m > 8) {
      report.warnings.push_back("inclusion-exclusion over " + std::to_string(m) +
                                " generators needs " + std::to_string((1ull << m) - 1) +
                                " hypersurface computations");
    }
    if (m >= 63) throw InvalidInput("too many generators for inclusion-exclusion");
    const std::size_t subsets = (std::size_t{1} << m) - 1;
    std::vector<CsmOutcome> terms(subsets, CsmOutcome{ChowClass(n), 0});
    // Subsets run in parallel; the hypersurface computations inside each
    // stay sequential.
    detail::parallel_for(subsets, jobs, [&](std::size_t idx) {
      const std::uint64_t mask = idx + 1;
      Polynomial product = Polynomial::constant(i.ring(), 1);
      for (std::size_t g = 0; g < m; ++g) {
        if (mask & (std::uint64_t{1} << g)) product *= gens[g];
      }
      RandomPolicy sub = policy;
      sub.seed = derive_seed(policy.seed, {kSubsetStream, mask});
      sub.verify = false;
      terms[idx] = csm_hypersurface_impl(product, sub, 1);
    });
    report.chow = ChowClass(n);
    for (std::size_t idx = 0; idx < subsets; ++idx) {
      const int size = __builtin_popcountll(idx + 1);
      if (size % 2 == 1) {
        report.chow += terms[idx].chow;
      } else {
        report.chow -= terms[idx].chow;
      }
      report.retries += terms[idx].retries;
    }
    for (int j = 0; j < n - report.k; ++j) {
      if (report.chow.coeff(j) != 0) {
        report.warnings.push_back(
            "CSM class has a component above the dimension of X; a generator product may "
            "not be squarefree");
        break;
      }
    }
  }
  report.degrees = degrees_from_chow(report.chow, report.k);
  report.euler = report.chow.coeff(n);
  return report;
}

RandomPolicy verification_policy(const RandomPolicy& policy) {
  RandomPolicy v = policy;
  v.seed = derive_seed(policy.seed, {kVerifyStream});
  v.verify = false;
  return v;
}

bool same_values(const ClassReport& a, const ClassReport& b) {
  return a.k == b.k && a.d == b.d && a.degrees == b.degrees && a.chow == b.chow &&
         a.euler == b.euler;
}

}  // namespace

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Segre:
      return "segre";
    case ClassKind::Chern:
      return "chern";
    case ClassKind::Csm:
      return "csm";
  }
  return "unknown";
}

std::vector<BigInt> degrees_from_chow(const ChowClass& chow, int k) {
  std::vector<BigInt> out;
  for (int p = k; p >= 0; --p) out.push_back(chow.coeff(chow.n() - p));
  return out;
}

ResidualOutcome residual_degree(const Ideal& i, int d, int e, const RandomPolicy& policy) {
  const int n = ambient_dim(i);
  if (i.is_zero()) throw InvalidInput("residual of the zero ideal");
  const HilbertData& hd = proj_dim_and_degree(i);
  if (hd.proj_dim < 0) throw InvalidInput("residual of a projectively empty scheme");
  if (e < n - hd.proj_dim || e > n) {
    throw InvalidInput("number of hypersurfaces " + std::to_string(e) + " outside [" +
                       std::to_string(n - hd.proj_dim) + ", " + std::to_string(n) + "]");
  }
  if (d < i.max_degree()) throw InvalidInput("working degree below a generator degree");

  Rng rng(derive_seed(policy.seed, {kResidualStream, static_cast<std::uint64_t>(e)}));
  for (int attempt = 0; attempt <= policy.max_retries; ++attempt) {
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<std::size_t>(e));
    for (int r = 0; r < e; ++r) gens.push_back(random_ideal_element(i, d, rng));
    const Polynomial h = random_ideal_element(i, d, rng);
    const HilbertData residual = saturation_hilbert(Ideal(i.ring(), std::move(gens)), h);
    if (residual.proj_dim < 0) return {0, attempt};
    if (residual.proj_dim == n - e) return {residual.degree, attempt};
    if (residual.proj_dim < n - e) return {0, attempt};
  }
  throw GenericityFailure("residual for " + std::to_string(e) +
                              " hypersurfaces kept a component of excess dimension after " +
                              std::to_string(policy.max_retries) + " retries",
                          policy.seed);
}

std::vector<BigInt> segre_from_residuals(int n, int k, int d,
                                         const std::vector<BigInt>& residuals) {
  if (k < 0 || k > n || residuals.size() != static_cast<std::size_t>(k + 1)) {
    throw InvalidInput("expected " + std::to_string(k + 1) + " residual degrees");
  }
  std::vector<BigInt> s(static_cast<std::size_t>(k + 1));  // s[k - p] = s_p
  for (int p = k; p >= 0; --p) {
    const int e = n - p;
    BigInt value = power(d, e) - residuals[static_cast<std::size_t>(k - p)];
    for (int q = p + 1; q <= k; ++q) {
      value -= binomial(e, q - p) * power(d, q - p) * s[static_cast<std::size_t>(k - q)];
    }
    s[static_cast<std::size_t>(k - p)] = value;
  }
  return s;
}

ClassReport segre_class(const Ideal& i, const RandomPolicy& policy, unsigned jobs) {
  ClassReport report = segre_once(i, policy, jobs);
  if (policy.verify) {
    ClassReport check = segre_once(i, verification_policy(policy), jobs);
    if (!same_values(report, check)) {
      throw InvariantViolation("verification run with an independent seed disagrees");
    }
  }
  return report;
}

ClassReport chern_class(const Ideal& i, const RandomPolicy& policy, unsigned jobs) {
  ClassReport report = segre_class(i, policy, jobs);
  report.kind = ClassKind::Chern;
  report.chow = ChowClass::linear_power(report.n, 1, report.n + 1) * report.chow;
  report.degrees = degrees_from_chow(report.chow, report.k);
  return report;
}

ChowClass csm_hypersurface(const Polynomial& f, const RandomPolicy& policy, unsigned jobs) {
  CsmOutcome out = csm_hypersurface_impl(f, policy, jobs);
  if (policy.verify) {
    CsmOutcome check = csm_hypersurface_impl(f, verification_policy(policy), jobs);
    if (!(check.chow == out.chow)) {
      throw InvariantViolation("verification run with an independent seed disagrees");
    }
  }
  return out.chow;
}

ClassReport csm_class(const Ideal& i, const RandomPolicy& policy, unsigned jobs) {
  ClassReport report = csm_once(i, policy, jobs);
  if (policy.verify) {
    ClassReport check = csm_once(i, verification_policy(policy), jobs);
    if (!same_values(report, check)) {
      throw InvariantViolation("verification run with an independent seed disagrees");
    }
  }
  return report;
}

BigInt euler_characteristic(const Ideal& i, const RandomPolicy& policy, unsigned jobs) {
  return *csm_class(i, policy, jobs).euler;
}

BigInt euler_complement(const Ideal& i, const Ideal& j, const RandomPolicy& policy,
                        unsigned jobs) {
  return euler_characteristic(i, policy, jobs) -
         euler_characteristic(ideal_sum(i, j), policy, jobs);
}

}  // namespace ccc
