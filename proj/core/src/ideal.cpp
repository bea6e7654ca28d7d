#include "ccc/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <string>

#include "ccc/errors.hpp"
#include "ccc/random.hpp"

namespace ccc {

struct Ideal::Cache {
  std::once_flag gb_once;
  std::optional<GroebnerBasis> gb;
  std::once_flag hilbert_once;
  std::optional<HilbertData> hilbert;
};

namespace {

void require_standard_ring(const Ring& ring) {
  if (ring.order().kind() != MonomialOrder::Kind::DegRevLex ||
      !ring.order().is_standard_graded()) {
    throw InvalidInput("ideals live in standard graded degrevlex rings");
  }
}

// Copies f into `target`, whose variables are those of f's ring with
// `offset` extra variables in front (and possibly extra ones at the end).
Polynomial embed(const Polynomial& f, const RingPtr& target, std::size_t offset) {
  const std::size_t v = f.ring()->num_variables();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < v; ++i) m.set(i + offset, t.monomial[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// Inverse of embed for polynomials not involving the dropped variables.
Polynomial project(const Polynomial& f, const RingPtr& target, std::size_t offset) {
  const std::size_t v = target->num_variables();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < v; ++i) m.set(i, t.monomial[i + offset]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// p * (1 - t^k)
IntPoly times_one_minus(const IntPoly& p, std::uint32_t k) {
  IntPoly out(p.size() + k);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + k] -= p[i];
  }
  return trim(std::move(out));
}

void add_shifted(IntPoly& acc, const IntPoly& p, std::uint32_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

// Exact division by (1 - t^k); nullopt if it does not divide.
std::optional<IntPoly> divide_one_minus(const IntPoly& p, std::uint32_t k) {
  if (p.empty()) return IntPoly{};
  if (p.size() <= k) return std::nullopt;
  IntPoly q(p.size() - k);
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = p[i] + (i >= k ? q[i - k] : BigInt(0));
  }
  // remaining coefficients must match -q shifted by k
  for (std::size_t i = q.size(); i < p.size(); ++i) {
    BigInt expect = (i >= k && i - k < q.size()) ? BigInt(-q[i - k]) : BigInt(0);
    if (p[i] != expect) return std::nullopt;
  }
  return q;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool divisible = false;
    for (const auto& k : out) {
      if (k.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) out.push_back(m);
  }
  return out;
}

std::uint32_t weighted(const Monomial& m, std::span<const std::uint32_t> w) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m[i];
  return d;
}

IntPoly numerator_rec(std::vector<Monomial> gens, std::span<const std::uint32_t> w) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return IntPoly{1};
  if (gens.front().is_one()) return IntPoly{};
  const std::size_t v = w.size();
  std::vector<std::size_t> uses(v, 0);
  for (const auto& m : gens) {
    for (std::size_t i = 0; i < v; ++i) {
      if (m[i] != 0) ++uses[i];
    }
  }
  std::size_t pivot_var = 0;
  for (std::size_t i = 1; i < v; ++i) {
    if (uses[i] > uses[pivot_var]) pivot_var = i;
  }
  if (uses[pivot_var] <= 1) {
    // pairwise coprime generators: a complete intersection
    IntPoly out{1};
    for (const auto& m : gens) out = times_one_minus(out, weighted(m, w));
    return out;
  }
  // Median exponent of the pivot variable over mixed generators; the pure
  // power x^e is then not in the ideal and divides some generator.
  std::vector<Exponent> exps;
  for (const auto& m : gens) {
    if (m[pivot_var] != 0 && m.degree() != m[pivot_var]) exps.push_back(m[pivot_var]);
  }
  std::sort(exps.begin(), exps.end());
  const Monomial pivot = Monomial::variable(pivot_var, exps[(exps.size() - 1) / 2]);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) colon.push_back(m / gcd(m, pivot));

  IntPoly out = numerator_rec(std::move(plus), w);
  add_shifted(out, numerator_rec(std::move(colon), w), weighted(pivot, w));
  return trim(std::move(out));
}

BigInt eval_at_one(const IntPoly& p) {
  BigInt s = 0;
  for (const auto& c : p) s += c;
  return s;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  require_standard_ring(*ring_);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    require_same_ring(ring_, generators[i].ring());
    if (generators[i].is_zero()) continue;
    if (!generators[i].is_homogeneous()) {
      throw InvalidInput("generator " + std::to_string(i + 1) + " is not homogeneous");
    }
    generators_.push_back(std::move(generators[i]));
  }
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, GroebnerBasis gb)
    : Ideal(std::move(ring), std::move(generators)) {
  std::call_once(cache_->gb_once, [&] { cache_->gb.emplace(std::move(gb)); });
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : generators_) d = std::max(d, g.total_degree());
  return d;
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->gb_once, [&] {
    if (generators_.empty()) {
      cache_->gb.emplace(ring_, std::vector<Polynomial>{});
    } else {
      cache_->gb.emplace(buchberger_reduced_gb(generators_));
    }
  });
  return *cache_->gb;
}

const HilbertData& Ideal::hilbert() const {
  std::call_once(cache_->hilbert_once, [&] {
    const auto lead = groebner().leading_monomials();
    cache_->hilbert.emplace(hilbert_data_from_numerator(
        hilbert_numerator(lead, ring_->num_variables()), ring_->num_variables()));
  });
  return *cache_->hilbert;
}

bool Ideal::contains(const Polynomial& f) const { return ideal_membership(f, groebner()); }

std::string Ideal::to_string() const {
  std::string s = "ideal(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return ideal_equality(a.groebner(), b.groebner());
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring());
  const RingPtr& ring = i.ring();
  if (i.is_zero() || j.is_zero()) return Ideal::zero(ring);
  const std::size_t v = ring->num_variables();
  std::vector<std::string> names{"@t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  RingPtr elim = std::make_shared<const Ring>(names, ring->field(),
                                              MonomialOrder::block_elim(v + 1));
  const Polynomial t = Polynomial::variable(elim, 0);
  const Polynomial one_minus_t = Polynomial::constant(elim, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : i.generators()) gens.push_back(t * embed(f, elim, 1));
  for (const auto& g : j.generators()) gens.push_back(one_minus_t * embed(g, elim, 1));
  GroebnerBasis gb = buchberger_reduced_gb(gens);
  // Elements free of t form the reduced degrevlex basis of I ∩ J.
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    bool has_t = false;
    for (const auto& term : g.terms()) {
      if (term.monomial[0] != 0) {
        has_t = true;
        break;
      }
    }
    if (!has_t) kept.push_back(project(g, ring, 1));
  }
  std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().greater(a.leading_monomial(), b.leading_monomial());
  });
  return Ideal(ring, kept, GroebnerBasis(ring, kept));
}

Ideal quotient_by_poly(const Ideal& i, const Polynomial& f) {
  require_same_ring(i.ring(), f.ring());
  if (f.is_zero()) throw InvalidInput("quotient by the zero polynomial");
  if (!f.is_homogeneous()) throw InvalidInput("quotient by a non-homogeneous polynomial");
  Ideal meet = intersection(i, Ideal(i.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f));
  return Ideal(i.ring(), std::move(gens));
}

Ideal quotient_by_ideal(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring());
  if (j.is_zero()) throw InvalidInput("quotient by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : j.generators()) {
    Ideal q = quotient_by_poly(i, g);
    acc = acc ? intersection(*acc, q) : q;
  }
  return *acc;
}

namespace {

struct YSaturation {
  RingPtr ring_y;  // original variables followed by y
  std::vector<Polynomial> basis;  // GB of (I + (y - f)) : y^∞
  std::uint32_t weight;  // deg f
};

// Gröbner basis of (I + (y - f)) : y^∞ in F_p[x, y], y of weight deg f
// placed last in a weighted degrevlex order. Elements of a Gröbner basis of
// I + (y - f) are weighted homogeneous, so y divides the leading term of
// one exactly when it divides the whole element; dividing out those powers
// gives a basis of the saturation.
YSaturation saturate_with_y(const Ideal& i, const Polynomial& f) {
  const RingPtr& ring = i.ring();
  const std::size_t v = ring->num_variables();
  const auto deg = static_cast<std::uint32_t>(f.total_degree());
  std::vector<std::string> names = ring->names();
  names.push_back("@y");
  std::vector<std::uint32_t> weights(v, 1);
  weights.push_back(deg);
  RingPtr ring_y = std::make_shared<const Ring>(names, ring->field(),
                                                MonomialOrder::weighted_degrevlex(weights));
  std::vector<Polynomial> gens;
  gens.reserve(i.generators().size() + 1);
  for (const auto& g : i.generators()) gens.push_back(embed(g, ring_y, 0));
  gens.push_back(Polynomial::variable(ring_y, v) - embed(f, ring_y, 0));
  GroebnerBasis gb = buchberger_reduced_gb(gens);
  std::vector<Polynomial> out;
  out.reserve(gb.size());
  for (const auto& g : gb.elements()) {
    const Exponent a = g.leading_monomial()[v];
    if (a == 0) {
      out.push_back(g);
      continue;
    }
    std::vector<Term> terms = g.terms();
    for (auto& t : terms) t.monomial.set(v, t.monomial[v] - a);
    out.push_back(Polynomial::from_sorted_terms(ring_y, std::move(terms)));
  }
  return {ring_y, std::move(out), deg};
}

void require_saturator(const Ideal& i, const Polynomial& f) {
  require_same_ring(i.ring(), f.ring());
  if (f.is_zero()) throw InvalidInput("saturation by the zero polynomial");
  if (!f.is_homogeneous()) throw InvalidInput("saturation by a non-homogeneous polynomial");
}

}  // namespace

Ideal saturation_by_poly(const Ideal& i, const Polynomial& f) {
  require_saturator(i, f);
  if (f.is_constant() || i.is_zero()) return i;
  const RingPtr& ring = i.ring();
  const std::size_t v = ring->num_variables();
  YSaturation sat = saturate_with_y(i, f);
  std::vector<Polynomial> powers{Polynomial::constant(ring, 1)};
  std::vector<Polynomial> gens;
  gens.reserve(sat.basis.size());
  for (const auto& g : sat.basis) {
    // substitute y = f
    std::vector<std::vector<Term>> by_power;
    for (const auto& t : g.terms()) {
      const Exponent a = t.monomial[v];
      if (by_power.size() <= a) by_power.resize(a + 1);
      Monomial m = t.monomial;
      m.set(v, 0);
      by_power[a].push_back({m, t.coeff});
    }
    Polynomial sum(ring);
    for (std::size_t a = 0; a < by_power.size(); ++a) {
      if (by_power[a].empty()) continue;
      while (powers.size() <= a) powers.push_back(powers.back() * f);
      sum += Polynomial::from_terms(ring, by_power[a]) * powers[a];
    }
    gens.push_back(std::move(sum));
  }
  return Ideal(ring, std::move(gens));
}

HilbertData saturation_hilbert(const Ideal& i, const Polynomial& f) {
  require_saturator(i, f);
  if (f.is_constant() || i.is_zero()) return proj_dim_and_degree(i);
  const std::size_t v = i.ring()->num_variables();
  YSaturation sat = saturate_with_y(i, f);
  std::vector<Monomial> lead;
  lead.reserve(sat.basis.size());
  for (const auto& g : sat.basis) lead.push_back(g.leading_monomial());
  std::vector<std::uint32_t> weights(v, 1);
  weights.push_back(sat.weight);
  IntPoly weighted_num = hilbert_numerator(lead, weights);
  // R[y]/K is isomorphic to R/(I : f^∞) as graded rings, so the weighted
  // numerator carries an extra factor (1 - t^deg f).
  auto num = divide_one_minus(weighted_num, sat.weight);
  if (!num) throw InvariantViolation("weighted Hilbert numerator not divisible by 1 - t^d");
  return hilbert_data_from_numerator(std::move(*num), v);
}

Ideal saturation_by_ideal(const Ideal& j, const Ideal& i) {
  require_same_ring(j.ring(), i.ring());
  if (i.is_zero()) throw InvalidInput("saturation by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& f : i.generators()) {
    Ideal s = saturation_by_poly(j, f);
    acc = acc ? intersection(*acc, s) : s;
  }
  return *acc;
}

IntPoly hilbert_numerator(std::span<const Monomial> monomials, std::size_t v) {
  std::vector<std::uint32_t> weights(v, 1);
  return hilbert_numerator(monomials, weights);
}

IntPoly hilbert_numerator(std::span<const Monomial> monomials,
                          std::span<const std::uint32_t> weights) {
  return numerator_rec(std::vector<Monomial>(monomials.begin(), monomials.end()), weights);
}

HilbertData hilbert_data_from_numerator(IntPoly numerator, std::size_t v) {
  HilbertData data;
  data.numerator = trim(std::move(numerator));
  if (data.numerator.empty()) return data;  // unit ideal
  IntPoly reduced = data.numerator;
  std::size_t pole_drop = 0;
  while (eval_at_one(reduced) == 0) {
    auto q = divide_one_minus(reduced, 1);
    if (!q) throw InvariantViolation("Hilbert numerator vanishes at 1 but is not divisible");
    reduced = std::move(*q);
    ++pole_drop;
  }
  const int krull = static_cast<int>(v) - static_cast<int>(pole_drop);
  if (krull <= 0) return data;  // irrelevant ideal: projectively empty
  data.proj_dim = krull - 1;
  data.degree = eval_at_one(reduced);
  return data;
}

HilbertData proj_dim_and_degree(const Ideal& i) { return i.hilbert(); }

bool is_projectively_empty(const Ideal& i) { return i.hilbert().proj_dim < 0; }

Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("Jacobian ideal of the zero polynomial");
  if (!f.is_homogeneous()) throw InvalidInput("Jacobian ideal of a non-homogeneous polynomial");
  std::vector<Polynomial> gens{f};
  for (std::size_t k = 0; k < f.ring()->num_variables(); ++k) {
    gens.push_back(partial_derivative(f, k));
  }
  return Ideal(f.ring(), std::move(gens));
}

Polynomial random_ideal_element(const Ideal& i, int d, Rng& rng) {
  if (i.is_zero()) throw InvalidInput("random element of the zero ideal");
  if (d < i.max_degree()) {
    throw InvalidInput("degree " + std::to_string(d) + " is below the maximal generator degree " +
                       std::to_string(i.max_degree()));
  }
  for (;;) {
    Polynomial g(i.ring());
    for (const auto& f : i.generators()) {
      const auto k = static_cast<unsigned>(d - f.total_degree());
      g += random_form(k, i.ring(), rng) * f;
    }
    if (!g.is_zero()) return g;
  }
}

}  // namespace ccc
