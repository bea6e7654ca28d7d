#include "ccc/polynomial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "ccc/errors.hpp"
#include "ccc/random.hpp"

namespace ccc {

Ring::Ring(std::vector<std::string> names, PrimeField field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(order) {
  if (order_.num_variables() != names_.size()) {
    throw InvalidInput("monomial order and variable list disagree on the variable count");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidInput("empty variable name");
    if (!seen.insert(n).second) throw InvalidInput("duplicate variable name '" + n + "'");
  }
}

RingPtr Ring::make(std::vector<std::string> names, std::uint32_t prime) {
  if (names.empty() || names.size() >= kMaxVariables) {
    throw InvalidInput("rings need 1 to " + std::to_string(kMaxVariables - 1) + " variables, got " +
                       std::to_string(names.size()));
  }
  auto order = MonomialOrder::degrevlex(names.size());
  return std::make_shared<const Ring>(std::move(names), PrimeField(prime), order);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr Ring::with_order(const MonomialOrder& order) const {
  return std::make_shared<const Ring>(names_, field_, order);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw RingMismatch("polynomials live in different rings");
}

namespace {

struct DescendingIn {
  const MonomialOrder& order;
  bool operator()(const Term& a, const Term& b) const {
    return order.greater(a.monomial, b.monomial);
  }
};

// Merges a + scale*b for canonical term lists.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              std::uint32_t scale, const Ring& ring) {
  const auto& field = ring.field();
  const auto& order = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Ordering c = order.compare(a[i].monomial, b[j].monomial);
    if (c == Ordering::Greater) {
      out.push_back(a[i++]);
    } else if (c == Ordering::Less) {
      out.push_back({b[j].monomial, field.mul(scale, b[j].coeff)});
      ++j;
    } else {
      std::uint32_t s = field.add(a[i].coeff, field.mul(scale, b[j].coeff));
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, field.mul(scale, b[j].coeff)});
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& field = ring->field();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  for (const auto& t : terms) {
    for (std::size_t i = ring->num_variables(); i < kMaxVariables; ++i) {
      if (t.monomial[i] != 0) throw RingMismatch("term uses a variable outside the ring");
    }
    auto [it, inserted] = acc.try_emplace(t.monomial, t.coeff % field.prime());
    if (!inserted) it->second = field.add(it->second, t.coeff % field.prime());
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(), DescendingIn{ring->order()});
  return from_sorted_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t v = ring->field().from_int(c);
  std::vector<Term> t;
  if (v != 0) t.push_back({Monomial{}, v});
  return from_sorted_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw InvalidInput("variable index out of range");
  return from_sorted_terms(ring, {{Monomial::variable(index), 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff) {
  return from_terms(std::move(ring), {{m, coeff}});
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

bool Polynomial::is_weighted_homogeneous() const {
  const auto& order = ring_->order();
  for (const auto& t : terms_) {
    if (order.weighted_degree(t.monomial) != order.weighted_degree(terms_.front().monomial)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(terms_, other.terms_, 1, *ring_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(terms_, other.terms_, ring_->field().neg(1), *ring_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  if (is_zero() || other.is_zero()) {
    terms_.clear();
    return *this;
  }
  const auto& field = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      prod.push_back({a.monomial * b.monomial, field.mul(a.coeff, b.coeff)});
    }
  }
  *this = from_terms(ring_, std::move(prod));
  return *this;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= ring_->field().prime();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().mul(t.coeff, c);
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  c %= ring_->field().prime();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, ring_->field().mul(t.coeff, c)});
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inverse(leading_coeff()));
}

Polynomial Polynomial::reordered(RingPtr target) const {
  if (target->names() != ring_->names() || !(target->field() == ring_->field())) {
    throw RingMismatch("reordering needs the same variables and field");
  }
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(), DescendingIn{target->order()});
  return from_sorted_terms(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& field = ring_->field();
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field.to_signed(t.coeff);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    std::string mono;
    for (std::size_t i = 0; i < ring_->num_variables(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      s += std::to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += std::to_string(mag) + "*" + mono;
    }
    first = false;
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var_index) {
  const auto& ring = f.ring();
  if (var_index >= ring->num_variables()) throw InvalidInput("variable index out of range");
  const auto& field = ring->field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Exponent e = t.monomial[var_index];
    if (e == 0) continue;
    std::uint32_t c = field.mul(t.coeff, field.from_int(e));
    if (c == 0) continue;
    Monomial m = t.monomial;
    m.set(var_index, e - 1);
    out.push_back({m, c});
  }
  // every surviving term was divisible by x_i, so dividing keeps the order
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const auto& ring = f.ring();
  const auto& field = ring->field();
  const std::uint32_t inv = field.inverse(g.leading_coeff());
  Polynomial rem = f;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) {
      throw InvalidInput("exact division failed: " + g.to_string() + " does not divide " +
                         f.to_string());
    }
    Term q{lt.monomial / g.leading_monomial(), field.mul(lt.coeff, inv)};
    quotient.push_back(q);
    rem -= g.times_term(q.monomial, q.coeff);
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> exps(nvars, 0);
  // Recursive enumeration with x_0 exponent descending.
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == nvars) {
      exps[i] = static_cast<int>(remaining);
      out.emplace_back(std::span<const int>(exps));
      return;
    }
    for (int e = static_cast<int>(remaining); e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, remaining - static_cast<unsigned>(e));
    }
  };
  rec(rec, 0, degree);
  return out;
}

Polynomial random_form(unsigned degree, const RingPtr& ring, Rng& rng) {
  const auto monos = monomials_of_degree(ring->num_variables(), degree);
  const std::uint32_t p = ring->field().prime();
  for (;;) {
    std::vector<Term> terms;
    terms.reserve(monos.size());
    for (const auto& m : monos) {
      std::uint32_t c = rng.uniform(p);
      if (c != 0) terms.push_back({m, c});
    }
    if (!terms.empty()) return Polynomial::from_terms(ring, std::move(terms));
  }
}

}  // namespace ccc
