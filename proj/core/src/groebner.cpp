#include "ccc/groebner.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "ccc/errors.hpp"

namespace ccc {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

// Monic reducers with cached leading monomials and divisibility masks.
class ReducerSet {
 public:
  void add(const Polynomial* g) {
    polys_.push_back(g);
    masks_.push_back(g->leading_monomial().divmask());
  }
  void clear() {
    polys_.clear();
    masks_.clear();
  }

  const Polynomial* find(const Monomial& m) const {
    const std::uint64_t not_mask = ~m.divmask();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if ((masks_[i] & not_mask) == 0 && polys_[i]->leading_monomial().divides(m)) {
        return polys_[i];
      }
    }
    return nullptr;
  }

 private:
  std::vector<const Polynomial*> polys_;
  std::vector<std::uint64_t> masks_;
};

// Sparse accumulator: coefficients in a hash table, pending monomials in a
// max-heap under the ring order. Each live monomial sits in the heap once.
class Accumulator {
 public:
  explicit Accumulator(const Ring& ring)
      : field_(ring.field()), heap_(HeapLess{&ring.order()}) {}

  void add(const Monomial& m, std::uint32_t c) {
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (inserted) {
      heap_.push(m);
    } else {
      it->second = field_.add(it->second, c);
    }
  }

  // Pops the largest monomial with a nonzero coefficient.
  bool pop(Term& out) {
    while (!heap_.empty()) {
      Monomial m = heap_.top();
      heap_.pop();
      auto it = coeffs_.find(m);
      std::uint32_t c = it->second;
      coeffs_.erase(it);
      if (c != 0) {
        out = {m, c};
        return true;
      }
    }
    return false;
  }

 private:
  struct HeapLess {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return order->compare(a, b) == Ordering::Less;
    }
  };

  const PrimeField& field_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> coeffs_;
  std::priority_queue<Monomial, std::vector<Monomial>, HeapLess> heap_;
};

// Full reduction of f by the reducers. Reducers must be monic.
Polynomial reduce(const Polynomial& f, const ReducerSet& reducers) {
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field();
  Accumulator acc(*ring);
  for (const auto& t : f.terms()) acc.add(t.monomial, t.coeff);
  std::vector<Term> remainder;
  Term t;
  while (acc.pop(t)) {
    const Polynomial* g = reducers.find(t.monomial);
    if (g == nullptr) {
      remainder.push_back(t);
      continue;
    }
    const Monomial shift = t.monomial / g->leading_monomial();
    const std::uint32_t scale = field.neg(t.coeff);
    const auto& gt = g->terms();
    for (std::size_t i = 1; i < gt.size(); ++i) {
      acc.add(gt[i].monomial * shift, field.mul(scale, gt[i].coeff));
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& l) {
  // f and g are monic
  return f.times_term(l / f.leading_monomial(), 1) - g.times_term(l / g.leading_monomial(), 1);
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)), order_(ring_->order()) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    for (const auto& f : generators) {
      require_same_ring(ring_, f.ring());
      if (f.is_zero()) continue;
      if (f.is_constant()) return unit_basis();
      insert(f.monic(), sugar_of(f));
    }
    while (!pairs_.empty()) {
      CriticalPair pair = take_next_pair();
      Polynomial s = s_polynomial(basis_[pair.i], basis_[pair.j], pair.lcm);
      Polynomial h = reduce(s, live_reducers());
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis();
      insert(h.monic(), pair.sugar);
    }
    return finish();
  }

 private:
  std::uint32_t sugar_of(const Polynomial& f) const {
    std::uint32_t s = 0;
    for (const auto& t : f.terms()) s = std::max(s, order_.weighted_degree(t.monomial));
    return s;
  }

  GroebnerBasis unit_basis() const {
    return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)});
  }

  const ReducerSet& live_reducers() {
    if (reducers_dirty_) {
      reducers_.clear();
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!redundant_[i]) reducers_.add(&basis_[i]);
      }
      reducers_dirty_ = false;
    }
    return reducers_;
  }

  CriticalPair take_next_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && order_.greater(b.lcm, a.lcm))) best = k;
    }
    CriticalPair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  // Gebauer-Möller update for a new monic element h.
  void insert(Polynomial h, std::uint32_t sugar) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    redundant_.push_back(false);
    reducers_dirty_ = true;
    const Monomial lead = basis_[hi].leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (redundant_[g]) continue;
      const Monomial& lg = basis_[g].leading_monomial();
      cands.push_back({g, lcm(lead, lg), coprime(lead, lg), true});
    }
    // Chain criterion among the new pairs: drop (h, g1) if some other new
    // pair has an lcm properly dividing it; among equal lcms keep one,
    // preferring a coprime pair so the product criterion removes it.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        if (cands[b].lcm == cands[a].lcm) {
          if (cands[a].coprime && !cands[b].coprime) continue;
          if (cands[a].coprime == cands[b].coprime && b > a) continue;
        }
        cands[a].keep = false;
        break;
      }
    }
    // Old pairs whose lcm is divisible by LT(h) with both other lcms
    // different are redundant.
    std::erase_if(pairs_, [&](const CriticalPair& p) {
      if (!lead.divides(p.lcm)) return false;
      const Monomial li = lcm(basis_[p.i].leading_monomial(), lead);
      const Monomial lj = lcm(basis_[p.j].leading_monomial(), lead);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      const Monomial& lg = basis_[c.g].leading_monomial();
      std::uint32_t s = std::max(sugar_[c.g] + order_.weighted_degree(c.lcm / lg),
                                 sugar + order_.weighted_degree(c.lcm / lead));
      pairs_.push_back({c.g, hi, c.lcm, s});
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (!redundant_[g] && lead.divides(basis_[g].leading_monomial())) redundant_[g] = true;
    }
  }

  GroebnerBasis finish() {
    // Input generators enter unreduced, so a live element can still have a
    // leading monomial divisible by another one; of equal leading
    // monomials the first is kept.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (redundant_[i]) continue;
      const Monomial& li = basis_[i].leading_monomial();
      bool covered = false;
      for (std::size_t j = 0; j < basis_.size() && !covered; ++j) {
        if (j == i || redundant_[j]) continue;
        const Monomial& lj = basis_[j].leading_monomial();
        covered = lj.divides(li) && (lj != li || j < i);
      }
      if (!covered) minimal.push_back(basis_[i]);
    }
    // Leading monomials are pairwise non-dividing; reduce each tail by the
    // others.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      ReducerSet others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.add(&minimal[j]);
      }
      const auto& terms = minimal[i].terms();
      Polynomial tail = Polynomial::from_sorted_terms(
          ring_, std::vector<Term>(terms.begin() + 1, terms.end()));
      Polynomial r = reduce(tail, others);
      std::vector<Term> out;
      out.reserve(r.size() + 1);
      out.push_back(terms.front());
      out.insert(out.end(), r.terms().begin(), r.terms().end());
      reduced.push_back(Polynomial::from_sorted_terms(ring_, std::move(out)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.greater(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis(ring_, std::move(reduced));
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  std::vector<Polynomial> basis_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> redundant_;
  std::vector<CriticalPair> pairs_;
  ReducerSet reducers_;
  bool reducers_dirty_ = true;
};

}  // namespace

GroebnerBasis buchberger_reduced_gb(std::span<const Polynomial> generators) {
  if (generators.empty()) throw InvalidInput("cannot infer the ring of an empty generator list");
  Buchberger engine(generators.front().ring());
  return engine.run(generators);
}

GroebnerBasis buchberger_reduced_gb(std::span<const Polynomial> generators,
                                    const MonomialOrder& order) {
  if (generators.empty()) throw InvalidInput("cannot infer the ring of an empty generator list");
  const RingPtr& source = generators.front().ring();
  if (source->order() == order) return buchberger_reduced_gb(generators);
  RingPtr target = source->with_order(order);
  std::vector<Polynomial> moved;
  moved.reserve(generators.size());
  for (const auto& f : generators) {
    require_same_ring(source, f.ring());
    moved.push_back(f.reordered(target));
  }
  Buchberger engine(target);
  return engine.run(moved);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring());
  ReducerSet reducers;
  for (const auto& g : gb.elements()) reducers.add(&g);
  return reduce(f, reducers);
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

bool ideal_equality(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(*a.ring() == *b.ring())) throw RingMismatch("Gröbner bases use different rings or orders");
  return a.elements() == b.elements();
}

}  // namespace ccc
