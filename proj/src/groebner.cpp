#include "lsc/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "lsc/rng.hpp"

namespace lsc {

Ideal::Ideal(const Field& field, const MonomialOrder& order, std::vector<MultiPoly> gens)
    : field_(field), order_(order) {
  for (MultiPoly& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.field() == field) || !(g.order() == order))
      throw std::logic_error("ideal generator from a different ring");
    if (!g.is_homogeneous())
      throw std::logic_error("this engine handles homogeneous ideals only");
    gens_.push_back(std::move(g));
  }
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> lms;
  lms.reserve(elems_.size());
  for (const MultiPoly& g : elems_) lms.push_back(g.leading().mono);
  return lms;
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  return order_ == other.order_ && elems_ == other.elems_;
}

MultiPoly normal_form(MultiPoly f, std::span<const MultiPoly> reducers) {
  if (reducers.empty()) return f;
  const Field& field = f.field();
  MonomialOrder order = f.order();
  std::vector<Term> kept;
  while (!f.is_zero()) {
    const Term& lead = f.leading();
    const MultiPoly* reducer = nullptr;
    for (const MultiPoly& g : reducers) {
      if (g.leading().mono.divides(lead.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      kept.push_back(lead);
      f.pop_leading();
      continue;
    }
    Monomial ratio = lead.mono.divided_by(reducer->leading().mono);
    Scalar factor = field.div(lead.coeff, reducer->leading().coeff);
    f.sub_mul_term(*reducer, ratio, factor);
  }
  // Terms were moved out in strictly decreasing order; from_terms keeps
  // them as-is.
  return MultiPoly::from_terms(field, order, std::move(kept));
}

namespace {

struct Pair {
  std::uint32_t i, j;  // i < j, indices into the working basis
  Monomial lcm;
  unsigned sugar;      // = deg(lcm) for homogeneous monic input
  std::uint64_t shuffle_key;
};

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
  return (std::uint64_t{i} << 32) | j;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const Monomial& lcm) {
  const Field& field = f.field();
  MultiPoly s = f.times_term(lcm.divided_by(f.leading().mono),
                             field.inv(f.leading().coeff));
  s.sub_mul_term(g, lcm.divided_by(g.leading().mono), field.inv(g.leading().coeff));
  return s;
}

}  // namespace

GroebnerBasis buchberger_impl(const Ideal& ideal, std::optional<std::uint64_t> shuffle_seed) {
  const Field& field = ideal.field();
  const MonomialOrder& order = ideal.order();

  GroebnerBasis out;
  out.order_ = order;

  std::vector<MultiPoly> basis;
  for (const MultiPoly& g : ideal.generators()) basis.push_back(g.monic());

  // An ideal containing a nonzero constant is the whole ring.
  auto contains_unit = [&basis]() {
    for (const MultiPoly& g : basis)
      if (g.leading().mono.degree() == 0) return true;
    return false;
  };

  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.shuffle_key != b.shuffle_key) return a.shuffle_key < b.shuffle_key;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::unordered_set<std::uint64_t> pending;
  SplitMix64 rng(shuffle_seed.value_or(0));

  auto enqueue = [&](std::uint32_t i, std::uint32_t j) {
    Pair p;
    p.i = i;
    p.j = j;
    p.lcm = Monomial::lcm(basis[i].leading().mono, basis[j].leading().mono);
    p.sugar = p.lcm.degree();
    p.shuffle_key = shuffle_seed ? rng.next() : 0;
    pending.insert(pair_key(i, j));
    queue.insert(std::move(p));
  };

  if (!basis.empty() && !contains_unit()) {
    for (std::uint32_t j = 1; j < basis.size(); ++j)
      for (std::uint32_t i = 0; i < j; ++i) enqueue(i, j);
  }

  bool unit_found = contains_unit();
  while (!queue.empty() && !unit_found) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(pair_key(p.i, p.j));

    const MultiPoly& fi = basis[p.i];
    const MultiPoly& fj = basis[p.j];

    // Buchberger's first criterion: coprime leading monomials.
    if (fi.leading().mono.coprime_with(fj.leading().mono)) continue;

    // Second (chain) criterion: some k with LM(k) | lcm(i,j) whose pairs
    // with both i and j were already treated.
    bool chained = false;
    for (std::uint32_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading().mono.divides(p.lcm)) continue;
      std::uint64_t ik = pair_key(std::min(p.i, k), std::max(p.i, k));
      std::uint64_t jk = pair_key(std::min(p.j, k), std::max(p.j, k));
      if (!pending.contains(ik) && !pending.contains(jk)) chained = true;
    }
    if (chained) continue;

    MultiPoly r = normal_form(s_polynomial(fi, fj, p.lcm), basis);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.leading().mono.degree() == 0) {
      unit_found = true;
      break;
    }
    std::uint32_t t = static_cast<std::uint32_t>(basis.size());
    basis.push_back(std::move(r));
    for (std::uint32_t i = 0; i < t; ++i) enqueue(i, t);
  }

  if (unit_found) {
    out.elems_.push_back(MultiPoly::constant(field, order, field.one()));
    return out;
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another kept one.
  std::sort(basis.begin(), basis.end(), [&order](const MultiPoly& a, const MultiPoly& b) {
    return order.less(a.leading().mono, b.leading().mono);
  });
  std::vector<MultiPoly> minimal;
  for (MultiPoly& g : basis) {
    bool redundant = false;
    for (const MultiPoly& h : minimal) {
      if (h.leading().mono.divides(g.leading().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }

  // Inter-reduce tails. Leading monomials are pairwise indivisible, so each
  // element's leading term survives its own reduction, and one pass gives
  // the reduced basis.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(std::move(minimal[i]), others).monic();
  }

  out.elems_ = std::move(minimal);
  return out;
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts) {
  return buchberger_impl(ideal, opts.shuffle_seed);
}

bool ideal_membership(const MultiPoly& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.elements()).is_zero();
}

bool groebner_certificate_ok(const Ideal& ideal, const GroebnerBasis& gb) {
  for (const MultiPoly& g : ideal.generators())
    if (!ideal_membership(g, gb)) return false;
  std::span<const MultiPoly> elems = gb.elements();
  for (std::size_t j = 1; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial lcm = Monomial::lcm(elems[i].leading().mono, elems[j].leading().mono);
      const Field& field = elems[i].field();
      MultiPoly s = elems[i].times_term(lcm.divided_by(elems[i].leading().mono),
                                        field.inv(elems[i].leading().coeff));
      s.sub_mul_term(elems[j], lcm.divided_by(elems[j].leading().mono),
                     field.inv(elems[j].leading().coeff));
      if (!normal_form(std::move(s), elems).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace lsc
