#include "lsc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace lsc {

void MultiPoly::check_compatible(const MultiPoly& g) const {
  if (!(field_ == g.field_) || !(order_ == g.order_))
    throw std::logic_error("polynomials from different rings");
}

MultiPoly MultiPoly::constant(const Field& field, const MonomialOrder& order, Scalar c) {
  MultiPoly f(field, order);
  if (!field.is_zero(c)) f.terms_.push_back({Monomial::one(order.nvars), std::move(c)});
  return f;
}

MultiPoly MultiPoly::variable(const Field& field, const MonomialOrder& order, std::size_t i) {
  MultiPoly f(field, order);
  f.terms_.push_back({Monomial::variable(order.nvars, i), field.one()});
  return f;
}

MultiPoly MultiPoly::single(const Field& field, const MonomialOrder& order, Monomial m,
                            Scalar c) {
  MultiPoly f(field, order);
  if (!field.is_zero(c)) f.terms_.push_back({m, std::move(c)});
  return f;
}

MultiPoly MultiPoly::from_terms(const Field& field, const MonomialOrder& order,
                                std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  MultiPoly f(field, order);
  for (Term& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = field.add(f.terms_.back().coeff, t.coeff);
      if (field.is_zero(f.terms_.back().coeff)) f.terms_.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

MultiPoly MultiPoly::plus(const MultiPoly& g) const {
  check_compatible(g);
  MultiPoly r(field_, order_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = order_.compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Scalar s = field_.add(terms_[i].coeff, g.terms_[j].coeff);
      if (!field_.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

MultiPoly MultiPoly::minus(const MultiPoly& g) const { return plus(g.negated()); }

MultiPoly MultiPoly::negated() const {
  MultiPoly r = *this;
  for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  if (field_.is_zero(c)) return MultiPoly(field_, order_);
  MultiPoly r = *this;
  for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const Scalar& c) const {
  // Monomial orders are translation invariant, so the sorted term sequence
  // stays sorted under a common monomial factor.
  if (field_.is_zero(c)) return MultiPoly(field_, order_);
  MultiPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono.times(m), field_.mul(t.coeff, c)});
  return r;
}

MultiPoly MultiPoly::times(const MultiPoly& g) const {
  check_compatible(g);
  if (is_zero() || g.is_zero()) return MultiPoly(field_, order_);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * g.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : g.terms_)
      prods.push_back({a.mono.times(b.mono), field_.mul(a.coeff, b.coeff)});
  return from_terms(field_, order_, std::move(prods));
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) throw std::logic_error("monic of zero polynomial");
  if (field_.is_one(leading().coeff)) return *this;
  return scaled(field_.inv(leading().coeff));
}

void MultiPoly::sub_mul_term(const MultiPoly& g, const Monomial& m, const Scalar& c) {
  check_compatible(g);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mono.times(m);
    int cmp = order_.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      merged.push_back({gm, field_.neg(field_.mul(g.terms_[j].coeff, c))});
      ++j;
    } else {
      Scalar s = field_.sub(terms_[i].coeff, field_.mul(g.terms_[j].coeff, c));
      if (!field_.is_zero(s)) merged.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
  for (; j < g.terms_.size(); ++j)
    merged.push_back({g.terms_[j].mono.times(m), field_.neg(field_.mul(g.terms_[j].coeff, c))});
  terms_ = std::move(merged);
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars()) throw std::logic_error("eval: wrong point dimension");
  // Power table per variable up to the needed exponent.
  std::vector<std::vector<Scalar>> powers(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) {
    unsigned maxe = 0;
    for (const Term& t : terms_) maxe = std::max(maxe, t.mono.exponent(v));
    powers[v].reserve(maxe + 1);
    powers[v].push_back(field_.one());
    for (unsigned e = 1; e <= maxe; ++e)
      powers[v].push_back(field_.mul(powers[v].back(), point[v]));
  }
  Scalar acc = field_.zero();
  for (const Term& t : terms_) {
    Scalar prod = t.coeff;
    for (std::size_t v = 0; v < nvars(); ++v) {
      unsigned e = t.mono.exponent(v);
      if (e != 0) prod = field_.mul(prod, powers[v][e]);
    }
    acc = field_.add(acc, prod);
  }
  return acc;
}

int MultiPoly::compare(const MultiPoly& g) const {
  check_compatible(g);
  std::size_t n = std::min(terms_.size(), g.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = order_.compare(terms_[i].mono, g.terms_[i].mono);
    if (c != 0) return c;
    c = scalar_compare(terms_[i].coeff, g.terms_[i].coeff);
    if (c != 0) return c;
  }
  if (terms_.size() != g.terms_.size()) return terms_.size() < g.terms_.size() ? -1 : 1;
  return 0;
}

std::string to_string(const MultiPoly& f, std::span<const std::string> var_names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::string c = f.field().to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) c = c.substr(1);
    first = false;
    bool has_vars = t.mono.degree() > 0;
    if (c != "1" || !has_vars) os << c;
    bool star = c != "1" || !has_vars;
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (star) os << "*";
      os << var_names[v];
      if (e > 1) os << "^" << e;
      star = true;
    }
  }
  return os.str();
}

}  // namespace lsc
