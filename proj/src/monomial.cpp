#include "lsc/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace lsc {

Monomial Monomial::one(std::size_t nvars) {
  if (nvars > kMaxVars) throw std::logic_error("monomial: too many variables");
  Monomial m;
  m.nvars_ = static_cast<std::uint8_t>(nvars);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m = one(nvars);
  m.e_[i] = 1;
  m.deg_ = 1;
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial m = one(exps.size());
  unsigned deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 255) throw std::logic_error("monomial: exponent overflow");
    m.e_[i] = static_cast<std::uint8_t>(exps[i]);
    deg += exps[i];
  }
  m.deg_ = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial Monomial::from_exponents(std::initializer_list<unsigned> exps) {
  return from_exponents(std::span<const unsigned>(exps.begin(), exps.size()));
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned{e_[i]} + other.e_[i];
    if (e > 255) throw std::logic_error("monomial: exponent overflow");
    m.e_[i] = static_cast<std::uint8_t>(e);
  }
  m.deg_ = static_cast<std::uint16_t>(deg_ + other.deg_);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < nvars_; ++i)
    m.e_[i] = static_cast<std::uint8_t>(e_[i] - other.e_[i]);
  m.deg_ = static_cast<std::uint16_t>(deg_ - other.deg_);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  unsigned deg = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += m.e_[i];
  }
  m.deg_ = static_cast<std::uint16_t>(deg);
  return m;
}

bool Monomial::coprime_with(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::packed() const {
  std::uint64_t key;
  static_assert(sizeof(e_) == sizeof(key));
  std::memcpy(&key, e_.data(), sizeof(key));
  return key;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::DegRevLex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // Reverse-lex tie break: last differing exponent, smaller wins.
    for (std::size_t i = nvars; i-- > 0;) {
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
  }
  return 0;
}

namespace {

void enumerate_rec(std::size_t var, unsigned remaining, std::vector<unsigned>& exps,
                   std::vector<Monomial>& out) {
  if (var + 1 == exps.size()) {
    exps[var] = remaining;
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    exps[var] = e;
    enumerate_rec(var + 1, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const MonomialOrder& order, unsigned degree) {
  std::vector<Monomial> out;
  if (order.nvars == 0) return out;
  std::vector<unsigned> exps(order.nvars, 0);
  enumerate_rec(0, degree, exps, out);
  std::sort(out.begin(), out.end(),
            [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

}  // namespace lsc
