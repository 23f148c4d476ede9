#ifndef LSC_MONOMIAL_HPP
#define LSC_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lsc {

// Every polynomial ring in the pipeline has at most 8 variables
// (u0..u3, v0..v3); fixed-capacity exponents keep monomials cheap value
// types with O(1) compare.
inline constexpr std::size_t kMaxVars = 8;

class Monomial {
public:
  Monomial() = default;

  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t i);
  static Monomial from_exponents(std::span<const unsigned> exps);
  static Monomial from_exponents(std::initializer_list<unsigned> exps);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return deg_; }
  unsigned exponent(std::size_t i) const { return e_[i]; }

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divided_by(const Monomial& other) const;  // pre: other.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& other) const;

  // Exponents packed into 8 bytes; hash/lookup key. Requires exps < 256,
  // enforced by the uint8 storage.
  std::uint64_t packed() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t deg_ = 0;
};

enum class OrderKind : std::uint8_t { DegRevLex, Lex };

// Total order on monomials of a fixed ring. DegRevLex refines total degree
// and is the global default.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::uint8_t nvars = 0;

  // <0 iff a < b, 0 iff equal, >0 iff a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

// All monomials of the given total degree, sorted descending in the order
// (leading monomial first).
std::vector<Monomial> monomials_of_degree(const MonomialOrder& order, unsigned degree);

}  // namespace lsc

#endif
