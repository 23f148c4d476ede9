#ifndef LSC_GROEBNER_HPP
#define LSC_GROEBNER_HPP

#include <optional>
#include <span>
#include <vector>

#include "lsc/poly.hpp"

namespace lsc {

// Homogeneous ideal. Zero generators are dropped at construction; all
// generators must share field and order and be homogeneous.
class Ideal {
public:
  Ideal(const Field& field, const MonomialOrder& order, std::vector<MultiPoly> gens);

  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars; }
  std::span<const MultiPoly> generators() const { return gens_; }

private:
  Field field_;
  MonomialOrder order_;
  std::vector<MultiPoly> gens_;
};

// Reduced Groebner basis: monic elements, pairwise indivisible leading
// terms, every element fully reduced against the others. Unique for a
// fixed order, which makes it usable as a golden value. Elements are
// sorted ascending by leading monomial.
class GroebnerBasis {
public:
  std::span<const MultiPoly> elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::vector<Monomial> leading_monomials() const;

  bool operator==(const GroebnerBasis& other) const;

private:
  friend GroebnerBasis buchberger_impl(const Ideal&, std::optional<std::uint64_t>);

  MonomialOrder order_;
  std::vector<MultiPoly> elems_;
};

// Remainder of f under the division algorithm: f - r lies in (reducers) and
// no term of r is divisible by any reducer's leading monomial.
MultiPoly normal_form(MultiPoly f, std::span<const MultiPoly> reducers);

struct BuchbergerOptions {
  // When set, pairs of equal sugar degree are processed in a pseudorandom
  // order instead of the lcm tie-break; the reduced basis must come out
  // identical (uniqueness). Degree-first processing is kept, since that is
  // the invariant a homogeneous engine is built on.
  std::optional<std::uint64_t> shuffle_seed{};
};

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

bool ideal_membership(const MultiPoly& f, const GroebnerBasis& gb);

// Certificate: every input generator and every S-polynomial of basis pairs
// reduces to zero against the basis.
bool groebner_certificate_ok(const Ideal& ideal, const GroebnerBasis& gb);

}  // namespace lsc

#endif
