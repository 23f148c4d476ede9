#ifndef LSC_POLY_HPP
#define LSC_POLY_HPP

#include <span>
#include <string>
#include <vector>

#include "lsc/field.hpp"
#include "lsc/monomial.hpp"

namespace lsc {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse exact multivariate polynomial. Terms are kept strictly descending
// in the monomial order, so the leading term is terms()[0].
class MultiPoly {
public:
  MultiPoly(const Field& field, const MonomialOrder& order)
      : field_(field), order_(order) {}

  static MultiPoly constant(const Field& field, const MonomialOrder& order, Scalar c);
  static MultiPoly variable(const Field& field, const MonomialOrder& order, std::size_t i);
  static MultiPoly single(const Field& field, const MonomialOrder& order, Monomial m, Scalar c);
  // Sorts, merges duplicates, drops zero coefficients.
  static MultiPoly from_terms(const Field& field, const MonomialOrder& order,
                              std::vector<Term> terms);

  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }  // pre: !is_zero()

  unsigned degree() const;  // max term degree; 0 for the zero polynomial
  bool is_homogeneous() const;

  MultiPoly plus(const MultiPoly& g) const;
  MultiPoly minus(const MultiPoly& g) const;
  MultiPoly times(const MultiPoly& g) const;
  MultiPoly negated() const;
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly times_term(const Monomial& m, const Scalar& c) const;
  MultiPoly monic() const;  // pre: !is_zero()

  // f -= c * m * g, merging in place. The hot operation of polynomial
  // division.
  void sub_mul_term(const MultiPoly& g, const Monomial& m, const Scalar& c);

  // Drop the leading term (used by the division algorithm).
  void pop_leading() { terms_.erase(terms_.begin()); }

  Scalar eval(std::span<const Scalar> point) const;

  // Deterministic total order on same-ring polynomials (for canonical
  // generator lists); compares term sequences.
  int compare(const MultiPoly& g) const;
  bool operator==(const MultiPoly& g) const { return compare(g) == 0; }

  friend MultiPoly operator+(const MultiPoly& f, const MultiPoly& g) { return f.plus(g); }
  friend MultiPoly operator-(const MultiPoly& f, const MultiPoly& g) { return f.minus(g); }
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) { return f.times(g); }

private:
  void check_compatible(const MultiPoly& g) const;

  Field field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

std::string to_string(const MultiPoly& f, std::span<const std::string> var_names);

}  // namespace lsc

#endif
