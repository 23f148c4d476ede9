#ifndef LSC_GRASSMANN_HPP
#define LSC_GRASSMANN_HPP

#include <array>
#include <memory>
#include <span>
#include <unordered_map>

#include "lsc/matrix.hpp"
#include "lsc/poly.hpp"

namespace lsc {

// Plucker coordinates in the fixed order (p01, p02, p03, p12, p13, p23).
inline constexpr std::array<std::array<std::size_t, 2>, 6> kPluckerPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// The ring conventions used throughout: p01 > p02 > p03 > p12 > p13 > p23
// and u0 > .. > u3 > v0 > .. > v3, both DegRevLex.
MonomialOrder plucker_order();
MonomialOrder uv_order();

std::span<const std::string> plucker_var_names();
std::span<const std::string> uv_var_names();

// A point of G(2,V) in Plucker coordinates: not all zero, satisfies
// p01*p23 - p02*p13 + p03*p12 = 0 (checked at construction).
class PluckerPoint {
public:
  PluckerPoint(const Field& field, std::array<Scalar, 6> coords);

  const Field& field() const { return field_; }
  const std::array<Scalar, 6>& coords() const { return coords_; }

  // First nonzero coordinate scaled to 1; canonical projective
  // representative, giving points set semantics.
  PluckerPoint normalized() const;

  int compare(const PluckerPoint& other) const;
  bool operator==(const PluckerPoint& other) const { return compare(other) == 0; }
  bool operator<(const PluckerPoint& other) const { return compare(other) < 0; }

private:
  Field field_;
  std::array<Scalar, 6> coords_;
};

// The six 2x2 minors of the 2x4 matrix [u; v]. Errors with "degenerate
// span" when u, v are linearly dependent.
PluckerPoint plucker_from_span(const Field& field, std::span<const Scalar> u,
                               std::span<const Scalar> v);

// p01*p23 - p02*p13 + p03*p12 in the 6-variable Plucker ring.
MultiPoly plucker_quadric(const Field& field);

// Substitute p_ab = u_a*v_b - u_b*v_a. Homogeneous degree-k input yields a
// bihomogeneous bidegree-(k,k) output.
MultiPoly expand_to_uv(const MultiPoly& q);

// Rewriting of bidegree-(4,4) covariants as quartics in the Plucker
// variables. Holds the 1225x126 expansion matrix sending each degree-4
// p-monomial to its (u,v)-expansion, plus the solve data for the
// deterministic particular solution (leftmost pivots, zero free
// variables). Built once per field and shared read-only.
class RewriteBasis {
public:
  explicit RewriteBasis(const Field& field);

  static std::shared_ptr<const RewriteBasis> for_field(const Field& field);

  const Field& field() const { return field_; }

  // Quartic q with expand_to_uv(q) == f exactly; the kernel of expansion
  // consists of quadric multiples, so exactness holds for any solution.
  // Errors with "not a Plucker covariant" when the system is inconsistent.
  MultiPoly rewrite_to_plucker(const MultiPoly& f) const;

  std::size_t rank() const { return pivot_cols_.size(); }
  const ExactMatrix& expansion_matrix() const { return expansion_; }
  std::span<const Monomial> plucker_monomials() const { return pcols_; }

private:
  std::size_t row_index(const Monomial& uv_mono) const;

  Field field_;
  std::vector<Monomial> pcols_;        // 126 degree-4 p-monomials, descending
  std::vector<Monomial> deg4_uv_;      // 35 degree-4 monomials in 4 variables
  std::unordered_map<std::uint64_t, std::size_t> uv_row_of_;  // packed uv mono -> row
  ExactMatrix expansion_;              // 1225 x 126
  std::vector<std::size_t> pivot_cols_;  // leftmost pivot columns of expansion_
  std::vector<std::size_t> solve_rows_;  // rows making the pivot submatrix invertible
  ExactMatrix solve_inverse_;          // inverse of expansion_[solve_rows_, pivot_cols_]
};

}  // namespace lsc

#endif
