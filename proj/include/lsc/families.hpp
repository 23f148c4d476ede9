#ifndef LSC_FAMILIES_HPP
#define LSC_FAMILIES_HPP

#include <array>

#include "lsc/linescheme.hpp"

namespace lsc {

// Sklyanin parameters: a1 + a2 + a3 + a1*a2*a3 = 0, each a_i outside
// {0, 1, -1}, field characteristic != 2. Validated at construction.
struct SklyaninParams {
  Scalar a1, a2, a3;
};

SklyaninParams make_sklyanin_params(const Field& field, const Scalar& a1, const Scalar& a2,
                                    const Scalar& a3);

// a3 = -(a1 + a2) / (1 + a1*a2); rejects 1 + a1*a2 == 0 and excluded
// values, which makes invalid parameter pairs unrepresentable at the CLI.
SklyaninParams derive_sklyanin_params(const Field& field, const Scalar& a1, const Scalar& a2);

// Span of x0*xi - xi*x0 - a_i(xj*xk + xk*xj) and
// x0*xi + xi*x0 - a_i(xj*xk - xk*xj), (i,j,k) cyclic over (1,2,3).
RelationSpace sklyanin(const Field& field, const SklyaninParams& params);

// Same with the opposite signs on the xk*xj terms; the line scheme drops
// to dimension 1.
RelationSpace twisted_sklyanin(const Field& field, const SklyaninParams& params);

// The four diagonal quadrics cutting out the elliptic curve E in P^3.
// Their 4x4 coefficient matrix must have rank 2 (any two span the pencil);
// anything else signals parameter corruption.
std::array<MultiPoly, 4> elliptic_quadrics(const Field& field, const SklyaninParams& params);

// Commutators x_i (x) x_j - x_j (x) x_i, 0 <= i < j <= 3.
RelationSpace skew(const Field& field);

// Span of the 16 tensors e_i (x) e_j - e_j (x) theta(e_i); accepted only
// when that span is exactly 6-dimensional.
RelationSpace theta_twist(const Field& field, const ExactMatrix& theta);

// Seed-reproducible random rank-6 relation space (SplitMix64).
RelationSpace random_relation_space(std::uint64_t seed, const Field& field);

// A relation space containing a planted rank-2 tensor u (x) a + v (x) b in
// span{u,v} (x) V, so span(u,v) lies on X_R by construction. The tensor is
// placed in row 0, so the coefficient vector e_0 picks it out of the
// pencil.
struct PlantedInstance {
  RelationSpace relations;
  std::array<Scalar, 4> u, v;
};

PlantedInstance planted_instance(std::uint64_t seed, const Field& field);

}  // namespace lsc

#endif
