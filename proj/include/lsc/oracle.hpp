#ifndef LSC_ORACLE_HPP
#define LSC_ORACLE_HPP

#include <vector>

#include "lsc/linescheme.hpp"

namespace lsc {

// Canonical representative of a 2-dimensional subspace of F_q^4: a 2x4
// matrix in RREF with rank 2. Bijective with the points of G(2,4)(F_q).
struct SubspaceRep {
  ExactMatrix mat;
};

// All 2-dimensional subspaces of F_q^4, exactly the Gaussian binomial
// [4 choose 2]_q = q^4 + q^3 + 2q^2 + q + 1 of them. q <= 7 keeps the
// enumeration sub-second and failures debuggable.
std::vector<SubspaceRep> enumerate_g24(std::int64_t q);

// Plucker points of the subspaces Q with (Q (x) V) meeting R, decided by
// the rank test rank[B(u,v); R] <= 13. Sorted, normalized representatives.
std::vector<PluckerPoint> brute_force_lines(const RelationSpace& r);

struct Discrepancy {
  ExactMatrix subspace;
  PluckerPoint point;
  bool rank_member;
  bool ideal_member;
};

struct CrossValidation {
  bool ok = false;
  std::size_t subspaces = 0;
  std::size_t members = 0;
  std::vector<Discrepancy> discrepancies;
};

// Soundness check of the whole pipeline over a small field: for every
// subspace, membership by rank test must equal vanishing of every
// line-scheme generator at its Plucker point.
CrossValidation cross_validate(const RelationSpace& r);

}  // namespace lsc

#endif
