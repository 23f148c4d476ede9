#ifndef LSC_SYMDET_HPP
#define LSC_SYMDET_HPP

#include <vector>

#include "lsc/poly.hpp"

namespace lsc {

enum class DetStrategy : std::uint8_t {
  // Row expansion with memoization on column subsets; works for any size.
  Laplace,
  // Generalized Laplace along the top half: det = sum over column
  // half-subsets S of sign(S) * det(top[S]) * det(bottom[S^c]). Requires
  // even dimension; intended for matrices whose top and bottom blocks
  // depend on disjoint variable groups (the u-rows and v-rows of the
  // line-scheme pipeline), where it reduces an 8x8 determinant to 70
  // products of two 4x4 determinants.
  TwoBlockLaplace,
};

MultiPoly sym_det(const std::vector<std::vector<MultiPoly>>& m, DetStrategy strategy);

}  // namespace lsc

#endif
