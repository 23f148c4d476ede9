#ifndef LSC_HILBERT_HPP
#define LSC_HILBERT_HPP

#include <cstdint>
#include <vector>

#include "lsc/monomial.hpp"

namespace lsc {

// Dimension and degree of a projective scheme, read off the Hilbert series
// of its homogeneous coordinate ring: H(t) = N(t)/(1-t)^nvars =
// Q(t)/(1-t)^(projdim+1) with Q(1) != 0, degree = Q(1). The empty scheme
// reports projdim -1, degree 0.
struct HilbertData {
  std::vector<std::int64_t> numerator;          // N(t), index = power of t
  std::vector<std::int64_t> reduced_numerator;  // Q(t)
  int projdim = -1;
  std::int64_t degree = 0;
};

// Numerator N(t) of the Hilbert series of k[x]/(leading_terms), computed by
// the standard pivot-variable divide-and-conquer recursion. The generator
// list is minimalized internally.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> leading_terms,
                                            std::size_t nvars);

HilbertData dim_degree(std::vector<std::int64_t> numerator, std::size_t nvars);

}  // namespace lsc

#endif
