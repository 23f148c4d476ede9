#ifndef LSC_LINESCHEME_HPP
#define LSC_LINESCHEME_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "lsc/grassmann.hpp"
#include "lsc/groebner.hpp"
#include "lsc/hilbert.hpp"

namespace lsc {

// A 6-dimensional subspace R of V (x) V, stored as a 6x16 matrix whose rows
// span R. Column convention: e_i (x) e_j sits at column 4*i + j (i the
// first tensor factor). Rank 6 is enforced at construction.
class RelationSpace {
public:
  RelationSpace(const Field& field, ExactMatrix matrix);

  const Field& field() const { return field_; }
  const ExactMatrix& matrix() const { return mat_; }

  // Reshape of row k as the 4x4 matrix mat[i][j] = R[k][4i+j].
  ExactMatrix row_as_matrix(std::size_t k) const;

private:
  Field field_;
  ExactMatrix mat_;
};

MonomialOrder point_order();       // x0 > x1 > x2 > x3, DegRevLex
MonomialOrder coefficient_order(); // c1 > ... > c6, DegRevLex

std::span<const std::string> point_var_names();
std::span<const std::string> coefficient_var_names();

struct StageTimings {
  double build_ideal_s = 0;
  double groebner_s = 0;
  double hilbert_s = 0;
  double total_s = 0;
};

enum class TheoremCheck : std::uint8_t { NotApplicable, Pass, Fail };

// Machine-readable result of one full pipeline run.
struct LineSchemeReport {
  FieldSpec field;
  std::size_t minors_total = 45;
  std::size_t minors_nonzero = 0;
  std::size_t generator_count = 0;  // nonzero quartics plus the quadric
  std::size_t gb_size = 0;
  HilbertData hilbert;
  TheoremCheck theorem_check = TheoremCheck::NotApplicable;
  StageTimings timings;
  std::uint64_t input_hash = 0;
  std::optional<std::uint64_t> seed;
};

struct LineSchemeOptions {
  // Optional permutation of the 10 non-pivot columns applied before minor
  // extraction; the resulting ideal has the same reduced Groebner basis.
  // Used by the elimination-independence property suite.
  std::vector<std::size_t> nonpivot_permutation;
};

// Defining ideal of the line scheme X_R in the six Plucker variables:
// the Plucker quadric plus the surviving maximal minors of the 8x10
// eliminated matrix, rewritten as quartics. A 2-plane Q = span(u,v) lies in
// the vanishing locus iff (Q (x) V) meets R, i.e. the stacked 14x16 matrix
// [B(u,v); R] has rank <= 13.
Ideal line_scheme_ideal(const RelationSpace& r, const LineSchemeOptions& opts = {});

// The 45 bidegree-(4,4) minors themselves (before rewriting); test hook.
std::vector<MultiPoly> line_scheme_minors(const RelationSpace& r);

// The eliminated 8x10 matrix whose maximal minors those are (rows 0..3
// linear in u, rows 4..7 linear in v); test hook.
std::vector<std::vector<MultiPoly>> line_scheme_eliminated_matrix(const RelationSpace& r);

// buchberger -> leading terms -> hilbert_numerator -> dim_degree.
HilbertData scheme_invariants(const Ideal& ideal);

// sigma(R): tensor-factor swap, column permutation 4i+j -> 4j+i. The mirror
// line scheme Y_R is line_scheme_ideal(transpose_relations(R)).
RelationSpace transpose_relations(const RelationSpace& r);

// Ideal of the point scheme in P^3: the 15 maximal minors of the 6x4
// matrix M(x)[k][j] = sum_i R[k][4i+j] x_i, vanishing where M(x) has a
// nonzero right kernel.
Ideal point_scheme_ideal(const RelationSpace& r);

// Determinantal ideals of the pencil M(c) = sum_k c_k mat(r_k) in the six
// coefficient variables: (I_rank1, I_rank2) = (all 36 2x2 minors, all 16
// 3x3 minors). I_rank2 cuts the closed locus T_{<=2} of P(R); the open
// rank-exactly-2 condition is handled pointwise by phi_map.
std::pair<Ideal, Ideal> rank_loci_ideals(const RelationSpace& r);

// Plucker point of the column space of M(c); defined only on rank-2
// tensors ("rank not two" otherwise). For t = a(x)b + c(x)d of rank 2 the
// column space is span{a, c}, so the image lands on X_R.
PluckerPoint phi_map(const RelationSpace& r, std::span<const Scalar> c);

// Row-space analogue; lands on Y_R.
PluckerPoint psi_map(const RelationSpace& r, std::span<const Scalar> c);

LineSchemeReport compute_line_scheme(const RelationSpace& r);

// Same run, keeping the ideal and basis for follow-up checks (membership
// of planted lines, phi images).
struct LineSchemeComputation {
  LineSchemeReport report;
  Ideal ideal;
  GroebnerBasis gb;
};

LineSchemeComputation compute_line_scheme_full(const RelationSpace& r);

// Scalar helpers shared with the brute-force oracle: the 8x16 matrix with
// rows u(x)e_j, v(x)e_j, and the stacked 14x16 membership matrix.
ExactMatrix q_tensor_matrix(const Field& field, std::span<const Scalar> u,
                            std::span<const Scalar> v);
ExactMatrix stacked_membership_matrix(const RelationSpace& r, std::span<const Scalar> u,
                                      std::span<const Scalar> v);

std::uint64_t relation_space_hash(const RelationSpace& r);

}  // namespace lsc

#endif
