#include "lsc/linescheme.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <unordered_map>

#include "lsc/hash.hpp"
#include "lsc/symdet.hpp"

namespace lsc {

RelationSpace::RelationSpace(const Field& field, ExactMatrix matrix)
    : field_(field), mat_(std::move(matrix)) {
  if (mat_.rows() != 6 || mat_.cols() != 16)
    throw InputError("relation space matrix must be 6x16");
  if (!(mat_.field() == field)) throw std::logic_error("relation space: field mismatch");
  if (rank_of(mat_) != 6) throw InputError("relation space must have dimension 6");
}

ExactMatrix RelationSpace::row_as_matrix(std::size_t k) const {
  ExactMatrix m(field_, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = mat_.at(k, 4 * i + j);
  return m;
}

MonomialOrder point_order() { return MonomialOrder{OrderKind::DegRevLex, 4}; }
MonomialOrder coefficient_order() { return MonomialOrder{OrderKind::DegRevLex, 6}; }

std::span<const std::string> point_var_names() {
  static const std::string names[4] = {"x0", "x1", "x2", "x3"};
  return names;
}

std::span<const std::string> coefficient_var_names() {
  static const std::string names[6] = {"c1", "c2", "c3", "c4", "c5", "c6"};
  return names;
}

ExactMatrix q_tensor_matrix(const Field& field, std::span<const Scalar> u,
                            std::span<const Scalar> v) {
  if (u.size() != 4 || v.size() != 4) throw std::logic_error("q_tensor_matrix: need 4-vectors");
  ExactMatrix b(field, 8, 16);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      b.at(j, 4 * i + j) = u[i];      // row u (x) e_j
      b.at(4 + j, 4 * i + j) = v[i];  // row v (x) e_j
    }
  return b;
}

ExactMatrix stacked_membership_matrix(const RelationSpace& r, std::span<const Scalar> u,
                                      std::span<const Scalar> v) {
  const Field& field = r.field();
  ExactMatrix b = q_tensor_matrix(field, u, v);
  ExactMatrix stacked(field, 14, 16);
  for (std::size_t row = 0; row < 8; ++row)
    for (std::size_t c = 0; c < 16; ++c) stacked.at(row, c) = b.at(row, c);
  for (std::size_t row = 0; row < 6; ++row)
    for (std::size_t c = 0; c < 16; ++c) stacked.at(8 + row, c) = r.matrix().at(row, c);
  return stacked;
}

namespace {

// The eliminated 8x10 matrix B' and the minor assembly. Rows 0..3 are
// linear in u, rows 4..7 linear in v, so every maximal minor is
// bihomogeneous of bidegree (4,4).
struct EliminatedMatrix {
  std::vector<std::vector<MultiPoly>> entries;  // 8 x 10
};

EliminatedMatrix eliminate_pivots(const RelationSpace& r,
                                  const std::vector<std::size_t>& permutation) {
  const Field& field = r.field();
  MonomialOrder uv = uv_order();
  RrefResult red = rref(r.matrix());

  std::vector<std::size_t> nonpivots;
  for (std::size_t c = 0; c < 16; ++c)
    if (std::find(red.pivots.begin(), red.pivots.end(), c) == red.pivots.end())
      nonpivots.push_back(c);

  if (!permutation.empty()) {
    if (permutation.size() != nonpivots.size())
      throw std::logic_error("nonpivot permutation must have length 10");
    std::vector<std::size_t> permuted(nonpivots.size());
    for (std::size_t i = 0; i < permutation.size(); ++i)
      permuted[i] = nonpivots.at(permutation[i]);
    nonpivots = std::move(permuted);
  }

  // Symbolic row (block, j): entry at column 4i+j' is var(4*block + i) when
  // j' == j, else zero.
  auto symbolic_entry = [&](std::size_t block, std::size_t j, std::size_t col) {
    std::size_t i = col / 4, jp = col % 4;
    if (jp != j) return MultiPoly(field, uv);
    return MultiPoly::variable(field, uv, 4 * block + i);
  };

  EliminatedMatrix out;
  out.entries.assign(8, std::vector<MultiPoly>(10, MultiPoly(field, uv)));
  for (std::size_t row = 0; row < 8; ++row) {
    std::size_t block = row / 4, j = row % 4;
    // Schur-style elimination of the six pivot columns against the RREF
    // rows: b' = b - sum_k b[p_k] * rref_row_k, restricted to non-pivots.
    std::vector<MultiPoly> pivot_entries;
    pivot_entries.reserve(6);
    for (std::size_t k = 0; k < 6; ++k)
      pivot_entries.push_back(symbolic_entry(block, j, red.pivots[k]));
    for (std::size_t cidx = 0; cidx < 10; ++cidx) {
      std::size_t col = nonpivots[cidx];
      MultiPoly e = symbolic_entry(block, j, col);
      for (std::size_t k = 0; k < 6; ++k) {
        const Scalar& coeff = red.mat.at(k, col);
        if (!field.is_zero(coeff) && !pivot_entries[k].is_zero())
          e = e.minus(pivot_entries[k].scaled(coeff));
      }
      out.entries[row][cidx] = std::move(e);
    }
  }
  return out;
}

// All 45 maximal minors via two-block Laplace with 4x4 determinants shared
// across minors.
std::vector<MultiPoly> assemble_minors(const EliminatedMatrix& bp, const Field& field) {
  MonomialOrder uv = uv_order();
  std::unordered_map<std::uint32_t, MultiPoly> udets, vdets;

  auto det4 = [&](std::size_t block, std::uint32_t colmask) -> const MultiPoly& {
    auto& cache = block == 0 ? udets : vdets;
    auto it = cache.find(colmask);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<MultiPoly>> sub(4, std::vector<MultiPoly>());
    std::vector<std::size_t> cols;
    for (std::uint32_t rest = colmask; rest != 0; rest &= rest - 1)
      cols.push_back(static_cast<std::size_t>(std::countr_zero(rest & -rest)));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c : cols) sub[r].push_back(bp.entries[4 * block + r][c]);
    return cache.emplace(colmask, sym_det(sub, DetStrategy::Laplace)).first->second;
  };

  std::vector<MultiPoly> minors;
  minors.reserve(45);
  // Column 8-subsets of the 10, enumerated by the excluded pair.
  for (std::size_t e1 = 0; e1 < 10; ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < 10; ++e2) {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < 10; ++c)
        if (c != e1 && c != e2) cols.push_back(c);

      MultiPoly minor(field, uv);
      // Sum over 4-subsets S of the 8 columns: sign(S) * det_u(S) *
      // det_v(complement); sign is the parity of the positions of S.
      for (std::uint32_t mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) != 4) continue;
        std::uint32_t umask = 0, vmask = 0;
        unsigned possum = 0;
        for (std::size_t pos = 0; pos < 8; ++pos) {
          if (mask & (1u << pos)) {
            umask |= 1u << cols[pos];
            possum += static_cast<unsigned>(pos);
          } else {
            vmask |= 1u << cols[pos];
          }
        }
        const MultiPoly& du = det4(0, umask);
        if (du.is_zero()) continue;
        const MultiPoly& dv = det4(1, vmask);
        if (dv.is_zero()) continue;
        MultiPoly prod = du.times(dv);
        minor = (possum % 2 != 0) ? minor.minus(prod) : minor.plus(prod);
      }
      minors.push_back(std::move(minor));
    }
  }
  return minors;
}

std::vector<MultiPoly> build_minors(const RelationSpace& r, const LineSchemeOptions& opts) {
  return assemble_minors(eliminate_pivots(r, opts.nonpivot_permutation), r.field());
}

}  // namespace

std::vector<MultiPoly> line_scheme_minors(const RelationSpace& r) {
  return build_minors(r, LineSchemeOptions{});
}

std::vector<std::vector<MultiPoly>> line_scheme_eliminated_matrix(const RelationSpace& r) {
  return eliminate_pivots(r, {}).entries;
}

Ideal line_scheme_ideal(const RelationSpace& r, const LineSchemeOptions& opts) {
  const Field& field = r.field();
  std::vector<MultiPoly> minors = build_minors(r, opts);
  auto basis = RewriteBasis::for_field(field);

  std::vector<MultiPoly> gens;
  gens.push_back(plucker_quadric(field));
  std::vector<MultiPoly> quartics;
  for (const MultiPoly& m : minors)
    if (!m.is_zero()) quartics.push_back(basis->rewrite_to_plucker(m));
  std::sort(quartics.begin(), quartics.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return a.compare(b) < 0; });
  for (MultiPoly& q : quartics) gens.push_back(std::move(q));
  return Ideal(field, plucker_order(), std::move(gens));
}

HilbertData scheme_invariants(const Ideal& ideal) {
  GroebnerBasis gb = buchberger(ideal);
  return dim_degree(hilbert_numerator(gb.leading_monomials(), ideal.nvars()), ideal.nvars());
}

RelationSpace transpose_relations(const RelationSpace& r) {
  const Field& field = r.field();
  ExactMatrix m(field, 6, 16);
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(k, 4 * j + i) = r.matrix().at(k, 4 * i + j);
  return RelationSpace(field, std::move(m));
}

Ideal point_scheme_ideal(const RelationSpace& r) {
  const Field& field = r.field();
  MonomialOrder xo = point_order();

  // M(x)[k][j] = sum_i R[k][4i+j] x_i: each relation as a linear form in
  // the right tensor factor.
  std::vector<std::vector<MultiPoly>> m(6, std::vector<MultiPoly>(4, MultiPoly(field, xo)));
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < 4; ++i) {
        const Scalar& c = r.matrix().at(k, 4 * i + j);
        if (!field.is_zero(c)) terms.push_back({Monomial::variable(4, i), c});
      }
      m[k][j] = MultiPoly::from_terms(field, xo, std::move(terms));
    }

  std::vector<MultiPoly> gens;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c)
        for (std::size_t d = c + 1; d < 6; ++d) {
          std::vector<std::vector<MultiPoly>> sub{m[a], m[b], m[c], m[d]};
          gens.push_back(sym_det(sub, DetStrategy::Laplace));
        }
  std::sort(gens.begin(), gens.end(),
            [](const MultiPoly& x, const MultiPoly& y) { return x.compare(y) < 0; });
  return Ideal(field, xo, std::move(gens));
}

namespace {

std::vector<std::vector<MultiPoly>> pencil_matrix(const RelationSpace& r) {
  const Field& field = r.field();
  MonomialOrder co = coefficient_order();
  std::vector<std::vector<MultiPoly>> m(4, std::vector<MultiPoly>(4, MultiPoly(field, co)));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < 6; ++k) {
        const Scalar& c = r.matrix().at(k, 4 * i + j);
        if (!field.is_zero(c)) terms.push_back({Monomial::variable(6, k), c});
      }
      m[i][j] = MultiPoly::from_terms(field, co, std::move(terms));
    }
  return m;
}

}  // namespace

std::pair<Ideal, Ideal> rank_loci_ideals(const RelationSpace& r) {
  const Field& field = r.field();
  MonomialOrder co = coefficient_order();
  std::vector<std::vector<MultiPoly>> m = pencil_matrix(r);

  std::vector<MultiPoly> rank1, rank2;
  for (std::size_t r1 = 0; r1 < 4; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < 4; ++r2)
      for (std::size_t c1 = 0; c1 < 4; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 4; ++c2) {
          std::vector<std::vector<MultiPoly>> sub{{m[r1][c1], m[r1][c2]},
                                                  {m[r2][c1], m[r2][c2]}};
          rank1.push_back(sym_det(sub, DetStrategy::Laplace));
        }
  for (std::size_t rx = 0; rx < 4; ++rx)
    for (std::size_t cx = 0; cx < 4; ++cx) {
      std::vector<std::vector<MultiPoly>> sub;
      for (std::size_t i = 0; i < 4; ++i) {
        if (i == rx) continue;
        std::vector<MultiPoly> row;
        for (std::size_t j = 0; j < 4; ++j)
          if (j != cx) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
      }
      rank2.push_back(sym_det(sub, DetStrategy::Laplace));
    }

  auto canon = [](std::vector<MultiPoly>& v) {
    std::sort(v.begin(), v.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return a.compare(b) < 0; });
  };
  canon(rank1);
  canon(rank2);
  return {Ideal(field, co, std::move(rank1)), Ideal(field, co, std::move(rank2))};
}

namespace {

ExactMatrix pencil_at(const RelationSpace& r, std::span<const Scalar> c) {
  if (c.size() != 6) throw std::logic_error("pencil point must have 6 coordinates");
  const Field& field = r.field();
  ExactMatrix m(field, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Scalar acc = field.zero();
      for (std::size_t k = 0; k < 6; ++k)
        acc = field.add(acc, field.mul(c[k], r.matrix().at(k, 4 * i + j)));
      m.at(i, j) = std::move(acc);
    }
  return m;
}

PluckerPoint span_of_rank2(const Field& field, const ExactMatrix& m, bool use_columns) {
  if (rank_of(m) != 2) throw InputError("rank not two");
  auto vec = [&](std::size_t idx) {
    std::vector<Scalar> v(4);
    for (std::size_t t = 0; t < 4; ++t) v[t] = use_columns ? m.at(t, idx) : m.at(idx, t);
    return v;
  };
  // Leftmost nonzero vector, then the leftmost one independent of it.
  for (std::size_t a = 0; a < 4; ++a) {
    std::vector<Scalar> va = vec(a);
    bool zero = true;
    for (const Scalar& s : va)
      if (!field.is_zero(s)) zero = false;
    if (zero) continue;
    for (std::size_t b = a + 1; b < 4; ++b) {
      std::vector<Scalar> vb = vec(b);
      ExactMatrix pair(field, 2, 4);
      for (std::size_t t = 0; t < 4; ++t) {
        pair.at(0, t) = va[t];
        pair.at(1, t) = vb[t];
      }
      if (rank_of(pair) == 2) return plucker_from_span(field, va, vb);
    }
  }
  throw std::logic_error("rank-2 matrix without independent columns");
}

}  // namespace

PluckerPoint phi_map(const RelationSpace& r, std::span<const Scalar> c) {
  return span_of_rank2(r.field(), pencil_at(r, c), /*use_columns=*/true);
}

PluckerPoint psi_map(const RelationSpace& r, std::span<const Scalar> c) {
  return span_of_rank2(r.field(), pencil_at(r, c), /*use_columns=*/false);
}

std::uint64_t relation_space_hash(const RelationSpace& r) {
  const Field& field = r.field();
  std::ostringstream os;
  os << field_spec_string(field.spec());
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t c = 0; c < 16; ++c) os << ';' << field.to_string(r.matrix().at(k, c));
  return fnv1a64(os.str());
}

LineSchemeComputation compute_line_scheme_full(const RelationSpace& r) {
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };

  LineSchemeReport report;
  report.field = r.field().spec();
  report.input_hash = relation_space_hash(r);

  auto t0 = Clock::now();
  Ideal ideal = line_scheme_ideal(r);
  auto t1 = Clock::now();
  report.timings.build_ideal_s = seconds(t0, t1);
  report.generator_count = ideal.generators().size();
  report.minors_nonzero = report.generator_count - 1;

  GroebnerBasis gb = buchberger(ideal);
  auto t2 = Clock::now();
  report.timings.groebner_s = seconds(t1, t2);
  report.gb_size = gb.size();

  report.hilbert =
      dim_degree(hilbert_numerator(gb.leading_monomials(), ideal.nvars()), ideal.nvars());
  auto t3 = Clock::now();
  report.timings.hilbert_s = seconds(t2, t3);
  report.timings.total_s = seconds(t0, t3);

  if (report.hilbert.projdim >= 0 && report.hilbert.degree < 1)
    throw ComputeError("non-empty scheme reported degree < 1");
  if (report.hilbert.projdim == 1)
    report.theorem_check =
        report.hilbert.degree == 20 ? TheoremCheck::Pass : TheoremCheck::Fail;
  return LineSchemeComputation{std::move(report), std::move(ideal), std::move(gb)};
}

LineSchemeReport compute_line_scheme(const RelationSpace& r) {
  return compute_line_scheme_full(r).report;
}

}  // namespace lsc
