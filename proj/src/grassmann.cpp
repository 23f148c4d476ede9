#include "lsc/grassmann.hpp"

#include <map>
#include <mutex>

namespace lsc {

MonomialOrder plucker_order() { return MonomialOrder{OrderKind::DegRevLex, 6}; }
MonomialOrder uv_order() { return MonomialOrder{OrderKind::DegRevLex, 8}; }

std::span<const std::string> plucker_var_names() {
  static const std::string names[6] = {"p01", "p02", "p03", "p12", "p13", "p23"};
  return names;
}

std::span<const std::string> uv_var_names() {
  static const std::string names[8] = {"u0", "u1", "u2", "u3", "v0", "v1", "v2", "v3"};
  return names;
}

PluckerPoint::PluckerPoint(const Field& field, std::array<Scalar, 6> coords)
    : field_(field), coords_(std::move(coords)) {
  bool all_zero = true;
  for (const Scalar& c : coords_)
    if (!field_.is_zero(c)) all_zero = false;
  if (all_zero) throw ComputeError("plucker point: all coordinates zero");
  // p01*p23 - p02*p13 + p03*p12 must vanish.
  Scalar q = field_.sub(field_.mul(coords_[0], coords_[5]), field_.mul(coords_[1], coords_[4]));
  q = field_.add(q, field_.mul(coords_[2], coords_[3]));
  if (!field_.is_zero(q)) throw ComputeError("plucker point: quadric not satisfied");
}

PluckerPoint PluckerPoint::normalized() const {
  std::size_t lead = 0;
  while (field_.is_zero(coords_[lead])) ++lead;
  Scalar inv = field_.inv(coords_[lead]);
  std::array<Scalar, 6> scaled;
  for (std::size_t i = 0; i < 6; ++i) scaled[i] = field_.mul(coords_[i], inv);
  return PluckerPoint(field_, std::move(scaled));
}

int PluckerPoint::compare(const PluckerPoint& other) const {
  for (std::size_t i = 0; i < 6; ++i) {
    int c = scalar_compare(coords_[i], other.coords_[i]);
    if (c != 0) return c;
  }
  return 0;
}

PluckerPoint plucker_from_span(const Field& field, std::span<const Scalar> u,
                               std::span<const Scalar> v) {
  if (u.size() != 4 || v.size() != 4) throw std::logic_error("plucker_from_span: need 4-vectors");
  std::array<Scalar, 6> coords;
  bool all_zero = true;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [a, b] = kPluckerPairs[k];
    coords[k] = field.sub(field.mul(u[a], v[b]), field.mul(u[b], v[a]));
    if (!field.is_zero(coords[k])) all_zero = false;
  }
  if (all_zero) throw InputError("degenerate span");
  return PluckerPoint(field, std::move(coords));
}

MultiPoly plucker_quadric(const Field& field) {
  MonomialOrder order = plucker_order();
  std::vector<Term> terms;
  terms.push_back({Monomial::from_exponents({1u, 0u, 0u, 0u, 0u, 1u}), field.one()});
  terms.push_back({Monomial::from_exponents({0u, 1u, 0u, 0u, 1u, 0u}), field.neg(field.one())});
  terms.push_back({Monomial::from_exponents({0u, 0u, 1u, 1u, 0u, 0u}), field.one()});
  return MultiPoly::from_terms(field, order, std::move(terms));
}

MultiPoly expand_to_uv(const MultiPoly& q) {
  if (q.nvars() != 6) throw std::logic_error("expand_to_uv: expected the 6-variable ring");
  const Field& field = q.field();
  MonomialOrder uv = uv_order();

  // p_ab -> u_a*v_b - u_b*v_a as uv-ring binomials.
  std::vector<MultiPoly> minors;
  minors.reserve(6);
  for (auto [a, b] : kPluckerPairs) {
    std::vector<Term> t;
    t.push_back({Monomial::variable(8, a).times(Monomial::variable(8, 4 + b)), field.one()});
    t.push_back(
        {Monomial::variable(8, b).times(Monomial::variable(8, 4 + a)), field.neg(field.one())});
    minors.push_back(MultiPoly::from_terms(field, uv, std::move(t)));
  }

  MultiPoly out(field, uv);
  for (const Term& term : q.terms()) {
    MultiPoly prod = MultiPoly::constant(field, uv, term.coeff);
    for (std::size_t k = 0; k < 6; ++k)
      for (unsigned e = 0; e < term.mono.exponent(k); ++e) prod = prod.times(minors[k]);
    out = out.plus(prod);
  }
  return out;
}

RewriteBasis::RewriteBasis(const Field& field)
    : field_(field),
      pcols_(monomials_of_degree(plucker_order(), 4)),
      deg4_uv_(monomials_of_degree(MonomialOrder{OrderKind::DegRevLex, 4}, 4)),
      expansion_(field, 35 * 35, pcols_.size()),
      solve_inverse_(field, 0, 0) {
  // Row indexing: bidegree-(4,4) uv-monomial = (degree-4 u-part, degree-4
  // v-part) on the 35x35 grid.
  std::unordered_map<std::uint64_t, std::size_t> part_index;
  for (std::size_t i = 0; i < deg4_uv_.size(); ++i) part_index[deg4_uv_[i].packed()] = i;
  for (std::size_t iu = 0; iu < 35; ++iu) {
    for (std::size_t iv = 0; iv < 35; ++iv) {
      unsigned exps[8];
      for (std::size_t k = 0; k < 4; ++k) {
        exps[k] = deg4_uv_[iu].exponent(k);
        exps[4 + k] = deg4_uv_[iv].exponent(k);
      }
      uv_row_of_[Monomial::from_exponents(std::span<const unsigned>(exps, 8)).packed()] =
          iu * 35 + iv;
    }
  }

  for (std::size_t col = 0; col < pcols_.size(); ++col) {
    MultiPoly expanded =
        expand_to_uv(MultiPoly::single(field_, plucker_order(), pcols_[col], field_.one()));
    for (const Term& t : expanded.terms()) expansion_.at(row_index(t.mono), col) = t.coeff;
  }

  pivot_cols_ = rref(expansion_).pivots;

  // Rows making the pivot-column submatrix invertible (leftmost in row
  // index, hence deterministic): pivot columns of the transpose.
  ExactMatrix cols_only(field_, expansion_.rows(), pivot_cols_.size());
  for (std::size_t r = 0; r < expansion_.rows(); ++r)
    for (std::size_t k = 0; k < pivot_cols_.size(); ++k)
      cols_only.at(r, k) = expansion_.at(r, pivot_cols_[k]);
  solve_rows_ = rref(cols_only.transposed()).pivots;
  if (solve_rows_.size() != pivot_cols_.size())
    throw std::logic_error("rewrite basis: inconsistent rank");

  // Invert M = expansion[solve_rows, pivot_cols] by reducing [M | I].
  std::size_t n = pivot_cols_.size();
  ExactMatrix aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug.at(r, c) = expansion_.at(solve_rows_[r], pivot_cols_[c]);
    aug.at(r, n + r) = field_.one();
  }
  RrefResult red = rref(aug);
  if (red.rank != n) throw std::logic_error("rewrite basis: pivot submatrix singular");
  solve_inverse_ = ExactMatrix(field_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) solve_inverse_.at(r, c) = red.mat.at(r, n + c);
}

std::size_t RewriteBasis::row_index(const Monomial& uv_mono) const {
  auto it = uv_row_of_.find(uv_mono.packed());
  if (it == uv_row_of_.end())
    throw std::logic_error("rewrite basis: monomial not of bidegree (4,4)");
  return it->second;
}

MultiPoly RewriteBasis::rewrite_to_plucker(const MultiPoly& f) const {
  MonomialOrder porder = plucker_order();
  if (f.is_zero()) return MultiPoly(field_, porder);
  if (!(f.order() == uv_order()) || !(f.field() == field_))
    throw std::logic_error("rewrite_to_plucker: wrong ring");

  std::vector<Scalar> b(expansion_.rows(), field_.zero());
  for (const Term& t : f.terms()) b[row_index(t.mono)] = t.coeff;

  // Particular solution supported on the pivot columns; unique there, so it
  // coincides with the leftmost-pivot zero-free-variable solution.
  std::size_t n = pivot_cols_.size();
  std::vector<Scalar> x(n, field_.zero());
  for (std::size_t r = 0; r < n; ++r) {
    Scalar acc = field_.zero();
    for (std::size_t c = 0; c < n; ++c)
      acc = field_.add(acc, field_.mul(solve_inverse_.at(r, c), b[solve_rows_[c]]));
    x[r] = std::move(acc);
  }

  // Exact residual check over all 1225 rows; failure means the input was
  // not a weight-det^4 covariant.
  for (std::size_t r = 0; r < expansion_.rows(); ++r) {
    Scalar acc = field_.zero();
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& e = expansion_.at(r, pivot_cols_[k]);
      if (!field_.is_zero(e) && !field_.is_zero(x[k]))
        acc = field_.add(acc, field_.mul(e, x[k]));
    }
    if (!field_.eq(acc, b[r])) throw ComputeError("not a Plucker covariant");
  }

  std::vector<Term> terms;
  for (std::size_t k = 0; k < n; ++k)
    if (!field_.is_zero(x[k])) terms.push_back({pcols_[pivot_cols_[k]], x[k]});
  return MultiPoly::from_terms(field_, porder, std::move(terms));
}

std::shared_ptr<const RewriteBasis> RewriteBasis::for_field(const Field& field) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::int64_t>, std::shared_ptr<const RewriteBasis>> cache;
  std::pair<int, std::int64_t> key{static_cast<int>(field.kind()), field.modulus()};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const RewriteBasis>(field);
  cache.emplace(key, basis);
  return basis;
}

}  // namespace lsc
