#include "lsc/families.hpp"

#include "lsc/rng.hpp"

namespace lsc {

namespace {

void validate_params(const Field& field, const SklyaninParams& p) {
  if (field.characteristic() == 2)
    throw InputError("sklyanin families require characteristic != 2");
  Scalar one = field.one();
  Scalar minus_one = field.neg(one);
  for (const Scalar* a : {&p.a1, &p.a2, &p.a3}) {
    if (field.is_zero(*a) || field.eq(*a, one) || field.eq(*a, minus_one))
      throw InputError("sklyanin parameters must avoid 0, 1 and -1");
  }
  // a1 + a2 + a3 + a1*a2*a3 = 0
  Scalar sum = field.add(field.add(p.a1, p.a2), p.a3);
  Scalar triple = field.mul(field.mul(p.a1, p.a2), p.a3);
  if (!field.is_zero(field.add(sum, triple)))
    throw InputError("sklyanin parameters violate a1+a2+a3+a1*a2*a3 = 0");
}

constexpr std::size_t col(std::size_t i, std::size_t j) { return 4 * i + j; }

// (i,j,k) over the cyclic permutations of (1,2,3).
constexpr std::array<std::array<std::size_t, 3>, 3> kCyclic{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

RelationSpace sklyanin_like(const Field& field, const SklyaninParams& p, bool twisted) {
  validate_params(field, p);
  const std::array<const Scalar*, 3> alpha{&p.a1, &p.a2, &p.a3};
  ExactMatrix m(field, 6, 16);
  for (std::size_t t = 0; t < 3; ++t) {
    auto [i, j, k] = kCyclic[t];
    const Scalar& a = *alpha[t];
    Scalar one = field.one();
    // x0 xi - xi x0 - a_i (xj xk -+ xk xj)
    m.at(2 * t, col(0, i)) = one;
    m.at(2 * t, col(i, 0)) = field.neg(one);
    m.at(2 * t, col(j, k)) = field.neg(a);
    m.at(2 * t, col(k, j)) = twisted ? a : field.neg(a);
    // x0 xi + xi x0 - (xj xk +- xk xj)
    m.at(2 * t + 1, col(0, i)) = one;
    m.at(2 * t + 1, col(i, 0)) = one;
    m.at(2 * t + 1, col(j, k)) = field.neg(one);
    m.at(2 * t + 1, col(k, j)) = twisted ? field.neg(one) : one;
  }
  return RelationSpace(field, std::move(m));
}

}  // namespace

SklyaninParams make_sklyanin_params(const Field& field, const Scalar& a1, const Scalar& a2,
                                    const Scalar& a3) {
  SklyaninParams p{a1, a2, a3};
  validate_params(field, p);
  return p;
}

SklyaninParams derive_sklyanin_params(const Field& field, const Scalar& a1, const Scalar& a2) {
  Scalar denom = field.add(field.one(), field.mul(a1, a2));
  if (field.is_zero(denom))
    throw InputError("cannot derive a3: 1 + a1*a2 = 0");
  Scalar a3 = field.neg(field.div(field.add(a1, a2), denom));
  return make_sklyanin_params(field, a1, a2, a3);
}

RelationSpace sklyanin(const Field& field, const SklyaninParams& params) {
  return sklyanin_like(field, params, /*twisted=*/false);
}

RelationSpace twisted_sklyanin(const Field& field, const SklyaninParams& params) {
  return sklyanin_like(field, params, /*twisted=*/true);
}

std::array<MultiPoly, 4> elliptic_quadrics(const Field& field, const SklyaninParams& p) {
  validate_params(field, p);
  const Scalar &a1 = p.a1, &a2 = p.a2, &a3 = p.a3;
  Scalar one = field.one();
  // Coefficient rows in the basis (x0^2, x1^2, x2^2, x3^2).
  std::array<std::array<Scalar, 4>, 4> rows{{
      {one, one, one, one},
      {one, field.neg(field.mul(a2, a3)), field.neg(a3), a2},
      {one, a3, field.neg(field.mul(a1, a3)), field.neg(a1)},
      {one, field.neg(a2), a1, field.neg(field.mul(a1, a2))},
  }};

  ExactMatrix coeff(field, 4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) coeff.at(r, c) = rows[r][c];
  if (rank_of(coeff) != 2) throw InputError("quadrics do not form a pencil");

  MonomialOrder xo = point_order();
  std::array<MultiPoly, 4> out{MultiPoly(field, xo), MultiPoly(field, xo),
                               MultiPoly(field, xo), MultiPoly(field, xo)};
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < 4; ++c) {
      Monomial sq = Monomial::variable(4, c).times(Monomial::variable(4, c));
      terms.push_back({sq, rows[r][c]});
    }
    out[r] = MultiPoly::from_terms(field, xo, std::move(terms));
  }
  return out;
}

RelationSpace skew(const Field& field) {
  ExactMatrix m(field, 6, 16);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      m.at(row, col(i, j)) = field.one();
      m.at(row, col(j, i)) = field.neg(field.one());
      ++row;
    }
  return RelationSpace(field, std::move(m));
}

RelationSpace theta_twist(const Field& field, const ExactMatrix& theta) {
  if (theta.rows() != 4 || theta.cols() != 4) throw InputError("theta must be 4x4");
  if (rank_of(theta) != 4) throw InputError("theta must be invertible");

  // Span of e_i (x) e_j - e_j (x) theta(e_i) over all i, j; theta(e_i) is
  // column i of theta.
  ExactMatrix big(field, 16, 16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t row = col(i, j);
      big.at(row, col(i, j)) = field.add(big.at(row, col(i, j)), field.one());
      for (std::size_t t = 0; t < 4; ++t)
        big.at(row, col(j, t)) = field.sub(big.at(row, col(j, t)), theta.at(t, i));
    }

  RrefResult red = rref(big);
  if (red.rank != 6) throw InputError("theta span not 6-dimensional");
  ExactMatrix m(field, 6, 16);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 16; ++c) m.at(r, c) = red.mat.at(r, c);
  return RelationSpace(field, std::move(m));
}

namespace {

Scalar random_scalar(SplitMix64& rng, const Field& field) {
  if (field.kind() == FieldKind::PrimeField)
    return field.from_int(static_cast<std::int64_t>(rng.below(
        static_cast<std::uint64_t>(field.modulus()))));
  // Small integers keep rational pipelines tractable.
  return field.from_int(static_cast<std::int64_t>(rng.below(101)) - 50);
}

std::array<Scalar, 4> random_vec4(SplitMix64& rng, const Field& field) {
  return {random_scalar(rng, field), random_scalar(rng, field), random_scalar(rng, field),
          random_scalar(rng, field)};
}

bool independent_pair(const Field& field, const std::array<Scalar, 4>& a,
                      const std::array<Scalar, 4>& b) {
  ExactMatrix m(field, 2, 4);
  for (std::size_t t = 0; t < 4; ++t) {
    m.at(0, t) = a[t];
    m.at(1, t) = b[t];
  }
  return rank_of(m) == 2;
}

}  // namespace

RelationSpace random_relation_space(std::uint64_t seed, const Field& field) {
  SplitMix64 rng(seed);
  for (;;) {
    ExactMatrix m(field, 6, 16);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 16; ++c) m.at(r, c) = random_scalar(rng, field);
    if (rank_of(m) == 6) return RelationSpace(field, std::move(m));
  }
}

PlantedInstance planted_instance(std::uint64_t seed, const Field& field) {
  SplitMix64 rng(seed);

  std::array<Scalar, 4> u, v;
  do {
    u = random_vec4(rng, field);
    v = random_vec4(rng, field);
  } while (!independent_pair(field, u, v));

  // t = u (x) a + v (x) b with a, b independent: a rank-2 tensor in
  // span{u,v} (x) V, so span(u,v) lies on X_R and e_0 is a rank-2 pencil
  // point.
  std::array<Scalar, 4> a, b;
  do {
    a = random_vec4(rng, field);
    b = random_vec4(rng, field);
  } while (!independent_pair(field, a, b));

  for (;;) {
    ExactMatrix m(field, 6, 16);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        m.at(0, col(i, j)) = field.add(field.mul(u[i], a[j]), field.mul(v[i], b[j]));
    for (std::size_t r = 1; r < 6; ++r)
      for (std::size_t c = 0; c < 16; ++c) m.at(r, c) = random_scalar(rng, field);
    if (rank_of(m) == 6) return PlantedInstance{RelationSpace(field, std::move(m)), u, v};
  }
}

}  // namespace lsc
