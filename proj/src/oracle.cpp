#include "lsc/oracle.hpp"

#include <algorithm>

namespace lsc {

namespace {

std::int64_t enumeration_modulus(const Field& field) {
  if (field.kind() != FieldKind::PrimeField)
    throw InputError("brute-force oracle needs a prime field fp:q");
  std::int64_t q = field.modulus();
  if (q > 7) throw InputError("enumeration budget exceeded: need q <= 7");
  return q;
}

}  // namespace

std::vector<SubspaceRep> enumerate_g24(std::int64_t q) {
  Field field = Field::prime(q);
  enumeration_modulus(field);

  std::vector<SubspaceRep> out;
  // RREF shapes by pivot pair (i < j): row 0 has free entries at columns
  // > i other than j, row 1 at columns > j.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<std::size_t> free0, free1;
      for (std::size_t c = i + 1; c < 4; ++c)
        if (c != j) free0.push_back(c);
      for (std::size_t c = j + 1; c < 4; ++c) free1.push_back(c);
      std::size_t nfree = free0.size() + free1.size();
      std::size_t count = 1;
      for (std::size_t t = 0; t < nfree; ++t) count *= static_cast<std::size_t>(q);
      for (std::size_t code = 0; code < count; ++code) {
        ExactMatrix m(field, 2, 4);
        m.at(0, i) = field.one();
        m.at(1, j) = field.one();
        std::size_t rest = code;
        for (std::size_t c : free0) {
          m.at(0, c) = field.from_int(static_cast<std::int64_t>(rest % q));
          rest /= static_cast<std::size_t>(q);
        }
        for (std::size_t c : free1) {
          m.at(1, c) = field.from_int(static_cast<std::int64_t>(rest % q));
          rest /= static_cast<std::size_t>(q);
        }
        out.push_back(SubspaceRep{std::move(m)});
      }
    }
  }
  return out;
}

std::vector<PluckerPoint> brute_force_lines(const RelationSpace& r) {
  const Field& field = r.field();
  std::int64_t q = enumeration_modulus(field);

  std::vector<PluckerPoint> members;
  for (const SubspaceRep& rep : enumerate_g24(q)) {
    std::span<const Scalar> u = rep.mat.row(0);
    std::span<const Scalar> v = rep.mat.row(1);
    if (rank_of(stacked_membership_matrix(r, u, v)) <= 13)
      members.push_back(plucker_from_span(field, u, v).normalized());
  }
  std::sort(members.begin(), members.end());
  return members;
}

CrossValidation cross_validate(const RelationSpace& r) {
  const Field& field = r.field();
  std::int64_t q = enumeration_modulus(field);

  Ideal ideal = line_scheme_ideal(r);
  CrossValidation result;
  for (const SubspaceRep& rep : enumerate_g24(q)) {
    std::span<const Scalar> u = rep.mat.row(0);
    std::span<const Scalar> v = rep.mat.row(1);
    bool rank_member = rank_of(stacked_membership_matrix(r, u, v)) <= 13;

    PluckerPoint point = plucker_from_span(field, u, v);
    bool ideal_member = true;
    for (const MultiPoly& g : ideal.generators()) {
      if (!field.is_zero(g.eval(point.coords()))) {
        ideal_member = false;
        break;
      }
    }

    ++result.subspaces;
    if (rank_member) ++result.members;
    if (rank_member != ideal_member)
      result.discrepancies.push_back(
          Discrepancy{rep.mat, point.normalized(), rank_member, ideal_member});
  }
  result.ok = result.discrepancies.empty();
  return result;
}

}  // namespace lsc
