#include <doctest.h>

#include "lsc/families.hpp"
#include "lsc/matrix.hpp"
#include "lsc/rng.hpp"

using namespace lsc;

namespace {

ExactMatrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                      std::initializer_list<std::int64_t> vals) {
  ExactMatrix m(f, rows, cols);
  auto it = vals.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.from_int(*it++);
  return m;
}

ExactMatrix random_matrix(const Field& f, SplitMix64& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = f.from_int(static_cast<std::int64_t>(rng.below(19)) - 9);
  return m;
}

}  // namespace

TEST_CASE("rref on the stated examples") {
  Field q = Field::rationals();

  RrefResult id = rref(ExactMatrix::identity(q, 2));
  CHECK(id.mat == ExactMatrix::identity(q, 2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  RrefResult zero = rref(ExactMatrix(q, 2, 2));
  CHECK(zero.mat == ExactMatrix(q, 2, 2));
  CHECK(zero.pivots.empty());
  CHECK(zero.rank == 0);

  RrefResult r = rref(from_ints(q, 2, 2, {2, 4, 1, 2}));
  CHECK(r.mat == from_ints(q, 2, 2, {1, 2, 0, 0}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);
}

TEST_CASE("rref is idempotent") {
  for (FieldKind kind : {FieldKind::Rationals, FieldKind::PrimeField}) {
    Field f = kind == FieldKind::Rationals ? Field::rationals() : Field::prime(32003);
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      ExactMatrix m = random_matrix(f, rng, 4, 7);
      RrefResult once = rref(m);
      RrefResult twice = rref(once.mat);
      CHECK(once.mat == twice.mat);
      CHECK(once.pivots == twice.pivots);
    }
  }
}

TEST_CASE("rank_of on the stated examples") {
  Field f = Field::prime(32003);
  CHECK(rank_of(ExactMatrix::identity(f, 5)) == 5);

  ExactMatrix same_rows(f, 3, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) same_rows.at(r, c) = f.from_int(std::int64_t(c) + 2);
  CHECK(rank_of(same_rows) == 1);

  CHECK(rank_of(skew(f).matrix()) == 6);
}

TEST_CASE("rank equals rank of transpose") {
  for (FieldKind kind : {FieldKind::Rationals, FieldKind::PrimeField}) {
    Field f = kind == FieldKind::Rationals ? Field::rationals() : Field::prime(101);
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      ExactMatrix m = random_matrix(f, rng, 5, 3);
      CHECK(rank_of(m) == rank_of(m.transposed()));
    }
  }
}

TEST_CASE("solve_particular on the stated examples") {
  Field q = Field::rationals();

  ExactMatrix id = ExactMatrix::identity(q, 3);
  std::vector<Scalar> b{q.from_int(4), q.from_int(-1), q.parse("2/3")};
  auto x = solve_particular(id, b);
  REQUIRE(x.has_value());
  for (std::size_t i = 0; i < 3; ++i) CHECK(q.eq((*x)[i], b[i]));

  ExactMatrix wide = from_ints(q, 1, 2, {1, 1});
  auto x2 = solve_particular(wide, std::vector<Scalar>{q.from_int(2)});
  REQUIRE(x2.has_value());
  CHECK(q.eq((*x2)[0], q.from_int(2)));
  CHECK(q.is_zero((*x2)[1]));

  ExactMatrix tall = from_ints(q, 2, 1, {1, 1});
  CHECK(!solve_particular(tall, std::vector<Scalar>{q.from_int(1), q.from_int(2)}).has_value());
}

TEST_CASE("solve_particular solutions satisfy the system exactly") {
  Field f = Field::prime(101);
  SplitMix64 rng(2024);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    ExactMatrix a = random_matrix(f, rng, 4, 6);
    std::vector<Scalar> b;
    for (int i = 0; i < 4; ++i)
      b.push_back(f.from_int(static_cast<std::int64_t>(rng.below(101))));
    auto x = solve_particular(a, b);
    if (!x) continue;
    ++solved;
    for (std::size_t r = 0; r < 4; ++r) {
      Scalar acc = f.zero();
      for (std::size_t c = 0; c < 6; ++c) acc = f.add(acc, f.mul(a.at(r, c), (*x)[c]));
      CHECK(f.eq(acc, b[r]));
    }
  }
  CHECK(solved > 0);
}
