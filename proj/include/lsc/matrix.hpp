#ifndef LSC_MATRIX_HPP
#define LSC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lsc/field.hpp"

namespace lsc {

// Dense row-major matrix of exact scalars over one field.
class ExactMatrix {
public:
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static ExactMatrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return std::span<const Scalar>(a_.data() + r * cols_, cols_);
  }

  ExactMatrix transposed() const;

  bool operator==(const ExactMatrix& other) const;

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  ExactMatrix mat;                   // the unique reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot columns, increasing (leftmost-first)
  std::size_t rank = 0;
};

RrefResult rref(const ExactMatrix& m);

std::size_t rank_of(const ExactMatrix& m);

// Particular solution of A x = b with zeros in all non-pivot coordinates
// (leftmost-pivot rule), or nullopt when the system is inconsistent. The
// zero-free-variable rule makes the output deterministic.
std::optional<std::vector<Scalar>> solve_particular(const ExactMatrix& a,
                                                    std::span<const Scalar> b);

}  // namespace lsc

#endif
