#include "lsc/matrix.hpp"

#include <utility>

namespace lsc {

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_)) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!field_.eq(a_[i], other.a_[i])) return false;
  return true;
}

RrefResult rref(const ExactMatrix& m) {
  const Field& f = m.field();
  RrefResult res{m, {}, 0};
  ExactMatrix& a = res.mat;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Leftmost pivot, first nonzero row; exact arithmetic needs no
    // magnitude pivoting and this keeps the result canonical.
    std::size_t pivot = row;
    while (pivot < a.rows() && f.is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(pivot, c));
    Scalar piv_inv = f.inv(a.at(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) = f.mul(a.at(row, c), piv_inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || f.is_zero(a.at(r, col))) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank_of(const ExactMatrix& m) {
  // Forward elimination only; cheaper than full RREF for rank queries.
  const Field& f = m.field();
  ExactMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && f.is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(pivot, c));
    Scalar piv_inv = f.inv(a.at(row, col));
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (f.is_zero(a.at(r, col))) continue;
      Scalar factor = f.mul(a.at(r, col), piv_inv);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
    }
    ++row;
  }
  return row;
}

std::optional<std::vector<Scalar>> solve_particular(const ExactMatrix& a,
                                                    std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw std::logic_error("solve_particular: rhs size mismatch");
  const Field& f = a.field();
  ExactMatrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  std::vector<Scalar> x(a.cols(), f.zero());
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    if (red.pivots[k] == a.cols()) return std::nullopt;  // pivot in rhs column
    x[red.pivots[k]] = red.mat.at(k, a.cols());
  }
  return x;
}

}  // namespace lsc
