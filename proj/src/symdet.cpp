#include "lsc/symdet.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace lsc {

namespace {

using Matrix = std::vector<std::vector<MultiPoly>>;
using Memo = std::unordered_map<std::uint32_t, MultiPoly>;

// Determinant of the submatrix with rows [row_begin, row_begin + |mask|)
// and the column subset encoded by mask, expanding along the last row with
// memoization on the column subset.
const MultiPoly& det_rec(const Matrix& m, std::size_t row_begin, std::uint32_t mask,
                         Memo& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;

  const Field& field = m[0][0].field();
  const MonomialOrder& order = m[0][0].order();
  int k = std::popcount(mask);
  std::size_t row = row_begin + static_cast<std::size_t>(k) - 1;
  MultiPoly acc(field, order);
  int idx = 0;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1, ++idx) {
    std::uint32_t bit = rest & -rest;
    std::size_t col = static_cast<std::size_t>(std::countr_zero(bit));
    const MultiPoly& entry = m[row][col];
    if (entry.is_zero()) continue;
    MultiPoly contrib =
        k == 1 ? entry : entry.times(det_rec(m, row_begin, mask ^ bit, memo));
    bool negative = ((k - 1) + idx) % 2 != 0;
    acc = negative ? acc.minus(contrib) : acc.plus(contrib);
  }
  return memo.emplace(mask, std::move(acc)).first->second;
}

}  // namespace

MultiPoly sym_det(const Matrix& m, DetStrategy strategy) {
  std::size_t n = m.size();
  if (n == 0) throw std::logic_error("sym_det: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::logic_error("sym_det: matrix not square");

  const Field& field = m[0][0].field();
  const MonomialOrder& order = m[0][0].order();

  if (strategy == DetStrategy::Laplace) {
    Memo memo;
    std::uint32_t full = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    return det_rec(m, 0, full, memo);
  }

  if (n % 2 != 0) throw std::logic_error("sym_det: TwoBlockLaplace needs even dimension");
  std::size_t half = n / 2;
  Memo top_memo, bottom_memo;
  MultiPoly acc(field, order);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // Iterate all column subsets of size n/2 for the top block.
  for (std::uint32_t mask = (std::uint32_t{1} << half) - 1; mask <= full;) {
    if (std::popcount(mask) == static_cast<int>(half)) {
      const MultiPoly& top = det_rec(m, 0, mask, top_memo);
      if (!top.is_zero()) {
        const MultiPoly& bottom = det_rec(m, half, full ^ mask, bottom_memo);
        if (!bottom.is_zero()) {
          unsigned colsum = 0;
          for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
            colsum += static_cast<unsigned>(std::countr_zero(rest & -rest));
          unsigned sign_exp = half * (half + 3) / 2 + colsum;
          MultiPoly prod = top.times(bottom);
          acc = (sign_exp % 2 != 0) ? acc.minus(prod) : acc.plus(prod);
        }
      }
    }
    if (mask == full) break;
    ++mask;
  }
  return acc;
}

}  // namespace lsc
