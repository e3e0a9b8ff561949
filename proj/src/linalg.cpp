#include <utility>

#include "twv/matrix.hpp"

namespace twv {

CycMatrix conj_transpose(const CycMatrix& m) {
  CycMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
  return t;
}

// Bareiss: after step k every entry below/right of the pivot is a k+1 minor, and
// the division by the previous pivot is exact.
std::size_t exact_rank(CycMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  CycNum previous(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const CycNum p = m(rank, col);
    const CycNum inv_prev = previous.inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const CycNum lead = m(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        m(i, j) = (p * m(i, j) - lead * m(rank, j)) * inv_prev;
      }
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace twv
