#include "gcmorse/integer_matrix.hpp"

#include <algorithm>
#include <utility>

#include "gcmorse/errors.hpp"

namespace gcmorse {

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::multiplied_by(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw InputError("matrix product dimension mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Int& b = rhs.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

SmithNormalForm smith_normal_form(IntegerMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  SmithNormalForm snf;

  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  };

  int t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing submatrix -> pivot position.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        if (pr < 0 || abs(x) < abs(m.at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing submatrix is zero
    swap_rows(t, pr);
    swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear the pivot column; a nonzero remainder is strictly smaller
      // than the pivot and becomes the new pivot.
      for (int i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        if (q != 0)
          for (int j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      // Same for the pivot row.
      for (int j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        if (q != 0)
          for (int i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry; if not,
      // pull the offending row in and restart (pivot strictly shrinks).
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols && clean; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (int k = t; k < cols; ++k) m.at(t, k) += m.at(i, k);
            clean = false;
          }
    }

    snf.factors.push_back(abs(m.at(t, t)));
    ++t;
  }

  return snf;
}

}  // namespace gcmorse
