#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gcmorse {

using Int = boost::multiprecision::cpp_int;

// Dense exact-integer matrix.  Desk-scale; arbitrary precision because
// naive Smith reduction can grow entries far beyond machine words.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  IntegerMatrix multiplied_by(const IntegerMatrix& rhs) const;

  bool operator==(const IntegerMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Invariant factors d1 | d2 | ... | dr (all positive) of an integer matrix;
// r is the rank.
struct SmithNormalForm {
  std::vector<Int> factors;
  int rank() const { return static_cast<int>(factors.size()); }
};

// Standard row/column reduction with smallest-pivot selection; exact.
SmithNormalForm smith_normal_form(IntegerMatrix m);

}  // namespace gcmorse
