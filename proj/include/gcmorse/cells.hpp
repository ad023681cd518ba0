#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace gcmorse {

// Handle to a cell inside a Complex: dimension (0..2) plus index in that
// dimension's cell list.
struct CellId {
  int dim = 0;
  int idx = 0;
  auto operator<=>(const CellId&) const = default;
};

// One signed incidence: index of the neighbouring cell in the adjacent
// dimension and the incidence coefficient (always +1 or -1 here).
struct BoundaryEntry {
  int cell = 0;
  int sign = 0;
  auto operator<=>(const BoundaryEntry&) const = default;
};

// A finite regular cell complex of dimension <= 2, given by signed boundary
// lists.  Cells carry display names; any richer geometry lives with whoever
// built the complex.  Coface lists are derived at construction.
class Complex {
 public:
  Complex(std::array<std::vector<std::string>, 3> names,
          std::vector<std::vector<BoundaryEntry>> faces_of_1,
          std::vector<std::vector<BoundaryEntry>> faces_of_2);

  int size(int dim) const { return static_cast<int>(names_[dim].size()); }
  int total_cells() const { return size(0) + size(1) + size(2); }

  // Signed faces of a cell (empty for 0-cells).
  std::span<const BoundaryEntry> faces(CellId c) const;
  // Signed cofaces of a cell (empty for 2-cells); entry.cell indexes dim+1.
  std::span<const BoundaryEntry> cofaces(CellId c) const;

  const std::string& name(CellId c) const { return names_[c.dim][c.idx]; }

  long long euler_characteristic() const {
    return static_cast<long long>(size(0)) - size(1) + size(2);
  }

 private:
  std::array<std::vector<std::string>, 3> names_;
  std::vector<std::vector<BoundaryEntry>> faces1_, faces2_;
  std::vector<std::vector<BoundaryEntry>> cofaces0_, cofaces1_;
};

}  // namespace gcmorse
