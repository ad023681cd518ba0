#include "gcmorse/cells.hpp"

#include <stdexcept>
#include <utility>

#include "gcmorse/errors.hpp"

namespace gcmorse {

namespace {

void validate_faces(const std::vector<std::vector<BoundaryEntry>>& faces,
                    int n_lower, const char* what) {
  for (const auto& list : faces) {
    for (const auto& [cell, sign] : list) {
      if (cell < 0 || cell >= n_lower)
        throw InputError(std::string(what) + ": face index out of range");
      if (sign != 1 && sign != -1)
        throw InputError(std::string(what) + ": incidence sign must be +1/-1");
    }
  }
}

std::vector<std::vector<BoundaryEntry>> invert(
    const std::vector<std::vector<BoundaryEntry>>& faces, int n_lower) {
  std::vector<std::vector<BoundaryEntry>> cofaces(n_lower);
  for (int upper = 0; upper < static_cast<int>(faces.size()); ++upper)
    for (const auto& [cell, sign] : faces[upper])
      cofaces[cell].push_back({upper, sign});
  return cofaces;
}

}  // namespace

Complex::Complex(std::array<std::vector<std::string>, 3> names,
                 std::vector<std::vector<BoundaryEntry>> faces_of_1,
                 std::vector<std::vector<BoundaryEntry>> faces_of_2)
    : names_(std::move(names)),
      faces1_(std::move(faces_of_1)),
      faces2_(std::move(faces_of_2)) {
  if (faces1_.size() != names_[1].size() || faces2_.size() != names_[2].size())
    throw InputError("complex: boundary list sizes do not match cell counts");
  validate_faces(faces1_, size(0), "1-cell boundary");
  validate_faces(faces2_, size(1), "2-cell boundary");
  cofaces0_ = invert(faces1_, size(0));
  cofaces1_ = invert(faces2_, size(1));
}

std::span<const BoundaryEntry> Complex::faces(CellId c) const {
  switch (c.dim) {
    case 1:
      return faces1_[c.idx];
    case 2:
      return faces2_[c.idx];
    default:
      return {};
  }
}

std::span<const BoundaryEntry> Complex::cofaces(CellId c) const {
  switch (c.dim) {
    case 0:
      return cofaces0_[c.idx];
    case 1:
      return cofaces1_[c.idx];
    default:
      return {};
  }
}

}  // namespace gcmorse
