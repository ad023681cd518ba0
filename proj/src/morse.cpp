#include "gcmorse/morse.hpp"

#include <algorithm>
#include <string>

#include "gcmorse/errors.hpp"

namespace gcmorse {

CellFunction::CellFunction(const Complex& complex) {
  for (int d = 0; d < 3; ++d) values_[d].assign(complex.size(d), 0);
}

bool CellFunction::matches(const Complex& complex) const {
  for (int d = 0; d < 3; ++d)
    if (size(d) != complex.size(d)) return false;
  return true;
}

std::vector<MorseViolation> check_morse(const Complex& complex,
                                        const CellFunction& f) {
  if (!f.matches(complex))
    throw MissingValue("cell function does not cover the complex");

  std::vector<MorseViolation> violations;
  for (int d = 0; d < 3; ++d) {
    for (int i = 0; i < complex.size(d); ++i) {
      CellId c{d, i};
      MorseViolation v{c, {}, {}};
      for (const auto& [up, sign] : complex.cofaces(c)) {
        CellId b{d + 1, up};
        if (f(b) <= f(c)) v.upper.push_back(b);
      }
      for (const auto& [down, sign] : complex.faces(c)) {
        CellId a{d - 1, down};
        if (f(a) >= f(c)) v.lower.push_back(a);
      }
      if (v.upper.size() > 1 || v.lower.size() > 1)
        violations.push_back(std::move(v));
    }
  }
  return violations;
}

GradientField::GradientField(const Complex& complex,
                             std::vector<std::pair<CellId, CellId>> pairs)
    : pairs_(std::move(pairs)) {
  for (int d = 0; d < 3; ++d) {
    role_[d].assign(complex.size(d), CellRole::Critical);
    partner_[d].assign(complex.size(d), -1);
  }
  for (const auto& [alpha, beta] : pairs_) {
    if (beta.dim != alpha.dim + 1)
      throw InvariantError("field pair must span adjacent dimensions");
    auto fs = complex.faces(beta);
    if (std::none_of(fs.begin(), fs.end(), [&](const BoundaryEntry& e) {
          return e.cell == alpha.idx;
        }))
      throw InvariantError("field pair tail is not a face of its head");
    if (role_[alpha.dim][alpha.idx] != CellRole::Critical ||
        role_[beta.dim][beta.idx] != CellRole::Critical)
      throw InvariantError("cell is in two field pairs: " +
                           complex.name(role_[alpha.dim][alpha.idx] !=
                                                CellRole::Critical
                                            ? alpha
                                            : beta));
    role_[alpha.dim][alpha.idx] = CellRole::Tail;
    role_[beta.dim][beta.idx] = CellRole::Head;
    partner_[alpha.dim][alpha.idx] = beta.idx;
    partner_[beta.dim][beta.idx] = alpha.idx;
  }
}

CellId GradientField::partner(CellId c) const {
  switch (role(c)) {
    case CellRole::Tail:
      return CellId{c.dim + 1, partner_[c.dim][c.idx]};
    case CellRole::Head:
      return CellId{c.dim - 1, partner_[c.dim][c.idx]};
    default:
      throw InvariantError("critical cell has no pair partner");
  }
}

std::vector<int> GradientField::critical(int dim) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(role_[dim].size()); ++i)
    if (role_[dim][i] == CellRole::Critical) out.push_back(i);
  return out;
}

GradientField build_gradient_field(const Complex& complex,
                                   const CellFunction& f) {
  auto violations = check_morse(complex, f);
  if (!violations.empty())
    throw NotMorse("not a Morse function: " +
                   std::to_string(violations.size()) +
                   " violating cells, first at " +
                   complex.name(violations.front().cell));

  std::vector<std::pair<CellId, CellId>> pairs;
  for (int d = 0; d < 2; ++d) {
    for (int i = 0; i < complex.size(d); ++i) {
      CellId alpha{d, i};
      for (const auto& [up, sign] : complex.cofaces(alpha)) {
        CellId beta{d + 1, up};
        if (f(beta) <= f(alpha)) pairs.emplace_back(alpha, beta);
      }
    }
  }

  GradientField field(complex, std::move(pairs));
  if (!check_acyclic(complex, field))
    throw CyclicField("gradient field of a Morse function has a closed V-path");
  return field;
}

namespace {

int incidence(const Complex& complex, CellId beta, CellId alpha) {
  for (const auto& [cell, sign] : complex.faces(beta))
    if (cell == alpha.idx) return sign;
  return 0;
}

}  // namespace

std::vector<VPath> enumerate_vpaths(const Complex& complex,
                                    const GradientField& field,
                                    std::span<const CellId> from,
                                    VPathEnds ends) {
  const std::size_t max_len = 2 * field.pairs().size() + 1;
  std::vector<VPath> out;
  VPath current;

  auto extend = [&](auto&& self, CellId alpha) -> void {
    current.cells.push_back(alpha);
    if (current.cells.size() > max_len)
      throw CyclicField("V-path exceeds pair count; field has a cycle");
    if (!field.is_tail(alpha)) {
      if (ends == VPathEnds::Any || field.is_critical(alpha))
        out.push_back(current);
      current.cells.pop_back();
      return;
    }
    CellId beta = field.partner(alpha);
    int s_alpha = incidence(complex, beta, alpha);
    current.cells.push_back(beta);
    int saved_sign = current.sign;
    for (const auto& [cell, sign] : complex.faces(beta)) {
      if (cell == alpha.idx) continue;
      current.sign = saved_sign * (-s_alpha * sign);
      self(self, CellId{alpha.dim, cell});
    }
    current.sign = saved_sign;
    current.cells.pop_back();
    current.cells.pop_back();
  };

  for (CellId start : from) {
    current = VPath{};
    extend(extend, start);
  }
  return out;
}

bool check_acyclic(const Complex& complex, const GradientField& field) {
  // Cycle detection on the tail -> tail step graph, per dimension.
  for (int d = 0; d < 2; ++d) {
    const int n = complex.size(d);
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<char> state(n, 0);
    auto visit = [&](auto&& self, int i) -> bool {
      state[i] = 1;
      CellId alpha{d, i};
      if (field.is_tail(alpha)) {
        CellId beta = field.partner(alpha);
        for (const auto& [cell, sign] : complex.faces(beta)) {
          if (cell == i) continue;
          if (!field.is_tail(CellId{d, cell})) continue;
          if (state[cell] == 1) return false;
          if (state[cell] == 0 && !self(self, cell)) return false;
        }
      }
      state[i] = 2;
      return true;
    };
    for (int i = 0; i < n; ++i)
      if (state[i] == 0 && field.is_tail(CellId{d, i}))
        if (!visit(visit, i)) return false;
  }
  return true;
}

}  // namespace gcmorse
