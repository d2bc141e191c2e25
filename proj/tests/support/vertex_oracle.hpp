#pragma once

// Brute-force LP oracle for tiny frames: enumerates every vertex of
// {P >= 0, constraints} by solving each n-subset of the bounding hyperplanes
// exactly with its own Gaussian elimination, then takes min / max of the
// objective over the feasible vertices. Shares no code with the simplex.

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dsaudit/consistency.hpp"

namespace oracle {

struct Hyperplane {
  std::vector<mpq_class> a;
  mpq_class b;
};

struct Bounds {
  bool feasible = false;
  mpq_class lower;
  mpq_class upper;
};

inline std::optional<std::vector<mpq_class>> solve_square(std::vector<Hyperplane> rows) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot].a[col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r].a[col] == 0) continue;
      const mpq_class f = rows[r].a[col] / rows[col].a[col];
      for (std::size_t c = 0; c < n; ++c) rows[r].a[c] -= f * rows[col].a[c];
      rows[r].b -= f * rows[col].b;
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rows[i].b / rows[i].a[i];
  return x;
}

inline bool satisfies(const dsaudit::ProbabilityConstraintSystem& system,
                      const std::vector<mpq_class>& x) {
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& c : system.constraints) {
    mpq_class lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i].raw() * x[i];
    const mpq_class& rhs = c.rhs.raw();
    switch (c.relation) {
      case dsaudit::lp::Relation::LessEqual:
        if (lhs > rhs) return false;
        break;
      case dsaudit::lp::Relation::GreaterEqual:
        if (lhs < rhs) return false;
        break;
      case dsaudit::lp::Relation::Equal:
        if (lhs != rhs) return false;
        break;
    }
  }
  return true;
}

inline std::vector<std::vector<mpq_class>> vertices(const dsaudit::ProbabilityConstraintSystem& system) {
  const std::size_t n = system.frame.size();
  std::vector<Hyperplane> planes;
  for (std::size_t i = 0; i < n; ++i) {
    Hyperplane h{std::vector<mpq_class>(n, 0), 0};
    h.a[i] = 1;
    planes.push_back(h);
  }
  for (const auto& c : system.constraints) {
    Hyperplane h{{}, c.rhs.raw()};
    for (const auto& v : c.coeffs) h.a.push_back(v.raw());
    planes.push_back(h);
  }
  std::vector<std::vector<mpq_class>> out;
  std::vector<std::size_t> pick(n);
  // Iterate all n-combinations of planes.
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == n) {
      std::vector<Hyperplane> rows;
      for (auto i : pick) rows.push_back(planes[i]);
      if (auto x = solve_square(rows); x && satisfies(system, *x)) out.push_back(*x);
      return;
    }
    for (std::size_t i = start; i < planes.size(); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

inline Bounds bounds(const dsaudit::ProbabilityConstraintSystem& system, dsaudit::Mask target) {
  const auto vs = vertices(system);
  Bounds b;
  for (const auto& x : vs) {
    mpq_class value = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((target >> i) & 1U) value += x[i];
    }
    if (!b.feasible) {
      b.lower = b.upper = value;
      b.feasible = true;
    } else {
      if (value < b.lower) b.lower = value;
      if (value > b.upper) b.upper = value;
    }
  }
  return b;
}

}  // namespace oracle
