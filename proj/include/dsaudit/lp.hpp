#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsaudit/rational.hpp"

// Exact rational linear programming over non-negative variables.
namespace dsaudit::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Row {
  std::vector<Rational> coeffs;  // one per variable
  Relation relation;
  Rational rhs;
};

/// All variables are implicitly constrained to be >= 0.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<Row> rows;
};

enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> point;  // an optimal vertex when status == Optimal
};

/// Two-phase dense tableau simplex with Bland's rule, so degenerate and
/// redundant rows terminate. Arithmetic is exact; the reported value is the
/// true optimum.
Solution solve(const Problem& problem, std::span<const Rational> objective, Sense sense);

/// True when the constraint set has a non-negative solution.
bool feasible(const Problem& problem);

}  // namespace dsaudit::lp
