#include "dsaudit/lp.hpp"

#include <limits>
#include <optional>

#include "dsaudit/error.hpp"

namespace dsaudit::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  explicit Tableau(const Problem& problem) : num_vars_(problem.num_vars) {
    for (const auto& row : problem.rows) {
      if (row.coeffs.size() != num_vars_) {
        throw Error(ErrorKind::InternalConsistency, "LP row width does not match variable count");
      }
    }
    // Column layout: structural | slack/surplus | artificial | rhs.
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& row : problem.rows) {
      const Relation rel = normalized_relation(row);
      if (rel != Relation::Equal) ++slacks;
      if (rel != Relation::LessEqual) ++artificials;
    }
    first_artificial_ = num_vars_ + slacks;
    cols_ = first_artificial_ + artificials;
    rows_.reserve(problem.rows.size());
    basis_.reserve(problem.rows.size());

    std::size_t next_slack = num_vars_;
    std::size_t next_artificial = first_artificial_;
    for (const auto& row : problem.rows) {
      const bool flip = row.rhs.sign() < 0;
      const Relation rel = normalized_relation(row);
      std::vector<Rational> t(cols_ + 1);
      for (std::size_t j = 0; j < num_vars_; ++j) t[j] = flip ? -row.coeffs[j] : row.coeffs[j];
      t[cols_] = flip ? -row.rhs : row.rhs;
      switch (rel) {
        case Relation::LessEqual:
          t[next_slack] = Rational(1);
          basis_.push_back(next_slack++);
          break;
        case Relation::GreaterEqual:
          t[next_slack++] = Rational(-1);
          t[next_artificial] = Rational(1);
          basis_.push_back(next_artificial++);
          break;
        case Relation::Equal:
          t[next_artificial] = Rational(1);
          basis_.push_back(next_artificial++);
          break;
      }
      rows_.push_back(std::move(t));
    }
  }

  // Phase 1; returns false when the problem is infeasible.
  bool find_feasible_basis() {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = Rational(1);
    load_objective(cost);
    run(cols_);
    if (!objective_.back().is_zero()) return false;
    evict_artificials();
    return true;
  }

  // Phase 2 (minimisation); returns false when unbounded.
  bool optimize(std::span<const Rational> cost_structural) {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = 0; j < num_vars_; ++j) cost[j] = cost_structural[j];
    load_objective(cost);
    return run(first_artificial_);
  }

  Rational value() const { return -objective_.back(); }

  std::vector<Rational> point() const {
    std::vector<Rational> x(num_vars_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < num_vars_) x[basis_[i]] = rows_[i][cols_];
    }
    return x;
  }

 private:
  static Relation normalized_relation(const Row& row) {
    if (row.rhs.sign() >= 0 || row.relation == Relation::Equal) return row.relation;
    return row.relation == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
  }

  // objective_[j] holds the reduced cost of column j; the rhs slot holds -z.
  void load_objective(const std::vector<Rational>& cost) {
    objective_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) objective_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!rows_[i][j].is_zero()) objective_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Bland's rule over columns [0, column_limit). Returns false if unbounded.
  bool run(std::size_t column_limit) {
    while (true) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < column_limit; ++j) {
        if (objective_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[i][cols_] / a;
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& v : rows_[r]) {
      if (!v.is_zero()) v /= p;
    }
    const auto& pivot_row = rows_[r];
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[c].is_zero()) return;
      const Rational factor = target[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!pivot_row[j].is_zero()) target[j] -= factor * pivot_row[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = c;
  }

  // After a zero-cost phase 1, artificials may remain basic at level zero.
  // Pivot them out on any non-artificial column, or drop the row when it is
  // a linear combination of the others.
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!rows_[i][j].is_zero()) {
          column = j;
          break;
        }
      }
      if (column) {
        pivot(i, *column);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t num_vars_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_;
};

}  // namespace

Solution solve(const Problem& problem, std::span<const Rational> objective, Sense sense) {
  if (objective.size() != problem.num_vars) {
    throw Error(ErrorKind::InternalConsistency, "objective width does not match variable count");
  }
  Tableau tableau(problem);
  if (!tableau.find_feasible_basis()) return {Status::Infeasible, Rational(0), {}};

  std::vector<Rational> cost(objective.begin(), objective.end());
  if (sense == Sense::Maximize) {
    for (auto& c : cost) c = -c;
  }
  if (!tableau.optimize(cost)) return {Status::Unbounded, Rational(0), {}};
  Rational value = tableau.value();
  if (sense == Sense::Maximize) value = -value;
  return {Status::Optimal, std::move(value), tableau.point()};
}

bool feasible(const Problem& problem) {
  Tableau tableau(problem);
  return tableau.find_feasible_basis();
}

}  // namespace dsaudit::lp
