#pragma once

#include "endo/hybrid_rational.hpp"
#include "endo/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace endo {

class MilpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class VarKind { Continuous, Binary };
enum class Relation { LessEqual, Equal };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    Rational lower = 0;
    Rational upper = 1;
};

/// Sparse linear row. Terms are kept sorted by variable index with no zero
/// coefficients and no repeated indices.
struct LinearTerms {
    std::vector<std::pair<std::size_t, Rational>> terms;

    void add(std::size_t var, const Rational& coeff);
    Rational evaluate(const RationalVector& x) const;
};

struct LinearConstraint {
    std::string name;
    LinearTerms lhs;
    Relation relation = Relation::LessEqual;
    Rational rhs = 0;

    bool satisfied_by(const RationalVector& x) const;
};

/// minimize c.x subject to linear rows, bounded continuous variables and
/// binary variables. All data exact.
class MilpModel {
public:
    std::size_t add_variable(std::string name, VarKind kind, Rational lower, Rational upper);
    std::size_t add_continuous(std::string name, Rational lower, Rational upper);
    std::size_t add_binary(std::string name);
    void add_constraint(LinearConstraint row);
    void set_objective(LinearTerms objective) { objective_ = std::move(objective); }

    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }
    const LinearTerms& objective() const { return objective_; }
    std::size_t variable_count() const { return variables_.size(); }
    std::size_t binary_count() const;
    std::size_t continuous_count() const { return variable_count() - binary_count(); }

    /// Dense coefficient row of constraint `i` (length = variable count).
    RationalVector dense_row(std::size_t i) const;

    /// Throws MilpError when a row references an unknown variable or a bound
    /// pair is inverted.
    void validate() const;

    /// True when every objective coefficient is an integer on a binary
    /// variable, so every feasible objective value is an integer.
    bool integral_objective() const;

private:
    std::vector<Variable> variables_;
    std::vector<LinearConstraint> constraints_;
    LinearTerms objective_;
};

struct AssignmentCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exact re-substitution: bounds, binary integrality and every row.
AssignmentCheck check_assignment(const MilpModel& model, const RationalVector& x);

// ---------------------------------------------------------------------------
// Exact LP core

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RationalVector x;
    Rational objective = 0;
    std::size_t iterations = 0;
};

/// Bounded-variable dual simplex over exact rationals with Bland's
/// smallest-index rule in both the leaving and the entering choice. Every
/// structural variable is boxed, so the all-logical basis with each
/// structural at its cost-favourable bound is dual feasible and no phase-1
/// problem is needed. Rows are activated lazily: the solver works on a
/// subset and adds the rows the current point violates, so the answer is
/// exact for the full model. Bound changes keep the basis dual feasible, so
/// a solver can be re-solved after any set_bounds call without restarting.
class LpSolver {
public:
    /// Binaries are relaxed to [0, 1] unless `bounds` overrides them.
    explicit LpSolver(const MilpModel& model);

    void set_bounds(std::size_t var, const Rational& lower, const Rational& upper);
    const Rational& lower(std::size_t var) const { return lower_exact_[var]; }
    const Rational& upper(std::size_t var) const { return upper_exact_[var]; }

    /// Adds a row outside the model (e.g. an objective cutoff). Returns its id;
    /// its right-hand side can be changed later with set_extra_rhs.
    std::size_t add_extra_row(LinearTerms lhs, Rational rhs);
    void set_extra_rhs(std::size_t id, const Rational& rhs);

    LpResult solve();

    std::size_t active_row_count() const { return basic_.size(); }

private:
    using Num = HybridRational;

    struct Row {
        const LinearTerms* lhs;  // nullptr for extra rows
        Relation relation;
        Num rhs;
    };

    std::size_t logical_id(std::size_t row) const { return structural_count_ + row; }
    bool is_structural(std::size_t var) const { return var < structural_count_; }
    const LinearTerms& row_terms(std::size_t row) const;
    const Num* var_lower(std::size_t var) const;  // nullptr = -infinity
    const Num* var_upper(std::size_t var) const;  // nullptr = +infinity
    const Num& nonbasic_value(std::size_t col) const;
    void activate_row(std::size_t row);
    void refresh_values();
    bool dual_simplex(std::size_t& iterations);
    void pivot(std::size_t row, std::size_t col);
    std::vector<Num> structural_values() const;

    const MilpModel* model_;
    std::size_t structural_count_ = 0;
    std::vector<Num> cost_;
    std::vector<Num> lower_;
    std::vector<Num> upper_;
    RationalVector lower_exact_;
    RationalVector upper_exact_;

    std::vector<Row> rows_;                 // model rows followed by extra rows
    std::vector<LinearTerms> extra_terms_;  // storage for extra rows
    std::vector<bool> active_;

    // Tableau: basic_[k] = sum_c tableau_[k][c] * nonbasic_[c].
    std::vector<std::size_t> basic_;
    std::vector<std::size_t> nonbasic_;
    std::vector<bool> at_upper_;  // per nonbasic column
    std::vector<std::vector<Num>> tableau_;
    std::vector<Num> reduced_cost_;  // per nonbasic column
    std::vector<Num> basic_value_;
    // var id -> (is basic, index)
    std::vector<std::pair<bool, std::size_t>> position_;
};

/// One-shot LP relaxation of `model` with binaries in [0, 1].
LpResult lp_solve(const MilpModel& model);

// ---------------------------------------------------------------------------
// Branch and bound

enum class MilpStatus { Optimal, Infeasible, IncumbentFound, NodeLimit };

const char* to_string(MilpStatus s);

struct MilpSolution {
    MilpStatus status = MilpStatus::Infeasible;
    std::optional<Rational> objective_value;
    RationalVector assignment;
    std::size_t nodes = 0;
    std::size_t lp_iterations = 0;

    bool has_incumbent() const { return objective_value.has_value(); }
};

struct BranchAndBoundOptions {
    /// Return as soon as an incumbent with negative objective is found.
    bool stop_at_negative = false;
    std::size_t node_limit = 200000;
    /// Binary variables in branching order; unlisted binaries follow in index
    /// order.
    std::vector<std::size_t> branch_priority;
    /// Optional known feasible point; checked exactly before use.
    std::optional<RationalVector> warm_start;
    /// At the root, test both values of each binary with an LP and fix the
    /// ones whose other value is infeasible.
    bool probing = true;
};

MilpSolution branch_and_bound(const MilpModel& model, const BranchAndBoundOptions& options = {});

/// Exhaustive enumeration over all binary assignments (LP for the continuous
/// part). Reference for small models.
MilpSolution enumerate_binaries(const MilpModel& model, std::size_t max_binaries = 16);

// ---------------------------------------------------------------------------

/// CPLEX-style LP file. Non-terminating decimals carry an exact comment.
std::string export_lp(const MilpModel& model, const std::string& problem_name = "model");

}  // namespace endo
