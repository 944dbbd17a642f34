#include "endo/milp.hpp"

#include <algorithm>

namespace endo {

namespace {

// Model rows are all activated up front when there are at most this many.
constexpr std::size_t eager_row_limit = 96;
// Rows added per lazy round.
constexpr std::size_t lazy_batch = 48;
// Safety net only; Bland's rule terminates.
constexpr std::size_t iteration_cap = 1000000;

}  // namespace

LpSolver::LpSolver(const MilpModel& model) : model_(&model), structural_count_(model.variable_count()) {
    const std::size_t n = structural_count_;
    cost_.assign(n, 0);
    for (const auto& [var, coeff] : model.objective().terms) cost_[var] = Num(coeff);
    for (const auto& v : model.variables()) {
        lower_.emplace_back(v.lower);
        upper_.emplace_back(v.upper);
        lower_exact_.push_back(v.lower);
        upper_exact_.push_back(v.upper);
    }
    for (const auto& c : model.constraints()) rows_.push_back({&c.lhs, c.relation, Num(c.rhs)});
    active_.assign(rows_.size(), false);

    nonbasic_.resize(n);
    at_upper_.resize(n);
    reduced_cost_.resize(n);
    position_.resize(n + rows_.size());
    for (std::size_t j = 0; j < n; ++j) {
        nonbasic_[j] = j;
        at_upper_[j] = cost_[j].sign() < 0;
        reduced_cost_[j] = cost_[j];
        position_[j] = {false, j};
    }

    bool eager = rows_.size() <= eager_row_limit;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (eager || rows_[i].relation == Relation::Equal) activate_row(i);
    }
}

const LinearTerms& LpSolver::row_terms(std::size_t row) const {
    return rows_[row].lhs ? *rows_[row].lhs : extra_terms_[row - model_->constraints().size()];
}

const LpSolver::Num* LpSolver::var_lower(std::size_t var) const {
    if (is_structural(var)) return &lower_[var];
    const Row& row = rows_[var - structural_count_];
    return row.relation == Relation::Equal ? &row.rhs : nullptr;
}

const LpSolver::Num* LpSolver::var_upper(std::size_t var) const {
    if (is_structural(var)) return &upper_[var];
    return &rows_[var - structural_count_].rhs;
}

const LpSolver::Num& LpSolver::nonbasic_value(std::size_t col) const {
    std::size_t var = nonbasic_[col];
    if (at_upper_[col]) return *var_upper(var);
    const Num* lo = var_lower(var);
    return lo ? *lo : *var_upper(var);
}

void LpSolver::set_bounds(std::size_t var, const Rational& lower, const Rational& upper) {
    if (upper < lower) throw MilpError("set_bounds: inverted bounds");
    lower_exact_.at(var) = lower;
    upper_exact_.at(var) = upper;
    lower_[var] = Num(lower);
    upper_[var] = Num(upper);
    auto [basic, idx] = position_[var];
    if (!basic) {
        int d = reduced_cost_[idx].sign();
        if (d > 0) at_upper_[idx] = false;
        else if (d < 0) at_upper_[idx] = true;
    }
}

std::size_t LpSolver::add_extra_row(LinearTerms lhs, Rational rhs) {
    // Extra rows are addressed by index (lhs == nullptr) so copies stay valid.
    extra_terms_.push_back(std::move(lhs));
    rows_.push_back({nullptr, Relation::LessEqual, Num(rhs)});
    active_.push_back(false);
    position_.emplace_back(false, 0);
    std::size_t id = rows_.size() - 1;
    activate_row(id);
    return id;
}

void LpSolver::set_extra_rhs(std::size_t id, const Rational& rhs) { rows_.at(id).rhs = Num(rhs); }

void LpSolver::activate_row(std::size_t row) {
    if (active_[row]) return;
    active_[row] = true;
    const std::size_t n = structural_count_;
    std::vector<Num> expr(n);
    for (const auto& [var, coeff] : row_terms(row).terms) {
        Num c(coeff);
        auto [basic, idx] = position_[var];
        if (!basic) {
            expr[idx] += c;
        } else {
            const std::vector<Num>& src = tableau_[idx];
            for (std::size_t k = 0; k < n; ++k) {
                if (!src[k].is_zero()) expr[k] += c * src[k];
            }
        }
    }
    Num value = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!expr[k].is_zero()) value += expr[k] * nonbasic_value(k);
    }
    position_[logical_id(row)] = {true, basic_.size()};
    basic_.push_back(logical_id(row));
    tableau_.push_back(std::move(expr));
    basic_value_.push_back(std::move(value));
}

void LpSolver::refresh_values() {
    const std::size_t n = structural_count_;
    std::vector<Num> nb(n);
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < n; ++c) {
        nb[c] = nonbasic_value(c);
        if (!nb[c].is_zero()) support.push_back(c);
    }
    for (std::size_t k = 0; k < basic_.size(); ++k) {
        Num v = 0;
        const std::vector<Num>& row = tableau_[k];
        for (std::size_t c : support) {
            if (!row[c].is_zero()) v += row[c] * nb[c];
        }
        basic_value_[k] = std::move(v);
    }
}

void LpSolver::pivot(std::size_t row, std::size_t col) {
    const std::size_t n = structural_count_;
    std::vector<Num>& prow = tableau_[row];
    Num inv = Num(1) / prow[col];
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < n; ++c) {
        if (c == col) {
            prow[c] = inv;
        } else if (!prow[c].is_zero()) {
            prow[c] = -(prow[c] * inv);
            support.push_back(c);
        }
    }
    // prow now expresses the entering variable in terms of the new nonbasics.
    auto eliminate = [&](std::vector<Num>& r) {
        if (r[col].is_zero()) return;
        Num factor = r[col];
        r[col] = factor * inv;
        for (std::size_t c : support) r[c] += factor * prow[c];
    };
    for (std::size_t k = 0; k < tableau_.size(); ++k) {
        if (k != row) eliminate(tableau_[k]);
    }
    eliminate(reduced_cost_);
    std::size_t entering = nonbasic_[col];
    std::size_t leaving = basic_[row];
    basic_[row] = entering;
    nonbasic_[col] = leaving;
    position_[entering] = {true, row};
    position_[leaving] = {false, col};
}

bool LpSolver::dual_simplex(std::size_t& iterations) {
    const std::size_t n = structural_count_;
    refresh_values();
    for (;;) {
        // Leaving: smallest variable id among primal-infeasible basics.
        std::size_t leave_row = basic_.size();
        bool increase = false;
        for (std::size_t k = 0; k < basic_.size(); ++k) {
            std::size_t var = basic_[k];
            if (leave_row != basic_.size() && var > basic_[leave_row]) continue;
            const Num* lo = var_lower(var);
            const Num* hi = var_upper(var);
            bool below = lo && basic_value_[k] < *lo;
            bool above = !below && hi && basic_value_[k] > *hi;
            if (below || above) {
                leave_row = k;
                increase = below;
            }
        }
        if (leave_row == basic_.size()) return true;
        if (++iterations > iteration_cap) throw MilpError("dual simplex iteration cap exceeded");

        const std::vector<Num>& trow = tableau_[leave_row];
        std::size_t enter_col = n;
        Num best_ratio;
        for (std::size_t c = 0; c < n; ++c) {
            int t = trow[c].sign();
            if (t == 0) continue;
            std::size_t var = nonbasic_[c];
            const Num* lo = var_lower(var);
            const Num* hi = var_upper(var);
            if (lo && hi && *lo == *hi) continue;  // fixed
            // A nonbasic at its lower bound may only increase, at its upper
            // bound only decrease (a logical of a <= row sits at its upper bound).
            bool up = !at_upper_[c];
            bool eligible = increase ? (up == (t > 0)) : (up == (t < 0));
            if (!eligible) continue;
            Num ratio = (reduced_cost_[c] / trow[c]).abs();
            if (enter_col == n || ratio < best_ratio || (ratio == best_ratio && var < nonbasic_[enter_col])) {
                enter_col = c;
                best_ratio = std::move(ratio);
            }
        }
        if (enter_col == n) return false;

        // Move the entering variable so the leaving one lands on its bound.
        const Num& target = increase ? *var_lower(basic_[leave_row]) : *var_upper(basic_[leave_row]);
        Num delta = (target - basic_value_[leave_row]) / trow[enter_col];
        Num entering_value = nonbasic_value(enter_col) + delta;
        for (std::size_t k = 0; k < basic_.size(); ++k) {
            if (k != leave_row && !tableau_[k][enter_col].is_zero()) basic_value_[k] += tableau_[k][enter_col] * delta;
        }
        pivot(leave_row, enter_col);
        basic_value_[leave_row] = std::move(entering_value);
        // The leaving variable now sits at the bound it violated.
        at_upper_[enter_col] = !increase;
    }
}

std::vector<LpSolver::Num> LpSolver::structural_values() const {
    std::vector<Num> x(structural_count_);
    for (std::size_t j = 0; j < structural_count_; ++j) {
        auto [basic, idx] = position_[j];
        x[j] = basic ? basic_value_[idx] : nonbasic_value(idx);
    }
    return x;
}

LpResult LpSolver::solve() {
    LpResult result;
    for (;;) {
        if (!dual_simplex(result.iterations)) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        std::vector<Num> xs = structural_values();
        RationalVector x(xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j) x[j] = xs[j].to_rational();
        // Activate the inactive rows the point violates, worst first.
        std::vector<std::pair<Rational, std::size_t>> violated;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (active_[i]) continue;
            const Row& row = rows_[i];
            Rational slack = row.rhs.to_rational() - row_terms(i).evaluate(x);
            if (sgn(slack) < 0 || (row.relation == Relation::Equal && sgn(slack) != 0)) {
                violated.emplace_back(-abs(slack), i);
            }
        }
        if (violated.empty()) {
            result.status = LpStatus::Optimal;
            result.objective = model_->objective().evaluate(x);
            result.x = std::move(x);
            return result;
        }
        std::size_t take = std::min(violated.size(), lazy_batch);
        std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(take), violated.end());
        for (std::size_t t = 0; t < take; ++t) activate_row(violated[t].second);
    }
}

LpResult lp_solve(const MilpModel& model) {
    model.validate();
    LpSolver solver(model);
    return solver.solve();
}

}  // namespace endo
