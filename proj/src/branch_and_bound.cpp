#include "endo/milp.hpp"

#include <algorithm>
#include <set>

namespace endo {

const char* to_string(MilpStatus s) {
    switch (s) {
        case MilpStatus::Optimal: return "Optimal";
        case MilpStatus::Infeasible: return "Infeasible";
        case MilpStatus::IncumbentFound: return "IncumbentFound";
        case MilpStatus::NodeLimit: return "NodeLimit";
    }
    return "?";
}

namespace {

bool is_fixed(const LpSolver& lp, std::size_t var) { return lp.lower(var) == lp.upper(var); }

bool is_integral01(const Rational& v) { return v == 0 || v == 1; }

// Loose bound on |c.x| over the box, used as an inactive cutoff.
Rational objective_bound(const MilpModel& model) {
    Rational total = 1;
    for (const auto& [var, coeff] : model.objective().terms) {
        const auto& v = model.variables()[var];
        total += abs(coeff) * std::max(abs(v.lower), abs(v.upper));
    }
    return total;
}

using Fixings = std::vector<std::pair<std::size_t, int>>;

class Search {
public:
    Search(const MilpModel& model, const BranchAndBoundOptions& options)
        : model_(model), options_(options), integral_(model.integral_objective()) {
        std::set<std::size_t> listed;
        for (std::size_t var : options.branch_priority) {
            if (var < model.variable_count() && model.variables()[var].kind == VarKind::Binary &&
                listed.insert(var).second) {
                order_.push_back(var);
            }
        }
        for (std::size_t j = 0; j < model.variable_count(); ++j) {
            if (model.variables()[j].kind == VarKind::Binary && !listed.count(j)) order_.push_back(j);
        }
    }

    MilpSolution run() {
        MilpSolution out;
        // One solver for the whole search: bound changes keep the basis dual
        // feasible, so every node warm-starts from the previous one.
        LpSolver lp(model_);
        cutoff_row_ = lp.add_extra_row(model_.objective(), objective_bound(model_));
        if (options_.warm_start && check_assignment(model_, *options_.warm_start).ok) {
            offer(*options_.warm_start, model_.objective().evaluate(*options_.warm_start));
        }

        std::vector<Fixings> stack{{}};
        bool root = true;
        while (!stack.empty()) {
            if (out.nodes >= options_.node_limit) {
                finish(out, MilpStatus::NodeLimit);
                return out;
            }
            Fixings fixed = std::move(stack.back());
            stack.pop_back();
            ++out.nodes;
            apply(lp, fixed);
            apply_cutoff(lp);

            LpResult relax = lp.solve();
            out.lp_iterations += relax.iterations;
            if (relax.status != LpStatus::Optimal) continue;
            if (pruned_by_bound(relax.objective)) continue;

            if (options_.probing && root) {
                bool infeasible = false;
                bool changed = probe(lp, fixed, out, infeasible);
                if (infeasible) continue;
                if (changed) {
                    relax = lp.solve();
                    out.lp_iterations += relax.iterations;
                    if (relax.status != LpStatus::Optimal || pruned_by_bound(relax.objective)) continue;
                }
            }
            root = false;

            std::size_t branch_var = model_.variable_count();
            for (std::size_t var : order_) {
                if (!is_fixed(lp, var) && !is_integral01(relax.x[var])) {
                    branch_var = var;
                    break;
                }
            }
            if (branch_var == model_.variable_count()) {
                // Binaries integral at an LP optimum: best point of this subtree.
                offer(relax.x, relax.objective);
                if (options_.stop_at_negative && incumbent_value_ && sgn(*incumbent_value_) < 0) {
                    finish(out, MilpStatus::IncumbentFound);
                    return out;
                }
                continue;
            }
            Fixings zero = fixed;
            zero.emplace_back(branch_var, 0);
            fixed.emplace_back(branch_var, 1);
            stack.push_back(std::move(zero));
            stack.push_back(std::move(fixed));  // value 1 explored first
        }
        finish(out, incumbent_value_ ? MilpStatus::Optimal : MilpStatus::Infeasible);
        return out;
    }

private:
    void offer(const RationalVector& x, const Rational& value) {
        if (incumbent_value_ && !(value < *incumbent_value_)) return;
        AssignmentCheck check = check_assignment(model_, x);
        if (!check.ok) throw MilpError("incumbent failed exact re-check: " + check.violations.front());
        incumbent_value_ = value;
        incumbent_ = x;
    }

    void apply_cutoff(LpSolver& lp) const {
        if (!incumbent_value_) return;
        // Integral objective: only strictly better integers are of interest.
        lp.set_extra_rhs(cutoff_row_, integral_ ? Rational(*incumbent_value_ - 1) : *incumbent_value_);
    }

    bool pruned_by_bound(const Rational& bound) const {
        if (!incumbent_value_) return false;
        if (integral_) return bound > *incumbent_value_ - 1;
        return !(bound < *incumbent_value_);
    }

    // Resets every binary to its model bounds, then applies `fixed`.
    void apply(LpSolver& lp, const Fixings& fixed) const {
        for (std::size_t var : order_) {
            const auto& v = model_.variables()[var];
            if (lp.lower(var) != v.lower || lp.upper(var) != v.upper) lp.set_bounds(var, v.lower, v.upper);
        }
        for (const auto& [var, value] : fixed) lp.set_bounds(var, value, value);
    }

    // Fixes binaries whose opposite value makes the LP infeasible (root only).
    bool probe(LpSolver& lp, Fixings& fixed, MilpSolution& out, bool& infeasible) {
        bool changed = false;
        for (std::size_t var : order_) {
            if (is_fixed(lp, var)) continue;
            Rational lo = lp.lower(var);
            Rational hi = lp.upper(var);
            bool feasible[2];
            for (int value = 0; value < 2; ++value) {
                lp.set_bounds(var, value, value);
                LpResult r = lp.solve();
                out.lp_iterations += r.iterations;
                feasible[value] = r.status == LpStatus::Optimal && !pruned_by_bound(r.objective);
            }
            if (!feasible[0] && !feasible[1]) {
                infeasible = true;
                return changed;
            }
            if (feasible[0] != feasible[1]) {
                int keep = feasible[1] ? 1 : 0;
                lp.set_bounds(var, keep, keep);
                fixed.emplace_back(var, keep);
                changed = true;
            } else {
                lp.set_bounds(var, lo, hi);
            }
        }
        return changed;
    }

    void finish(MilpSolution& out, MilpStatus status) const {
        out.status = status;
        out.objective_value = incumbent_value_;
        out.assignment = incumbent_;
    }

    const MilpModel& model_;
    const BranchAndBoundOptions& options_;
    bool integral_;
    std::vector<std::size_t> order_;
    std::size_t cutoff_row_ = 0;
    std::optional<Rational> incumbent_value_;
    RationalVector incumbent_;
};

}  // namespace

MilpSolution branch_and_bound(const MilpModel& model, const BranchAndBoundOptions& options) {
    model.validate();
    Search search(model, options);
    return search.run();
}

MilpSolution enumerate_binaries(const MilpModel& model, std::size_t max_binaries) {
    model.validate();
    std::vector<std::size_t> binaries;
    for (std::size_t j = 0; j < model.variable_count(); ++j) {
        if (model.variables()[j].kind == VarKind::Binary) binaries.push_back(j);
    }
    if (binaries.size() > max_binaries) throw MilpError("too many binaries to enumerate");
    MilpSolution out;
    const std::size_t total = std::size_t{1} << binaries.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        LpSolver lp(model);
        bool admissible = true;
        for (std::size_t b = 0; b < binaries.size(); ++b) {
            int value = (mask >> b) & 1;
            const auto& v = model.variables()[binaries[b]];
            if (Rational(value) < v.lower || Rational(value) > v.upper) admissible = false;
            lp.set_bounds(binaries[b], value, value);
        }
        if (!admissible) continue;
        ++out.nodes;
        LpResult r = lp.solve();
        out.lp_iterations += r.iterations;
        if (r.status != LpStatus::Optimal) continue;
        if (!out.objective_value || r.objective < *out.objective_value) {
            out.objective_value = r.objective;
            out.assignment = r.x;
        }
    }
    out.status = out.objective_value ? MilpStatus::Optimal : MilpStatus::Infeasible;
    return out;
}

}  // namespace endo
