#include "endo/milp.hpp"

#include <algorithm>

namespace endo {

void LinearTerms::add(std::size_t var, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    Rational c = coeff;
    c.canonicalize();
    auto it = std::lower_bound(terms.begin(), terms.end(), var,
                               [](const auto& term, std::size_t v) { return term.first < v; });
    if (it != terms.end() && it->first == var) {
        it->second += c;
        if (sgn(it->second) == 0) terms.erase(it);
    } else {
        terms.emplace(it, var, std::move(c));
    }
}

Rational LinearTerms::evaluate(const RationalVector& x) const {
    Rational sum = 0;
    for (const auto& [var, coeff] : terms) {
        if (sgn(x[var]) != 0) sum += coeff * x[var];
    }
    return sum;
}

bool LinearConstraint::satisfied_by(const RationalVector& x) const {
    Rational lhs_value = lhs.evaluate(x);
    return relation == Relation::Equal ? lhs_value == rhs : lhs_value <= rhs;
}

std::size_t MilpModel::add_variable(std::string name, VarKind kind, Rational lower, Rational upper) {
    // Inputs built as mpq_class(p, q) are not reduced; everything downstream assumes they are.
    lower.canonicalize();
    upper.canonicalize();
    if (upper < lower) throw MilpError("variable '" + name + "' has lower bound above upper bound");
    variables_.push_back({std::move(name), kind, std::move(lower), std::move(upper)});
    return variables_.size() - 1;
}

std::size_t MilpModel::add_continuous(std::string name, Rational lower, Rational upper) {
    return add_variable(std::move(name), VarKind::Continuous, std::move(lower), std::move(upper));
}

std::size_t MilpModel::add_binary(std::string name) {
    return add_variable(std::move(name), VarKind::Binary, 0, 1);
}

void MilpModel::add_constraint(LinearConstraint row) {
    row.rhs.canonicalize();
    for (auto& term : row.lhs.terms) term.second.canonicalize();
    constraints_.push_back(std::move(row));
}

std::size_t MilpModel::binary_count() const {
    return static_cast<std::size_t>(std::count_if(variables_.begin(), variables_.end(),
                                                  [](const Variable& v) { return v.kind == VarKind::Binary; }));
}

RationalVector MilpModel::dense_row(std::size_t i) const {
    RationalVector row(variables_.size());
    for (const auto& [var, coeff] : constraints_.at(i).lhs.terms) row[var] = coeff;
    return row;
}

void MilpModel::validate() const {
    for (const auto& v : variables_) {
        if (v.upper < v.lower) throw MilpError("variable '" + v.name + "' has inverted bounds");
        if (v.kind == VarKind::Binary && (v.lower < 0 || v.upper > 1)) {
            throw MilpError("binary variable '" + v.name + "' has bounds outside [0, 1]");
        }
    }
    auto check_terms = [&](const LinearTerms& t, const std::string& what) {
        for (const auto& [var, coeff] : t.terms) {
            (void)coeff;
            if (var >= variables_.size()) throw MilpError(what + " references unknown variable");
        }
    };
    for (const auto& c : constraints_) check_terms(c.lhs, "constraint '" + c.name + "'");
    check_terms(objective_, "objective");
}

bool MilpModel::integral_objective() const {
    for (const auto& [var, coeff] : objective_.terms) {
        if (variables_[var].kind != VarKind::Binary) return false;
        if (coeff.get_den() != 1) return false;
    }
    return true;
}

AssignmentCheck check_assignment(const MilpModel& model, const RationalVector& x) {
    AssignmentCheck out;
    if (x.size() != model.variable_count()) {
        out.ok = false;
        out.violations.push_back("assignment length mismatch");
        return out;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        const auto& v = model.variables()[j];
        if (x[j] < v.lower || x[j] > v.upper) out.violations.push_back("bound of " + v.name);
        if (v.kind == VarKind::Binary && x[j] != 0 && x[j] != 1) out.violations.push_back("integrality of " + v.name);
    }
    for (const auto& c : model.constraints()) {
        if (!c.satisfied_by(x)) out.violations.push_back("row " + c.name);
    }
    out.ok = out.violations.empty();
    return out;
}

}  // namespace endo
