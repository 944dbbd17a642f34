#include "endo/milp.hpp"

#include <sstream>

namespace endo {

namespace {

bool terminates(const Rational& v) {
    mpz_class den = v.get_den();
    for (unsigned long p : {2UL, 5UL}) {
        while (mpz_divisible_ui_p(den.get_mpz_t(), p)) den /= p;
    }
    return den == 1;
}

class LpWriter {
public:
    explicit LpWriter(const MilpModel& model) : model_(model) {}

    // " + 3 x - 1/3 y" with decimals; inexact decimals get an exact note.
    std::string terms(const LinearTerms& t) {
        std::ostringstream out;
        if (t.terms.empty()) return model_.variables().empty() ? " 0" : " 0 " + model_.variables()[0].name;
        for (const auto& [var, coeff] : t.terms) {
            out << (sgn(coeff) < 0 ? " - " : " + ");
            Rational mag = abs(coeff);
            if (mag != 1) out << number(mag) << ' ';
            out << model_.variables()[var].name;
        }
        return out.str();
    }

    std::string number(const Rational& v) {
        if (!terminates(v)) notes_.push_back(to_decimal(v) + " = " + to_string(v));
        return to_decimal(v);
    }

    void flush_notes(std::ostream& out) {
        for (const auto& n : notes_) out << "\\ exact: " << n << '\n';
        notes_.clear();
    }

private:
    const MilpModel& model_;
    std::vector<std::string> notes_;
};

}  // namespace

std::string export_lp(const MilpModel& model, const std::string& problem_name) {
    model.validate();
    LpWriter writer(model);
    std::ostringstream out;
    out << "\\ Problem: " << problem_name << '\n';
    out << "Minimize\n";
    {
        std::string line = writer.terms(model.objective());
        writer.flush_notes(out);
        out << " obj:" << line << '\n';
    }
    out << "Subject To\n";
    for (const auto& c : model.constraints()) {
        std::string lhs = writer.terms(c.lhs);
        std::string rhs = writer.number(c.rhs);
        writer.flush_notes(out);
        out << ' ' << c.name << ':' << lhs << (c.relation == Relation::Equal ? " = " : " <= ") << rhs << '\n';
    }
    out << "Bounds\n";
    for (const auto& v : model.variables()) {
        if (v.kind == VarKind::Binary) continue;
        std::string lo = writer.number(v.lower);
        std::string hi = writer.number(v.upper);
        writer.flush_notes(out);
        out << ' ' << lo << " <= " << v.name << " <= " << hi << '\n';
    }
    bool any_binary = false;
    for (const auto& v : model.variables()) {
        if (v.kind != VarKind::Binary) continue;
        if (!any_binary) out << "Binary\n";
        any_binary = true;
        out << ' ' << v.name << '\n';
    }
    out << "End\n";
    return out.str();
}

}  // namespace endo
