#include "endo/endo_model.hpp"

#include <algorithm>

namespace endo {

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::Endotactic: return "Endotactic";
        case Mode::LowerEndotactic: return "LowerEndotactic";
        case Mode::StronglyEndotactic: return "StronglyEndotactic";
    }
    return "?";
}

std::optional<Mode> parse_mode(const std::string& text) {
    if (text == "Endotactic" || text == "endotactic" || text == "E") return Mode::Endotactic;
    if (text == "LowerEndotactic" || text == "lower" || text == "LE") return Mode::LowerEndotactic;
    if (text == "StronglyEndotactic" || text == "strong" || text == "SE") return Mode::StronglyEndotactic;
    return std::nullopt;
}

std::vector<std::size_t> EndoLayout::branch_priority() const {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < r; ++i) order.push_back(r_minus(i));
    for (std::size_t i = 0; i < r; ++i) order.push_back(r_zero(i));
    if (has_theta) order.push_back(theta());
    return order;
}

RationalVector EndoModel::assignment(const RationalVector& w, const std::vector<bool>& r_zero,
                                     const std::vector<bool>& r_minus) const {
    RationalVector x(layout.variable_count());
    for (std::size_t k = 0; k < layout.m; ++k) x[layout.w(k)] = w.at(k);
    bool any_zero = false;
    for (std::size_t i = 0; i < layout.r; ++i) {
        x[layout.r_zero(i)] = r_zero.at(i) ? 1 : 0;
        x[layout.r_minus(i)] = r_minus.at(i) ? 1 : 0;
        any_zero = any_zero || r_zero[i];
    }
    if (layout.has_theta) x[layout.theta()] = any_zero ? 0 : 1;
    return x;
}

namespace {

std::string indexed(const char* stem, std::size_t i) { return std::string(stem) + "_" + std::to_string(i + 1); }

std::string indexed(const char* stem, std::size_t i, std::size_t j) {
    return std::string(stem) + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// w . (column i of a) into `terms`, scaled by `sign`.
void add_column(LinearTerms& terms, const EndoLayout& L, const Matrix& a, std::size_t i, int sign) {
    for (std::size_t k = 0; k < L.m; ++k) {
        if (sgn(a(k, i)) != 0) terms.add(L.w(k), sign * a(k, i));
    }
}

bool same_column(const Matrix& a, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (a(k, i) != a(k, j)) return false;
    }
    return true;
}

}  // namespace

EndoModel build_endo_model(const NetworkMatrices& mat, const EndoMilpConfig& cfg) {
    if (sgn(cfg.epsilon) <= 0 || cfg.epsilon > 1) throw MilpError("epsilon must lie in (0, 1]");
    if (mat.gamma.rows() != mat.y_source.rows() || mat.gamma.cols() != mat.y_source.cols()) {
        throw MilpError("stoichiometric and source matrices differ in shape");
    }
    const Rational eps = cfg.epsilon;
    const Rational big = 1 / eps;
    const bool strong = cfg.mode == Mode::StronglyEndotactic;

    EndoModel out;
    EndoLayout& L = out.layout;
    L.m = mat.species_count();
    L.r = mat.reaction_count();
    L.has_theta = strong;
    MilpModel& model = out.model;

    for (std::size_t k = 0; k < L.m; ++k) model.add_continuous(indexed("w", k), -big, big);
    for (std::size_t i = 0; i < L.r; ++i) model.add_binary(indexed("R0", i));
    for (std::size_t i = 0; i < L.r; ++i) model.add_binary(indexed("Rm", i));
    if (strong) model.add_binary("Theta");

    auto row = [&](std::string name, LinearTerms lhs, Rational rhs) {
        model.add_constraint({std::move(name), std::move(lhs), Relation::LessEqual, std::move(rhs)});
    };

    // Pairwise rows run over groups of reactions. Canonical witnesses let a
    // whole source class share one row (R- summed, R0 tied); otherwise every
    // reaction is its own group.
    const bool canonical = cfg.canonical && !(strong && cfg.minus_strict_rows);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < L.r; ++i) {
        auto it = groups.end();
        if (canonical) {
            it = std::find_if(groups.begin(), groups.end(),
                              [&](const auto& g) { return same_column(mat.y_source, g.front(), i); });
        }
        if (it == groups.end()) groups.push_back({i});
        else it->push_back(i);
    }
    // w . (y_g - y_h) for group sources.
    auto source_gap = [&](const std::vector<std::size_t>& g, const std::vector<std::size_t>& h) {
        LinearTerms t;
        add_column(t, L, mat.y_source, g.front(), 1);
        add_column(t, L, mat.y_source, h.front(), -1);
        return t;
    };
    auto add_minus = [&](LinearTerms& t, const std::vector<std::size_t>& g, const Rational& coeff) {
        for (std::size_t i : g) t.add(L.r_minus(i), coeff);
    };

    // R0 reactions are orthogonal to w.
    for (std::size_t i = 0; i < L.r; ++i) {
        for (int sign : {1, -1}) {
            LinearTerms t;
            add_column(t, L, mat.gamma, i, sign);
            t.add(L.r_zero(i), big);
            row(indexed(sign > 0 ? "E1p" : "E1n", i), std::move(t), big);
        }
    }
    // R- reactions point against w; R0 and R- are disjoint.
    for (std::size_t i = 0; i < L.r; ++i) {
        LinearTerms excl;
        excl.add(L.r_minus(i), 1);
        excl.add(L.r_zero(i), 1);
        row(indexed("E2x", i), std::move(excl), 1);
        LinearTerms t;
        add_column(t, L, mat.gamma, i, 1);
        t.add(L.r_minus(i), big);
        row(indexed("E2", i), std::move(t), big - eps);
    }

    if (!strong) {
        // Sources of R- reactions are not beyond any R+ source.
        for (const auto& g : groups) {
            for (const auto& h : groups) {
                if (&g == &h || same_column(mat.y_source, g.front(), h.front())) continue;
                LinearTerms t = source_gap(g, h);
                add_minus(t, g, big);
                add_minus(t, h, -big);
                t.add(L.r_zero(h.front()), -big);
                row(indexed("E3", g.front(), h.front()), std::move(t), big);
            }
        }
        if (cfg.mode == Mode::LowerEndotactic) {
            for (std::size_t k = 0; k < L.m; ++k) {
                LinearTerms t;
                t.add(L.w(k), -1);
                row(indexed("LE", k), std::move(t), 0);
            }
        }
    } else {
        const std::size_t theta = L.theta();
        for (const auto& g : groups) {
            for (const auto& h : groups) {
                if (&g == &h) continue;
                LinearTerms t = source_gap(g, h);
                if (cfg.minus_strict_rows) {
                    t.add(L.r_minus(g.front()), big);
                    t.add(L.r_minus(h.front()), -big);
                } else {
                    // Active when Theta = 0, g in R0 and h outside R0.
                    t.add(L.r_zero(g.front()), big);
                    t.add(L.r_zero(h.front()), -big);
                    t.add(theta, -big);
                }
                row(indexed("SE3a", g.front(), h.front()), std::move(t), big - eps);
            }
        }
        LinearTerms need_zero;  // Theta = 0 forces some R0 member
        need_zero.add(theta, -1);
        LinearTerms upper;
        upper.add(theta, 1);
        for (std::size_t i = 0; i < L.r; ++i) {
            need_zero.add(L.r_zero(i), -big);
            upper.add(L.r_zero(i), -big);
        }
        row("SE3b_lo", std::move(need_zero), -1);
        row("SE3b_hi", std::move(upper), 1);
        for (std::size_t i = 0; i < L.r; ++i) {
            LinearTerms t;
            t.add(theta, 1);
            t.add(L.r_zero(i), 1);
            row(indexed("SE3b_link", i), std::move(t), 1);
        }
        for (const auto& g : groups) {
            for (const auto& h : groups) {
                if (&g == &h || same_column(mat.y_source, g.front(), h.front())) continue;
                LinearTerms t = source_gap(g, h);
                add_minus(t, g, big);
                add_minus(t, h, -big);
                t.add(theta, big);
                row(indexed("SE3b", g.front(), h.front()), std::move(t), 2 * big);
            }
        }
    }

    // The reduction breaks the R- keyed rows (ties), so it is skipped there.
    if (canonical) {
        LinearTerms t;
        for (std::size_t i = 0; i < L.r; ++i) t.add(L.r_minus(i), 1);
        row("pivot", std::move(t), 1);
        for (const auto& g : groups) {
            for (std::size_t k = 1; k < g.size(); ++k) {
                LinearTerms tie;
                tie.add(L.r_zero(g.front()), 1);
                tie.add(L.r_zero(g[k]), -1);
                model.add_constraint({indexed("tie", g.front(), g[k]), std::move(tie), Relation::Equal, 0});
            }
        }
    }

    LinearTerms objective;
    for (std::size_t i = 0; i < L.r; ++i) objective.add(L.r_minus(i), -1);
    model.set_objective(std::move(objective));
    return out;
}

}  // namespace endo
