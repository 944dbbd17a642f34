#include "doctest.h"

#include "endo/milp.hpp"
#include "endo/families.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

using namespace endo;

namespace {

// Reference LP solver: every vertex of a boxed polytope is the solution of n
// tight constraints taken from the rows and the bounds. Tries them all.
struct VertexResult {
    bool feasible = false;
    Rational objective;
};

std::optional<RationalVector> solve_square(std::vector<RationalVector> a, RationalVector b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

VertexResult vertex_oracle(const MilpModel& model) {
    const std::size_t n = model.variable_count();
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (std::size_t i = 0; i < model.constraints().size(); ++i) {
        rows.push_back(model.dense_row(i));
        rhs.push_back(model.constraints()[i].rhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector e(n);
        e[j] = 1;
        rows.push_back(e);
        rhs.push_back(model.variables()[j].lower);
        rows.push_back(e);
        rhs.push_back(model.variables()[j].upper);
    }
    VertexResult best;
    std::vector<std::size_t> pick(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
        if (depth == n) {
            std::vector<RationalVector> a;
            RationalVector b;
            for (std::size_t i : pick) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
            auto x = solve_square(a, b);
            if (!x) return;
            for (std::size_t j = 0; j < n; ++j) {
                if ((*x)[j] < model.variables()[j].lower || (*x)[j] > model.variables()[j].upper) return;
            }
            for (const auto& c : model.constraints()) {
                if (!c.satisfied_by(*x)) return;
            }
            Rational obj = model.objective().evaluate(*x);
            if (!best.feasible || obj < best.objective) best = {true, obj};
            return;
        }
        for (std::size_t i = from; i < rows.size(); ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return best;
}

MilpModel random_lp(std::mt19937_64& rng, std::size_t n, std::size_t m, bool binaries) {
    std::uniform_int_distribution<int> coeff(-3, 3), bound(-2, 2), rhs(-4, 4), coin(0, 4);
    MilpModel model;
    for (std::size_t j = 0; j < n; ++j) {
        if (binaries && j % 2 == 1) {
            model.add_binary("b" + std::to_string(j));
        } else {
            int lo = bound(rng), hi = bound(rng);
            if (lo > hi) std::swap(lo, hi);
            model.add_continuous("x" + std::to_string(j), lo, hi + 1);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        LinearTerms t;
        for (std::size_t j = 0; j < n; ++j) {
            int c = coeff(rng);
            if (c) t.add(j, make_rational(c, coin(rng) == 0 ? 2 : 1));
        }
        if (t.terms.empty()) continue;
        Relation rel = coin(rng) == 0 ? Relation::Equal : Relation::LessEqual;
        model.add_constraint({"c" + std::to_string(i), std::move(t), rel, rhs(rng)});
    }
    LinearTerms obj;
    for (std::size_t j = 0; j < n; ++j) {
        int c = coeff(rng);
        if (c) obj.add(j, c);
    }
    model.set_objective(std::move(obj));
    return model;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("trivial LPs") {
    MilpModel m;
    std::size_t x = m.add_continuous("x", 0, 1);
    LinearTerms obj;
    obj.add(x, 1);
    m.set_objective(obj);
    LpResult r = lp_solve(m);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == 0);
    CHECK(r.x == RationalVector{0});

    LinearTerms row;
    row.add(x, 1);
    m.add_constraint({"c", row, Relation::LessEqual, -1});
    CHECK(lp_solve(m).status == LpStatus::Infeasible);
}

TEST_CASE("LP core agrees with vertex enumeration") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + trial % 3, rows = trial % 5;
        MilpModel model = random_lp(rng, n, rows, false);
        VertexResult ref = vertex_oracle(model);
        LpResult got = lp_solve(model);
        CAPTURE(trial);
        REQUIRE((got.status == LpStatus::Optimal) == ref.feasible);
        if (ref.feasible) {
            CHECK(got.objective == ref.objective);
            CHECK(check_assignment(model, got.x).ok);
        }
    }
}

TEST_CASE("null-space feasibility of the E1 rows") {
    // Gamma^T w = 0 with w_k = 1 is feasible iff e_k is not orthogonal to the
    // null space, i.e. adding e_k to Gamma^T raises the rank.
    for (Family f : {Family::Toy, Family::Fig1A, Family::LotkaVolterra, Family::FutileCycle}) {
        ReactionNetwork net = generate({f});
        NetworkMatrices mats = build_matrices(net);
        const std::size_t m = net.species_count();
        for (std::size_t k = 0; k < m; ++k) {
            MilpModel model;
            for (std::size_t j = 0; j < m; ++j) model.add_continuous("w" + std::to_string(j), j == k ? 1 : -100, j == k ? 1 : 100);
            Matrix gt(mats.gamma.cols() + 1, m);
            for (std::size_t i = 0; i < mats.gamma.cols(); ++i) {
                LinearTerms row;
                for (std::size_t j = 0; j < m; ++j) {
                    gt(i, j) = mats.gamma(j, i);
                    if (mats.gamma(j, i) != 0) row.add(j, mats.gamma(j, i));
                }
                if (!row.terms.empty()) model.add_constraint({"E1", row, Relation::Equal, 0});
            }
            Matrix base = gt;
            gt(mats.gamma.cols(), k) = 1;
            bool expected = rank(gt) > rank(base);
            // The box may cut a feasible direction only if it needs entries over 100.
            CHECK((lp_solve(model).status == LpStatus::Optimal) == expected);
        }
    }
}

TEST_CASE("branch and bound basics") {
    MilpModel m;
    std::size_t b = m.add_binary("b");
    LinearTerms obj;
    obj.add(b, -1);
    m.set_objective(obj);
    LinearTerms row;
    row.add(b, 1);
    m.add_constraint({"c", row, Relation::LessEqual, 0});
    MilpSolution s = branch_and_bound(m);
    CHECK(s.status == MilpStatus::Optimal);
    CHECK(*s.objective_value == 0);
}

TEST_CASE("branch and bound agrees with enumeration on random MILPs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        MilpModel model = random_lp(rng, 2 + trial % 6, 1 + trial % 5, true);
        MilpSolution ref = enumerate_binaries(model);
        for (bool probing : {false, true}) {
            BranchAndBoundOptions opt;
            opt.probing = probing;
            MilpSolution got = branch_and_bound(model, opt);
            CAPTURE(trial);
            REQUIRE(got.has_incumbent() == ref.has_incumbent());
            if (ref.has_incumbent()) {
                CHECK(*got.objective_value == *ref.objective_value);
                CHECK(check_assignment(model, got.assignment).ok);
            }
        }
    }
}

TEST_CASE("check_assignment reports violations") {
    MilpModel m;
    std::size_t x = m.add_continuous("x", 0, 1);
    std::size_t b = m.add_binary("b");
    LinearTerms row;
    row.add(x, 1);
    row.add(b, 1);
    m.add_constraint({"sum", row, Relation::LessEqual, 1});
    CHECK(check_assignment(m, {Rational(1, 2), 0}).ok);
    CHECK_FALSE(check_assignment(m, {Rational(1, 2), 1}).ok);
    CHECK_FALSE(check_assignment(m, {0, Rational(1, 2)}).ok);
    CHECK_FALSE(check_assignment(m, {2, 0}).ok);
}

TEST_CASE("LP export") {
    MilpModel m;
    std::size_t x = m.add_continuous("x", 0, 1);
    std::size_t b = m.add_binary("b");
    LinearTerms obj;
    obj.add(x, 1);
    obj.add(b, -2);
    m.set_objective(obj);
    LinearTerms row;
    row.add(x, 3);
    row.add(b, Rational(-1, 2));
    m.add_constraint({"c1", row, Relation::LessEqual, Rational(1, 3)});
    CHECK(export_lp(m, "trivial") == read_file(ENDO_TEST_DATA "/trivial.lp"));

    MilpModel empty;
    empty.add_continuous("y", -1, 1);
    std::string text = export_lp(empty, "empty");
    CHECK(text.find("Subject To\nBounds\n") != std::string::npos);
}
