// Acceptance suite: one PASS/FAIL line per criterion.
#include "endo/endotactic.hpp"
#include "endo/families.hpp"
#include "endo/netparse.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace endo;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Tolerances, all in seconds.
constexpr double fig1_limit = 1.0;
constexpr double futile_limit = 1.0;
constexpr double phospho_limit = 5.0;
constexpr double clock_limit = 10.0;
constexpr double big_clock_limit = 120.0;
constexpr double random_limit = 600.0;

constexpr Mode pipeline[] = {Mode::StronglyEndotactic, Mode::Endotactic, Mode::LowerEndotactic};

struct Emitted {
    ReactionNetwork net;
    WitnessCertificate cert;
};

std::vector<Emitted> emitted;           // every witness reported by classify, re-checked in criterion 8
std::vector<ReactionNetwork> corpus;    // networks used for criteria 8 and 9

Classification run(const ReactionNetwork& net, const ClassifyOptions& options = {}) {
    Classification c = classify(net, options);
    for (const auto& r : c.per_mode) {
        if (r.witness) emitted.push_back({net, *r.witness});
    }
    return c;
}

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  (" << detail << ")"
              << std::endl;
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

WitnessCertificate pivot_certificate(const ReactionNetwork& net, const RationalVector& w, std::size_t pivot) {
    WitnessCertificate cert;
    cert.mode = Mode::Endotactic;
    cert.w = w;
    Rational level = testsupport::value(net.reactions()[pivot].source, w);
    for (std::size_t i = 0; i < net.reaction_count(); ++i) {
        if (i == pivot) cert.r_minus.push_back(i);
        else if (testsupport::value(net.reactions()[i].source, w) < level) cert.r_zero.push_back(i);
        else cert.r_plus.push_back(i);
    }
    return cert;
}

void criterion1() {
    const std::pair<Family, Level> cases[] = {{Family::Fig1A, Level::NotLowerEndotactic},
                                              {Family::Fig1B, Level::LowerEndotacticOnly},
                                              {Family::Fig1C, Level::EndotacticNotStrongly},
                                              {Family::Fig1D, Level::StronglyEndotactic}};
    auto start = Clock::now();
    bool ok = true;
    std::string got;
    for (auto [f, want] : cases) {
        ReactionNetwork net = generate({f});
        corpus.push_back(net);
        Level level = run(net).level;
        ok = ok && level == want;
        got += std::string(got.empty() ? "" : "/") + to_string(level);
    }
    double t = since(start);
    report(1, "four-level networks A to D", ok && t < fig1_limit, got + ", " + secs(t) + " < " + secs(fig1_limit));
}

void criterion2() {
    ReactionNetwork fc = generate({Family::FutileCycle});
    corpus.push_back(fc);
    auto start = Clock::now();
    Classification c = run(fc);
    double t = since(start);
    const ModeResult& e = c.result(Mode::Endotactic);
    bool milp = e.verdict == Verdict::Fails && e.witness && verify_witness(fc, *e.witness);
    WitnessCertificate published{Mode::Endotactic, {Rational(99, 10), Rational(1, 10), 10, 0, 10, 10}, {}, {2}, {0, 1, 3, 4, 5}};
    bool literal = verify_witness(fc, published);
    report(2, "futile cycle not endotactic", milp && literal && t < futile_limit,
           std::string("classify ") + to_string(c.level) + ", published witness " + (literal ? "verifies" : "REJECTED") +
               ", " + secs(t) + " < " + secs(futile_limit));
}

void criterion3() {
    bool ok = true;
    double worst = 0;
    std::string bad;
    for (int n = 1; n <= 4; ++n) {
        for (Family f : {Family::Processive, Family::Distributive}) {
            ReactionNetwork net = generate({f, n});
            auto start = Clock::now();
            Classification c = run(net);
            double t = since(start);
            worst = std::max(worst, t);
            RationalVector w = f == Family::Processive ? processive_witness(n) : distributive_witness(n);
            std::size_t pivot = f == Family::Processive ? processive_pivot(n) : distributive_pivot(n);
            bool fine = c.result(Mode::Endotactic).verdict == Verdict::Fails &&
                        verify_witness(net, pivot_certificate(net, w, pivot)) && t < phospho_limit;
            if (!fine) bad += " " + describe({f, n});
            ok = ok && fine;
        }
    }
    report(3, "processive and distributive, n = 1..4", ok,
           (bad.empty() ? "all 8 not endotactic, closed-form witnesses verify" : "failed:" + bad) + ", slowest " +
               secs(worst) + " < " + secs(phospho_limit));
}

void criterion4() {
    std::vector<FamilySpec> specs = {{Family::ClockReduced}, {Family::ClockBasic}};
    for (int np = 0; np <= 2; ++np) {
        for (int nt = 0; nt <= 2; ++nt) {
            for (int nc = 0; nc <= 2; ++nc) specs.push_back({Family::ClockGeneral, 1, np, nt, nc});
        }
    }
    bool ok = true;
    double worst = 0;
    std::string bad;
    for (const auto& spec : specs) {
        ReactionNetwork net = generate(spec);
        auto start = Clock::now();
        Level level = run(net).level;
        double t = since(start);
        worst = std::max(worst, t);
        if (level != Level::StronglyEndotactic || t >= clock_limit) {
            ok = false;
            bad += " " + describe(spec) + "=" + to_string(level);
        }
    }
    ReactionNetwork big = generate({Family::ClockGeneral, 1, 4, 4, 4});
    auto start = Clock::now();
    Level big_level = run(big).level;
    double t = since(start);
    bool big_ok = big_level == Level::StronglyEndotactic && t < big_clock_limit;
    report(4, "clock networks strongly endotactic", ok && big_ok,
           std::to_string(specs.size()) + " clocks" + (bad.empty() ? "" : " failed:" + bad) + ", slowest " + secs(worst) +
               " < " + secs(clock_limit) + "; clock_general(4,4,4) with " + std::to_string(big.species_count()) +
               " species " + to_string(big_level) + " in " + secs(t) + " < " + secs(big_clock_limit));
}

void criterion5() {
    std::mt19937_64 rng(20240501);
    auto start = Clock::now();
    int disagreements = 0;
    std::string first;
    for (int k = 0; k < 500; ++k) {
        ReactionNetwork net = testsupport::random_network(rng, 3, 5, 3);
        corpus.push_back(net);
        Classification c = run(net);
        auto sweep = sweep_classify(net);
        for (int i = 0; i < 3; ++i) {
            Verdict milp = c.per_mode[i].verdict;
            bool brute = brute_force_classify(net, pipeline[i]).holds;
            bool swept = sweep[i].holds;
            bool agree = milp != Verdict::Unknown && (milp == Verdict::Holds) == brute && brute == swept;
            if (!agree) {
                ++disagreements;
                if (first.empty()) first = "; first: " + serialize_network(net) + " mode " + to_string(pipeline[i]);
            }
        }
    }
    double t = since(start);
    report(5, "three-way agreement on 500 random networks", disagreements == 0 && t < random_limit,
           std::to_string(disagreements) + " disagreements over 1500 mode checks, " + secs(t) + " < " +
               secs(random_limit) + first);
}

void criterion6() {
    std::mt19937_64 rng(777);
    int violations = 0, single = 0;
    for (int k = 0; k < 200; ++k) {
        ReactionNetwork net = testsupport::random_weakly_reversible(rng, 4, 8, 3);
        corpus.push_back(net);
        if (!is_weakly_reversible(net)) {
            ++violations;  // generator bug
            continue;
        }
        Level level = run(net).level;
        if (level != Level::EndotacticNotStrongly && level != Level::StronglyEndotactic) ++violations;
        if (linkage_classes(net).size() == 1) {
            ++single;
            // Independent of the structural shortcut: the MILP alone must agree.
            ModeResult milp = classify_mode(net, Mode::StronglyEndotactic);
            if (level != Level::StronglyEndotactic || milp.verdict != Verdict::Holds) ++violations;
        }
    }
    report(6, "weakly reversible networks", violations == 0,
           std::to_string(violations) + " violations; 200 networks, " + std::to_string(single) +
               " with one linkage class");
}

void criterion7() {
    ReactionNetwork lv = generate({Family::LotkaVolterra});
    Classification c = run(lv);
    bool milp = c.result(Mode::Endotactic).verdict == Verdict::Fails;
    bool brute = !brute_force_classify(lv, Mode::Endotactic).holds;
    bool sweep = !sweep_classify(lv)[1].holds;
    report(7, "Lotka-Volterra not endotactic", milp && brute && sweep,
           std::string("MILP ") + (milp ? "fails" : "holds") + ", brute force " + (brute ? "fails" : "holds") +
               ", sweep " + (sweep ? "fails" : "holds") + ", level " + to_string(c.level));
}

void criterion8() {
    std::size_t bad_witness = 0;
    for (const auto& e : emitted) {
        if (!e.cert.verified || !verify_witness(e.net, e.cert)) ++bad_witness;
    }
    // Re-solve every corpus model and substitute the incumbent back exactly.
    std::size_t incumbents = 0, bad_incumbent = 0;
    for (const auto& net : corpus) {
        for (Mode mode : pipeline) {
            EndoMilpConfig cfg;
            cfg.mode = mode;
            EndoModel em = build_endo_model(build_matrices(net), cfg);
            BranchAndBoundOptions bb;
            bb.stop_at_negative = true;
            MilpSolution s = branch_and_bound(em.model, bb);
            if (!s.has_incumbent()) continue;
            ++incumbents;
            if (!check_assignment(em.model, s.assignment).ok) ++bad_incumbent;
        }
    }
    report(8, "exactness of witnesses and incumbents", bad_witness == 0 && bad_incumbent == 0,
           std::to_string(emitted.size()) + " witnesses, " + std::to_string(bad_witness) + " failed; " +
               std::to_string(incumbents) + " incumbents, " + std::to_string(bad_incumbent) + " failed");
}

void criterion9() {
    std::size_t models = 0, mismatches = 0;
    for (const auto& net : corpus) {
        for (Mode mode : pipeline) {
            for (bool canonical : {true, false}) {
                EndoMilpConfig cfg;
                cfg.mode = mode;
                cfg.canonical = canonical;
                EndoModel em = build_endo_model(build_matrices(net), cfg);
                if (em.model.binary_count() > 12) continue;
                ++models;
                MilpSolution ref = enumerate_binaries(em.model, 12);
                MilpSolution got = branch_and_bound(em.model);
                if (!got.has_incumbent() || !ref.has_incumbent() || *got.objective_value != *ref.objective_value) {
                    ++mismatches;
                }
            }
        }
    }
    report(9, "branch and bound equals enumeration", mismatches == 0 && models > 0,
           std::to_string(models) + " models with <= 12 binaries, " + std::to_string(mismatches) + " mismatches");
}

}  // namespace

int main() {
    const std::function<void()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                              criterion6, criterion7, criterion8, criterion9};
    int id = 1;
    for (const auto& c : criteria) {
        try {
            c();
        } catch (const std::exception& e) {
            report(id, "exception", false, e.what());
        }
        ++id;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
