#include "endo/endotactic.hpp"

#include <chrono>

namespace endo {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

constexpr Mode pipeline_order[] = {Mode::StronglyEndotactic, Mode::Endotactic, Mode::LowerEndotactic};

std::size_t slot(Mode mode) {
    switch (mode) {
        case Mode::StronglyEndotactic: return 0;
        case Mode::Endotactic: return 1;
        case Mode::LowerEndotactic: return 2;
    }
    return 0;
}

bool within_caps(const ReactionNetwork& net, const OracleCaps& caps) {
    return net.reaction_count() <= caps.max_reactions && net.species_count() <= caps.max_species;
}

bool nonnegative(const RationalVector& w) {
    for (const auto& x : w) {
        if (sgn(x) < 0) return false;
    }
    return true;
}

// Certificate for `mode` built from a verified certificate of another mode.
std::optional<WitnessCertificate> transfer(const ReactionNetwork& net, const WitnessCertificate& from, Mode mode) {
    WitnessCertificate cert;
    if (mode == Mode::StronglyEndotactic || from.mode == Mode::StronglyEndotactic) {
        if (!certificate_from_direction(net, from.w, mode, cert)) return std::nullopt;
        return cert;
    }
    cert = from;
    cert.mode = mode;
    cert.verified = verify_witness(net, cert);
    if (!cert.verified) return std::nullopt;
    return cert;
}

ModeResult from_oracle(const ReactionNetwork& net, const OracleVerdict& v) {
    ModeResult r;
    r.mode = v.mode;
    r.method = Method::Oracle;
    if (!v.holds) {
        r.verdict = Verdict::Fails;
        r.witness = v.witness;
    } else {
        r.verdict = v.authoritative ? Verdict::Holds : Verdict::Unknown;
        if (!v.authoritative) r.note = "sampled direction set found no violation";
    }
    (void)net;
    return r;
}

struct Attempt {
    Verdict verdict = Verdict::Unknown;
    std::optional<WitnessCertificate> witness;
    std::size_t nodes = 0;
    bool unverified = false;
};

Attempt run_milp(const ReactionNetwork& net, const NetworkMatrices& mats, Mode mode, const Rational& epsilon,
                 const ClassifyOptions& options) {
    EndoMilpConfig cfg;
    cfg.epsilon = epsilon;
    cfg.mode = mode;
    cfg.minus_strict_rows = options.minus_strict_rows;
    cfg.canonical = options.canonical;
    EndoModel em = build_endo_model(mats, cfg);

    const std::size_t m = em.layout.m;
    const std::size_t r = em.layout.r;
    BranchAndBoundOptions bb;
    bb.stop_at_negative = true;
    bb.node_limit = options.node_limit;
    bb.branch_priority = em.layout.branch_priority();
    bb.warm_start = em.assignment(RationalVector(m), std::vector<bool>(r, false), std::vector<bool>(r, false));
    bb.probing = options.probing;
    MilpSolution sol = branch_and_bound(em.model, bb);

    Attempt out;
    out.nodes = sol.nodes;
    if (sol.has_incumbent() && sgn(*sol.objective_value) < 0) {
        WitnessCertificate cert;
        cert.mode = mode;
        for (std::size_t k = 0; k < m; ++k) cert.w.push_back(sol.assignment[em.layout.w(k)]);
        for (std::size_t i = 0; i < r; ++i) {
            if (sol.assignment[em.layout.r_minus(i)] == 1) cert.r_minus.push_back(i);
            else if (sol.assignment[em.layout.r_zero(i)] == 1) cert.r_zero.push_back(i);
            else cert.r_plus.push_back(i);
        }
        cert.verified = verify_witness(net, cert);
        if (cert.verified) {
            out.verdict = Verdict::Fails;
            out.witness = std::move(cert);
        } else {
            out.unverified = true;
        }
        return out;
    }
    if (sol.status == MilpStatus::NodeLimit) return out;
    out.verdict = Verdict::Holds;
    return out;
}

void check_monotone(const Classification& c) {
    const Verdict s = c.per_mode[0].verdict, e = c.per_mode[1].verdict, l = c.per_mode[2].verdict;
    auto clash = [](Verdict stronger, Verdict weaker) { return stronger == Verdict::Holds && weaker == Verdict::Fails; };
    if (clash(s, e) || clash(e, l) || clash(s, l)) {
        throw std::logic_error("classification violates strongly endotactic => endotactic => lower endotactic");
    }
}

void oracle_verify(const ReactionNetwork& net, Classification& c, const ClassifyOptions& options) {
    OracleCheck& check = c.oracle;
    check.performed = true;
    std::vector<std::pair<std::string, std::vector<ModeResult>>> runs;
    if (within_caps(net, options.oracle_caps)) {
        std::vector<ModeResult> brute;
        for (Mode mode : pipeline_order) brute.push_back(from_oracle(net, brute_force_classify(net, mode, options.oracle_caps)));
        runs.emplace_back("brute_force", std::move(brute));
    }
    std::vector<ModeResult> sweep;
    for (const auto& v : sweep_classify(net)) sweep.push_back(from_oracle(net, v));
    runs.emplace_back("sweep", std::move(sweep));

    for (const auto& [name, results] : runs) {
        check.oracle += (check.oracle.empty() ? "" : "+") + name;
        for (std::size_t k = 0; k < 3; ++k) {
            Verdict mine = c.per_mode[k].verdict;
            Verdict theirs = results[k].verdict;
            if (mine == Verdict::Unknown || theirs == Verdict::Unknown || mine == theirs) continue;
            check.agree = false;
            check.discrepancies.push_back(std::string(to_string(pipeline_order[k])) + ": pipeline " + to_string(mine) +
                                          ", " + name + " " + to_string(theirs));
        }
    }
}

}  // namespace

const char* to_string(Level level) {
    switch (level) {
        case Level::NotLowerEndotactic: return "NotLowerEndotactic";
        case Level::LowerEndotacticOnly: return "LowerEndotacticOnly";
        case Level::EndotacticNotStrongly: return "EndotacticNotStrongly";
        case Level::StronglyEndotactic: return "StronglyEndotactic";
        case Level::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Method method) {
    switch (method) {
        case Method::Milp: return "Milp";
        case Method::Oracle: return "Oracle";
        case Method::StructuralShortcut: return "StructuralShortcut";
    }
    return "?";
}

const char* to_string(OracleMode mode) {
    switch (mode) {
        case OracleMode::Off: return "off";
        case OracleMode::Verify: return "verify";
        case OracleMode::Force: return "force";
    }
    return "?";
}

std::optional<OracleMode> parse_oracle_mode(const std::string& text) {
    if (text == "off") return OracleMode::Off;
    if (text == "verify") return OracleMode::Verify;
    if (text == "force") return OracleMode::Force;
    return std::nullopt;
}

const ModeResult& Classification::result(Mode mode) const { return per_mode.at(slot(mode)); }

Level level_from(Verdict strong, Verdict endo, Verdict lower) {
    if (lower == Verdict::Fails) return Level::NotLowerEndotactic;
    if (endo == Verdict::Fails && lower == Verdict::Holds) return Level::LowerEndotacticOnly;
    if (strong == Verdict::Fails && endo == Verdict::Holds) return Level::EndotacticNotStrongly;
    if (strong == Verdict::Holds) return Level::StronglyEndotactic;
    return Level::Unknown;
}

ModeResult classify_mode(const ReactionNetwork& net, Mode mode, const ClassifyOptions& options) {
    auto start = Clock::now();
    const NetworkMatrices mats = build_matrices(net);
    ModeResult result;
    result.mode = mode;

    Attempt a = run_milp(net, mats, mode, options.epsilon, options);
    result.nodes = a.nodes;
    if (a.verdict == Verdict::Holds && options.refine) {
        Attempt fine = run_milp(net, mats, mode, options.epsilon / 100, options);
        result.nodes += fine.nodes;
        if (fine.verdict != Verdict::Holds) {
            result.note = "holds at epsilon " + to_string(options.epsilon) + " but not at epsilon / 100";
        }
        a = std::move(fine);
    }
    if (a.unverified) {
        // Never report an assignment that does not re-verify exactly.
        if (within_caps(net, options.oracle_caps)) {
            result = from_oracle(net, brute_force_classify(net, mode, options.oracle_caps));
            result.nodes = a.nodes;
            result.note = "MILP assignment failed exact verification; brute force oracle used";
        } else {
            result.verdict = Verdict::Unknown;
            result.note = "MILP assignment failed exact verification";
        }
    } else {
        result.verdict = a.verdict;
        result.witness = std::move(a.witness);
        if (a.verdict == Verdict::Unknown && result.note.empty()) result.note = "node limit reached";
    }
    result.seconds = since(start);
    return result;
}

std::vector<ModeResult> oracle_classify(const ReactionNetwork& net, const OracleCaps& caps) {
    std::vector<ModeResult> out;
    if (within_caps(net, caps)) {
        for (Mode mode : pipeline_order) {
            auto start = Clock::now();
            ModeResult r = from_oracle(net, brute_force_classify(net, mode, caps));
            r.seconds = since(start);
            out.push_back(std::move(r));
        }
        return out;
    }
    auto start = Clock::now();
    for (const auto& v : sweep_classify(net)) out.push_back(from_oracle(net, v));
    double each = since(start) / 3;
    for (auto& r : out) r.seconds = each;
    return out;
}

Classification classify(const ReactionNetwork& net, const ClassifyOptions& options) {
    if (net.reaction_count() == 0) throw NetworkError("network has no reactions");
    auto start = Clock::now();
    Classification c;

    if (options.oracle == OracleMode::Force) {
        c.per_mode = oracle_classify(net, options.oracle_caps);
    } else {
        c.per_mode.resize(3);
        for (std::size_t k = 0; k < 3; ++k) c.per_mode[k].mode = pipeline_order[k];
        ModeResult& strong = c.per_mode[0];
        ModeResult& endo = c.per_mode[1];
        ModeResult& lower = c.per_mode[2];

        const bool shortcut = is_weakly_reversible(net) && linkage_classes(net).size() == 1;
        if (shortcut) {
            if (options.strict) {
                strong = classify_mode(net, Mode::StronglyEndotactic, options);
                if (strong.verdict == Verdict::Holds) {
                    strong.method = Method::StructuralShortcut;
                    strong.note = "weakly reversible with one linkage class; confirmed by MILP";
                } else if (strong.verdict == Verdict::Unknown) {
                    strong.verdict = Verdict::Holds;
                    strong.method = Method::StructuralShortcut;
                    strong.note = "weakly reversible with one linkage class; MILP confirmation inconclusive";
                } else {
                    strong.note = "verified witness contradicts the weakly reversible single-linkage-class shortcut";
                }
            } else {
                strong.verdict = Verdict::Holds;
                strong.method = Method::StructuralShortcut;
                strong.note = "weakly reversible with one linkage class";
            }
        } else {
            strong = classify_mode(net, Mode::StronglyEndotactic, options);
        }

        auto implied = [](ModeResult& target, const ModeResult& from, Verdict v) {
            target.verdict = v;
            target.method = from.method;
            target.implied = true;
        };
        if (strong.verdict == Verdict::Holds) {
            implied(endo, strong, Verdict::Holds);
            implied(lower, strong, Verdict::Holds);
        } else {
            endo = classify_mode(net, Mode::Endotactic, options);
            if (endo.verdict == Verdict::Holds) {
                implied(lower, endo, Verdict::Holds);
            } else if (endo.verdict == Verdict::Fails && nonnegative(endo.witness->w)) {
                implied(lower, endo, Verdict::Fails);
                lower.witness = transfer(net, *endo.witness, Mode::LowerEndotactic);
            } else {
                lower = classify_mode(net, Mode::LowerEndotactic, options);
            }
            if (endo.verdict == Verdict::Unknown && lower.verdict == Verdict::Fails) {
                implied(endo, lower, Verdict::Fails);
                endo.witness = transfer(net, *lower.witness, Mode::Endotactic);
            }
            if (strong.verdict == Verdict::Unknown && endo.verdict == Verdict::Fails) {
                implied(strong, endo, Verdict::Fails);
                strong.witness = transfer(net, *endo.witness, Mode::StronglyEndotactic);
            }
        }
        for (const auto& r : c.per_mode) {
            if (r.verdict == Verdict::Fails && !(r.witness && r.witness->verified)) {
                throw std::logic_error(std::string("failing verdict without a verified witness for ") + to_string(r.mode));
            }
        }
    }

    check_monotone(c);
    c.level = level_from(c.per_mode[0].verdict, c.per_mode[1].verdict, c.per_mode[2].verdict);
    if (options.oracle == OracleMode::Verify) oracle_verify(net, c, options);
    c.seconds = since(start);
    return c;
}

std::vector<std::string> conclusion_lookup(const Classification& c, const ReactionNetwork& net) {
    std::vector<std::string> out;
    if (c.level == Level::StronglyEndotactic) {
        out.push_back(
            "permanent under kappa-variable mass action kinetics: every strongly endotactic mass action system is "
            "permanent");
        return out;
    }
    const bool lower = c.level == Level::LowerEndotacticOnly || c.level == Level::EndotacticNotStrongly;
    if (lower && stoichiometric_dimension(net) == 2) {
        out.push_back(
            "persistent if trajectories are bounded: \"Every kappa-variable mass action system with bounded "
            "trajectories, a two-dimensional stoichiometric subspace, and lower-endotactic stoichiometric subnetworks "
            "is persistent.\" Caveat: this requires that the system have bounded trajectories, which may not be "
            "immediately known; boundedness is not checked here.");
    }
    return out;
}

}  // namespace endo
