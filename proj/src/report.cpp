#include "endo/report.hpp"

#include "endo/netparse.hpp"

#include <sstream>

namespace endo {

namespace {

using Json = nlohmann::ordered_json;

Json one_based(const std::vector<std::size_t>& set) {
    Json out = Json::array();
    for (std::size_t i : set) out.push_back(i + 1);
    return out;
}

std::string reaction_text(const ReactionNetwork& net, const Reaction& rx) {
    return format_complex(rx.source, net.species()) + " -> " + format_complex(rx.target, net.species());
}

std::string labels(const std::vector<std::size_t>& set) {
    std::string out = "{";
    for (std::size_t k = 0; k < set.size(); ++k) out += (k ? ", R" : "R") + std::to_string(set[k] + 1);
    return out + "}";
}

}  // namespace

Json witness_json(const WitnessCertificate& cert) {
    Json w = Json::array();
    for (const auto& x : cert.w) w.push_back(to_string(x));
    return Json{{"mode", to_string(cert.mode)},
                {"w", std::move(w)},
                {"r_zero", one_based(cert.r_zero)},
                {"r_minus", one_based(cert.r_minus)},
                {"r_plus", one_based(cert.r_plus)},
                {"verified", cert.verified}};
}

Json report_json(const ReactionNetwork& net, const Classification& c, const ClassifyOptions& options) {
    Json report;
    report["network_name"] = net.name();
    Json species = Json::array();
    for (const auto& s : net.species()) species.push_back(s.name);
    report["species"] = std::move(species);
    Json reactions = Json::array();
    for (const auto& rx : net.reactions()) reactions.push_back(reaction_text(net, rx));
    report["reactions"] = std::move(reactions);
    report["level"] = to_string(c.level);

    Json per_mode = Json::array();
    Json mode_times = Json::object();
    for (const auto& r : c.per_mode) {
        Json entry{{"mode", to_string(r.mode)},
                   {"verdict", to_string(r.verdict)},
                   {"method", to_string(r.method)},
                   {"implied", r.implied},
                   {"nodes", r.nodes}};
        if (!r.note.empty()) entry["note"] = r.note;
        if (r.witness) entry["witness"] = witness_json(*r.witness);
        per_mode.push_back(std::move(entry));
        mode_times[to_string(r.mode)] = r.seconds;
    }
    report["per_mode"] = std::move(per_mode);
    report["conclusions"] = conclusion_lookup(c, net);
    if (c.oracle.performed) {
        report["oracle"] = Json{{"oracle", c.oracle.oracle},
                                {"agree", c.oracle.agree},
                                {"discrepancies", c.oracle.discrepancies}};
    }
    report["timings"] = Json{{"total_seconds", c.seconds}, {"per_mode_seconds", std::move(mode_times)}};
    report["config"] = Json{{"epsilon", to_string(options.epsilon)},
                            {"node_limit", options.node_limit},
                            {"oracle", to_string(options.oracle)},
                            {"strict", options.strict},
                            {"refine", options.refine},
                            {"minus_strict_rows", options.minus_strict_rows},
                            {"canonical", options.canonical},
                            {"probing", options.probing}};
    return report;
}

std::string report_text(const ReactionNetwork& net, const Classification& c) {
    std::ostringstream out;
    out << "network: " << (net.name().empty() ? "(unnamed)" : net.name()) << " (" << net.species_count()
        << " species, " << net.reaction_count() << " reactions)\n";
    out << "level: " << to_string(c.level) << "\n";
    for (const auto& r : c.per_mode) {
        out << "  " << to_string(r.mode) << ": " << to_string(r.verdict) << " [" << to_string(r.method)
            << (r.implied ? ", implied" : "") << "]";
        if (!r.note.empty()) out << " " << r.note;
        out << "\n";
        if (r.witness) {
            const auto& w = r.witness->w;
            out << "    w = " << to_string(w);
            bool exact = true;
            std::string approx = "(";
            for (std::size_t k = 0; k < w.size(); ++k) {
                std::string d = to_decimal(w[k], 6);
                if (Rational(parse_decimal(d).value_or(Rational(0))) != w[k]) exact = false;
                approx += (k ? ", " : "") + d;
            }
            if (!exact) out << " ~ " << approx << ")";
            out << "\n    R0 = " << labels(r.witness->r_zero) << "  R- = " << labels(r.witness->r_minus)
                << "  R+ = " << labels(r.witness->r_plus) << (r.witness->verified ? "  (verified)" : "") << "\n";
        }
    }
    auto conclusions = conclusion_lookup(c, net);
    if (conclusions.empty()) out << "conclusions: none\n";
    for (const auto& line : conclusions) out << "conclusion: " << line << "\n";
    if (c.oracle.performed) {
        out << "oracle (" << c.oracle.oracle << "): " << (c.oracle.agree ? "agrees" : "DISAGREES") << "\n";
        for (const auto& d : c.oracle.discrepancies) out << "  " << d << "\n";
    }
    return out.str();
}

}  // namespace endo
