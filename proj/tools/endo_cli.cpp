// endoclass: classify reaction networks as (lower / strongly) endotactic.
#include "endo/endotactic.hpp"
#include "endo/families.hpp"
#include "endo/netparse.hpp"
#include "endo/projection.hpp"
#include "endo/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace endo;

enum Exit { ok = 0, input_error = 1, unknown = 2, disagreement = 3 };

struct Job {
    std::string path;
    std::string output;       // report text or JSON
    std::string diagnostics;  // stderr
    int code = ok;
};

ReactionNetwork load(const std::string& path) {
    ReactionNetwork net = load_network_file(path);
    if (net.name().empty()) net.set_name(std::filesystem::path(path).stem().string());
    if (net.reaction_count() == 0) throw NetworkError("network has no reactions");
    return net;
}

Rational parse_epsilon(const std::string& text) {
    auto eps = parse_number(text);
    if (!eps || sgn(*eps) <= 0 || *eps > 1) throw CLI::ValidationError("--epsilon", "must be a rational in (0, 1]");
    return *eps;
}

RationalVector parse_vector(const std::string& text, std::size_t expected) {
    std::string cleaned = text;
    for (char& ch : cleaned) {
        if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
    }
    std::istringstream in(cleaned);
    RationalVector w;
    std::string item;
    while (in >> item) {
        auto v = parse_number(item);
        if (!v) throw NetworkError("cannot read '" + item + "' as a rational");
        w.push_back(*v);
    }
    if (w.size() != expected) {
        throw NetworkError("w has " + std::to_string(w.size()) + " entries, network has " + std::to_string(expected) +
                           " species");
    }
    return w;
}

void run_job(Job& job, const ClassifyOptions& options, bool json) {
    ReactionNetwork net;
    try {
        net = load(job.path);
    } catch (const std::exception& e) {
        job.diagnostics = job.path + ": " + e.what() + "\n";
        job.code = input_error;
        return;
    }
    Classification c = classify(net, options);
    if (json) {
        job.output = report_json(net, c, options).dump(2);
    } else {
        job.output = "file: " + job.path + "\n" + report_text(net, c);
    }
    if (c.oracle.performed && !c.oracle.agree) {
        nlohmann::ordered_json d{{"file", job.path},
                                 {"network_name", net.name()},
                                 {"oracle", c.oracle.oracle},
                                 {"discrepancies", c.oracle.discrepancies}};
        job.diagnostics = "oracle disagreement: " + d.dump() + "\n";
        job.code = disagreement;
    } else if (c.level == Level::Unknown) {
        job.code = unknown;
    }
}

int combine(const std::vector<Job>& jobs) {
    bool any_input = false, any_disagree = false, any_unknown = false;
    for (const auto& j : jobs) {
        any_input |= j.code == input_error;
        any_disagree |= j.code == disagreement;
        any_unknown |= j.code == unknown;
    }
    if (any_input) return input_error;
    if (any_disagree) return disagreement;
    if (any_unknown) return unknown;
    return ok;
}

int cmd_classify(const std::vector<std::string>& paths, const ClassifyOptions& options, bool json, unsigned jobs) {
    std::vector<Job> work(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) work[i].path = paths[i];
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
                run_job(work[i], options, json);
            } catch (const std::exception& e) {
                work[i].diagnostics = work[i].path + ": " + e.what() + "\n";
                work[i].code = input_error;
            }
        }
    };
    unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Output in input order regardless of scheduling.
    std::vector<std::string> outputs;
    for (const auto& j : work) {
        std::cerr << j.diagnostics;
        if (!j.output.empty()) outputs.push_back(j.output);
    }
    if (json && outputs.size() != 1) {
        std::cout << "[";
        for (std::size_t i = 0; i < outputs.size(); ++i) std::cout << (i ? ",\n" : "\n") << outputs[i];
        std::cout << "\n]\n";
    } else {
        for (std::size_t i = 0; i < outputs.size(); ++i) std::cout << (i && !json ? "\n" : "") << outputs[i] << "\n";
    }
    return combine(work);
}

int cmd_project(const std::string& path, const std::string& w_text) {
    ReactionNetwork net = load(path);
    RationalVector w = parse_vector(w_text, net.species_count());
    SingleSpeciesNetwork ssn = project(net, w);
    std::cout << "w = " << to_string(w) << "\n";
    std::cout << "reaction  source  target\n";
    for (std::size_t i = 0; i < ssn.reactions.size(); ++i) {
        const auto& a = ssn.reactions[i];
        std::cout << "R" << i + 1 << "  " << to_string(a.source) << "  " << to_string(a.target)
                  << (a.source == a.target ? "  (self-loop)" : "") << "\n";
    }
    SingleSpeciesNetwork proper = proper_subnetwork(ssn);
    std::cout << "proper subnetwork (" << proper.reactions.size() << " reactions):\n";
    for (const auto& a : proper.reactions) std::cout << "  " << to_string(a.source) << " -> " << to_string(a.target) << "\n";
    std::cout << "projected network: " << to_string(classify_single_species(ssn)) << "\n";
    return ok;
}

int cmd_generate(const std::string& family, int n, int np, int nt, int nc, const std::string& out_path) {
    std::optional<FamilySpec> spec = parse_family_spec(family);
    if (!spec) {
        std::cerr << "unknown family '" << family << "'\n";
        return input_error;
    }
    if (family.find('(') == std::string::npos) {
        if (spec->family == Family::Processive || spec->family == Family::Distributive) spec->n = n;
        if (spec->family == Family::ClockGeneral) {
            spec->np = np;
            spec->nt = nt;
            spec->nc = nc;
        }
    }
    ReactionNetwork net = generate(*spec);
    std::string text = serialize_network(net);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return input_error;
        }
        out << text;
    }
    return ok;
}

int cmd_export_lp(const std::string& path, const std::string& mode_text, const Rational& epsilon, bool minus_strict_rows,
                  bool canonical, const std::string& out_path) {
    std::optional<Mode> mode = parse_mode(mode_text);
    if (!mode) {
        std::cerr << "unknown mode '" << mode_text << "'\n";
        return input_error;
    }
    ReactionNetwork net = load(path);
    EndoMilpConfig cfg;
    cfg.epsilon = epsilon;
    cfg.mode = *mode;
    cfg.minus_strict_rows = minus_strict_rows;
    cfg.canonical = canonical;
    EndoModel em = build_endo_model(build_matrices(net), cfg);
    std::string text = export_lp(em.model, net.name() + "_" + to_string(*mode));
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return input_error;
        }
        out << text;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify chemical reaction networks as lower endotactic, endotactic or strongly endotactic"};
    app.require_subcommand(1);

    std::string epsilon_text = "1/10";
    std::size_t node_limit = 0;
    std::string oracle_text = "off";
    bool json = false;
    unsigned jobs = 1;
    bool no_refine = false, no_strict = false, minus_strict_rows = false, no_canonical = false, probing = false;
    std::vector<std::string> paths;
    auto* classify_cmd = app.add_subcommand("classify", "Classify one or more .crn files");
    classify_cmd->add_option("files", paths, ".crn files")->required();
    classify_cmd->add_option("--epsilon", epsilon_text, "Strictness margin, rational in (0, 1]");
    classify_cmd->add_option("--node-limit", node_limit, "Branch-and-bound node limit per solve")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_option("--oracle", oracle_text, "off, verify or force")
        ->check(CLI::IsMember({"off", "verify", "force"}));
    classify_cmd->add_flag("--json", json, "JSON report");
    classify_cmd->add_option("--jobs", jobs, "Networks classified in parallel")->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--no-refine", no_refine, "Skip the epsilon/100 re-solve");
    classify_cmd->add_flag("--no-strict", no_strict, "Trust the weakly reversible one-linkage-class shortcut");
    classify_cmd->add_flag("--minus-strict-rows", minus_strict_rows, "Key the strict-source rows on R- instead of R0 (misses witnesses)");
    classify_cmd->add_flag("--no-canonical", no_canonical, "Do not restrict to canonical witnesses");
    classify_cmd->add_flag("--probing", probing, "Probe binaries at the root node");

    std::string project_path, w_text;
    auto* project_cmd = app.add_subcommand("project", "Print the w-projected network");
    project_cmd->add_option("file", project_path)->required();
    project_cmd->add_option("--w", w_text, "Direction, e.g. 1,0 or \"1/2 -1\"")->required();

    std::string family, gen_out;
    int n = 1, np = 0, nt = 0, nc = 0;
    auto* generate_cmd = app.add_subcommand("generate", "Write a named network family as .crn");
    generate_cmd->add_option("--family", family, "Family name or spec such as processive(3)")->required();
    generate_cmd->add_option("--n", n, "Sites for processive / distributive");
    generate_cmd->add_option("--np", np, "P chain length for clock_general");
    generate_cmd->add_option("--nt", nt, "T chain length for clock_general");
    generate_cmd->add_option("--nc", nc, "Complex chain length for clock_general");
    generate_cmd->add_option("-o,--output", gen_out, "Output path (default stdout)");

    std::string lp_path, lp_mode = "Endotactic", lp_out, lp_epsilon = "1/10";
    bool lp_minus_rows = false, lp_no_canonical = false;
    auto* lp_cmd = app.add_subcommand("export-lp", "Write the MILP for one mode in LP format");
    lp_cmd->add_option("file", lp_path)->required();
    lp_cmd->add_option("--mode", lp_mode, "Endotactic (E), LowerEndotactic (LE) or StronglyEndotactic (SE)");
    lp_cmd->add_option("--epsilon", lp_epsilon, "Strictness margin");
    lp_cmd->add_flag("--minus-strict-rows", lp_minus_rows, "Key the strict-source rows on R- instead of R0 (misses witnesses)");
    lp_cmd->add_flag("--no-canonical", lp_no_canonical, "Omit the canonical-witness rows");
    lp_cmd->add_option("-o,--output", lp_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*classify_cmd) {
            ClassifyOptions options;
            options.epsilon = parse_epsilon(epsilon_text);
            if (const char* env = std::getenv("ENDO_NODE_LIMIT")) {
                try {
                    options.node_limit = std::stoull(env);
                } catch (const std::exception&) {
                    throw CLI::ValidationError("ENDO_NODE_LIMIT", "not a number");
                }
                if (options.node_limit == 0) throw CLI::ValidationError("ENDO_NODE_LIMIT", "must be at least 1");
            }
            if (node_limit > 0) options.node_limit = node_limit;
            options.oracle = *parse_oracle_mode(oracle_text);
            options.refine = !no_refine;
            options.strict = !no_strict;
            options.minus_strict_rows = minus_strict_rows;
            options.canonical = !no_canonical;
            options.probing = probing;
            return cmd_classify(paths, options, json, jobs);
        }
        if (*project_cmd) return cmd_project(project_path, w_text);
        if (*generate_cmd) return cmd_generate(family, n, np, nt, nc, gen_out);
        if (*lp_cmd) return cmd_export_lp(lp_path, lp_mode, parse_epsilon(lp_epsilon), lp_minus_rows, !lp_no_canonical, lp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}
