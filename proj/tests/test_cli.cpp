#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is folded into out.
Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" ENDO_CLI "\" " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path workdir() {
    fs::path dir = fs::temp_directory_path() / "endoclass_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string generated(const std::string& family) {
    fs::path out = workdir() / (family + ".crn");
    Run r = run("generate --family '" + family + "' -o '" + out.string() + "'");
    REQUIRE(r.code == 0);
    return out.string();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t c = 0;
    for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
    return c;
}

std::string write(const std::string& name, const std::string& text) {
    fs::path p = workdir() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("classify exit codes") {
    Run d = run("classify '" + generated("fig1_d") + "'");
    CHECK(d.code == 0);
    CHECK(d.out.find("level: StronglyEndotactic") != std::string::npos);

    Run bad = run("classify '" + write("bad.crn", "A -> B\nA -> 2 $\n") + "'");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("line 2") != std::string::npos);

    Run fc = run("classify --oracle verify '" + generated("futile_cycle") + "'");
    CHECK(fc.code == 0);
    CHECK(fc.out.find("oracle (brute_force+sweep): agrees") != std::string::npos);

    Run limited = run("classify '" + generated("clock_reduced") + "'", "ENDO_NODE_LIMIT=1");
    CHECK(limited.code == 2);
    CHECK(limited.out.find("level: Unknown") != std::string::npos);

    CHECK(run("classify --epsilon 2 '" + generated("toy") + "'").code == 1);
    CHECK(run("classify missing_file.crn").code == 1);
}

TEST_CASE("generate") {
    std::string p3 = generated("processive(3)");
    std::ifstream in(p3);
    std::stringstream text;
    text << in.rdbuf();
    std::string s = text.str();
    CHECK(count(s, "->") + count(s, "<->") == 14);
    Run a = run("generate --family fig1_a");
    CHECK(a.code == 0);
    CHECK(count(a.out, "->") + count(a.out, "<->") == 5);
    Run n3 = run("generate --family processive --n 3");
    CHECK(n3.out == s);
    CHECK(run("generate --family nope").code == 1);
    CHECK(run("generate --family processive --n 0").code == 1);
}

TEST_CASE("export-lp") {
    Run fc = run("export-lp '" + generated("futile_cycle") + "' --mode E");
    REQUIRE(fc.code == 0);
    std::size_t bounds = fc.out.find("Bounds\n"), binary = fc.out.find("Binary\n"), end = fc.out.rfind("End");
    std::size_t continuous = count(fc.out.substr(bounds, binary - bounds), "\n") - 1;
    std::size_t binaries = count(fc.out.substr(binary, end - binary), "\n") - 1;
    CHECK(continuous + binaries == 18);

    Run d = run("export-lp '" + generated("fig1_d") + "' --mode SE");
    CHECK(d.code == 0);
    CHECK(d.out.find(" Theta\n") != std::string::npos);

    CHECK(run("export-lp '" + write("empty.crn", "# nothing\n") + "'").code == 1);
}

TEST_CASE("project") {
    Run c = run("project '" + generated("fig1_c") + "' --w 1,0");
    CHECK(c.code == 0);
    CHECK(c.out.find("R4  1  2") != std::string::npos);
    CHECK(c.out.find("proper subnetwork (2 reactions)") != std::string::npos);
    CHECK(c.out.find("EndotacticOnly") != std::string::npos);
    Run z = run("project '" + generated("fig1_c") + "' --w 0,0");
    CHECK(count(z.out, "(self-loop)") == 5);
    CHECK(run("project '" + generated("fig1_c") + "' --w 1,0,0").code == 1);
}

TEST_CASE("parallel batches match sequential output") {
    std::string files;
    for (const char* f : {"fig1_a", "fig1_b", "fig1_c", "fig1_d", "toy", "lotka_volterra", "futile_cycle"}) {
        files += " '" + generated(f) + "'";
    }
    auto strip = [](const std::string& text) {
        auto j = nlohmann::json::parse(text);
        for (auto& r : j) r.erase("timings");
        return j.dump();
    };
    Run seq = run("classify --json --jobs 1" + files);
    Run par = run("classify --json --jobs 3" + files);
    REQUIRE(seq.code == 0);
    REQUIRE(par.code == 0);
    CHECK(strip(seq.out) == strip(par.out));
}
