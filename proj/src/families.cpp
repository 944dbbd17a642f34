#include "endo/families.hpp"

#include "endo/netparse.hpp"

#include <regex>
#include <sstream>

namespace endo {

namespace {

struct NameEntry {
    Family family;
    const char* name;
};

constexpr NameEntry names[] = {
    {Family::Toy, "toy"},
    {Family::LotkaVolterra, "lotka_volterra"},
    {Family::Fig1A, "fig1_a"},
    {Family::Fig1B, "fig1_b"},
    {Family::Fig1C, "fig1_c"},
    {Family::Fig1D, "fig1_d"},
    {Family::FutileCycle, "futile_cycle"},
    {Family::Processive, "processive"},
    {Family::Distributive, "distributive"},
    {Family::ClockReduced, "clock_reduced"},
    {Family::ClockBasic, "clock_basic"},
    {Family::ClockGeneral, "clock_general"},
};

// Builds the network text line by line; the species pragma fixes the order.
class Builder {
public:
    void species(const std::string& name) { species_.push_back(name); }
    void rx(const std::string& lhs, const std::string& rhs) { lines_.push_back(lhs + " -> " + rhs); }

    ReactionNetwork build(const std::string& name) const {
        std::ostringstream text;
        text << "# species:";
        for (const auto& s : species_) text << ' ' << s;
        text << '\n';
        for (const auto& l : lines_) text << l << '\n';
        ReactionNetwork net = parse_network(text.str());
        net.set_name(name);
        return net;
    }

private:
    std::vector<std::string> species_;
    std::vector<std::string> lines_;
};

std::string idx(const char* stem, int i) { return stem + std::to_string(i); }

ReactionNetwork fig1(Family f) {
    Builder b;
    b.species("X1");
    b.species("X2");
    b.rx("X2", f == Family::Fig1D ? "X1 + X2" : "0");
    b.rx("0", "X2");
    switch (f) {
        case Family::Fig1B: b.rx("X1 + X2", "2 X1"); break;
        case Family::Fig1C: b.rx("X1 + X2", "X1"); break;
        default: b.rx("X1 + X2", "0"); break;  // A and D
    }
    b.rx("X1", "2 X1");
    b.rx("2 X1", "X1 + X2");
    return b.build(family_name(f));
}

ReactionNetwork processive(int n) {
    Builder b;
    for (int i = 0; i < n; ++i) b.species(idx("ES", i));
    for (int i = 1; i <= n; ++i) b.species(idx("FS", i));
    b.species("S0");
    b.species(idx("S", n));
    b.species("E");
    b.species("F");
    const std::string sn = idx("S", n);
    // k1 .. k_{2n+1}
    b.rx("S0 + E", "ES0");
    b.rx("ES0", "S0 + E");
    for (int i = 1; i < n; ++i) {
        b.rx(idx("ES", i - 1), idx("ES", i));
        b.rx(idx("ES", i), idx("ES", i - 1));
    }
    b.rx(idx("ES", n - 1), sn + " + E");
    // l1 .. l_{2n+1}
    b.rx("FS1", "S0 + F");
    for (int i = 1; i < n; ++i) {
        b.rx(idx("FS", i), idx("FS", i + 1));
        b.rx(idx("FS", i + 1), idx("FS", i));
    }
    b.rx(idx("FS", n), sn + " + F");
    b.rx(sn + " + F", idx("FS", n));
    return b.build("processive(" + std::to_string(n) + ")");
}

ReactionNetwork distributive(int n) {
    Builder b;
    for (int i = 0; i < n; ++i) b.species(idx("ES", i));
    for (int i = 1; i <= n; ++i) b.species(idx("FS", i));
    for (int i = 0; i <= n; ++i) b.species(idx("S", i));
    b.species("E");
    b.species("F");
    for (int i = 1; i <= n; ++i) {
        b.rx(idx("S", i - 1) + " + E", idx("ES", i - 1));
        b.rx(idx("ES", i - 1), idx("S", i - 1) + " + E");
        b.rx(idx("ES", i - 1), idx("S", i) + " + E");
    }
    for (int i = 1; i <= n; ++i) {
        b.rx(idx("S", i) + " + F", idx("FS", i));
        b.rx(idx("FS", i), idx("S", i) + " + F");
        b.rx(idx("FS", i), idx("S", i - 1) + " + F");
    }
    return b.build("distributive(" + std::to_string(n) + ")");
}

// Degradation X -> 0 for every species not already degraded by a displayed reaction.
void degrade_all(Builder& b, const std::vector<std::string>& species, const std::string& already) {
    for (const auto& s : species) {
        if (s != already) b.rx(s, "0");
    }
}

// Complex chain is C0..C{nc}, or C, CN for the reduced clock.
ReactionNetwork clock(int np, int nt, int nc, bool reduced_names, const std::string& name) {
    Builder b;
    std::vector<std::string> species;
    for (int i = 0; i <= np; ++i) species.push_back(idx("P", i));
    for (int i = 0; i <= nt; ++i) species.push_back(idx("T", i));
    std::vector<std::string> cs;
    if (reduced_names) {
        cs = {"C", "CN"};
    } else {
        for (int i = 0; i <= nc; ++i) cs.push_back(idx("C", i));
    }
    for (const auto& c : cs) species.push_back(c);
    for (const auto& s : species) b.species(s);

    b.rx(idx("P", np) + " + " + idx("T", nt), cs.front());
    b.rx(cs.front(), idx("P", np) + " + " + idx("T", nt));
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        b.rx(cs[i], cs[i + 1]);
        b.rx(cs[i + 1], cs[i]);
    }
    b.rx(cs.back(), "0");
    b.rx("0", "P0");
    b.rx("0", "T0");
    for (int i = 0; i < np; ++i) {
        b.rx(idx("P", i), idx("P", i + 1));
        b.rx(idx("P", i + 1), idx("P", i));
    }
    for (int i = 0; i < nt; ++i) {
        b.rx(idx("T", i), idx("T", i + 1));
        b.rx(idx("T", i + 1), idx("T", i));
    }
    degrade_all(b, species, cs.back());
    return b.build(name);
}

ReactionNetwork clock_basic() {
    Builder b;
    for (const char* s : {"P", "T", "C"}) b.species(s);
    b.rx("P + T", "C");
    b.rx("C", "P + T");
    b.rx("C", "0");
    b.rx("0", "P");
    b.rx("P", "0");
    b.rx("0", "T");
    b.rx("T", "0");
    return b.build("clock_basic");
}

}  // namespace

std::string family_name(Family f) {
    for (const auto& e : names) {
        if (e.family == f) return e.name;
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    for (const auto& e : names) {
        if (name == e.name) return e.family;
    }
    return std::nullopt;
}

std::vector<Family> all_families() {
    std::vector<Family> out;
    for (const auto& e : names) out.push_back(e.family);
    return out;
}

std::string describe(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Processive:
        case Family::Distributive:
            return family_name(spec.family) + "(" + std::to_string(spec.n) + ")";
        case Family::ClockGeneral:
            return family_name(spec.family) + "(" + std::to_string(spec.np) + "," + std::to_string(spec.nt) + "," +
                   std::to_string(spec.nc) + ")";
        default:
            return family_name(spec.family);
    }
}

std::optional<FamilySpec> parse_family_spec(const std::string& text) {
    static const std::regex form(R"(\s*([a-z0-9_]+)\s*(?:\(\s*(\d+)\s*(?:,\s*(\d+)\s*,\s*(\d+)\s*)?\))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, form)) return std::nullopt;
    auto family = parse_family(m[1]);
    if (!family) return std::nullopt;
    FamilySpec spec;
    spec.family = *family;
    bool one = m[2].matched && !m[3].matched;
    bool three = m[3].matched;
    switch (*family) {
        case Family::Processive:
        case Family::Distributive:
            if (three) return std::nullopt;
            if (one) spec.n = std::stoi(m[2]);
            break;
        case Family::ClockGeneral:
            if (one) return std::nullopt;
            if (three) {
                spec.np = std::stoi(m[2]);
                spec.nt = std::stoi(m[3]);
                spec.nc = std::stoi(m[4]);
            }
            break;
        default:
            if (m[2].matched) return std::nullopt;
    }
    return spec;
}

ReactionNetwork generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Toy: {
            Builder b;
            for (const char* s : {"X1", "X2", "X3"}) b.species(s);
            b.rx("X1", "2 X2");
            b.rx("2 X2", "X1");
            b.rx("2 X2", "X2 + X3");
            b.rx("X2 + X3", "X1");
            return b.build("toy");
        }
        case Family::LotkaVolterra: {
            Builder b;
            b.species("X");
            b.species("Y");
            b.rx("X", "2 X");
            b.rx("X + Y", "2 Y");
            b.rx("Y", "0");
            return b.build("lotka_volterra");
        }
        case Family::Fig1A:
        case Family::Fig1B:
        case Family::Fig1C:
        case Family::Fig1D:
            return fig1(spec.family);
        case Family::FutileCycle: {
            Builder b;
            for (const char* s : {"S0", "E", "ES0", "S1", "F", "FS1"}) b.species(s);
            b.rx("S0 + E", "ES0");
            b.rx("ES0", "S0 + E");
            b.rx("ES0", "S1 + E");
            b.rx("S1 + F", "FS1");
            b.rx("FS1", "S1 + F");
            b.rx("FS1", "S0 + F");
            return b.build("futile_cycle");
        }
        case Family::Processive:
            if (spec.n < 1) throw NetworkError("processive needs n >= 1");
            return processive(spec.n);
        case Family::Distributive:
            if (spec.n < 1) throw NetworkError("distributive needs n >= 1");
            return distributive(spec.n);
        case Family::ClockReduced:
            return clock(2, 2, 1, true, "clock_reduced");
        case Family::ClockBasic:
            return clock_basic();
        case Family::ClockGeneral:
            if (spec.np < 0 || spec.nt < 0 || spec.nc < 0) throw NetworkError("clock_general needs nP, nT, nC >= 0");
            return clock(spec.np, spec.nt, spec.nc, false, describe(spec));
    }
    throw NetworkError("unknown family");
}

RationalVector processive_witness(int n) {
    // ES0..ES{n-1}, FS1..FSn, S0, Sn, E, F
    RationalVector w(2 * n + 4, 1);
    w[2 * n] = 0;
    w[2 * n + 3] = 0;
    return w;
}

std::size_t processive_pivot(int n) { return static_cast<std::size_t>(2 * n + 1); }

RationalVector distributive_witness(int n) {
    // ES0..ES{n-1}, FS1..FSn, S0..Sn, E, F
    RationalVector w(3 * n + 3);
    for (int i = 1; i <= n; ++i) {
        w[i - 1] = i;
        w[n + i - 1] = i;
    }
    for (int i = 0; i <= n; ++i) w[2 * n + i] = i;
    w[3 * n + 1] = 1;
    w[3 * n + 2] = 0;
    return w;
}

std::size_t distributive_pivot(int n) { return static_cast<std::size_t>(3 * n + 2); }

}  // namespace endo
