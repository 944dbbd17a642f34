#pragma once

#include "endo/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endo {

enum class Family {
    Toy,
    LotkaVolterra,
    Fig1A,
    Fig1B,
    Fig1C,
    Fig1D,
    FutileCycle,
    Processive,
    Distributive,
    ClockReduced,
    ClockBasic,
    ClockGeneral,
};

struct FamilySpec {
    Family family = Family::Toy;
    int n = 1;   // processive / distributive sites
    int np = 0;  // clock_general chain lengths
    int nt = 0;
    int nc = 0;
};

/// Names used on the command line: toy, lotka_volterra, fig1_a .. fig1_d,
/// futile_cycle, processive, distributive, clock_reduced, clock_basic,
/// clock_general.
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
std::vector<Family> all_families();

/// "processive(3)", "clock_general(2,2,1)", or the bare family name.
std::string describe(const FamilySpec& spec);

/// Accepts the forms produced by describe().
std::optional<FamilySpec> parse_family_spec(const std::string& text);

/// Throws NetworkError on invalid parameters (n < 1, negative chain length).
///
/// Species and reaction order:
///  - futile_cycle: S0 E ES0 S1 F FS1; k1 k2 k3 then l1 l2 l3.
///  - processive(n): ES0..ES{n-1} FS1..FSn S0 Sn E F; the k chain from
///    S0 + E up to Sn + E, then l1 = FS1 -> S0 + F and the l chain upward.
///  - distributive(n): ES{i} stands for S_iE and FS{i} for S_iF; species
///    ES0..ES{n-1} FS1..FSn S0..Sn E F; k1..k3n then l1..l3n.
///  - clocks: P chain, T chain, complex chain; the displayed reactions,
///    then linear degradation of every species in index order, skipping a
///    degradation that is already displayed. clock_general includes the
///    inflows 0 -> P0 and 0 -> T0 as in the reduced clock.
ReactionNetwork generate(const FamilySpec& spec);

/// Closed-form not-endotactic direction for processive(n) (ES, FS, Sn and E
/// at 1, S0 and F at 0); pivot reaction index 2n+1 (zero based).
RationalVector processive_witness(int n);
std::size_t processive_pivot(int n);

/// Closed-form direction for distributive(n) (ES{i-1}, FS{i}, S{i} at i,
/// E at 1, F at 0); pivot reaction index 3n+2 (zero based).
RationalVector distributive_witness(int n);
std::size_t distributive_pivot(int n);

}  // namespace endo
