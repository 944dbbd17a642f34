#pragma once

#include "endo/network.hpp"

#include <utility>
#include <vector>

namespace endo {

/// Network over a single species: every complex is a scalar. Self-loops and
/// repeated reactions are allowed.
struct SingleSpeciesNetwork {
    struct Arrow {
        Rational source;
        Rational target;
        friend bool operator==(const Arrow&, const Arrow&) = default;
    };
    std::vector<Arrow> reactions;

    bool empty() const { return reactions.empty(); }
    friend bool operator==(const SingleSpeciesNetwork&, const SingleSpeciesNetwork&) = default;
};

enum class SingleSpeciesClass { NotEndotactic, EndotacticOnly, StronglyEndotactic };

const char* to_string(SingleSpeciesClass c);

/// Maps every reaction y -> y' to w.y -> w.y'. Throws on dimension mismatch.
SingleSpeciesNetwork project(const ReactionNetwork& net, const RationalVector& w);

/// Drops self-loops (and with them sources that only carry self-loops).
SingleSpeciesNetwork proper_subnetwork(const SingleSpeciesNetwork& ssn);

/// Negates every scalar.
SingleSpeciesNetwork mirror(const SingleSpeciesNetwork& ssn);

/// One sweep direction, left to right: every reaction pointing left must be
/// preceded by a reaction from a strictly smaller source pointing right.
/// With `strong`, that reaction must come from the smallest source.
bool sweep_from_left_holds(const SingleSpeciesNetwork& ssn, bool strong);

/// Both sweep directions.
SingleSpeciesClass classify_single_species(const SingleSpeciesNetwork& ssn);

/// Smallest and largest source value. Requires a nonempty network.
std::pair<Rational, Rational> extreme_sources(const SingleSpeciesNetwork& ssn);

}  // namespace endo
