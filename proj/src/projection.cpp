#include "endo/projection.hpp"

#include <algorithm>
#include <optional>

namespace endo {

const char* to_string(SingleSpeciesClass c) {
    switch (c) {
        case SingleSpeciesClass::NotEndotactic: return "NotEndotactic";
        case SingleSpeciesClass::EndotacticOnly: return "EndotacticOnly";
        case SingleSpeciesClass::StronglyEndotactic: return "StronglyEndotactic";
    }
    return "?";
}

SingleSpeciesNetwork project(const ReactionNetwork& net, const RationalVector& w) {
    if (w.size() != net.species_count()) {
        throw NetworkError("projection vector has length " + std::to_string(w.size()) + ", expected " +
                           std::to_string(net.species_count()));
    }
    auto value = [&](const Complex& c) {
        Rational v = 0;
        for (const auto& [idx, coeff] : c.coefficients()) v += w[idx] * coeff;
        return v;
    };
    SingleSpeciesNetwork out;
    out.reactions.reserve(net.reaction_count());
    for (const auto& rx : net.reactions()) out.reactions.push_back({value(rx.source), value(rx.target)});
    return out;
}

SingleSpeciesNetwork proper_subnetwork(const SingleSpeciesNetwork& ssn) {
    SingleSpeciesNetwork out;
    for (const auto& a : ssn.reactions) {
        if (a.source != a.target) out.reactions.push_back(a);
    }
    return out;
}

SingleSpeciesNetwork mirror(const SingleSpeciesNetwork& ssn) {
    SingleSpeciesNetwork out;
    out.reactions.reserve(ssn.reactions.size());
    for (const auto& a : ssn.reactions) out.reactions.push_back({-a.source, -a.target});
    return out;
}

std::pair<Rational, Rational> extreme_sources(const SingleSpeciesNetwork& ssn) {
    if (ssn.empty()) throw NetworkError("extreme sources of an empty network");
    Rational lo = ssn.reactions.front().source;
    Rational hi = lo;
    for (const auto& a : ssn.reactions) {
        if (a.source < lo) lo = a.source;
        if (a.source > hi) hi = a.source;
    }
    return {lo, hi};
}

bool sweep_from_left_holds(const SingleSpeciesNetwork& ssn, bool strong) {
    std::optional<Rational> first_left;   // smallest source of a left-pointing reaction
    std::optional<Rational> first_right;  // smallest source of a right-pointing reaction
    for (const auto& a : ssn.reactions) {
        if (a.target < a.source) {
            if (!first_left || a.source < *first_left) first_left = a.source;
        } else if (a.target > a.source) {
            if (!first_right || a.source < *first_right) first_right = a.source;
        }
    }
    if (!first_left) return true;
    if (!first_right || !(*first_right < *first_left)) return false;
    if (!strong) return true;
    return *first_right == extreme_sources(ssn).first;
}

SingleSpeciesClass classify_single_species(const SingleSpeciesNetwork& ssn) {
    SingleSpeciesNetwork mirrored = mirror(ssn);
    if (!sweep_from_left_holds(ssn, false) || !sweep_from_left_holds(mirrored, false)) {
        return SingleSpeciesClass::NotEndotactic;
    }
    if (sweep_from_left_holds(ssn, true) && sweep_from_left_holds(mirrored, true)) {
        return SingleSpeciesClass::StronglyEndotactic;
    }
    return SingleSpeciesClass::EndotacticOnly;
}

}  // namespace endo
