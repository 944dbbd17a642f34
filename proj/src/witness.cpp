#include "endo/witness.hpp"

#include "endo/projection.hpp"

#include <algorithm>

namespace endo {

namespace {

std::string reaction_label(std::size_t i) { return "R" + std::to_string(i + 1); }

}  // namespace

WitnessCheck check_witness(const ReactionNetwork& net, const WitnessCertificate& cert) {
    const std::size_t r = net.reaction_count();
    if (cert.w.size() != net.species_count()) throw WitnessError("witness direction has the wrong length");
    std::vector<int> part(r, -1);  // 0 = R0, 1 = R-, 2 = R+
    auto place = [&](const std::vector<std::size_t>& set, int tag) {
        for (std::size_t i : set) {
            if (i >= r) throw WitnessError("witness names reaction " + std::to_string(i + 1) + " of " + std::to_string(r));
            if (part[i] != -1) throw WitnessError("reaction " + std::to_string(i + 1) + " is in two witness sets");
            part[i] = tag;
        }
    };
    place(cert.r_zero, 0);
    place(cert.r_minus, 1);
    place(cert.r_plus, 2);
    if (std::find(part.begin(), part.end(), -1) != part.end()) throw WitnessError("witness sets do not cover every reaction");

    WitnessCheck out;
    auto fail = [&](std::string why) {
        out.failure = std::move(why);
        return out;
    };
    if (is_zero(cert.w)) return fail("w is zero");
    if (cert.r_minus.empty()) return fail("R- is empty");
    if (cert.mode == Mode::LowerEndotactic) {
        for (const auto& v : cert.w) {
            if (sgn(v) < 0) return fail("w has a negative entry");
        }
    }

    std::vector<Rational> flow(r), level(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Reaction& rx = net.reactions()[i];
        Rational src = 0, tgt = 0;
        for (const auto& [k, c] : rx.source.coefficients()) src += cert.w[k] * c;
        for (const auto& [k, c] : rx.target.coefficients()) tgt += cert.w[k] * c;
        level[i] = src;
        flow[i] = tgt - src;
    }
    for (std::size_t i : cert.r_zero) {
        if (sgn(flow[i]) != 0) return fail("w.gamma is nonzero on " + reaction_label(i) + " in R0");
    }
    for (std::size_t i : cert.r_minus) {
        if (sgn(flow[i]) >= 0) return fail("w.gamma is not negative on " + reaction_label(i) + " in R-");
    }
    auto minus_before_plus = [&]() -> bool {
        for (std::size_t i : cert.r_minus) {
            for (std::size_t j : cert.r_plus) {
                if (level[i] > level[j]) {
                    out.failure = "source of " + reaction_label(i) + " lies beyond source of " + reaction_label(j);
                    return false;
                }
            }
        }
        return true;
    };
    if (cert.mode != Mode::StronglyEndotactic || cert.r_zero.empty()) {
        if (!minus_before_plus()) return out;
    } else {
        for (std::size_t i : cert.r_zero) {
            for (std::size_t j = 0; j < r; ++j) {
                if (part[j] != 0 && !(level[i] < level[j])) {
                    return fail("source of " + reaction_label(i) + " in R0 is not strictly below " + reaction_label(j));
                }
            }
        }
    }
    out.ok = true;
    return out;
}

bool verify_witness(const ReactionNetwork& net, const WitnessCertificate& cert) { return check_witness(net, cert).ok; }

bool certificate_from_direction(const ReactionNetwork& net, const RationalVector& w, Mode mode,
                                WitnessCertificate& out) {
    SingleSpeciesNetwork ssn = project(net, w);
    const bool strong = mode == Mode::StronglyEndotactic;
    if (sweep_from_left_holds(ssn, strong)) return false;
    if (mode == Mode::LowerEndotactic) {
        for (const auto& v : w) {
            if (sgn(v) < 0) return false;
        }
    }
    const auto& arrows = ssn.reactions;
    const std::size_t r = arrows.size();
    Rational lowest = extreme_sources(ssn).first;

    out = WitnessCertificate{};
    out.mode = mode;
    out.w = w;
    // Pivot: a backward reaction with the smallest source.
    std::size_t pivot = r;
    for (std::size_t i = 0; i < r; ++i) {
        if (arrows[i].target < arrows[i].source && (pivot == r || arrows[i].source < arrows[pivot].source)) pivot = i;
    }
    if (pivot == r) return false;

    bool flat_bottom = true;  // every reaction at the lowest source is a self-loop
    for (const auto& a : arrows) {
        if (a.source == lowest && a.source != a.target) flat_bottom = false;
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (i == pivot) {
            out.r_minus.push_back(i);
        } else if (strong ? (flat_bottom && arrows[i].source == lowest) : arrows[i].source < arrows[pivot].source) {
            out.r_zero.push_back(i);
        } else {
            out.r_plus.push_back(i);
        }
    }
    out.verified = verify_witness(net, out);
    return out.verified;
}

}  // namespace endo
