// Test-only helpers: random networks and a direction-grid checker written
// from the definitions, independent of the projection and oracle modules.
#pragma once

#include "endo/network.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using endo::Complex;
using endo::Rational;
using endo::RationalVector;
using endo::Reaction;
using endo::ReactionNetwork;

inline Complex random_complex(std::mt19937_64& rng, std::size_t m, int max_coeff) {
    std::uniform_int_distribution<int> coeff(0, max_coeff);
    std::uniform_int_distribution<int> zero_bias(0, 2);
    std::map<std::size_t, Rational> c;
    for (std::size_t k = 0; k < m; ++k) {
        if (zero_bias(rng) == 0) continue;
        int v = coeff(rng);
        if (v) c[k] = v;
    }
    return Complex(std::move(c));
}

inline std::vector<std::string> species_names(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < m; ++k) names.push_back("X" + std::to_string(k + 1));
    return names;
}

/// m in [1, max_m], r in [1, max_r], integer coefficients in [0, max_coeff],
/// no self-loops.
inline ReactionNetwork random_network(std::mt19937_64& rng, std::size_t max_m, std::size_t max_r, int max_coeff) {
    std::uniform_int_distribution<std::size_t> pick_m(1, max_m), pick_r(1, max_r);
    const std::size_t m = pick_m(rng), r = pick_r(rng);
    std::vector<Reaction> rx;
    while (rx.size() < r) {
        Complex a = random_complex(rng, m, max_coeff), b = random_complex(rng, m, max_coeff);
        if (a == b) continue;
        rx.push_back({a, b});
    }
    return ReactionNetwork(species_names(m), std::move(rx));
}

/// Union of directed cycles over random distinct complexes, at most max_r
/// reactions, no repeated reaction.
inline ReactionNetwork random_weakly_reversible(std::mt19937_64& rng, std::size_t max_m, std::size_t max_r,
                                                int max_coeff) {
    std::uniform_int_distribution<std::size_t> pick_m(1, max_m);
    const std::size_t m = pick_m(rng);
    std::vector<Complex> pool;
    std::uniform_int_distribution<std::size_t> pool_size(2, 6);
    const std::size_t want = pool_size(rng);
    for (int tries = 0; pool.size() < want && tries < 200; ++tries) {
        Complex c = random_complex(rng, m, max_coeff);
        if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
    }
    if (pool.size() < 2) pool = {Complex(), Complex({{0, Rational(1)}})};
    std::vector<Reaction> rx;
    std::set<std::pair<Complex, Complex>> seen;
    std::uniform_int_distribution<std::size_t> len(2, std::min<std::size_t>(4, pool.size()));
    for (int cycles = 0; cycles < 4; ++cycles) {
        std::vector<std::size_t> order(pool.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(len(rng));
        std::vector<Reaction> cycle;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Complex& a = pool[order[i]];
            const Complex& b = pool[order[(i + 1) % order.size()]];
            if (!seen.count({a, b})) cycle.push_back({a, b});
        }
        if (rx.size() + cycle.size() > max_r) break;
        for (auto& c : cycle) {
            seen.insert({c.source, c.target});
            rx.push_back(std::move(c));
        }
    }
    return ReactionNetwork(species_names(m), std::move(rx));
}

inline Rational value(const Complex& c, const RationalVector& w) {
    Rational v = 0;
    for (const auto& [k, x] : c.coefficients()) v += w[k] * x;
    return v;
}

/// Straight from the definition along w: if some reaction decreases w.x,
/// some reaction from a strictly smaller w-source must increase it; for the
/// strong form that reaction must sit at the smallest source of all.
inline bool definition_holds(const ReactionNetwork& net, const RationalVector& w, bool strong) {
    std::vector<Rational> src, dst;
    for (const auto& rx : net.reactions()) {
        src.push_back(value(rx.source, w));
        dst.push_back(value(rx.target, w));
    }
    const Rational lowest = *std::min_element(src.begin(), src.end());
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!(dst[i] < src[i])) continue;
        bool rescued = false;
        for (std::size_t j = 0; j < src.size(); ++j) {
            if (dst[j] > src[j] && src[j] < src[i] && (!strong || src[j] == lowest)) rescued = true;
        }
        if (!rescued) return false;
    }
    return true;
}

struct GridVerdict {
    bool strong = true, endo = true, lower = true;
};

/// Every integer w in [-k, k]^m. Complete for m <= 2 once k is at least
/// twice the largest entry of the reaction vectors and source differences.
inline GridVerdict grid_classify(const ReactionNetwork& net, int k) {
    const std::size_t m = net.species_count();
    GridVerdict out;
    std::vector<int> w(m, -k);
    for (;;) {
        RationalVector rw(w.begin(), w.end());
        bool nonzero = std::any_of(w.begin(), w.end(), [](int x) { return x != 0; });
        if (nonzero) {
            bool weak = definition_holds(net, rw, false);
            out.endo = out.endo && weak;
            out.strong = out.strong && definition_holds(net, rw, true);
            if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; })) out.lower = out.lower && weak;
        }
        std::size_t i = 0;
        while (i < m && w[i] == k) w[i++] = -k;
        if (i == m) break;
        ++w[i];
    }
    return out;
}

}  // namespace testsupport
