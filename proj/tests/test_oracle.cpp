#include "doctest.h"

#include "endo/families.hpp"
#include "endo/netparse.hpp"
#include "endo/oracle.hpp"
#include "support.hpp"

#include <set>

using namespace endo;

namespace {

// R- = {pivot}, R0 = reactions whose w-source lies strictly below the pivot's.
WitnessCertificate pivot_certificate(const ReactionNetwork& net, const RationalVector& w, std::size_t pivot, Mode mode) {
    WitnessCertificate cert;
    cert.mode = mode;
    cert.w = w;
    Rational level = testsupport::value(net.reactions()[pivot].source, w);
    for (std::size_t i = 0; i < net.reaction_count(); ++i) {
        if (i == pivot) cert.r_minus.push_back(i);
        else if (testsupport::value(net.reactions()[i].source, w) < level) cert.r_zero.push_back(i);
        else cert.r_plus.push_back(i);
    }
    return cert;
}

bool holds(const OracleVerdict& v) { return v.holds; }

}  // namespace

TEST_CASE("published witnesses verify") {
    ReactionNetwork fc = generate({Family::FutileCycle});
    WitnessCertificate cert{Mode::Endotactic, {Rational(99, 10), Rational(1, 10), 10, 0, 10, 10}, {}, {2}, {0, 1, 3, 4, 5}};
    CHECK(verify_witness(fc, cert));
    cert.mode = Mode::LowerEndotactic;
    CHECK(verify_witness(fc, cert));

    for (int n = 1; n <= 4; ++n) {
        ReactionNetwork p = generate({Family::Processive, n});
        CHECK(verify_witness(p, pivot_certificate(p, processive_witness(n), processive_pivot(n), Mode::Endotactic)));
        ReactionNetwork d = generate({Family::Distributive, n});
        CHECK(verify_witness(d, pivot_certificate(d, distributive_witness(n), distributive_pivot(n), Mode::Endotactic)));
    }
}

TEST_CASE("witness checks reject bad certificates") {
    ReactionNetwork fc = generate({Family::FutileCycle});
    WitnessCertificate zero{Mode::Endotactic, RationalVector(6), {}, {2}, {0, 1, 3, 4, 5}};
    CHECK_FALSE(verify_witness(fc, zero));
    CHECK(check_witness(fc, zero).failure == "w is zero");

    WitnessCertificate overlap{Mode::Endotactic, RationalVector(6, 1), {2}, {2}, {0, 1, 3, 4, 5}};
    CHECK_THROWS_AS(verify_witness(fc, overlap), WitnessError);
    WitnessCertificate missing{Mode::Endotactic, RationalVector(6, 1), {}, {2}, {0, 1}};
    CHECK_THROWS_AS(verify_witness(fc, missing), WitnessError);
    WitnessCertificate short_w{Mode::Endotactic, RationalVector(2, 1), {}, {2}, {0, 1, 3, 4, 5}};
    CHECK_THROWS_AS(verify_witness(fc, short_w), WitnessError);

    WitnessCertificate empty_minus{Mode::Endotactic, RationalVector(6, 1), {}, {}, {0, 1, 2, 3, 4, 5}};
    CHECK_FALSE(verify_witness(fc, empty_minus));
    // Strictness is exact: w.gamma = 0 is not negative.
    ReactionNetwork pair = parse_network("X1 -> X2\nX2 -> X1");
    WitnessCertificate flat{Mode::Endotactic, {1, 1}, {}, {0}, {1}};
    CHECK_FALSE(verify_witness(pair, flat));
}

TEST_CASE("positive scaling keeps certificates valid") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        ReactionNetwork net = testsupport::random_network(rng, 3, 4, 2);
        for (Mode mode : {Mode::Endotactic, Mode::LowerEndotactic, Mode::StronglyEndotactic}) {
            OracleVerdict v = brute_force_classify(net, mode);
            if (!v.witness) continue;
            ++checked;
            for (Rational lambda : {Rational(1, 7), Rational(3), Rational(1000)}) {
                WitnessCertificate scaled = *v.witness;
                for (auto& x : scaled.w) x *= lambda;
                CHECK(verify_witness(net, scaled));
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("brute force oracle examples") {
    OracleVerdict a = brute_force_classify(generate({Family::Fig1A}), Mode::Endotactic);
    CHECK_FALSE(a.holds);
    REQUIRE(a.witness);
    CHECK(a.witness->verified);

    ReactionNetwork pair = parse_network("X1 <-> X2");
    CHECK(brute_force_classify(pair, Mode::Endotactic).holds);
    CHECK(brute_force_classify(pair, Mode::StronglyEndotactic).holds);

    // Lotka-Volterra fails along a coordinate-type direction.
    ReactionNetwork lv = generate({Family::LotkaVolterra});
    OracleVerdict v = brute_force_classify(lv, Mode::Endotactic);
    CHECK_FALSE(v.holds);
    CHECK(testsupport::definition_holds(lv, RationalVector{1, 0}, false) == false);

    OracleCaps caps;
    caps.max_reactions = 3;
    CHECK_THROWS_AS(brute_force_classify(generate({Family::Fig1A}), Mode::Endotactic, caps), OracleCapError);
    caps = {};
    caps.max_species = 1;
    CHECK_THROWS_AS(brute_force_classify(lv, Mode::Endotactic, caps), OracleCapError);
}

TEST_CASE("sweep oracle examples") {
    ReactionNetwork b = generate({Family::Fig1B});
    DirectionSet dirs = build_direction_set(b);
    CHECK(dirs.complete);
    RationalVector diagonal{-1, -1};
    CHECK(std::find(dirs.directions.begin(), dirs.directions.end(), diagonal) != dirs.directions.end());
    CHECK_FALSE(testsupport::definition_holds(b, diagonal, false));
    auto vb = sweep_classify(b, dirs);
    CHECK_FALSE(vb[1].holds);
    CHECK(vb[2].holds);

    auto vd = sweep_classify(generate({Family::Fig1D}));
    CHECK(std::all_of(vd.begin(), vd.end(), holds));

    ReactionNetwork inflow = parse_network("0 -> X1");
    auto vi = sweep_classify(inflow);
    CHECK_FALSE(vi[1].holds);
    REQUIRE(vi[1].witness);
    CHECK(vi[1].witness->w == RationalVector{-1});
    CHECK_FALSE(brute_force_classify(inflow, Mode::Endotactic).holds);
}

TEST_CASE("direction sets are closed under negation") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        ReactionNetwork net = testsupport::random_network(rng, 4, 5, 3);
        DirectionSet d = build_direction_set(net, 200);
        CHECK(d.complete == (net.species_count() <= 3));
        std::set<RationalVector> all(d.directions.begin(), d.directions.end());
        for (const auto& w : d.directions) {
            CHECK_FALSE(is_zero(w));
            RationalVector neg = w;
            for (auto& x : neg) x = -x;
            CHECK(all.count(neg) == 1);
        }
    }
}

TEST_CASE("oracles agree with each other and with the direction grid") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 150; ++t) {
        ReactionNetwork net = testsupport::random_network(rng, 3, 5, 3);
        auto sweep = sweep_classify(net);
        Mode order[] = {Mode::StronglyEndotactic, Mode::Endotactic, Mode::LowerEndotactic};
        for (int k = 0; k < 3; ++k) {
            OracleVerdict brute = brute_force_classify(net, order[k]);
            CAPTURE(serialize_network(net));
            CAPTURE(to_string(order[k]));
            CHECK(brute.holds == sweep[k].holds);
            if (sweep[k].witness) CHECK(verify_witness(net, *sweep[k].witness));
        }
        if (net.species_count() <= 2) {
            // Entries are at most 3, so a grid of radius 6 meets every face.
            testsupport::GridVerdict g = testsupport::grid_classify(net, 6);
            CHECK(g.strong == sweep[0].holds);
            CHECK(g.endo == sweep[1].holds);
            CHECK(g.lower == sweep[2].holds);
        }
    }
}

TEST_CASE("partition decoding") {
    PartitionSets p = decode_partition(1 + 3 * 2, 3);
    CHECK(p.r_minus == std::vector<std::size_t>{0});
    CHECK(p.r_plus == std::vector<std::size_t>{1});
    CHECK(p.r_zero == std::vector<std::size_t>{2});
}
