#include "endo/oracle.hpp"

#include "endo/milp.hpp"
#include "endo/projection.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace endo {

namespace {

constexpr std::size_t subset_budget = 20000;

RationalVector difference(const RationalVector& a, const RationalVector& b) {
    RationalVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

RationalVector negated(RationalVector v) {
    for (auto& x : v) x = -x;
    return v;
}

RationalVector cross(const RationalVector& a, const RationalVector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

LinearTerms terms_of(const RationalVector& coeffs) {
    LinearTerms out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) != 0) out.add(k, coeffs[k]);
    }
    return out;
}

struct Dense {
    std::vector<RationalVector> source;
    std::vector<RationalVector> gamma;
};

Dense dense_columns(const ReactionNetwork& net) {
    Dense d;
    const std::size_t m = net.species_count();
    for (const auto& rx : net.reactions()) {
        RationalVector y = rx.source.dense(m);
        d.gamma.push_back(difference(rx.target.dense(m), y));
        d.source.push_back(std::move(y));
    }
    return d;
}

// Some w (|w_k| <= 1) meeting the partition with margin t > 0, if any.
std::optional<RationalVector> partition_witness(const Dense& d, std::size_t m, Mode mode, const PartitionSets& p) {
    const bool lower = mode == Mode::LowerEndotactic;
    const bool strict_zero = mode == Mode::StronglyEndotactic && !p.r_zero.empty();
    for (std::size_t i : p.r_minus) {
        if (is_zero(d.gamma[i])) return std::nullopt;
    }
    std::vector<bool> in_zero(d.source.size(), false);
    for (std::size_t i : p.r_zero) in_zero[i] = true;
    if (strict_zero) {
        for (std::size_t i : p.r_zero) {
            for (std::size_t j = 0; j < d.source.size(); ++j) {
                if (!in_zero[j] && d.source[i] == d.source[j]) return std::nullopt;
            }
        }
    }

    MilpModel lp;
    for (std::size_t k = 0; k < m; ++k) lp.add_continuous("w" + std::to_string(k + 1), lower ? 0 : -1, 1);
    const std::size_t t = lp.add_continuous("t", 0, 1);
    auto add = [&](std::string name, const RationalVector& coeffs, bool margin, Relation rel) {
        LinearTerms lhs = terms_of(coeffs);
        if (margin) lhs.add(t, 1);
        if (lhs.terms.empty()) return;
        lp.add_constraint({std::move(name), std::move(lhs), rel, 0});
    };
    for (std::size_t i : p.r_zero) add("z" + std::to_string(i), d.gamma[i], false, Relation::Equal);
    for (std::size_t i : p.r_minus) add("n" + std::to_string(i), d.gamma[i], true, Relation::LessEqual);
    if (strict_zero) {
        for (std::size_t i : p.r_zero) {
            for (std::size_t j = 0; j < d.source.size(); ++j) {
                if (!in_zero[j]) add("s", difference(d.source[i], d.source[j]), true, Relation::LessEqual);
            }
        }
    } else {
        for (std::size_t i : p.r_minus) {
            for (std::size_t j : p.r_plus) add("o", difference(d.source[i], d.source[j]), false, Relation::LessEqual);
        }
    }
    LinearTerms objective;
    objective.add(t, -1);
    lp.set_objective(std::move(objective));

    LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Optimal || sgn(res.objective) >= 0) return std::nullopt;
    return RationalVector(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(m));
}

// Vector spanning the null space of `rows` when it is one dimensional.
std::optional<RationalVector> null_ray(std::vector<RationalVector> rows, std::size_t m) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Rational inv = 1 / rows[rank][c];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == rank || sgn(rows[q][c]) == 0) continue;
            Rational f = rows[q][c];
            for (std::size_t k = 0; k < m; ++k) rows[q][k] -= f * rows[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank + 1 != m) return std::nullopt;
    std::size_t free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
    RationalVector v(m);
    v[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free_col];
    return v;
}

// Angular order in a plane given 2D coordinates.
struct PlaneRay {
    Rational x, y;
    RationalVector v;
};

int half(const PlaneRay& a) { return (sgn(a.y) < 0 || (sgn(a.y) == 0 && sgn(a.x) < 0)) ? 1 : 0; }

Rational cross2(const PlaneRay& a, const PlaneRay& b) { return a.x * b.y - a.y * b.x; }

// One vector strictly inside each angular sector between consecutive rays.
// `rotate(a)` turns a by a quarter turn in the positive sense.
template <class Rotate>
std::vector<RationalVector> sector_representatives(std::vector<PlaneRay> rays, Rotate rotate) {
    std::sort(rays.begin(), rays.end(), [](const PlaneRay& a, const PlaneRay& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return sgn(cross2(a, b)) > 0;
    });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const PlaneRay& a, const PlaneRay& b) {
                               return half(a) == half(b) && sgn(cross2(a, b)) == 0;
                           }),
               rays.end());
    std::vector<RationalVector> out;
    for (std::size_t k = 0; k < rays.size(); ++k) {
        const PlaneRay& a = rays[k];
        const PlaneRay& b = rays[(k + 1) % rays.size()];
        int turn = sgn(cross2(a, b));
        if (rays.size() > 1 && turn > 0) {
            RationalVector s(a.v.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.v[i] + b.v[i];
            out.push_back(std::move(s));
        } else {
            // Half turn or more: the quarter turn from a stays inside.
            out.push_back(rotate(a.v));
        }
    }
    return out;
}

void add_direction(std::set<RationalVector>& out, const RationalVector& v) {
    if (is_zero(v)) return;
    out.insert(primitive_integer(v));
    out.insert(primitive_integer(negated(v)));
}

void faces_2d(const std::vector<RationalVector>& normals, std::set<RationalVector>& out) {
    std::vector<PlaneRay> rays;
    for (const auto& n : normals) {
        RationalVector p{-n[1], n[0]};
        rays.push_back({p[0], p[1], p});
        rays.push_back({-p[0], -p[1], negated(p)});
        add_direction(out, p);
    }
    auto rotate = [](const RationalVector& a) { return RationalVector{-a[1], a[0]}; };
    for (const auto& s : sector_representatives(rays, rotate)) add_direction(out, s);
}

void faces_3d(const std::vector<RationalVector>& normals, std::set<RationalVector>& out) {
    for (const auto& n : normals) {
        std::vector<RationalVector> lines;
        for (const auto& other : normals) {
            RationalVector d = cross(n, other);
            if (!is_zero(d)) lines.push_back(d);
        }
        if (lines.empty()) continue;
        const RationalVector u = lines.front();
        const RationalVector v = cross(n, u);
        std::vector<PlaneRay> rays;
        for (const auto& d : lines) {
            add_direction(out, d);
            rays.push_back({dot(d, u), dot(d, v), d});
            RationalVector e = negated(d);
            rays.push_back({dot(e, u), dot(e, v), e});
        }
        auto rotate = [&n](const RationalVector& a) { return cross(n, a); };
        for (const auto& f : sector_representatives(rays, rotate)) {
            add_direction(out, f);
            // Step off the plane by less than the distance to any other plane
            // (measured along n), giving the cells on both sides.
            std::optional<Rational> step;
            for (const auto& h : normals) {
                Rational hn = dot(h, n);
                if (sgn(hn) == 0) continue;
                Rational hf = dot(h, f);
                if (sgn(hf) == 0) continue;  // h is the plane itself
                Rational s = abs(hf / hn);
                if (!step || s < *step) step = s;
            }
            Rational delta = step ? *step / 2 : Rational(1);
            RationalVector up(3), down(3);
            for (std::size_t k = 0; k < 3; ++k) {
                up[k] = f[k] + delta * n[k];
                down[k] = f[k] - delta * n[k];
            }
            add_direction(out, up);
            add_direction(out, down);
        }
    }
}

void sampled(const std::vector<RationalVector>& normals, std::size_t m, std::size_t samples, std::uint64_t seed,
             std::set<RationalVector>& out) {
    // Intersection rays of (m-1)-subsets, in lexicographic subset order.
    const std::size_t n = normals.size();
    const std::size_t k = m - 1;
    if (n >= k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (std::size_t count = 0; count < subset_budget; ++count) {
            std::vector<RationalVector> rows;
            for (std::size_t i : idx) rows.push_back(normals[i]);
            if (auto ray = null_ray(rows, m)) add_direction(out, *ray);
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (std::size_t s = 0; s < samples; ++s) {
        RationalVector v(m);
        for (auto& x : v) x = coord(rng);
        add_direction(out, v);
    }
}

}  // namespace

PartitionSets decode_partition(std::uint64_t index, std::size_t reactions) {
    PartitionSets p;
    for (std::size_t i = 0; i < reactions; ++i) {
        switch (index % 3) {
            case 0: p.r_zero.push_back(i); break;
            case 1: p.r_minus.push_back(i); break;
            default: p.r_plus.push_back(i); break;
        }
        index /= 3;
    }
    return p;
}

OracleVerdict brute_force_classify(const ReactionNetwork& net, Mode mode, const OracleCaps& caps) {
    const std::size_t r = net.reaction_count();
    const std::size_t m = net.species_count();
    if (r > caps.max_reactions) {
        throw OracleCapError("brute force oracle: " + std::to_string(r) + " reactions exceeds cap " +
                             std::to_string(caps.max_reactions));
    }
    if (m > caps.max_species) {
        throw OracleCapError("brute force oracle: " + std::to_string(m) + " species exceeds cap " +
                             std::to_string(caps.max_species));
    }
    const Dense d = dense_columns(net);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= 3;

    OracleVerdict verdict;
    verdict.mode = mode;
    for (std::uint64_t index = 0; index < total; ++index) {
        PartitionSets p = decode_partition(index, r);
        if (p.r_minus.empty()) continue;
        ++verdict.checked;
        auto w = partition_witness(d, m, mode, p);
        if (!w) continue;
        WitnessCertificate cert{mode, *w, std::move(p.r_zero), std::move(p.r_minus), std::move(p.r_plus), false};
        WitnessCheck check = check_witness(net, cert);
        if (!check.ok) throw std::logic_error("brute force oracle produced a bad certificate: " + check.failure);
        cert.verified = true;
        verdict.holds = false;
        verdict.witness = std::move(cert);
        return verdict;
    }
    return verdict;
}

std::vector<RationalVector> arrangement_normals(const ReactionNetwork& net) {
    const std::size_t m = net.species_count();
    const Dense d = dense_columns(net);
    std::set<RationalVector> seen;
    std::vector<RationalVector> out;
    auto add = [&](const RationalVector& v) {
        if (is_zero(v)) return;
        RationalVector c = canonical_direction(v);
        if (seen.insert(c).second) out.push_back(std::move(c));
    };
    for (const auto& g : d.gamma) add(g);
    for (std::size_t i = 0; i < d.source.size(); ++i) {
        for (std::size_t j = i + 1; j < d.source.size(); ++j) add(difference(d.source[i], d.source[j]));
    }
    for (std::size_t k = 0; k < m; ++k) {
        RationalVector e(m);
        e[k] = 1;
        add(e);
    }
    return out;
}

DirectionSet build_direction_set(const ReactionNetwork& net, std::size_t samples, std::uint64_t seed) {
    const std::size_t m = net.species_count();
    const std::vector<RationalVector> normals = arrangement_normals(net);
    std::set<RationalVector> found;
    for (std::size_t k = 0; k < m; ++k) {
        RationalVector e(m);
        e[k] = 1;
        add_direction(found, e);
    }
    DirectionSet out;
    out.complete = m <= 3;
    if (m == 2) {
        faces_2d(normals, found);
    } else if (m == 3) {
        faces_3d(normals, found);
    } else if (m > 3) {
        sampled(normals, m, samples, seed, found);
    }
    out.directions.assign(found.begin(), found.end());
    return out;
}

std::vector<OracleVerdict> sweep_classify(const ReactionNetwork& net) {
    return sweep_classify(net, build_direction_set(net));
}

std::vector<OracleVerdict> sweep_classify(const ReactionNetwork& net, const DirectionSet& directions) {
    std::vector<OracleVerdict> out;
    for (Mode mode : {Mode::StronglyEndotactic, Mode::Endotactic, Mode::LowerEndotactic}) {
        OracleVerdict v;
        v.mode = mode;
        v.authoritative = directions.complete;
        out.push_back(std::move(v));
    }
    for (const auto& w : directions.directions) {
        const bool nonnegative = std::none_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) < 0; });
        SingleSpeciesNetwork ssn = project(net, w);
        const bool weak = sweep_from_left_holds(ssn, false);
        const bool strong = weak && sweep_from_left_holds(ssn, true);
        for (auto& v : out) {
            if (!v.holds) continue;
            if (v.mode == Mode::LowerEndotactic && !nonnegative) continue;
            ++v.checked;
            bool ok = v.mode == Mode::StronglyEndotactic ? strong : weak;
            if (ok) continue;
            WitnessCertificate cert;
            if (!certificate_from_direction(net, w, v.mode, cert)) {
                throw std::logic_error("sweep oracle could not certify direction " + to_string(w));
            }
            v.holds = false;
            v.witness = std::move(cert);
        }
    }
    return out;
}

}  // namespace endo
