#include "endo/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace endo {

Complex::Complex(std::map<std::size_t, Rational> coefficients) {
    for (auto& [species, value] : coefficients) {
        if (sgn(value) != 0) coefficients_.emplace(species, std::move(value));
    }
}

Rational Complex::coefficient(std::size_t species) const {
    auto it = coefficients_.find(species);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

RationalVector Complex::dense(std::size_t species_count) const {
    RationalVector v(species_count);
    for (const auto& [species, value] : coefficients_) v.at(species) = value;
    return v;
}

ReactionNetwork::ReactionNetwork(std::vector<Species> species, std::vector<Reaction> reactions,
                                 NetworkOptions options)
    : species_(std::move(species)), reactions_(std::move(reactions)), options_(options) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < species_.size(); ++i) {
        if (species_[i].id != i) throw NetworkError("species ids must be contiguous from 0");
        if (!names.insert(species_[i].name).second) {
            throw NetworkError("duplicate species name '" + species_[i].name + "'");
        }
    }
    for (std::size_t k = 0; k < reactions_.size(); ++k) {
        const auto& rx = reactions_[k];
        for (const Complex* c : {&rx.source, &rx.target}) {
            for (const auto& [idx, value] : c->coefficients()) {
                (void)value;
                if (idx >= species_.size()) {
                    throw NetworkError("reaction " + std::to_string(k + 1) +
                                       " references unknown species index " + std::to_string(idx));
                }
            }
        }
        if (!options_.allow_self_loops && rx.source == rx.target) {
            throw NetworkError("reaction " + std::to_string(k + 1) + " is a self-loop");
        }
    }
}

ReactionNetwork::ReactionNetwork(const std::vector<std::string>& species_names,
                                 std::vector<Reaction> reactions, NetworkOptions options)
    : ReactionNetwork(
          [&] {
              std::vector<Species> s;
              for (std::size_t i = 0; i < species_names.size(); ++i) s.push_back({i, species_names[i]});
              return s;
          }(),
          std::move(reactions), options) {}

std::vector<std::size_t> ReactionNetwork::unused_species() const {
    std::vector<bool> used(species_.size(), false);
    for (const auto& rx : reactions_) {
        for (const auto& [idx, v] : rx.source.coefficients()) used[idx] = true;
        for (const auto& [idx, v] : rx.target.coefficients()) used[idx] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) out.push_back(i);
    }
    return out;
}

std::size_t ReactionNetwork::species_index(const std::string& name) const {
    for (const auto& s : species_) {
        if (s.name == name) return s.id;
    }
    throw NetworkError("unknown species '" + name + "'");
}

bool operator==(const ReactionNetwork& a, const ReactionNetwork& b) {
    if (a.species_.size() != b.species_.size()) return false;
    for (std::size_t i = 0; i < a.species_.size(); ++i) {
        if (a.species_[i].name != b.species_[i].name) return false;
    }
    return a.reactions_ == b.reactions_;
}

RationalVector Matrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

NetworkMatrices build_matrices(const ReactionNetwork& net) {
    if (net.reaction_count() == 0) throw NetworkError("network has no reactions");
    const std::size_t m = net.species_count();
    const std::size_t r = net.reaction_count();
    NetworkMatrices out{Matrix(m, r), Matrix(m, r)};
    for (std::size_t k = 0; k < r; ++k) {
        const auto& rx = net.reactions()[k];
        for (const auto& [i, v] : rx.source.coefficients()) {
            out.y_source(i, k) = v;
            out.gamma(i, k) -= v;
        }
        for (const auto& [i, v] : rx.target.coefficients()) out.gamma(i, k) += v;
    }
    return out;
}

std::size_t rank(Matrix a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(rank, c));
        }
        for (std::size_t row = rank + 1; row < a.rows(); ++row) {
            if (sgn(a(row, col)) == 0) continue;
            Rational factor = a(row, col) / a(rank, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(row, c) -= factor * a(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::size_t stoichiometric_dimension(const ReactionNetwork& net) {
    return rank(build_matrices(net).gamma);
}

namespace {

struct ComplexGraph {
    std::vector<Complex> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // one per non-self-loop reaction
};

ComplexGraph complex_graph(const ReactionNetwork& net) {
    ComplexGraph g;
    std::map<Complex, std::size_t> index;
    auto intern = [&](const Complex& c) {
        auto [it, inserted] = index.emplace(c, g.nodes.size());
        if (inserted) g.nodes.push_back(c);
        return it->second;
    };
    for (const auto& rx : net.reactions()) {
        std::size_t s = intern(rx.source);
        std::size_t t = intern(rx.target);
        if (s != t) g.edges.emplace_back(s, t);
    }
    return g;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::vector<Complex> distinct_complexes(const ReactionNetwork& net) {
    return complex_graph(net).nodes;
}

std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net) {
    ComplexGraph g = complex_graph(net);
    std::vector<std::size_t> parent(g.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [s, t] : g.edges) {
        std::size_t a = find_root(parent, s);
        std::size_t b = find_root(parent, t);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) groups[find_root(parent, i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

std::vector<std::vector<std::size_t>> strong_components(const ReactionNetwork& net) {
    ComplexGraph g = complex_graph(net);
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [s, t] : g.edges) succ[s].push_back(t);

    // Iterative Tarjan.
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> number(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (number[root] != unvisited) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next < succ[v].size()) {
                std::size_t w = succ[v][next++];
                if (number[w] == unvisited) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
                continue;
            }
            std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == number[done]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    std::sort(components.begin(), components.end());
    return components;
}

bool is_weakly_reversible(const ReactionNetwork& net) {
    // Each linkage class must be a single strong component.
    return linkage_classes(net).size() == strong_components(net).size();
}

bool is_reversible(const ReactionNetwork& net) {
    std::set<std::pair<Complex, Complex>> edges;
    for (const auto& rx : net.reactions()) edges.emplace(rx.source, rx.target);
    for (const auto& [s, t] : edges) {
        if (!edges.count({t, s})) return false;
    }
    return true;
}

}  // namespace endo
