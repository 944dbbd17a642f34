#pragma once

#include "endo/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace endo {

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Species {
    std::size_t id = 0;
    std::string name;
};

/// Formal linear combination of species with exact coefficients. Zero
/// coefficients are never stored; the empty combination is the zero complex.
class Complex {
public:
    Complex() = default;
    explicit Complex(std::map<std::size_t, Rational> coefficients);

    const std::map<std::size_t, Rational>& coefficients() const { return coefficients_; }
    Rational coefficient(std::size_t species) const;
    bool is_zero() const { return coefficients_.empty(); }

    /// Dense vector of length `species_count`.
    RationalVector dense(std::size_t species_count) const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator<(const Complex& a, const Complex& b) {
        return a.coefficients_ < b.coefficients_;
    }

private:
    std::map<std::size_t, Rational> coefficients_;
};

struct Reaction {
    Complex source;
    Complex target;

    friend bool operator==(const Reaction& a, const Reaction& b) {
        return a.source == b.source && a.target == b.target;
    }
};

struct NetworkOptions {
    bool allow_self_loops = false;
    /// Set for networks built by projection or reduction; relaxes the
    /// requirement that every species occurs in some complex.
    bool derived = false;
};

/// The triple (species, complexes, reactions). Immutable after construction.
class ReactionNetwork {
public:
    ReactionNetwork() = default;
    ReactionNetwork(std::vector<Species> species, std::vector<Reaction> reactions,
                    NetworkOptions options = {});
    /// Convenience: species named in order, ids assigned 0..m-1.
    ReactionNetwork(const std::vector<std::string>& species_names,
                    std::vector<Reaction> reactions, NetworkOptions options = {});

    const std::vector<Species>& species() const { return species_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }
    std::size_t species_count() const { return species_.size(); }
    std::size_t reaction_count() const { return reactions_.size(); }
    bool allow_self_loops() const { return options_.allow_self_loops; }
    bool derived() const { return options_.derived; }
    const NetworkOptions& options() const { return options_; }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Species that occur in no complex. Allowed, but reported.
    std::vector<std::size_t> unused_species() const;

    std::size_t species_index(const std::string& name) const;

    friend bool operator==(const ReactionNetwork& a, const ReactionNetwork& b);

private:
    std::vector<Species> species_;
    std::vector<Reaction> reactions_;
    NetworkOptions options_;
    std::string name_;
};

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    RationalVector column(std::size_t c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Stoichiometric matrix (column k = target - source of reaction k) and
/// source matrix (column k = source of reaction k). Repeated sources stay as
/// separate columns.
struct NetworkMatrices {
    Matrix gamma;
    Matrix y_source;

    std::size_t species_count() const { return gamma.rows(); }
    std::size_t reaction_count() const { return gamma.cols(); }
};

NetworkMatrices build_matrices(const ReactionNetwork& net);

/// Exact rank of a rational matrix.
std::size_t rank(Matrix m);

/// Dimension of the stoichiometric subspace.
std::size_t stoichiometric_dimension(const ReactionNetwork& net);

/// Distinct complexes in first-appearance order (source before target).
std::vector<Complex> distinct_complexes(const ReactionNetwork& net);

/// Connected components of the undirected reaction graph, as indices into
/// distinct_complexes(net). Classes ordered by smallest member.
std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net);

/// Strongly connected components of the directed reaction graph.
std::vector<std::vector<std::size_t>> strong_components(const ReactionNetwork& net);

bool is_weakly_reversible(const ReactionNetwork& net);
bool is_reversible(const ReactionNetwork& net);

}  // namespace endo
