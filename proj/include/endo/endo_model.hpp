#pragma once

#include "endo/milp.hpp"
#include "endo/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endo {

enum class Mode { Endotactic, LowerEndotactic, StronglyEndotactic };

const char* to_string(Mode mode);
std::optional<Mode> parse_mode(const std::string& text);

struct EndoMilpConfig {
    Rational epsilon{1, 10};
    Mode mode = Mode::Endotactic;
    /// Strict-source rows keyed on R₋ membership instead of R₀. Misses
    /// witnesses; kept for comparison only.
    bool minus_strict_rows = false;
    /// Restricts to canonical witnesses: sum R₋ <= 1, and reactions with a
    /// common source share their R₀ value. Every witness can be rewritten
    /// into this form (keep the R₋ reaction with the smallest w-source; R₀
    /// becomes the reactions strictly below it, or the lowest source level
    /// in the strong case), so feasibility of objective <= -1 is unchanged.
    /// Ignored together with minus_strict_rows.
    bool canonical = true;
};

/// Variable positions inside the model built by build_endo_model.
struct EndoLayout {
    std::size_t m = 0;
    std::size_t r = 0;
    bool has_theta = false;

    std::size_t w(std::size_t k) const { return k; }
    std::size_t r_zero(std::size_t i) const { return m + i; }
    std::size_t r_minus(std::size_t i) const { return m + r + i; }
    std::size_t theta() const { return m + 2 * r; }
    std::size_t variable_count() const { return m + 2 * r + (has_theta ? 1 : 0); }

    /// R₋ first, then R₀, then Θ.
    std::vector<std::size_t> branch_priority() const;
};

struct EndoModel {
    MilpModel model;
    EndoLayout layout;

    /// Assignment with w, R₀ and R₋ set and Θ chosen to match R₀. Does not
    /// check feasibility.
    RationalVector assignment(const RationalVector& w, const std::vector<bool>& r_zero,
                              const std::vector<bool>& r_minus) const;
};

/// Throws MilpError when epsilon is outside (0, 1] or the matrices are
/// inconsistent.
EndoModel build_endo_model(const NetworkMatrices& mat, const EndoMilpConfig& cfg);

}  // namespace endo
