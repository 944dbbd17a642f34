#pragma once

#include "endo/endo_model.hpp"
#include "endo/network.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace endo {

class WitnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Direction w and reaction partition (R0, R-, R+) showing that the
/// property named by `mode` fails. Reaction indices are zero based.
struct WitnessCertificate {
    Mode mode = Mode::Endotactic;
    RationalVector w;
    std::vector<std::size_t> r_zero;
    std::vector<std::size_t> r_minus;
    std::vector<std::size_t> r_plus;
    bool verified = false;
};

struct WitnessCheck {
    bool ok = false;
    std::string failure;  // first failed condition, empty when ok
};

/// Exact, epsilon-free check of the partition conditions for cert.mode:
///   w != 0 and R- nonempty;
///   w.gamma_i = 0 on R0 and w.gamma_i < 0 on R-;
///   Endotactic / LowerEndotactic: w.(y_i - y_j) <= 0 for i in R-, j in R+
///     (and w >= 0 for LowerEndotactic);
///   StronglyEndotactic: either R0 nonempty and w.(y_i - y_j) < 0 for
///     i in R0, j outside R0, or R0 empty and the R-/R+ rule above.
/// Throws WitnessError when w has the wrong length or the three sets do not
/// partition the reactions.
WitnessCheck check_witness(const ReactionNetwork& net, const WitnessCertificate& cert);

bool verify_witness(const ReactionNetwork& net, const WitnessCertificate& cert);

/// Builds the certificate from a direction that violates the one-sided
/// sweep condition (strong or not) along w. Returns false if w does not
/// violate it.
bool certificate_from_direction(const ReactionNetwork& net, const RationalVector& w, Mode mode,
                                WitnessCertificate& out);

}  // namespace endo
