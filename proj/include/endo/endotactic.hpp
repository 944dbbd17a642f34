#pragma once

#include "endo/oracle.hpp"
#include "endo/witness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace endo {

enum class Level { NotLowerEndotactic, LowerEndotacticOnly, EndotacticNotStrongly, StronglyEndotactic, Unknown };
enum class Verdict { Holds, Fails, Unknown };
enum class Method { Milp, Oracle, StructuralShortcut };
enum class OracleMode { Off, Verify, Force };

const char* to_string(Level level);
const char* to_string(Verdict verdict);
const char* to_string(Method method);
const char* to_string(OracleMode mode);
std::optional<OracleMode> parse_oracle_mode(const std::string& text);

struct ClassifyOptions {
    Rational epsilon{1, 10};
    std::size_t node_limit = 200000;
    OracleMode oracle = OracleMode::Off;
    OracleCaps oracle_caps;
    /// Confirm the weakly-reversible single-linkage-class shortcut with the MILP.
    bool strict = true;
    /// Re-solve with epsilon / 100 before accepting "holds".
    bool refine = true;
    bool minus_strict_rows = false;
    bool canonical = true;
    bool probing = false;
};

struct ModeResult {
    Mode mode = Mode::Endotactic;
    Verdict verdict = Verdict::Unknown;
    Method method = Method::Milp;
    /// Taken from a stronger or weaker mode's result instead of its own run.
    bool implied = false;
    std::optional<WitnessCertificate> witness;
    std::size_t nodes = 0;
    double seconds = 0;
    std::string note;
};

struct OracleCheck {
    bool performed = false;
    bool agree = true;
    std::string oracle;  // "brute_force", "sweep", "brute_force+sweep"
    std::vector<std::string> discrepancies;
};

struct Classification {
    Level level = Level::Unknown;
    /// Order: StronglyEndotactic, Endotactic, LowerEndotactic.
    std::vector<ModeResult> per_mode;
    OracleCheck oracle;
    double seconds = 0;

    const ModeResult& result(Mode mode) const;
};

/// Level from the three verdicts; Unknown unless they pin one level.
Level level_from(Verdict strong, Verdict endo, Verdict lower);

/// Pipeline: strongly endotactic, then endotactic, then lower endotactic,
/// stopping once the inclusion chain settles the rest. A failing mode always
/// carries a verified certificate. Node limits give Unknown. Throws
/// NetworkError for a network without reactions.
Classification classify(const ReactionNetwork& net, const ClassifyOptions& options = {});

/// One MILP run (plus the epsilon / 100 re-solve when "holds").
ModeResult classify_mode(const ReactionNetwork& net, Mode mode, const ClassifyOptions& options = {});

/// Oracle-only verdicts in pipeline order. Brute force inside the caps,
/// otherwise the sweep (Unknown instead of "holds" when it is sampled).
std::vector<ModeResult> oracle_classify(const ReactionNetwork& net, const OracleCaps& caps = {});

/// Dynamic consequences of the level, if any.
std::vector<std::string> conclusion_lookup(const Classification& c, const ReactionNetwork& net);

}  // namespace endo
