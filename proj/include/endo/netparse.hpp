#pragma once

#include "endo/network.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace endo {

/// Plain-text reaction format (`.crn`), one reaction per line:
///
///     line     := complex ARROW complex
///     ARROW    := "->" | "<->"
///     complex  := "0" | term ("+" term)*
///     term     := [coeff] species        coeff := int | int "/" int
///     species  := [A-Za-z_][A-Za-z0-9_]*
///
/// `#` starts a comment. Two comment pragmas are recognised:
/// `# name: <text>` names the network and `# species: A B C` fixes the
/// species order (otherwise first appearance).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

struct ParseWarning {
    std::size_t line = 0;
    std::string message;
};

struct NetworkDocument {
    ReactionNetwork network;
    std::vector<ParseWarning> warnings;
    std::vector<std::string> comments;
};

NetworkDocument parse_network_document(std::string_view text);

ReactionNetwork parse_network(std::string_view text);

ReactionNetwork load_network_file(const std::string& path);

/// Canonical text: species in index order inside each complex, unit
/// coefficients omitted, adjacent forward/reverse pairs merged into "<->".
std::string serialize_network(const ReactionNetwork& net);

std::string format_complex(const Complex& c, const std::vector<Species>& species);

}  // namespace endo
