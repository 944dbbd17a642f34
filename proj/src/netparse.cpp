#include "endo/netparse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace endo {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

class SpeciesTable {
public:
    std::size_t intern(const std::string& name) {
        auto [it, inserted] = index_.emplace(name, names_.size());
        if (inserted) names_.push_back(name);
        return it->second;
    }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::map<std::string, std::size_t> index_;
    std::vector<std::string> names_;
};

class LineParser {
public:
    LineParser(std::string_view text, std::size_t line, SpeciesTable& table)
        : text_(text), line_(line), table_(table) {}

    // Returns reactions described by the line (one, or two for "<->").
    std::vector<Reaction> parse() {
        Complex lhs = parse_complex();
        skip_space();
        bool reversible = false;
        if (consume("<->")) {
            reversible = true;
        } else if (!consume("->")) {
            fail("expected '->' or '<->'");
        }
        Complex rhs = parse_complex();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        std::vector<Reaction> out{{lhs, rhs}};
        if (reversible) out.push_back({rhs, lhs});
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    std::string_view digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Complex parse_complex() {
        skip_space();
        std::size_t start = pos_;
        // The zero complex: a lone "0" not followed by a species name.
        if (pos_ < text_.size() && text_[pos_] == '0') {
            std::size_t save = pos_;
            ++pos_;
            std::size_t after = pos_;
            skip_space();
            bool lone = pos_ >= text_.size() || text_[pos_] == '-' || text_[pos_] == '<';
            if (lone && (after >= text_.size() || !is_digit(text_[after]))) return Complex{};
            pos_ = save;
        }
        std::map<std::size_t, Rational> coeffs;
        for (;;) {
            skip_space();
            if (pos_ >= text_.size()) fail(pos_ == start ? "expected complex" : "expected term");
            auto [species, value] = parse_term();
            coeffs[species] += value;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                continue;
            }
            break;
        }
        return Complex(std::move(coeffs));
    }

    std::pair<std::size_t, Rational> parse_term() {
        Rational value = 1;
        if (text_[pos_] == '-') fail("negative stoichiometric coefficient");
        if (is_digit(text_[pos_])) {
            std::size_t coeff_col = pos_;
            std::string_view num = digits();
            std::string literal(num);
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string_view den = digits();
                if (den.empty()) fail("expected denominator after '/'");
                literal += "/";
                literal += den;
            } else if (pos_ < text_.size() && text_[pos_] == '.') {
                fail("decimal coefficients are not allowed; use p/q");
            }
            auto parsed = parse_rational(literal);
            if (!parsed) {
                pos_ = coeff_col;
                fail("invalid coefficient '" + literal + "'");
            }
            if (sgn(*parsed) == 0) {
                pos_ = coeff_col;
                fail("zero coefficient");
            }
            value = *parsed;
            skip_space();
        }
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected species name");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        return {table_.intern(name), value};
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
    SpeciesTable& table_;
};

}  // namespace

NetworkDocument parse_network_document(std::string_view text) {
    SpeciesTable table;
    std::vector<Reaction> reactions;
    std::vector<std::size_t> reaction_lines;
    NetworkDocument doc;
    std::string name;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            std::string_view comment = trim(line.substr(hash + 1));
            if (comment.rfind("name:", 0) == 0) {
                name = std::string(trim(comment.substr(5)));
            } else if (comment.rfind("species:", 0) == 0) {
                std::istringstream names{std::string(comment.substr(8))};
                std::string s;
                while (names >> s) {
                    bool ok = is_ident_start(s[0]);
                    for (char c : s) ok = ok && is_ident_char(c);
                    if (!ok) throw ParseError(line_no, hash + 1, "invalid species name '" + s + "' in pragma");
                    table.intern(s);
                }
            } else {
                doc.comments.emplace_back(comment);
            }
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) {
            if (end == text.size()) break;
            continue;
        }
        LineParser parser(line, line_no, table);
        for (auto& rx : parser.parse()) {
            if (rx.source == rx.target) throw ParseError(line_no, 1, "self-loop reaction");
            for (std::size_t k = 0; k < reactions.size(); ++k) {
                if (reactions[k] == rx) {
                    doc.warnings.push_back({line_no, "duplicate of reaction on line " +
                                                         std::to_string(reaction_lines[k]) + " (kept)"});
                    break;
                }
            }
            reactions.push_back(std::move(rx));
            reaction_lines.push_back(line_no);
        }
        if (end == text.size()) break;
    }
    doc.network = ReactionNetwork(table.names(), std::move(reactions));
    doc.network.set_name(name);
    return doc;
}

ReactionNetwork parse_network(std::string_view text) { return parse_network_document(text).network; }

ReactionNetwork load_network_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

std::string format_complex(const Complex& c, const std::vector<Species>& species) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, value] : c.coefficients()) {
        if (!out.empty()) out += " + ";
        if (value != 1) out += to_string(value) + " ";
        out += species.at(idx).name;
    }
    return out;
}

std::string serialize_network(const ReactionNetwork& net) {
    std::string out;
    if (!net.name().empty()) out += "# name: " + net.name() + "\n";

    // Species order is reproduced by first appearance unless it differs.
    std::vector<std::size_t> order;
    std::set<std::size_t> seen;
    for (const auto& rx : net.reactions()) {
        for (const Complex* c : {&rx.source, &rx.target}) {
            for (const auto& [idx, v] : c->coefficients()) {
                if (seen.insert(idx).second) order.push_back(idx);
            }
        }
    }
    bool in_order = order.size() == net.species_count();
    for (std::size_t i = 0; in_order && i < order.size(); ++i) in_order = order[i] == i;
    if (!in_order) {
        out += "# species:";
        for (const auto& s : net.species()) out += " " + s.name;
        out += "\n";
    }

    const auto& rxs = net.reactions();
    for (std::size_t k = 0; k < rxs.size(); ++k) {
        const auto& rx = rxs[k];
        bool merge = k + 1 < rxs.size() && rxs[k + 1].source == rx.target && rxs[k + 1].target == rx.source;
        out += format_complex(rx.source, net.species());
        out += merge ? " <-> " : " -> ";
        out += format_complex(rx.target, net.species());
        out += "\n";
        if (merge) ++k;
    }
    return out;
}

}  // namespace endo
