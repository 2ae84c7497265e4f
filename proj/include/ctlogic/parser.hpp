#ifndef CTLOGIC_PARSER_HPP
#define CTLOGIC_PARSER_HPP

// Reader and writer for the line-oriented .ctn netlist format:
//
//   circuit <name>
//   input <net>+
//   output <net>+
//   control <net>
//   gate <id> <KIND> <in>+ -> <out>
//   pg <id> <src> -> <dst>
//   inv <id> <in> -> <out>
//
// '#' starts a comment. The parser only checks syntax, gate kind names and
// identifier uniqueness; structural rules are left to lint().

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ctlogic/errors.hpp"
#include "ctlogic/netlist.hpp"

namespace ctlogic {

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return tokens;
}

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

class NetlistReader {
public:
    Netlist read(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            statement(line_no, tokenize_line(line));
            if (end == text.size()) break;
            pos = end + 1;
        }
        if (!have_header_) throw parse_error(line_no == 0 ? 1 : line_no, 1, "missing circuit header");
        return std::move(netlist_);
    }

private:
    void statement(std::size_t line, const std::vector<Token>& t) {
        if (t.empty()) return;
        const std::string& kw = t[0].text;
        if (!have_header_ && kw != "circuit")
            throw parse_error(line, t[0].column, "missing circuit header (expected 'circuit <name>')");

        if (kw == "circuit") {
            if (have_header_) throw parse_error(line, t[0].column, "duplicate circuit header");
            expect_count(line, t, 2, "circuit <name>");
            netlist_.name = identifier(line, t[1]);
            have_header_ = true;
        } else if (kw == "input" || kw == "output") {
            if (t.size() < 2) throw parse_error(line, t[0].column, "'" + kw + "' needs at least one net");
            auto& list = kw == "input" ? netlist_.inputs : netlist_.outputs;
            auto& seen = kw == "input" ? input_names_ : output_names_;
            for (std::size_t i = 1; i < t.size(); ++i) {
                const std::string net = identifier(line, t[i]);
                if (!seen.insert(net).second)
                    throw parse_error(line, t[i].column, "duplicate identifier '" + net + "' in " + kw + " list");
                list.push_back(net);
            }
        } else if (kw == "control") {
            if (netlist_.control) throw parse_error(line, t[0].column, "duplicate control declaration");
            expect_count(line, t, 2, "control <net>");
            netlist_.control = identifier(line, t[1]);
        } else if (kw == "gate") {
            // gate <id> <KIND> <in>+ -> <out>
            if (t.size() < 6) throw parse_error(line, t[0].column, "malformed gate: expected 'gate <id> <KIND> <in>+ -> <out>'");
            const std::string id = element_id(line, t[1]);
            const auto kind = gate_kind_from_string(t[2].text);
            if (!kind) throw parse_error(line, t[2].column, "unknown gate kind '" + t[2].text + "'");
            auto [ins, out] = arrow_tail(line, t, 3);
            netlist_.add_gate(id, *kind, std::move(ins), std::move(out));
        } else if (kw == "inv") {
            if (t.size() != 5) throw parse_error(line, t[0].column, "malformed inv: expected 'inv <id> <in> -> <out>'");
            const std::string id = element_id(line, t[1]);
            auto [ins, out] = arrow_tail(line, t, 2);
            netlist_.add_gate(id, GateKind::INV, std::move(ins), std::move(out));
        } else if (kw == "pg") {
            if (t.size() != 5) throw parse_error(line, t[0].column, "malformed pg: expected 'pg <id> <src> -> <dst>'");
            const std::string id = element_id(line, t[1]);
            auto [ins, out] = arrow_tail(line, t, 2);
            netlist_.add_passgate(id, std::move(ins.front()), std::move(out));
        } else {
            throw parse_error(line, t[0].column, "unknown statement '" + kw + "'");
        }
    }

    static void expect_count(std::size_t line, const std::vector<Token>& t, std::size_t n, const char* form) {
        if (t.size() != n) {
            const std::size_t col = t.size() > n ? t[n].column : t.back().column;
            throw parse_error(line, col, std::string("malformed statement, expected '") + form + "'");
        }
    }

    static std::string identifier(std::size_t line, const Token& tok) {
        if (!is_identifier(tok.text)) throw parse_error(line, tok.column, "invalid identifier '" + tok.text + "'");
        return tok.text;
    }

    std::string element_id(std::size_t line, const Token& tok) {
        std::string id = identifier(line, tok);
        if (!element_ids_.insert(id).second) throw parse_error(line, tok.column, "duplicate identifier '" + id + "'");
        return id;
    }

    /// Parses "<in>+ -> <out>" starting at token `first`.
    static std::pair<std::vector<std::string>, std::string> arrow_tail(std::size_t line, const std::vector<Token>& t,
                                                                       std::size_t first) {
        std::size_t arrow = first;
        while (arrow < t.size() && t[arrow].text != "->") ++arrow;
        if (arrow == t.size()) throw parse_error(line, t.back().column, "missing '->'");
        if (arrow == first) throw parse_error(line, t[arrow].column, "no input nets before '->'");
        if (arrow + 2 != t.size()) {
            const std::size_t col = arrow + 1 < t.size() ? t[std::min(arrow + 2, t.size() - 1)].column : t[arrow].column;
            throw parse_error(line, col, "expected exactly one output net after '->'");
        }
        std::vector<std::string> ins;
        for (std::size_t i = first; i < arrow; ++i) ins.push_back(identifier(line, t[i]));
        return {std::move(ins), identifier(line, t[arrow + 1])};
    }

    Netlist netlist_;
    bool have_header_ = false;
    std::unordered_set<std::string> element_ids_;
    std::unordered_set<std::string> input_names_;
    std::unordered_set<std::string> output_names_;
};

}  // namespace detail

inline Netlist parse(std::string_view text) { return detail::NetlistReader{}.read(text); }

inline std::string serialize(const Netlist& n) {
    std::ostringstream os;
    os << "circuit " << n.name << '\n';
    auto list = [&](const char* kw, const std::vector<std::string>& nets) {
        if (nets.empty()) return;
        os << kw;
        for (const auto& net : nets) os << ' ' << net;
        os << '\n';
    };
    list("input", n.inputs);
    list("output", n.outputs);
    if (n.control) os << "control " << *n.control << '\n';
    for (const auto& r : n.elements_in_declaration_order()) {
        if (r.type == ElementRef::Type::Pass) {
            const auto& p = n.passgates[r.index];
            os << "pg " << p.id << ' ' << p.source_net << " -> " << p.destination_net << '\n';
            continue;
        }
        const auto& g = n.gates[r.index];
        if (g.kind == GateKind::INV && g.input_nets.size() == 1) {
            os << "inv " << g.id << ' ' << g.input_nets[0] << " -> " << g.output_net << '\n';
            continue;
        }
        os << "gate " << g.id << ' ' << to_string(g.kind);
        for (const auto& in : g.input_nets) os << ' ' << in;
        os << " -> " << g.output_net << '\n';
    }
    return os.str();
}

}  // namespace ctlogic

#endif  // CTLOGIC_PARSER_HPP
