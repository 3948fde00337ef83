// File formats: election profiles, relation lists, DOT/JSON graph export,
// and plain edge-list digraphs.
#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schulze/election.hpp"
#include "schulze/mcgarvey.hpp"
#include "schulze/ppvc.hpp"

namespace schulze {

// A parsed election file: the core profile plus the optional control
// sections (candidate pool, unregistered voters, budget, distinguished).
struct ParsedElection {
    Election election;
    std::vector<std::string> pool;
    std::vector<WeightedBallot> unregistered;
    std::optional<std::int64_t> budget;
    std::optional<std::string> distinguished;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(s);
    while (std::getline(in, piece, sep)) out.push_back(trim(piece));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> parse_name_list(const std::string& body, int lineno) {
    std::vector<std::string> names;
    for (const auto& piece : split(body, ',')) {
        if (piece.empty())
            throw validation_error("line " + std::to_string(lineno) + ": empty candidate name");
        if (!valid_candidate_name(piece))
            throw validation_error("line " + std::to_string(lineno) +
                                   ": bad candidate name: " + piece);
        names.push_back(piece);
    }
    return names;
}

inline WeightedBallot parse_ballot_line(const std::string& line, int lineno) {
    auto colon = line.find(':');
    if (colon == std::string::npos)
        throw validation_error("line " + std::to_string(lineno) + ": expected COUNT: ranking");
    std::string count_str = trim(line.substr(0, colon));
    std::int64_t count = 0;
    try {
        std::size_t used = 0;
        count = std::stoll(count_str, &used);
        if (used != count_str.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw validation_error("line " + std::to_string(lineno) + ": bad count: " + count_str);
    }
    WeightedBallot wb;
    wb.count = count;
    for (const auto& piece : split(line.substr(colon + 1), '>')) {
        if (piece.empty())
            throw validation_error("line " + std::to_string(lineno) + ": empty ranking entry");
        if (!valid_candidate_name(piece))
            throw validation_error("line " + std::to_string(lineno) +
                                   ": bad candidate name: " + piece);
        wb.ballot.ranking.push_back(piece);
    }
    return wb;
}

}  // namespace detail

inline ParsedElection parse_election(std::istream& in) {
    ParsedElection parsed;
    bool candidates_seen = false;
    bool in_unregistered = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(detail::strip_comment(line));
        if (line.empty()) continue;

        auto starts = [&](const char* key) {
            std::string k(key);
            return line.size() > k.size() && line.compare(0, k.size(), k) == 0;
        };
        if (starts("candidates:")) {
            if (candidates_seen)
                throw validation_error("line " + std::to_string(lineno) +
                                       ": duplicate candidates header");
            parsed.election.candidates =
                detail::parse_name_list(line.substr(11), lineno);
            std::sort(parsed.election.candidates.begin(), parsed.election.candidates.end());
            candidates_seen = true;
            continue;
        }
        if (!candidates_seen)
            throw validation_error("line " + std::to_string(lineno) +
                                   ": candidates header must come first");
        if (starts("pool:")) {
            parsed.pool = detail::parse_name_list(line.substr(5), lineno);
            std::sort(parsed.pool.begin(), parsed.pool.end());
            continue;
        }
        if (starts("budget:")) {
            std::string body = detail::trim(line.substr(7));
            try {
                std::size_t used = 0;
                parsed.budget = std::stoll(body, &used);
                if (used != body.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw validation_error("line " + std::to_string(lineno) + ": bad budget: " + body);
            }
            continue;
        }
        if (starts("distinguished:")) {
            parsed.distinguished = detail::trim(line.substr(14));
            continue;
        }
        if (line == "unregistered:") {
            in_unregistered = true;
            continue;
        }
        auto wb = detail::parse_ballot_line(line, lineno);
        for (const auto& name : wb.ballot.ranking) {
            bool known = std::find(parsed.election.candidates.begin(),
                                   parsed.election.candidates.end(),
                                   name) != parsed.election.candidates.end() ||
                         std::find(parsed.pool.begin(), parsed.pool.end(), name) !=
                             parsed.pool.end();
            if (!known)
                throw validation_error("line " + std::to_string(lineno) +
                                       ": unknown candidate " + name);
        }
        (in_unregistered ? parsed.unregistered : parsed.election.ballots).push_back(wb);
    }
    if (!candidates_seen) throw validation_error("missing candidates header");
    validate(parsed.election);
    return parsed;
}

inline ParsedElection parse_election(const std::string& text) {
    std::istringstream in(text);
    return parse_election(in);
}

inline std::string serialize_ballot(const WeightedBallot& wb) {
    std::ostringstream out;
    out << wb.count << ": ";
    for (std::size_t i = 0; i < wb.ballot.ranking.size(); ++i) {
        if (i) out << " > ";
        out << wb.ballot.ranking[i];
    }
    return out.str();
}

inline std::string serialize_election(const ParsedElection& parsed) {
    std::ostringstream out;
    out << "candidates: ";
    for (std::size_t i = 0; i < parsed.election.candidates.size(); ++i) {
        if (i) out << ", ";
        out << parsed.election.candidates[i];
    }
    out << '\n';
    if (!parsed.pool.empty()) {
        out << "pool: ";
        for (std::size_t i = 0; i < parsed.pool.size(); ++i) {
            if (i) out << ", ";
            out << parsed.pool[i];
        }
        out << '\n';
    }
    if (parsed.budget) out << "budget: " << *parsed.budget << '\n';
    if (parsed.distinguished) out << "distinguished: " << *parsed.distinguished << '\n';
    for (const auto& wb : parsed.election.ballots) out << serialize_ballot(wb) << '\n';
    if (!parsed.unregistered.empty()) {
        out << "unregistered:\n";
        for (const auto& wb : parsed.unregistered) out << serialize_ballot(wb) << '\n';
    }
    return out.str();
}

inline std::string serialize_election(const Election& e) {
    ParsedElection parsed;
    parsed.election = e;
    return serialize_election(parsed);
}

// Relations file: optional `candidates:` header, then `winner > loser : weight`
// lines.  Without the header the candidate set is the union of named ones.
struct ParsedRelations {
    std::vector<std::string> candidates;
    std::vector<Relation> relations;
};

inline ParsedRelations parse_relations(std::istream& in) {
    ParsedRelations parsed;
    bool header_seen = false;
    std::set<std::string> mentioned;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(detail::strip_comment(line));
        if (line.empty()) continue;
        if (line.size() > 11 && line.compare(0, 11, "candidates:") == 0) {
            parsed.candidates = detail::parse_name_list(line.substr(11), lineno);
            std::sort(parsed.candidates.begin(), parsed.candidates.end());
            header_seen = true;
            continue;
        }
        auto gt = line.find('>');
        auto colon = line.find(':', gt == std::string::npos ? 0 : gt);
        if (gt == std::string::npos || colon == std::string::npos)
            throw validation_error("line " + std::to_string(lineno) +
                                   ": expected winner > loser : weight");
        Relation r;
        r.winner = detail::trim(line.substr(0, gt));
        r.loser = detail::trim(line.substr(gt + 1, colon - gt - 1));
        std::string w = detail::trim(line.substr(colon + 1));
        if (!valid_candidate_name(r.winner) || !valid_candidate_name(r.loser))
            throw validation_error("line " + std::to_string(lineno) + ": bad candidate name");
        try {
            std::size_t used = 0;
            r.weight = std::stoll(w, &used);
            if (used != w.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw validation_error("line " + std::to_string(lineno) + ": bad weight: " + w);
        }
        mentioned.insert(r.winner);
        mentioned.insert(r.loser);
        parsed.relations.push_back(r);
    }
    if (!header_seen) parsed.candidates.assign(mentioned.begin(), mentioned.end());
    return parsed;
}

inline ParsedRelations parse_relations(const std::string& text) {
    std::istringstream in(text);
    return parse_relations(in);
}

// --- Election graph export ---------------------------------------------------

// DOT digraph of the positive net-advantage edges.
inline std::string to_dot(const SquareMatrix& net, const std::string& name = "election") {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    for (const auto& c : net.names()) out << "  \"" << c << "\";\n";
    for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = 0; j < net.size(); ++j)
            if (i != j && net.at(i, j) > 0)
                out << "  \"" << net.names()[i] << "\" -> \"" << net.names()[j]
                    << "\" [label=\"" << net.at(i, j) << "\"];\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json to_json(const SquareMatrix& net) {
    nlohmann::json j;
    j["candidates"] = net.names();
    auto edges = nlohmann::json::array();
    for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t jdx = 0; jdx < net.size(); ++jdx)
            if (i != jdx && net.at(i, jdx) > 0)
                edges.push_back({{"from", net.names()[i]},
                                 {"to", net.names()[jdx]},
                                 {"weight", net.at(i, jdx)}});
    j["edges"] = edges;
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < net.size(); ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t jdx = 0; jdx < net.size(); ++jdx) row.push_back(net.at(i, jdx));
        rows.push_back(row);
    }
    j["netadv"] = rows;
    return j;
}

// Minimal DOT syntax check (graphviz is not assumed present): accepts the
// digraph subset this library emits — quoted/plain identifiers, `->` edges,
// one optional [key="value", ...] attribute list, `;` terminators.
inline bool dot_is_valid(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"') {
                if (text[j] == '\\') ++j;
                ++j;
            }
            if (j >= text.size()) return false;
            tokens.push_back(text.substr(i, j - i + 1));
            i = j + 1;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            tokens.push_back("->");
            i += 2;
        } else if (std::string("{}[];,=").find(c) != std::string::npos) {
            tokens.push_back(std::string(1, c));
            ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_' || text[j] == '.'))
                ++j;
            tokens.push_back(text.substr(i, j - i));
            i = j;
        } else {
            return false;
        }
    }
    std::size_t t = 0;
    auto is_id = [&](std::size_t idx) {
        if (idx >= tokens.size()) return false;
        const std::string& tok = tokens[idx];
        if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') return true;
        if (tok == "->" || tok.size() == 1) {
            if (std::string("{}[];,=").find(tok) != std::string::npos) return false;
            if (tok == "->") return false;
        }
        return !tok.empty();
    };
    if (t >= tokens.size() || (tokens[t] != "digraph" && tokens[t] != "graph")) return false;
    ++t;
    if (is_id(t) && tokens[t] != "{") ++t;  // optional graph name
    if (t >= tokens.size() || tokens[t] != "{") return false;
    ++t;
    while (t < tokens.size() && tokens[t] != "}") {
        if (!is_id(t)) return false;
        ++t;
        while (t < tokens.size() && tokens[t] == "->") {
            ++t;
            if (!is_id(t)) return false;
            ++t;
        }
        if (t < tokens.size() && tokens[t] == "[") {
            ++t;
            while (t < tokens.size() && tokens[t] != "]") {
                if (!is_id(t)) return false;
                ++t;
                if (t >= tokens.size() || tokens[t] != "=") return false;
                ++t;
                if (!is_id(t)) return false;
                ++t;
                if (t < tokens.size() && tokens[t] == ",") ++t;
            }
            if (t >= tokens.size()) return false;
            ++t;  // ]
        }
        if (t < tokens.size() && tokens[t] == ";") ++t;
    }
    if (t >= tokens.size() || tokens[t] != "}") return false;
    ++t;
    return t == tokens.size();
}

// --- Edge-list digraphs (PPVC input) ----------------------------------------

struct ParsedGraph {
    std::vector<std::string> vertices;  // sorted union of endpoints
    std::vector<std::pair<std::string, std::string>> edges;
};

inline ParsedGraph parse_edge_list(std::istream& in) {
    ParsedGraph g;
    std::set<std::string> verts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(detail::strip_comment(line));
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string u, v, extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw validation_error("line " + std::to_string(lineno) +
                                   ": expected exactly two vertex names");
        verts.insert(u);
        verts.insert(v);
        g.edges.push_back({u, v});
    }
    g.vertices.assign(verts.begin(), verts.end());
    return g;
}

inline ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string serialize_edge_list(const ParsedGraph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace schulze
