// 3-CNF formulas: DIMACS parsing and a tiny exhaustive satisfiability
// checker used by the reduction verifier.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schulze/election.hpp"  // validation_error / budget_exceeded

namespace schulze {

// Literals are signed 1-based variable indices, three per clause.  A clause
// may repeat a literal (handy for one-variable test formulas); strict mode
// rejects repeats.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses;
};

inline void validate(const CnfFormula& f, bool strict = false) {
    if (f.variable_count < 1) throw validation_error("formula needs at least one variable");
    if (f.clauses.empty()) throw validation_error("formula needs at least one clause");
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& cl = f.clauses[i];
        for (int lit : cl) {
            if (lit == 0 || std::abs(lit) > f.variable_count)
                throw validation_error("clause " + std::to_string(i + 1) +
                                       ": literal out of range: " + std::to_string(lit));
        }
        if (strict) {
            int a = std::abs(cl[0]), b = std::abs(cl[1]), c = std::abs(cl[2]);
            if (a == b || a == c || b == c)
                throw validation_error("clause " + std::to_string(i + 1) +
                                       ": repeated variable (strict mode)");
        }
    }
}

inline CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool header_seen = false;
    std::size_t expected_clauses = 0;
    std::string line;
    std::vector<int> pending;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            long long vars = 0, clauses = 0;
            if (!(ls >> p >> fmt >> vars >> clauses) || fmt != "cnf")
                throw validation_error("line " + std::to_string(lineno) + ": bad DIMACS header");
            f.variable_count = int(vars);
            expected_clauses = std::size_t(clauses);
            header_seen = true;
            continue;
        }
        if (!header_seen)
            throw validation_error("line " + std::to_string(lineno) + ": clause before p cnf header");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw validation_error("line " + std::to_string(lineno) +
                                           ": clause must have exactly 3 literals");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
    }
    if (!header_seen) throw validation_error("missing p cnf header");
    if (!pending.empty()) throw validation_error("unterminated clause at end of input");
    if (expected_clauses != f.clauses.size())
        throw validation_error("header declares " + std::to_string(expected_clauses) +
                               " clauses, found " + std::to_string(f.clauses.size()));
    validate(f);
    return f;
}

inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

inline std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses)
        out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
    return out.str();
}

inline bool literal_true(int lit, const std::vector<bool>& assignment) {
    bool value = assignment[std::size_t(std::abs(lit)) - 1];
    return lit > 0 ? value : !value;
}

inline bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (int lit : cl)
            if (literal_true(lit, assignment)) { sat = true; break; }
        if (!sat) return false;
    }
    return true;
}

// Exhaustive solver; desk scale only.
inline std::optional<std::vector<bool>> solve_sat(const CnfFormula& f, int max_variables = 24) {
    validate(f);
    if (f.variable_count > max_variables)
        throw budget_exceeded("too many variables for exhaustive SAT");
    std::uint64_t total = std::uint64_t(1) << f.variable_count;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<bool> assignment(std::size_t(f.variable_count));
        for (int v = 0; v < f.variable_count; ++v) assignment[std::size_t(v)] = (mask >> v) & 1;
        if (satisfies(f, assignment)) return assignment;
    }
    return std::nullopt;
}

}  // namespace schulze
