#include "rainbow/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <string>

namespace rainbow {

CnfFormula::CnfFormula(std::size_t variable_count, std::vector<Clause> clauses)
    : variables_(variable_count), clauses_(std::move(clauses)) {
    std::vector<bool> used(variables_, false);
    for (const auto& clause : clauses_) {
        for (const auto& lit : clause) {
            if (lit.variable < 1 || lit.variable > variables_) {
                throw Error("literal references variable " + std::to_string(lit.variable) + " outside 1.." +
                            std::to_string(variables_));
            }
            used[lit.variable - 1] = true;
        }
    }
    for (std::size_t v = 0; v < variables_; ++v)
        if (!used[v]) throw Error("variable " + std::to_string(v + 1) + " occurs in no clause");
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return l.satisfied_by(assignment); });
    });
}

bool CnfFormula::has_both_polarities() const {
    std::vector<bool> pos(variables_, false), neg(variables_, false);
    for (const auto& c : clauses_)
        for (const auto& l : c) (l.negated ? neg : pos)[l.variable - 1] = true;
    for (std::size_t v = 0; v < variables_; ++v)
        if (!pos[v] || !neg[v]) return false;
    return true;
}

CnfFormula trivially_satisfiable_formula() {
    return CnfFormula(2, {Clause{Literal{1, false}, Literal{2, false}, Literal{2, false}},
                          Clause{Literal{1, true}, Literal{2, true}, Literal{2, true}}});
}

namespace {

class CnfParseError : public Error {
public:
    CnfParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what) {}
};

bool is_tautology(const Clause& c) {
    for (const auto& a : c)
        for (const auto& b : c)
            if (a.variable == b.variable && a.negated != b.negated) return true;
    return false;
}

}  // namespace

CnfFormula parse_dimacs_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> vars;
    std::size_t declared_clauses = 0;
    std::vector<Clause> clauses;
    std::vector<Literal> current;
    std::size_t current_line = 0;
    auto finish_clause = [&](std::size_t at) {
        if (current.empty()) throw CnfParseError(at, "empty clause");
        if (current.size() > 3) {
            throw CnfParseError(at, "clause has " + std::to_string(current.size()) + " literals; at most 3 allowed");
        }
        while (current.size() < 3) current.push_back(current.back());
        clauses.push_back(Clause{current[0], current[1], current[2]});
        current.clear();
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok[0] == 'c') continue;
        if (tok == "%") break;  // SATLIB trailer
        if (tok == "p") {
            if (vars) throw CnfParseError(line_no, "duplicate problem line");
            std::string format;
            long long v = -1, c = -1;
            std::string extra;
            if (!(tokens >> format >> v >> c) || format != "cnf" || v < 0 || c < 0 || (tokens >> extra)) {
                throw CnfParseError(line_no, "malformed header; expected 'p cnf <vars> <clauses>'");
            }
            vars = static_cast<std::size_t>(v);
            declared_clauses = static_cast<std::size_t>(c);
            continue;
        }
        if (!vars) throw CnfParseError(line_no, "clause data before 'p cnf' header");
        do {
            long long value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw CnfParseError(line_no, "invalid literal '" + tok + "'");
            }
            if (value == 0) {
                finish_clause(line_no);
                continue;
            }
            const auto var = static_cast<std::size_t>(value < 0 ? -value : value);
            if (var > *vars) {
                throw CnfParseError(line_no, "variable " + std::to_string(var) + " out of range 1.." +
                                                 std::to_string(*vars));
            }
            if (current.empty()) current_line = line_no;
            current.push_back(Literal{var, value < 0});
        } while (tokens >> tok);
    }
    if (!vars) throw CnfParseError(line_no, "missing 'p cnf' header");
    if (!current.empty()) throw CnfParseError(current_line, "clause missing terminating 0");
    if (clauses.size() != declared_clauses) {
        throw CnfParseError(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                         std::to_string(clauses.size()));
    }
    return CnfFormula(*vars, std::move(clauses));
}

std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& phi) {
    const std::size_t n = phi.variable_count();
    if (n > 24) throw Error("sat_brute_force: " + std::to_string(n) + " variables exceeds the limit of 24");
    std::vector<bool> assignment(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t v = 0; v < n; ++v) assignment[v] = (bits >> (n - 1 - v)) & 1;
        if (phi.satisfied_by(assignment)) return assignment;
    }
    return std::nullopt;
}

CnfFormula ensure_both_polarities(const CnfFormula& phi) {
    std::vector<Clause> clauses;
    for (const auto& c : phi.clauses())
        if (!is_tautology(c)) clauses.push_back(c);
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::size_t, std::pair<bool, bool>> seen;  // variable -> (positive, negative)
        for (const auto& c : clauses)
            for (const auto& l : c) (l.negated ? seen[l.variable].second : seen[l.variable].first) = true;
        for (const auto& [var, pol] : seen) {
            if (pol.first && pol.second) continue;
            // Pure literal: setting it true satisfies every clause it occurs in.
            std::erase_if(clauses, [var = var](const Clause& c) {
                return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return l.variable == var; });
            });
            changed = true;
            break;
        }
    }
    if (clauses.empty()) return trivially_satisfiable_formula();
    std::map<std::size_t, std::size_t> renumber;
    for (const auto& c : clauses)
        for (const auto& l : c) renumber.emplace(l.variable, 0);
    std::size_t next = 1;
    for (auto& [old, fresh] : renumber) fresh = next++;
    for (auto& c : clauses)
        for (auto& l : c) l.variable = renumber.at(l.variable);
    return CnfFormula(renumber.size(), std::move(clauses));
}

}  // namespace rainbow
