#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct Literal {
    std::size_t variable = 1;  ///< 1-based
    bool negated = false;

    bool satisfied_by(const std::vector<bool>& assignment) const {
        return assignment[variable - 1] != negated;
    }
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// Conjunction of exactly-3-literal clauses over variables 1..variable_count.
class CnfFormula {
public:
    CnfFormula(std::size_t variable_count, std::vector<Clause> clauses);

    std::size_t variable_count() const noexcept { return variables_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    bool satisfied_by(const std::vector<bool>& assignment) const;
    /// Every variable occurs both positively and negatively.
    bool has_both_polarities() const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    std::size_t variables_;
    std::vector<Clause> clauses_;
};

/// Canonical satisfiable formula (x1 v x2 v x2) & (~x1 v ~x2 v ~x2): both
/// polarities present, no tautological clause.
CnfFormula trivially_satisfiable_formula();

/// DIMACS CNF ("p cnf V C" header, zero-terminated clauses, 'c' comments).
/// Clauses shorter than 3 are padded with their last literal.
CnfFormula parse_dimacs_cnf(std::string_view text);

/// Lexicographically first satisfying assignment (false < true, variable 1
/// most significant). Limited to 24 variables.
std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& phi);

/// Equisatisfiable formula whose variables all occur in both polarities:
/// tautological clauses are dropped, pure literals set true and their clauses
/// removed, to a fixpoint; surviving variables are renumbered densely in
/// order. An empty result becomes trivially_satisfiable_formula().
CnfFormula ensure_both_polarities(const CnfFormula& phi);

}  // namespace rainbow
