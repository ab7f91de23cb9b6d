#pragma once

#include <optional>

#include "liecon/tensor.hpp"

namespace liecon {

/// Linear constraint on the exponent vector alpha: coeff . alpha = rhs
/// (equality) or coeff . alpha >= rhs (inequality); rhs is 0 or 1.
struct ExponentRow {
    std::vector<long> coeff;
    int rhs = 0;
    bool is_equality = false;

    std::string str() const;  // e.g. "a1 + a2 - a5 >= 1"
    static ExponentRow parse(const std::string& text, int n);
};

/// Constraint system for diagonal realizations U = diag(t^a1, ..., t^an).
struct ExponentProblem {
    int n = 0;
    std::vector<ExponentRow> rows;
    std::optional<std::string> infeasible_reason;  // early rejection from build_problem
};

/// Derives the exponent system for C -> C0 under diag(t^ai): a stored
/// triple (i,j,k) of C maps to t^(ai+aj-ak) c^k_{ij}, so matching values
/// give equalities and vanishing targets give ">= 1" rows. Structural
/// impossibilities are recorded as infeasible_reason.
ExponentProblem build_problem(const StructureTensor<Rational>& c,
                              const StructureTensor<Rational>& c0);

struct LpResult {
    bool feasible = false;
    std::vector<Rational> point;  // valid iff feasible
};

/// Exact rational feasibility: phase-one simplex with Bland's rule.
LpResult lp_feasible(const ExponentProblem& p);

/// Scales a rational solution by the LCM of its denominators; the result
/// still satisfies every row (equalities are homogeneous, inequality
/// values only grow).
std::vector<long> integerize(const std::vector<Rational>& x, const ExponentProblem& p);

struct Feasibility {
    bool feasible = false;
    std::vector<long> alpha;  // integer witness iff feasible
};

/// build_problem + lp_feasible + integerize in one step.
Feasibility giw_feasible(const StructureTensor<Rational>& c, const StructureTensor<Rational>& c0);

struct NecessityResult {
    bool forced = false;          // extra row infeasible: its negation holds everywhere
    std::vector<long> alpha;      // witness iff !forced
};

/// Solves P together with extra_row; Forced means no solution of P
/// satisfies the extra row.
NecessityResult necessity_query(const ExponentProblem& p, const ExponentRow& extra_row);

bool row_satisfied(const ExponentRow& row, const std::vector<Rational>& x);
bool row_satisfied(const ExponentRow& row, const std::vector<long>& x);

}  // namespace liecon
