#pragma once

#include <vector>

#include "flexcol/rational.hpp"

namespace flexcol {

enum class Sense { LE, EQ, GE };
enum class LpStatus { Optimal, Infeasible, Unbounded };

// maximize c.x subject to A x (sense) b, x >= 0
struct LinearProgram {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Sense> sense;
    std::vector<Rational> c;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;
    std::vector<Rational> y;  // one dual per constraint, original row orientation
};

// Two-phase primal simplex on an exact rational tableau, Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

// Zero-gap certificate check: y dual-feasible (sign conditions and
// y^T A >= c componentwise) and y^T b == c^T x.
bool verify_lp_certificate(const LinearProgram& lp, const LpSolution& sol);

}  // namespace flexcol
