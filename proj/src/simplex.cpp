#include "flexcol/simplex.hpp"

#include <stdexcept>

namespace flexcol {

namespace {

struct Tableau {
    int m, ncols;                           // rows, structural+logical columns
    std::vector<std::vector<Rational>> t;   // m rows, ncols+1 (rhs last)
    std::vector<int> basis;                 // basis[i] = column basic in row i
    std::vector<char> banned;               // columns barred from entering

    Rational& rhs(int i) { return t[i][ncols]; }

    void pivot(int pr, int pc) {
        Rational p = t[pr][pc];
        for (auto& x : t[pr]) x /= p;
        for (int i = 0; i < m; ++i) {
            if (i == pr) continue;
            Rational factor = t[i][pc];
            if (factor == 0) continue;
            for (int j = 0; j <= ncols; ++j) t[i][j] -= factor * t[pr][j];
        }
        basis[pr] = pc;
    }

    // Maximize cost.x over the current basis. Returns false if unbounded.
    bool run(const std::vector<Rational>& cost) {
        while (true) {
            // reduced costs: cost[j] - cost_B . B^-1 A_j; Bland: smallest
            // improving column index
            int enter = -1;
            for (int j = 0; j < ncols && enter < 0; ++j) {
                if (banned[j]) continue;
                Rational red = cost[j];
                for (int i = 0; i < m; ++i)
                    if (cost[basis[i]] != 0) red -= cost[basis[i]] * t[i][j];
                if (red > 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = rhs(i) / t[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    int m = static_cast<int>(lp.A.size());
    int n = static_cast<int>(lp.c.size());
    for (const auto& row : lp.A)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged LP row");

    // Normalize to b >= 0, then give every row an identity column:
    // slack for LE, artificial for EQ/GE (GE also gets a surplus column).
    std::vector<int> flip(m, 1);
    std::vector<Sense> sense = lp.sense;
    std::vector<Rational> b = lp.b;
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            flip[i] = -1;
            b[i] = -b[i];
            if (sense[i] == Sense::LE)
                sense[i] = Sense::GE;
            else if (sense[i] == Sense::GE)
                sense[i] = Sense::LE;
        }
    }
    int extra = 0;
    for (int i = 0; i < m; ++i) extra += (sense[i] == Sense::GE) ? 2 : 1;

    Tableau tab;
    tab.m = m;
    tab.ncols = n + extra;
    tab.t.assign(m, std::vector<Rational>(tab.ncols + 1, Rational(0)));
    tab.basis.assign(m, -1);
    tab.banned.assign(tab.ncols, 0);

    std::vector<int> ident(m);        // the identity column of each row
    std::vector<char> artificial(tab.ncols, 0);
    int col = n;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab.t[i][j] = Rational(flip[i]) * lp.A[i][j];
        tab.rhs(i) = b[i];
        if (sense[i] == Sense::LE) {
            tab.t[i][col] = 1;
            ident[i] = col;
            tab.basis[i] = col++;
        } else if (sense[i] == Sense::EQ) {
            tab.t[i][col] = 1;
            artificial[col] = 1;
            ident[i] = col;
            tab.basis[i] = col++;
        } else {  // GE: surplus then artificial
            tab.t[i][col] = -1;
            ++col;
            tab.t[i][col] = 1;
            artificial[col] = 1;
            ident[i] = col;
            tab.basis[i] = col++;
        }
    }

    LpSolution sol;
    bool any_artificial = false;
    for (int j = 0; j < tab.ncols; ++j) any_artificial |= (artificial[j] != 0);
    if (any_artificial) {
        std::vector<Rational> phase1(tab.ncols, Rational(0));
        for (int j = 0; j < tab.ncols; ++j)
            if (artificial[j]) phase1[j] = -1;
        if (!tab.run(phase1)) throw std::logic_error("phase 1 unbounded");
        Rational infeas(0);
        for (int i = 0; i < m; ++i)
            if (artificial[tab.basis[i]]) infeas += tab.rhs(i);
        if (infeas != 0) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // drive remaining zero-level artificials out of the basis
        for (int i = 0; i < m; ++i) {
            if (!artificial[tab.basis[i]]) continue;
            int pc = -1;
            for (int j = 0; j < n + extra && pc < 0; ++j)
                if (!artificial[j] && tab.t[i][j] != 0) pc = j;
            if (pc >= 0) tab.pivot(i, pc);
            // else: redundant row; its artificial stays basic at zero
        }
        for (int j = 0; j < tab.ncols; ++j)
            if (artificial[j]) tab.banned[j] = 1;
    }

    std::vector<Rational> cost(tab.ncols, Rational(0));
    for (int j = 0; j < n; ++j) cost[j] = lp.c[j];
    if (!tab.run(cost)) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs(i);
    sol.objective = 0;
    for (int j = 0; j < n; ++j) sol.objective += lp.c[j] * sol.x[j];

    // y = cost_B B^-1, read through each row's identity column, mapped back
    // through the sign normalization
    sol.y.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        Rational yi(0);
        for (int r = 0; r < m; ++r)
            if (cost[tab.basis[r]] != 0) yi += cost[tab.basis[r]] * tab.t[r][ident[i]];
        sol.y[i] = Rational(flip[i]) * yi;
    }
    return sol;
}

bool verify_lp_certificate(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::Optimal) return false;
    int m = static_cast<int>(lp.A.size());
    int n = static_cast<int>(lp.c.size());
    // primal feasibility
    for (int j = 0; j < n; ++j)
        if (sol.x[j] < 0) return false;
    for (int i = 0; i < m; ++i) {
        Rational lhs(0);
        for (int j = 0; j < n; ++j) lhs += lp.A[i][j] * sol.x[j];
        if (lp.sense[i] == Sense::LE && lhs > lp.b[i]) return false;
        if (lp.sense[i] == Sense::GE && lhs < lp.b[i]) return false;
        if (lp.sense[i] == Sense::EQ && lhs != lp.b[i]) return false;
    }
    // dual feasibility: y_i >= 0 for LE, <= 0 for GE, free for EQ; y^T A >= c
    for (int i = 0; i < m; ++i) {
        if (lp.sense[i] == Sense::LE && sol.y[i] < 0) return false;
        if (lp.sense[i] == Sense::GE && sol.y[i] > 0) return false;
    }
    for (int j = 0; j < n; ++j) {
        Rational lhs(0);
        for (int i = 0; i < m; ++i) lhs += sol.y[i] * lp.A[i][j];
        if (lhs < lp.c[j]) return false;
    }
    // zero gap
    Rational dual_obj(0);
    for (int i = 0; i < m; ++i) dual_obj += sol.y[i] * lp.b[i];
    Rational primal_obj(0);
    for (int j = 0; j < n; ++j) primal_obj += lp.c[j] * sol.x[j];
    return dual_obj == primal_obj && primal_obj == sol.objective;
}

}  // namespace flexcol
