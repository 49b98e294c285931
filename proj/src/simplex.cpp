#include "itdual/simplex.hpp"

#include <stdexcept>
#include <string>

namespace itdual {

namespace {

// Dense phase-1 tableau for A y = b, y >= 0, minimizing the sum of one
// artificial per row. Column layout: k structural columns, then m
// artificials, then the right-hand side.
struct Tableau {
    int rows;
    int cols;  // structural + artificial
    std::vector<std::vector<Rat>> t;
    std::vector<Rat> reduced;  // reduced costs per column
    std::vector<int> basis;    // basic column per row
    Rat objective;             // current sum of artificials

    Tableau(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& rhs)
        : rows(static_cast<int>(rhs.size())),
          cols(static_cast<int>(columns.size()) + rows),
          t(rows, std::vector<Rat>(cols + 1, Rat(0))),
          reduced(cols, Rat(0)),
          basis(rows),
          objective(0)
    {
        const int k = static_cast<int>(columns.size());
        for (int j = 0; j < k; ++j) {
            if (columns[j].size() != static_cast<size_t>(rows))
                throw std::invalid_argument("column/rhs dimension mismatch");
        }
        for (int i = 0; i < rows; ++i) {
            const bool flip = rhs[i] < 0;
            for (int j = 0; j < k; ++j)
                t[i][j] = flip ? Rat(-columns[j][i]) : columns[j][i];
            t[i][k + i] = 1;
            t[i][cols] = flip ? Rat(-rhs[i]) : rhs[i];
            basis[i] = k + i;
        }
        // cost 1 on artificials, 0 on structurals: r_j = -sum_i a_ij for
        // structural j, 0 for artificials; z = sum_i b_i
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < rows; ++i)
                reduced[j] -= t[i][j];
        for (int i = 0; i < rows; ++i)
            objective += t[i][cols];
    }

    void pivot(int row, int col)
    {
        auto& pr = t[row];
        const Rat p = pr[col];
        for (auto& v : pr)
            if (v != 0)
                v /= p;
        pr[col] = 1;  // avoid drift from the division loop skipping zeros
        for (int i = 0; i < rows; ++i) {
            if (i == row || t[i][col] == 0)
                continue;
            const Rat f = t[i][col];
            for (int j = 0; j <= cols; ++j)
                if (pr[j] != 0)
                    t[i][j] -= f * pr[j];
            t[i][col] = 0;
        }
        if (reduced[col] != 0) {
            const Rat f = reduced[col];
            for (int j = 0; j < cols; ++j)
                if (pr[j] != 0)
                    reduced[j] -= f * pr[j];
            reduced[col] = 0;
            objective += f * pr[cols];  // entering at level theta changes z by r_col * theta
        }
        basis[row] = col;
    }

    void solve()
    {
        while (true) {
            // Bland: entering column is the lowest index with negative
            // reduced cost; leaving row breaks ratio ties by lowest basic
            // column index. Guarantees termination.
            int enter = -1;
            for (int j = 0; j < cols; ++j) {
                if (reduced[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0)
                return;
            int leave = -1;
            Rat best;
            for (int i = 0; i < rows; ++i) {
                if (t[i][enter] <= 0)
                    continue;
                Rat ratio = t[i][cols] / t[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                throw std::logic_error("phase-1 objective unbounded");
            pivot(leave, enter);
        }
    }
};

}

ConeDecision decide_cone_membership(const std::vector<std::vector<Rat>>& columns,
                                    const std::vector<Rat>& rhs)
{
    const int k = static_cast<int>(columns.size());
    const int m = static_cast<int>(rhs.size());

    Tableau tab(columns, rhs);
    tab.solve();

    ConeDecision out;
    if (tab.objective == 0) {
        out.feasible = true;
        out.combination.assign(k, Rat(0));
        for (int i = 0; i < m; ++i)
            if (tab.basis[i] < k)
                out.combination[tab.basis[i]] = tab.t[i][tab.cols];
        // exact re-check of A y = b
        for (int i = 0; i < m; ++i) {
            Rat sum = 0;
            for (int j = 0; j < k; ++j)
                if (out.combination[j] != 0)
                    sum += columns[j][i] * out.combination[j];
            if (sum != rhs[i])
                throw std::logic_error("simplex produced an invalid combination");
        }
        return out;
    }

    // Simplex multipliers from the artificial reduced costs: pi_i = 1 - r_{k+i}
    // satisfies pi^T A <= 0 and <pi, b> > 0 on the sign-flipped system; undo
    // the flips and negate to get the separator direction.
    out.feasible = false;
    out.separator.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat pi = Rat(1) - tab.reduced[k + i];
        out.separator[i] = rhs[i] < 0 ? pi : Rat(-pi);
    }
    Rat pairing = 0;
    for (int i = 0; i < m; ++i)
        pairing += out.separator[i] * rhs[i];
    if (pairing >= 0)
        throw std::logic_error("simplex produced an invalid separator");
    for (int j = 0; j < k; ++j) {
        Rat dot = 0;
        for (int i = 0; i < m; ++i)
            dot += out.separator[i] * columns[j][i];
        if (dot < 0)
            throw std::logic_error("simplex separator violates a cone generator");
    }
    return out;
}

}
