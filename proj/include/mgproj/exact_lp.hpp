#pragma once

// Exact rational linear programming, just enough for the cone interior test:
// Fourier-Motzkin elimination for small ambient rank, phase-1 simplex with
// Bland's rule otherwise. No floating point anywhere.

#include "normal_form.hpp"
#include "types.hpp"

#include <set>

namespace mgproj {

// One inequality sum_i coeffs[i] * x_i <= bound.
struct LinearConstraint {
    RatVec coeffs;
    Rat bound;
};

namespace detail {

// Scale to a primitive integer vector (including the bound) for deduplication.
inline std::vector<Int> normalized_key(const LinearConstraint& c) {
    Int den_lcm = 1;
    for (const auto& q : c.coeffs) den_lcm = lcm_int(den_lcm, denominator(q));
    den_lcm = lcm_int(den_lcm, denominator(c.bound));
    std::vector<Int> key;
    key.reserve(c.coeffs.size() + 1);
    Int g = 0;
    for (const auto& q : c.coeffs) {
        Int v = numerator(q) * (den_lcm / denominator(q));
        g = gcd_int(g, v);
        key.push_back(v);
    }
    Int vb = numerator(c.bound) * (den_lcm / denominator(c.bound));
    g = gcd_int(g, vb);
    key.push_back(vb);
    if (g > 1)
        for (auto& v : key) v /= g;
    return key;
}

}  // namespace detail

// Feasibility of a rational inequality system by Fourier-Motzkin elimination.
inline bool fourier_motzkin_feasible(std::vector<LinearConstraint> cons, std::size_t nvars) {
    for (std::size_t v_plus = nvars; v_plus > 0; --v_plus) {
        const std::size_t v = v_plus - 1;
        std::vector<LinearConstraint> pos, neg, zero;
        for (auto& c : cons) {
            if (c.coeffs[v] > 0)
                pos.push_back(std::move(c));
            else if (c.coeffs[v] < 0)
                neg.push_back(std::move(c));
            else
                zero.push_back(std::move(c));
        }
        std::set<std::vector<Int>> seen;
        std::vector<LinearConstraint> next;
        auto push_unique = [&](LinearConstraint c) {
            if (seen.insert(detail::normalized_key(c)).second) next.push_back(std::move(c));
        };
        for (auto& c : zero) push_unique(std::move(c));
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // p.coeffs[v] > 0, n.coeffs[v] < 0: the combination cancels x_v
                LinearConstraint c;
                c.coeffs.resize(nvars);
                const Rat& ap = p.coeffs[v];
                const Rat an = -n.coeffs[v];
                for (std::size_t j = 0; j < nvars; ++j)
                    c.coeffs[j] = an * p.coeffs[j] + ap * n.coeffs[j];
                c.bound = an * p.bound + ap * n.bound;
                push_unique(std::move(c));
            }
        cons = std::move(next);
        if (cons.empty()) return true;
    }
    for (const auto& c : cons)
        if (c.bound < 0) return false;
    return true;
}

// Feasibility of A x = b, x >= 0 by phase-1 simplex with Bland's rule.
inline bool simplex_feasible(std::vector<RatVec> a, RatVec b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a.front().size();
    if (m == 0) return true;
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& e : a[i]) e = -e;
            b[i] = -b[i];
        }
    // Tableau over columns [original vars | artificials], artificial basis.
    const std::size_t total = n + m;
    std::vector<RatVec> tab(m, RatVec(total + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = 1;
        tab[i][total] = b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    // objective: minimize sum of artificials; reduced costs for the current basis
    RatVec cost(total + 1, Rat(0));
    for (std::size_t j = n; j < total; ++j) cost[j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= total; ++j) cost[j] -= tab[i][j];

    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == total) break;  // optimal
        // leaving row: minimum ratio, ties by smallest basis index (Bland)
        std::size_t leave = m;
        Rat best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = tab[i][total] / tab[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // unbounded below cannot happen for phase 1; defensive
        // pivot
        Rat piv = tab[leave][enter];
        for (auto& e : tab[leave]) e /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= total; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (std::size_t j = 0; j <= total; ++j) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    // feasible iff all artificials can be driven to zero
    Rat objective = -cost[total];
    return objective == 0;
}

// Is target in the (full-dimensional) interior of cone(gens) in R^r?
// relint(cone(g_1..g_k)) is the set of strictly positive combinations, and
// after rational scaling strict positivity is equivalent to lambda_i >= 1 with
// the target scaled by some t >= 1. Lower-dimensional cones have empty interior.
inline bool cone_interior_member(const IntMat& gens, const IntVec& target, std::size_t r) {
    if (lattice_rank(gens) < r) return false;
    const std::size_t k = gens.size();
    // variables: lambda_1..lambda_k, t; constraints:
    //   sum_i lambda_i gens[i][j] - t*target[j] = 0 for each coordinate j
    //   lambda_i >= 1, t >= 1
    if (r <= 4) {
        std::vector<LinearConstraint> cons;
        for (std::size_t j = 0; j < r; ++j) {
            LinearConstraint eq;
            eq.coeffs.resize(k + 1);
            for (std::size_t i = 0; i < k; ++i) eq.coeffs[i] = gens[i][j];
            eq.coeffs[k] = -Rat(target[j]);
            eq.bound = 0;
            cons.push_back(eq);  // <= 0
            for (auto& e : eq.coeffs) e = -e;
            cons.push_back(std::move(eq));  // >= 0
        }
        for (std::size_t i = 0; i <= k; ++i) {
            LinearConstraint lb;
            lb.coeffs.assign(k + 1, Rat(0));
            lb.coeffs[i] = -1;
            lb.bound = -1;  // x_i >= 1
            cons.push_back(std::move(lb));
        }
        return fourier_motzkin_feasible(std::move(cons), k + 1);
    }
    // substitute lambda = 1 + u, t = 1 + s with u, s >= 0:
    //   sum_i u_i gens[i][j] - s*target[j] = target[j] - sum_i gens[i][j]
    std::vector<RatVec> a(r, RatVec(k + 1, Rat(0)));
    RatVec b(r, Rat(0));
    for (std::size_t j = 0; j < r; ++j) {
        Rat rhs = target[j];
        for (std::size_t i = 0; i < k; ++i) {
            a[j][i] = gens[i][j];
            rhs -= Rat(gens[i][j]);
        }
        a[j][k] = -Rat(target[j]);
        b[j] = rhs;
    }
    return simplex_feasible(std::move(a), std::move(b));
}

}  // namespace mgproj
