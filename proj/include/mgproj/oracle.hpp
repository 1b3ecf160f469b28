#pragma once

// Brute-force enumeration oracles. Deliberately naive and budget-bounded:
// they provide an independent ground truth for the lattice and Hilbert-basis
// computations, both in the test suite and behind the --oracle CLI flag.

#include <optional>
#include <queue>

#include "localization.hpp"

namespace mgproj {

struct SearchBudget {
    std::size_t exponent_bound = 6;   // box bound for exponent enumeration
    std::size_t coset_bound = 4096;   // max cosets visited before UNKNOWN
    std::size_t step_bound = 1'000'000;
};

// All (a, k) in the box [0, exponent_bound]^{n+1} with deg(x^a) = k*deg(f),
// including (0, 0); sorted lexicographically.
inline std::vector<IntVec> brute_degree_zero(const GradedRing& ring, const Monomial& f,
                                             const SearchBudget& budget = {}) {
    if (f.exponents.size() != ring.num_vars())
        throw InvalidInput("monomial has wrong number of exponents");
    const std::size_t n = ring.num_vars();
    const GroupElement df = degree_of_monomial(ring, f);
    const Int bound = budget.exponent_bound;
    std::vector<IntVec> out;
    IntVec v(n + 1, 0);
    while (true) {
        Monomial a{IntVec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n))};
        GroupElement da = degree_of_monomial(ring, a);
        GroupElement target = scale(ring.group, v[n], df);
        if (da == target) out.push_back(v);
        std::size_t i = 0;
        while (i <= n && v[i] == bound) v[i++] = 0;
        if (i > n) break;
        ++v[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Breadth-first coset enumeration of ambient/H from the identity, stepping by
// the images of the standard generators. Returns the coset count if the walk
// closes within coset_bound, otherwise nullopt (UNKNOWN).
inline std::optional<Int> brute_subgroup_index(const Subgroup& h, const SearchBudget& budget = {}) {
    const std::size_t dim = h.ambient.lift_dim();
    IntVec start = reduce_by_hnf(h.lattice, IntVec(dim, 0));
    std::set<IntVec> seen{start};
    std::queue<IntVec> work;
    work.push(start);
    while (!work.empty()) {
        IntVec cur = work.front();
        work.pop();
        for (std::size_t j = 0; j < dim; ++j)
            for (int sgn : {1, -1}) {
                IntVec next = cur;
                next[j] += sgn;
                next = reduce_by_hnf(h.lattice, next);
                if (seen.insert(next).second) {
                    if (seen.size() > budget.coset_bound) return std::nullopt;
                    work.push(next);
                }
            }
    }
    return Int(seen.size());
}

inline std::optional<Int> brute_subgroup_index(const AbelianGroup& d, const Subgroup& h,
                                               const SearchBudget& budget = {}) {
    if (!(h.ambient == d)) throw InvalidInput("subgroup of a different group");
    return brute_subgroup_index(h, budget);
}

// All nonzero solutions in the box [0, exponent_bound]^n that are not a sum
// of two smaller nonzero solutions; sorted lexicographically. Within the box
// this is exactly the Hilbert basis restricted to the box.
inline IntMat brute_minimal_solutions(const DiophantineSystem& sys, const SearchBudget& budget = {}) {
    const std::size_t n = sys.num_vars;
    const Int bound = budget.exponent_bound;
    IntMat sols;
    IntVec v(n, 0);
    while (true) {
        bool nonzero = false;
        for (const auto& e : v)
            if (e != 0) nonzero = true;
        if (nonzero && satisfies(sys, v)) sols.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == bound) v[i++] = 0;
        if (i >= n) break;
        ++v[i];
    }
    IntMat minimal;
    for (const auto& s : sols) {
        bool reducible = false;
        for (const auto& p : sols) {
            if (p == s) continue;
            bool leq = true;
            for (std::size_t j = 0; j < n; ++j)
                if (p[j] > s[j]) {
                    leq = false;
                    break;
                }
            if (!leq) continue;
            IntVec rest(n);
            for (std::size_t j = 0; j < n; ++j) rest[j] = s[j] - p[j];
            if (satisfies(sys, rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

// Relevance by unit search: every monomial divisor of f becomes a unit in
// S_f, and the degrees of those divisors generate the same subgroup as the
// degrees of divisors of any power of f (each of the latter is an
// N-combination of the former). f is relevant iff the coset walk over that
// subgroup closes, i.e. the index is finite.
inline bool brute_relevant(const GradedRing& ring, const Monomial& f, const SearchBudget& budget = {}) {
    if (f.exponents.size() != ring.num_vars())
        throw InvalidInput("monomial has wrong number of exponents");
    const std::size_t n = ring.num_vars();
    std::vector<GroupElement> degs;
    IntVec v(n, 0);
    while (true) {
        degs.push_back(degree_of_monomial(ring, Monomial{v}));
        std::size_t i = 0;
        while (i < n && v[i] == f.exponents[i]) v[i++] = 0;
        if (i >= n) break;
        ++v[i];
    }
    Subgroup h = subgroup_from_generators(ring.group, degs);
    return brute_subgroup_index(h, budget).has_value();
}

}  // namespace mgproj
