#pragma once

// Degree-zero localizations S_(f) as Hilbert bases of degree equations,
// Veronese subring generators, and chart dimension.

#include "diophantine.hpp"
#include "relevance.hpp"

namespace mgproj {

struct ReducedFraction {
    Monomial numerator;
    Monomial denominator;  // shares no variable with numerator; same degree in D

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
    friend bool operator<(const ReducedFraction& a, const ReducedFraction& b) {
        if (!(a.numerator == b.numerator)) return grlex_less(b.numerator, a.numerator);
        return grlex_less(b.denominator, a.denominator);
    }
};

// deg(x^a / f^k) = 0 over (a, k) in N^{n+1}: one equation per free coordinate
// of D, one congruence per torsion coordinate.
inline DiophantineSystem degree_zero_system(const GradedRing& ring, const Monomial& f) {
    if (f.exponents.size() != ring.num_vars())
        throw InvalidInput("monomial has wrong number of exponents");
    const std::size_t n = ring.num_vars();
    const GroupElement df = degree_of_monomial(ring, f);
    DiophantineSystem sys;
    sys.num_vars = n + 1;
    for (std::size_t j = 0; j < ring.group.rank; ++j) {
        IntVec row(n + 1);
        for (std::size_t i = 0; i < n; ++i) row[i] = ring.degrees[i].free[j];
        row[n] = -df.free[j];
        sys.equations.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < ring.group.torsion_count(); ++j) {
        Congruence cg;
        cg.coeffs.resize(n + 1);
        for (std::size_t i = 0; i < n; ++i) cg.coeffs[i] = ring.degrees[i].torsion[j];
        cg.coeffs[n] = -df.torsion[j];
        cg.modulus = ring.group.invariant_factors[j];
        sys.congruences.push_back(std::move(cg));
    }
    return sys;
}

struct DegreeZeroGenerators {
    std::vector<ReducedFraction> fractions;  // reduced, unit-free, deduplicated, sorted
    std::size_t raw_solution_count = 0;      // Hilbert basis size before reduction/merging
    bool irrelevant_input = false;           // set when f is not relevant
};

inline DegreeZeroGenerators degree_zero_generators(const GradedRing& ring, const Monomial& f,
                                                   const SolverOptions& opts = {}) {
    DegreeZeroGenerators out;
    out.irrelevant_input = !(ring.effective && relevance_report(ring, f).relevant);
    auto hb = hilbert_basis(degree_zero_system(ring, f), opts);
    out.raw_solution_count = hb.size();
    const std::size_t n = ring.num_vars();
    std::set<ReducedFraction> uniq;
    for (const auto& sol : hb) {
        Monomial num{IntVec(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(n))};
        Monomial den = mono_pow(f, sol[n]);
        Monomial g = mono_gcd(num, den);
        num = mono_div(num, g);
        den = mono_div(den, g);
        if (is_unit(num) && is_unit(den)) continue;  // witnesses f^j / f^j
        uniq.insert(ReducedFraction{std::move(num), std::move(den)});
    }
    out.fractions.assign(uniq.begin(), uniq.end());
    return out;
}

// Membership system for the Veronese subring S_H: monomial exponent vectors
// a in N^n with deg(a) in H. Membership in H is encoded by the Smith normal
// form of H's lattice basis.
inline DiophantineSystem veronese_system(const GradedRing& ring, const Subgroup& h) {
    if (!(h.ambient == ring.group))
        throw InvalidInput("veronese subring: subgroup of a different group");
    const std::size_t n = ring.num_vars();
    const std::size_t dim = ring.group.lift_dim();

    // lifted degree matrix M (n x dim)
    IntMat m_rows;
    for (const auto& d : ring.degrees) m_rows.push_back(lift(ring.group, d));

    DiophantineSystem sys;
    sys.num_vars = n;
    if (h.lattice.empty() && dim == 0) return sys;  // trivial group: no constraint

    auto snf = smith_normal_form(h.lattice, dim);
    // w = (a * M) * V must satisfy: s_i | w_i on the diagonal, w_i = 0 beyond.
    IntMat mv(n, IntVec(dim, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) mv[i][j] += m_rows[i][k] * snf.right[k][j];
    const std::size_t rank = snf.rank;  // = h.lattice.size(): basis rows independent
    for (std::size_t j = 0; j < dim; ++j) {
        IntVec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = mv[i][j];
        if (j < rank) {
            if (snf.diagonal[j] > 1)
                sys.congruences.push_back(Congruence{std::move(row), snf.diagonal[j]});
        } else {
            sys.equations.push_back(std::move(row));
        }
    }
    return sys;
}

// Minimal monomial algebra generators of S_H: the Hilbert basis of the
// membership system.
inline std::vector<Monomial> veronese_generators(const GradedRing& ring, const Subgroup& h,
                                                 const SolverOptions& opts = {}) {
    auto hb = hilbert_basis(veronese_system(ring, h), opts);
    std::vector<Monomial> gens;
    gens.reserve(hb.size());
    for (auto& sol : hb) gens.push_back(Monomial{std::move(sol)});
    std::sort(gens.begin(), gens.end(), GrlexGreater{});
    return gens;
}

// Krull dimension of the chart Spec S_(f): the rank of the lattice spanned by
// the Laurent exponents a - k*e_f of the degree-zero fractions. For relevant f
// under an effective grading this is n - r; the equality is asserted because a
// violation means a solver bug, not bad input.
inline std::size_t chart_dimension(const GradedRing& ring, const Monomial& f,
                                   const SolverOptions& opts = {}) {
    require_effective(ring);
    auto rep = relevance_report(ring, f);
    if (!rep.relevant)
        throw NotRelevant("chart_dimension: " + monomial_to_string(ring, f) + " is not relevant");
    auto hb = hilbert_basis(degree_zero_system(ring, f), opts);
    const std::size_t n = ring.num_vars();
    IntMat laurent;
    for (const auto& sol : hb) {
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = sol[i] - sol[n] * f.exponents[i];
        laurent.push_back(std::move(v));
    }
    const std::size_t dim = lattice_rank(laurent);
    if (dim != n - ring.group.rank)
        throw std::logic_error("chart dimension disagrees with n - rank(D) (internal error)");
    return dim;
}

inline std::string fraction_to_string(const GradedRing& ring, const ReducedFraction& fr) {
    auto wrap = [&](const Monomial& m) {
        std::string s = monomial_to_string(ring, m);
        return support(m).size() >= 2 ? "(" + s + ")" : s;
    };
    if (is_unit(fr.denominator)) return monomial_to_string(ring, fr.numerator);
    return wrap(fr.numerator) + "/" + wrap(fr.denominator);
}

}  // namespace mgproj
