#pragma once

// Relevance of homogeneous elements: support groups D^f, weight cones C_D(f),
// the three independently computed relevance criteria, and the monomic
// generating set of the irrelevant ideal S_+.

#include "exact_lp.hpp"
#include "graded_ring.hpp"

namespace mgproj {

inline void require_effective(const GradedRing& ring) {
    if (!ring.effective)
        throw NotEffective(
            "the grading is not effective (degrees do not generate the group); "
            "re-grade with effectivize / --effectivize first");
}

// Degrees of the variables dividing m, in variable order (duplicates kept).
inline std::vector<GroupElement> support_degrees(const GradedRing& ring, const Monomial& m) {
    std::vector<GroupElement> degs;
    for (std::size_t i : support(m)) degs.push_back(ring.degrees[i]);
    return degs;
}

// D^f: in a polynomial ring the homogeneous divisors of powers of a monomial
// are exactly the monomials in its support variables, so their degrees
// generate the group of degrees of homogeneous units of S_f.
inline Subgroup support_group(const GradedRing& ring, const Monomial& m) {
    return subgroup_from_generators(ring.group, support_degrees(ring, m));
}

inline Cone weight_cone_of_monomial(const GradedRing& ring, const Monomial& m) {
    IntMat free_parts;
    for (const auto& d : support_degrees(ring, m)) free_parts.push_back(d.free);
    return make_cone(ring.group.rank, free_parts);
}

struct RelevanceReport {
    Monomial f;
    std::vector<GroupElement> support_degrees;
    Subgroup support_group;
    std::optional<Int> index;  // [D : D^f]; nullopt = infinite
    Cone cone;                 // C_D(f)
    bool cone_full_dim = false;
    bool deg_in_interior = false;
    bool relevant = false;
    bool strongly_relevant = false;
};

// The three criteria (finite index, full-dimensional weight cone, degree in
// the cone interior) are computed along independent routes and must agree.
inline RelevanceReport relevance_report(const GradedRing& ring, const Monomial& m) {
    require_effective(ring);
    if (m.exponents.size() != ring.num_vars())
        throw InvalidInput("monomial has wrong number of exponents");
    const std::size_t r = ring.group.rank;

    RelevanceReport rep;
    rep.f = m;
    rep.support_degrees = support_degrees(ring, m);
    rep.support_group = support_group(ring, m);
    rep.index = subgroup_index(rep.support_group);
    rep.cone = weight_cone_of_monomial(ring, m);
    rep.cone_full_dim = (cone_dim(rep.cone) == r);

    IntMat gens;
    for (const auto& d : rep.support_degrees) gens.push_back(d.free);
    rep.deg_in_interior = cone_interior_member(gens, degree_of_monomial(ring, m).free, r);

    rep.relevant = rep.index.has_value();
    if (rep.relevant != rep.cone_full_dim || rep.relevant != rep.deg_in_interior)
        throw std::logic_error("relevance criteria disagree (internal error)");
    rep.strongly_relevant = rep.relevant && *rep.index == 1;
    return rep;
}

// A monomial term qualifies when its support degrees span full free rank;
// then a size-r subset of the support already generates a rank-r subgroup.
inline bool term_has_full_support_rank(const GradedRing& ring, const Monomial& m) {
    IntMat free_parts;
    for (const auto& d : support_degrees(ring, m)) free_parts.push_back(d.free);
    return lattice_rank(free_parts) == ring.group.rank;
}

inline bool is_relevant_polynomial(const GradedRing& ring, const Polynomial& p) {
    require_effective(ring);
    if (p.is_zero()) throw InvalidInput("the zero polynomial has no relevance");
    auto comps = homogeneous_components(ring, p);
    if (comps.size() > 1) {
        std::string degs;
        for (const auto& [d, comp] : comps) {
            if (!degs.empty()) degs += ", ";
            degs += element_to_string(ring.group, d);
        }
        throw InvalidInput("polynomial is not homogeneous; degrees occurring: " + degs);
    }
    if (ring.group.rank == 0) return true;  // every subgroup of a finite group has finite index
    if (p.terms.size() == 1) return relevance_report(ring, p.terms.begin()->first).relevant;
    // Multi-term homogeneous elements force r < n, the factorization lemma's setting.
    for (const auto& [m, c] : p.terms)
        if (!term_has_full_support_rank(ring, m)) return false;
    return true;
}

// All squarefree products of exactly r variables whose degrees generate a
// rank-r subgroup, in descending graded-lex order. For r = 0 the empty
// product qualifies: the unit monomial generates S_+ = S.
inline std::vector<Monomial> monomic_generators(const GradedRing& ring) {
    require_effective(ring);
    const std::size_t n = ring.num_vars();
    const std::size_t r = ring.group.rank;
    std::vector<Monomial> gens;
    if (r > n) return gens;
    std::vector<std::size_t> idx(r);
    // enumerate size-r subsets of {0..n-1}
    auto emit = [&]() {
        IntMat free_parts;
        for (std::size_t i : idx) free_parts.push_back(ring.degrees[i].free);
        if (lattice_rank(free_parts) != r) return;
        Monomial m = unit_monomial(n);
        for (std::size_t i : idx) m.exponents[i] = 1;
        gens.push_back(std::move(m));
    };
    if (r == 0) {
        emit();
    } else {
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        for (;;) {
            emit();
            std::size_t i = r;
            while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(gens.begin(), gens.end(), GrlexGreater{});
    return gens;
}

inline bool in_irrelevant_ideal(const GradedRing& ring, const Monomial& m) {
    require_effective(ring);
    for (const auto& g : monomic_generators(ring))
        if (mono_divides(g, m)) return true;
    return false;
}

}  // namespace mgproj
