#pragma once

// The chart atlas of Proj: one degree-zero chart per monomic generator of the
// irrelevant ideal, duplicate detection, torsor diagnostics, and the ambient
// group scheme.

#include "localization.hpp"

namespace mgproj {

struct Chart {
    Monomial f;
    std::vector<ReducedFraction> generators;
    Subgroup support_group;          // D^f inside D
    Int index = 0;                   // [D : D^f], finite for relevant f
    bool strongly_relevant = false;  // index == 1
    bool pseudo_g_torsor = false;    // Spec S -> Spec S_(f) is a pseudo-torsor under G
    bool gf_torsor = true;           // always a torsor under the subgroup scheme G^f
    bool geometric_quotient = true;  // the chart is Spec S / G
    std::size_t dimension = 0;
};

struct ProjAtlas {
    GradedRing ring;
    std::vector<Chart> charts;
    // Partition of chart indices by equal generator sets; groups of size >= 2
    // witness glueing along identity maps (non-separatedness candidates).
    std::vector<std::vector<std::size_t>> duplicate_groups;
    bool is_trivial = false;  // single chart of dimension 0: Proj is one point
    GroupSchemeDecomposition group;
};

inline Chart build_chart(const GradedRing& ring, const Monomial& f, const SolverOptions& opts = {}) {
    auto rep = relevance_report(ring, f);
    if (!rep.relevant)
        throw NotRelevant("chart of non-relevant monomial " + monomial_to_string(ring, f) +
                          ": index [D : D^f] is infinite");
    Chart c;
    c.f = f;
    c.generators = degree_zero_generators(ring, f, opts).fractions;
    c.support_group = rep.support_group;
    c.index = *rep.index;
    c.strongly_relevant = rep.strongly_relevant;
    c.pseudo_g_torsor = rep.strongly_relevant;
    c.gf_torsor = true;
    c.geometric_quotient = true;
    c.dimension = chart_dimension(ring, f, opts);
    return c;
}

inline ProjAtlas build_atlas(const GradedRing& ring, const SolverOptions& opts = {}) {
    require_effective(ring);
    ProjAtlas atlas;
    atlas.ring = ring;
    auto gens = monomic_generators(ring);
    for (const auto& g : gens) {
        try {
            atlas.charts.push_back(build_chart(ring, g, opts));
        } catch (const ResourceLimit& e) {
            throw ResourceLimit(std::string(e.what()) + " (chart " + monomial_to_string(ring, g) + ")");
        }
    }

    std::vector<bool> grouped(atlas.charts.size(), false);
    for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
        if (grouped[i]) continue;
        std::vector<std::size_t> group{i};
        for (std::size_t j = i + 1; j < atlas.charts.size(); ++j)
            if (!grouped[j] && atlas.charts[j].generators == atlas.charts[i].generators) {
                group.push_back(j);
                grouped[j] = true;
            }
        atlas.duplicate_groups.push_back(std::move(group));
    }

    atlas.is_trivial = atlas.charts.size() == 1 && atlas.charts[0].dimension == 0;
    atlas.group = group_scheme_decomposition(ring.group);
    return atlas;
}

struct TorsorDiagnostics {
    Monomial f;
    Int index = 0;
    bool strongly_relevant = false;
    bool pseudo_g_torsor = false;
    bool gf_torsor = true;
    bool geometric_quotient = true;
};

inline TorsorDiagnostics torsor_diagnostics(const GradedRing& ring, const Monomial& f) {
    require_effective(ring);
    auto rep = relevance_report(ring, f);
    if (!rep.relevant)
        throw NotRelevant("torsor diagnostics need a relevant monomial; " +
                          monomial_to_string(ring, f) + " has infinite index [D : D^f]");
    return TorsorDiagnostics{f, *rep.index, rep.strongly_relevant, rep.strongly_relevant, true, true};
}

// Atlas charts contained in the open set D+(h): Spec S_(g) lies inside D+(h)
// exactly when g vanishes wherever h does, i.e. supp(h) is a subset of
// supp(g). For h = 1 every chart qualifies, and the selection turns products
// into intersections: charts(g*h) = charts(g) intersect charts(h).
inline std::vector<Monomial> dplus_charts(const GradedRing& ring, const Monomial& h) {
    require_effective(ring);
    if (h.exponents.size() != ring.num_vars())
        throw InvalidInput("monomial has wrong number of exponents");
    auto gens = monomic_generators(ring);
    if (is_unit(h)) return gens;
    auto hs = support(h);
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        auto gs = support(g);
        if (std::includes(gs.begin(), gs.end(), hs.begin(), hs.end())) out.push_back(g);
    }
    return out;
}

}  // namespace mgproj
