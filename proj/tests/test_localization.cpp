#include <catch2/catch_amalgamated.hpp>

#include <mgproj/localization.hpp>
#include <mgproj/ring_spec.hpp>

#include <random>

#include "random_corpus.hpp"

using namespace mgproj;

namespace {

GradedRing double_origin() {
    AbelianGroup z2{2, {}};
    return make_graded_ring(z2, {"x", "y", "z"},
                            {make_element(z2, {1, 0}, {}), make_element(z2, {0, 1}, {}),
                             make_element(z2, {1, 1}, {})});
}

GradedRing torsion_ring() {
    AbelianGroup d{1, {2}};
    return make_graded_ring(d, {"x", "y", "z"},
                            {make_element(d, {1}, {0}), make_element(d, {0}, {1}),
                             make_element(d, {1}, {1})});
}

GradedRing projective_line() {
    AbelianGroup z{1, {}};
    GroupElement one = make_element(z, {1}, {});
    return make_graded_ring(z, {"x0", "x1"}, {one, one});
}

Monomial mono(const GradedRing& ring, const std::string& expr) {
    auto m = as_monomial(parse_expression(ring, expr));
    REQUIRE(m.has_value());
    return *m;
}

std::vector<std::string> fraction_strings(const GradedRing& ring,
                                          const std::vector<ReducedFraction>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(fraction_to_string(ring, f));
    return out;
}

}  // namespace

TEST_CASE("degree-zero systems encode the grading") {
    GradedRing ring = double_origin();
    DiophantineSystem sys = degree_zero_system(ring, mono(ring, "x*z"));
    CHECK(sys.num_vars == 4);
    CHECK(sys.equations == IntMat{{1, 0, 1, -2}, {0, 1, 1, -1}});
    CHECK(sys.congruences.empty());

    GradedRing t = torsion_ring();
    DiophantineSystem tsys = degree_zero_system(t, mono(t, "x"));
    CHECK(tsys.equations == IntMat{{1, 0, 1, -1}});
    REQUIRE(tsys.congruences.size() == 1);
    CHECK(tsys.congruences[0].coeffs == IntVec{0, 1, 1, 0});
    CHECK(tsys.congruences[0].modulus == 2);
}

TEST_CASE("chart generators of the double-origin plane") {
    GradedRing ring = double_origin();
    SECTION("f = xy") {
        auto gen = degree_zero_generators(ring, mono(ring, "x*y"));
        CHECK_FALSE(gen.irrelevant_input);
        REQUIRE(gen.fractions.size() == 1);
        CHECK(gen.fractions[0] ==
              ReducedFraction{mono(ring, "z"), mono(ring, "x*y")});
        CHECK(fraction_strings(ring, gen.fractions) ==
              std::vector<std::string>{"z/(x*y)"});
    }
    SECTION("f = xz and f = yz give the same chart ring") {
        auto xz = degree_zero_generators(ring, mono(ring, "x*z"));
        auto yz = degree_zero_generators(ring, mono(ring, "y*z"));
        REQUIRE(xz.fractions.size() == 1);
        CHECK(xz.fractions[0] ==
              ReducedFraction{mono(ring, "x*y"), mono(ring, "z")});
        CHECK(xz.fractions == yz.fractions);
        CHECK(fraction_strings(ring, xz.fractions) ==
              std::vector<std::string>{"(x*y)/z"});
    }
    SECTION("irrelevant f is flagged and generates nothing") {
        auto gen = degree_zero_generators(ring, mono(ring, "x"));
        CHECK(gen.irrelevant_input);
        CHECK(gen.fractions.empty());
        CHECK(gen.raw_solution_count == 1);  // the unit witness x/x
    }
}

TEST_CASE("chart generators of the projective line") {
    GradedRing ring = projective_line();
    auto gen = degree_zero_generators(ring, mono(ring, "x0"));
    CHECK_FALSE(gen.irrelevant_input);
    REQUIRE(gen.fractions.size() == 1);
    CHECK(gen.fractions[0] == ReducedFraction{mono(ring, "x1"), mono(ring, "x0")});
    CHECK(fraction_strings(ring, gen.fractions) == std::vector<std::string>{"x1/x0"});
}

TEST_CASE("chart generators under torsion") {
    GradedRing ring = torsion_ring();
    auto x = degree_zero_generators(ring, mono(ring, "x"));
    CHECK(fraction_strings(ring, x.fractions) ==
          std::vector<std::string>{"y^2", "(y*z)/x", "z^2/x^2"});
    auto z = degree_zero_generators(ring, mono(ring, "z"));
    CHECK(fraction_strings(ring, z.fractions) ==
          std::vector<std::string>{"x^2/z^2", "(x*y)/z", "y^2"});
}

TEST_CASE("weighted projective charts") {
    AbelianGroup zgrp{1, {}};
    GradedRing ring = make_graded_ring(
        zgrp, {"x0", "x1", "x2"},
        {make_element(zgrp, {1}, {}), make_element(zgrp, {2}, {}),
         make_element(zgrp, {3}, {})});
    CHECK(fraction_strings(ring, degree_zero_generators(ring, mono(ring, "x0")).fractions) ==
          std::vector<std::string>{"x1/x0^2", "x2/x0^3"});
    CHECK(fraction_strings(ring, degree_zero_generators(ring, mono(ring, "x1")).fractions) ==
          std::vector<std::string>{"x0^2/x1", "(x0*x2)/x1^2", "x2^2/x1^3"});
    CHECK(fraction_strings(ring, degree_zero_generators(ring, mono(ring, "x2")).fractions) ==
          std::vector<std::string>{"x0^3/x2", "x1^3/x2^2", "(x0*x1)/x2"});
}

TEST_CASE("fractions are reduced and of degree zero") {
    std::mt19937_64 rng(717);
    testutil::RingParams p;
    int checked = 0;
    while (checked < 60) {
        GradedRing ring = testutil::random_relevant_ring(rng, p);
        auto gens = monomic_generators(ring);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        Monomial f = gens[pick(rng)];
        auto out = degree_zero_generators(ring, f);
        REQUIRE_FALSE(out.irrelevant_input);
        for (const auto& fr : out.fractions) {
            // numerator and denominator share no variable
            REQUIRE(is_unit(mono_gcd(fr.numerator, fr.denominator)));
            // same degree on both sides
            REQUIRE(degree_of_monomial(ring, fr.numerator) ==
                    degree_of_monomial(ring, fr.denominator));
            // denominators divide a power of f
            REQUIRE(mono_divides(squarefree_part(fr.denominator), squarefree_part(f)));
            REQUIRE_FALSE((is_unit(fr.numerator) && is_unit(fr.denominator)));
        }
        // deterministic and sorted
        REQUIRE(std::is_sorted(out.fractions.begin(), out.fractions.end()));
        REQUIRE(degree_zero_generators(ring, f).fractions == out.fractions);
        ++checked;
    }
}

TEST_CASE("veronese subring generators") {
    SECTION("index-two subgroup of the standard grading") {
        GradedRing ring = projective_line();
        Subgroup h =
            subgroup_from_generators(ring.group, {make_element(ring.group, {2}, {})});
        auto gens = veronese_generators(ring, h);
        REQUIRE(gens.size() == 3);
        CHECK(gens[0] == mono(ring, "x0^2"));
        CHECK(gens[1] == mono(ring, "x0*x1"));
        CHECK(gens[2] == mono(ring, "x1^2"));
    }
    SECTION("full group recovers the variables") {
        GradedRing ring = projective_line();
        Subgroup h = subgroup_from_generators(
            ring.group, {make_element(ring.group, {1}, {})});
        auto gens = veronese_generators(ring, h);
        REQUIRE(gens.size() == 2);
        CHECK(gens[0] == mono(ring, "x0"));
        CHECK(gens[1] == mono(ring, "x1"));
    }
    SECTION("free part of a torsion grading") {
        GradedRing ring = torsion_ring();
        Subgroup free_part = subgroup_from_generators(
            ring.group, {make_element(ring.group, {1}, {0})});
        auto gens = veronese_generators(ring, free_part);
        std::vector<Monomial> expected = {mono(ring, "y^2"), mono(ring, "y*z"),
                                          mono(ring, "z^2"), mono(ring, "x")};
        CHECK(gens == expected);
    }
    SECTION("trivial ambient group imposes no condition") {
        AbelianGroup triv{0, {}};
        GradedRing ring =
            make_graded_ring(triv, {"x", "y"}, {zero_element(triv), zero_element(triv)});
        Subgroup h = subgroup_from_generators(triv, {});
        auto gens = veronese_generators(ring, h);
        REQUIRE(gens.size() == 2);
        CHECK(gens[0] == mono(ring, "x"));
        CHECK(gens[1] == mono(ring, "y"));
    }
    SECTION("subgroup of a different group is rejected") {
        GradedRing ring = projective_line();
        AbelianGroup z2{2, {}};
        Subgroup wrong = subgroup_from_generators(z2, {make_element(z2, {1, 0}, {})});
        CHECK_THROWS_AS(veronese_generators(ring, wrong), InvalidInput);
    }
}

TEST_CASE("veronese membership property") {
    std::mt19937_64 rng(718);
    testutil::RingParams p;
    p.max_vars = 4;
    p.entry_bound = 2;
    std::uniform_int_distribution<int> entry(-2, 2);
    int checked = 0;
    while (checked < 50) {
        GradedRing ring = testutil::random_effective_ring(rng, p);
        // random subgroup of the grading group
        std::vector<GroupElement> hgens;
        for (int k = 0; k < 2; ++k) {
            IntVec free(ring.group.rank), tors(ring.group.torsion_count());
            for (auto& e : free) e = entry(rng);
            for (auto& e : tors) e = entry(rng);
            hgens.push_back(make_element(ring.group, std::move(free), std::move(tors)));
        }
        Subgroup h = subgroup_from_generators(ring.group, hgens);
        auto gens = veronese_generators(ring, h);
        for (const auto& g : gens)
            REQUIRE(contains(h, degree_of_monomial(ring, g)));
        // brute check: low monomials with degree in H decompose over the basis
        DiophantineSystem sys = veronese_system(ring, h);
        IntVec v(ring.num_vars(), 0);
        IntMat basis;
        for (const auto& g : gens) basis.push_back(g.exponents);
        for (;;) {
            Monomial m{v};
            bool in_h = contains(h, degree_of_monomial(ring, m));
            REQUIRE(satisfies(sys, v) == in_h);
            if (in_h) REQUIRE(testutil::is_ncombination(v, basis));
            std::size_t i = 0;
            while (i < ring.num_vars() && v[i] == 3) v[i++] = 0;
            if (i == ring.num_vars()) break;
            ++v[i];
        }
        ++checked;
    }
}

TEST_CASE("integrality exponents witness monomial powers") {
    std::mt19937_64 rng(719);
    testutil::RingParams p;
    int checked = 0;
    while (checked < 50) {
        GradedRing ring = testutil::random_effective_ring(rng, p);
        if (ring.group.torsion_count() == 0) continue;
        // F = free part of D
        std::vector<GroupElement> fgens;
        for (std::size_t j = 0; j < ring.group.rank; ++j) {
            IntVec e(ring.group.rank, 0);
            e[j] = 1;
            fgens.push_back(make_element(ring.group, std::move(e),
                                         IntVec(ring.group.torsion_count(), 0)));
        }
        Subgroup f = subgroup_from_generators(ring.group, fgens);
        for (std::size_t i = 0; i < ring.num_vars(); ++i) {
            auto n = integrality_exponent(ring.group, f, ring.degrees[i]);
            REQUIRE(n.has_value());
            // T_i^N lies in the Veronese subring S_F
            Monomial power = unit_monomial(ring.num_vars());
            power.exponents[i] = *n;
            REQUIRE(contains(f, degree_of_monomial(ring, power)));
            // and N is minimal with that property
            for (Int k = 1; k < *n; ++k) {
                Monomial below = unit_monomial(ring.num_vars());
                below.exponents[i] = k;
                REQUIRE_FALSE(contains(f, degree_of_monomial(ring, below)));
            }
        }
        ++checked;
    }
}

TEST_CASE("chart dimensions") {
    SECTION("frozen examples") {
        GradedRing ring = double_origin();
        CHECK(chart_dimension(ring, mono(ring, "x*y")) == 1);
        CHECK(chart_dimension(ring, mono(ring, "x*z")) == 1);
        GradedRing p1 = projective_line();
        CHECK(chart_dimension(p1, mono(p1, "x0")) == 1);
        AbelianGroup z2{2, {}};
        GradedRing trivial = make_graded_ring(
            z2, {"x", "y"},
            {make_element(z2, {1, 0}, {}), make_element(z2, {0, 1}, {})});
        CHECK(chart_dimension(trivial, mono(trivial, "x*y")) == 0);
    }
    SECTION("irrelevant monomials are rejected") {
        GradedRing ring = double_origin();
        CHECK_THROWS_AS(chart_dimension(ring, mono(ring, "x")), NotRelevant);
    }
    SECTION("dimension equals variables minus rank on random rings") {
        std::mt19937_64 rng(720);
        testutil::RingParams p;
        int checked = 0;
        while (checked < 100) {
            GradedRing ring = testutil::random_relevant_ring(rng, p);
            for (const auto& f : monomic_generators(ring))
                REQUIRE(chart_dimension(ring, f) == ring.num_vars() - ring.group.rank);
            ++checked;
        }
    }
}

TEST_CASE("fraction display") {
    GradedRing ring = double_origin();
    CHECK(fraction_to_string(ring, {mono(ring, "z"), mono(ring, "x*y")}) == "z/(x*y)");
    CHECK(fraction_to_string(ring, {mono(ring, "x*y"), mono(ring, "z")}) == "(x*y)/z");
    CHECK(fraction_to_string(ring, {mono(ring, "y^2"), unit_monomial(3)}) == "y^2");
    CHECK(fraction_to_string(ring, {mono(ring, "z^2"), mono(ring, "x^2")}) == "z^2/x^2");
}
