#pragma once

// D-graded polynomial rings k[T_1..T_n] with exact rational coefficients:
// monomials, polynomials, the degree map, homogeneity, weight cones, and
// effectiveness of the grading.

#include "abelian_group.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>

namespace mgproj {

struct Monomial {
    IntVec exponents;  // componentwise >= 0; the unit monomial is the zero vector

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial unit_monomial(std::size_t n) { return Monomial{IntVec(n, 0)}; }

inline bool is_unit(const Monomial& m) {
    return std::all_of(m.exponents.begin(), m.exponents.end(),
                       [](const Int& e) { return e == 0; });
}

inline Int total_degree(const Monomial& m) {
    Int t = 0;
    for (const auto& e : m.exponents) t += e;
    return t;
}

// Graded lexicographic: total degree first, then lexicographic with
// earlier-declared variables larger. Under the induced descending order the
// double-origin generators read [xy, xz, yz].
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    Int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb;
    return a.exponents < b.exponents;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial p = a;
    for (std::size_t i = 0; i < p.exponents.size(); ++i) p.exponents[i] += b.exponents[i];
    return p;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] > b.exponents[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b, requires b | a
    Monomial q = a;
    for (std::size_t i = 0; i < q.exponents.size(); ++i) {
        q.exponents[i] -= b.exponents[i];
        if (q.exponents[i] < 0) throw std::logic_error("mono_div: not divisible");
    }
    return q;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial g = a;
    for (std::size_t i = 0; i < g.exponents.size(); ++i)
        if (b.exponents[i] < g.exponents[i]) g.exponents[i] = b.exponents[i];
    return g;
}

inline Monomial mono_pow(const Monomial& a, const Int& k) {
    Monomial p = a;
    for (auto& e : p.exponents) e *= k;
    return p;
}

inline std::vector<std::size_t> support(const Monomial& m) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        if (m.exponents[i] > 0) s.push_back(i);
    return s;
}

inline Monomial squarefree_part(const Monomial& m) {
    Monomial s = m;
    for (auto& e : s.exponents)
        if (e > 1) e = 1;
    return s;
}

struct Polynomial {
    std::map<Monomial, Rat, GrlexLess> terms;  // no zero coefficients stored

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

inline Polynomial poly_zero() { return {}; }

inline Polynomial poly_from_monomial(const Monomial& m, const Rat& c = 1) {
    Polynomial p;
    if (c != 0) p.terms.emplace(m, c);
    return p;
}

inline Polynomial poly_constant(std::size_t n, const Rat& c) {
    return poly_from_monomial(unit_monomial(n), c);
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial s = a;
    for (const auto& [m, c] : b.terms) {
        auto it = s.terms.find(m);
        if (it == s.terms.end()) {
            s.terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) s.terms.erase(it);
        }
    }
    return s;
}

inline Polynomial poly_negate(const Polynomial& a) {
    Polynomial s = a;
    for (auto& [m, c] : s.terms) c = -c;
    return s;
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    return poly_add(a, poly_negate(b));
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial s;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m = mono_mul(ma, mb);
            Rat c = ca * cb;
            auto it = s.terms.find(m);
            if (it == s.terms.end()) {
                if (c != 0) s.terms.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) s.terms.erase(it);
            }
        }
    return s;
}

inline Polynomial poly_pow(const Polynomial& a, Int k, std::size_t num_vars) {
    if (k < 0) throw std::logic_error("poly_pow: negative exponent");
    Polynomial r = poly_constant(num_vars, 1);
    Polynomial base = a;
    while (k > 0) {
        if ((k & 1) != 0) r = poly_mul(r, base);
        k >>= 1;
        if (k > 0) base = poly_mul(base, base);
    }
    return r;
}

// If p is a single term with coefficient 1, return that monomial.
inline std::optional<Monomial> as_monomial(const Polynomial& p) {
    if (p.terms.size() != 1) return std::nullopt;
    const auto& [m, c] = *p.terms.begin();
    if (c != 1) return std::nullopt;
    return m;
}

struct Cone {
    std::size_t ambient_dim = 0;
    IntMat generators;  // nonzero, deduplicated, sorted; empty list is the zero cone
};

inline Cone make_cone(std::size_t dim, const IntMat& vectors) {
    std::set<IntVec> uniq;
    for (const auto& v : vectors) {
        if (v.size() != dim) throw std::logic_error("make_cone: dimension mismatch");
        if (std::any_of(v.begin(), v.end(), [](const Int& e) { return e != 0; })) uniq.insert(v);
    }
    return Cone{dim, IntMat(uniq.begin(), uniq.end())};
}

inline std::size_t cone_dim(const Cone& c) { return lattice_rank(c.generators); }

struct GradedRing {
    AbelianGroup group;
    std::vector<std::string> var_names;
    std::vector<GroupElement> degrees;
    bool effective = false;

    std::size_t num_vars() const { return var_names.size(); }

    friend bool operator==(const GradedRing&, const GradedRing&) = default;
};

inline GradedRing make_graded_ring(AbelianGroup group, std::vector<std::string> names,
                                   std::vector<GroupElement> degrees) {
    if (names.empty()) throw InvalidInput("a graded ring needs at least one variable");
    if (names.size() != degrees.size())
        throw InvalidInput("variable/degree count mismatch");
    std::set<std::string> seen;
    for (const auto& nm : names)
        if (!seen.insert(nm).second) throw InvalidInput("duplicate variable name '" + nm + "'");
    for (auto& d : degrees)
        d = make_element(group, d.free, d.torsion);  // validates sizes, reduces residues
    GradedRing ring{std::move(group), std::move(names), std::move(degrees), false};
    ring.effective = subgroup_equals_ambient(subgroup_from_generators(ring.group, ring.degrees));
    return ring;
}

inline GroupElement degree_of_monomial(const GradedRing& ring, const Monomial& m) {
    if (m.exponents.size() != ring.num_vars())
        throw InvalidInput("monomial has wrong number of exponents");
    GroupElement d = zero_element(ring.group);
    for (std::size_t i = 0; i < ring.num_vars(); ++i)
        if (m.exponents[i] != 0)
            d = add(ring.group, d, scale(ring.group, m.exponents[i], ring.degrees[i]));
    return d;
}

inline std::map<GroupElement, Polynomial> homogeneous_components(const GradedRing& ring,
                                                                 const Polynomial& p) {
    std::map<GroupElement, Polynomial> comps;
    for (const auto& [m, c] : p.terms) comps[degree_of_monomial(ring, m)].terms.emplace(m, c);
    return comps;
}

inline bool is_homogeneous(const GradedRing& ring, const Polynomial& p) {
    return homogeneous_components(ring, p).size() <= 1;
}

struct EffectivizeResult {
    bool effective = false;  // whether the input ring was already effective
    GradedRing ring;         // input ring when effective, re-graded ring otherwise
};

// Re-grade by the subgroup the degrees generate, in canonical coordinates.
inline EffectivizeResult effectivize(const GradedRing& ring) {
    if (ring.effective) return EffectivizeResult{true, ring};
    Subgroup h = subgroup_from_generators(ring.group, ring.degrees);
    QuotientGroup q(h.lattice, relation_rows(ring.group));
    std::vector<GroupElement> new_degrees;
    new_degrees.reserve(ring.degrees.size());
    for (const auto& d : ring.degrees) new_degrees.push_back(q.element_of(lift(ring.group, d)));
    GradedRing regraded = make_graded_ring(q.group(), ring.var_names, std::move(new_degrees));
    if (!regraded.effective) throw std::logic_error("effectivize: re-graded ring not effective");
    return EffectivizeResult{false, std::move(regraded)};
}

inline Cone weight_cone(const GradedRing& ring) {
    IntMat free_parts;
    free_parts.reserve(ring.degrees.size());
    for (const auto& d : ring.degrees) free_parts.push_back(d.free);
    return make_cone(ring.group.rank, free_parts);
}

inline std::string monomial_to_string(const GradedRing& ring, const Monomial& m) {
    if (is_unit(m)) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < ring.num_vars(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!first) os << '*';
        os << ring.var_names[i];
        if (m.exponents[i] > 1) os << '^' << m.exponents[i];
        first = false;
    }
    return os.str();
}

inline std::string polynomial_to_string(const GradedRing& ring, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading term first: iterate the grlex-ascending map in reverse
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || is_unit(m)) {
            os << to_string(a);
            if (!is_unit(m)) os << '*';
        }
        if (!is_unit(m)) os << monomial_to_string(ring, m);
        first = false;
    }
    return os.str();
}

}  // namespace mgproj
