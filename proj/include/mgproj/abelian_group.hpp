#pragma once

// Finitely generated abelian groups D = Z^r + Z/n_1 + ... + Z/n_t, their
// elements and subgroups. Torsion is handled by lifting to Z^{r+t} with
// relation rows n_j * e_{r+j}; every subgroup question then reduces to
// Hermite/Smith normal form over Z.

#include "normal_form.hpp"
#include "types.hpp"

#include <optional>
#include <sstream>

namespace mgproj {

struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;  // divisibility chain, every entry >= 2

    std::size_t torsion_count() const { return invariant_factors.size(); }
    std::size_t lift_dim() const { return rank + invariant_factors.size(); }
    bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return rank == 0; }
    bool torsion_free() const { return invariant_factors.empty(); }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

inline bool is_divisibility_chain(const std::vector<Int>& orders) {
    for (std::size_t j = 0; j + 1 < orders.size(); ++j)
        if (orders[j + 1] % orders[j] != 0) return false;
    return true;
}

// Canonical form of Z^rank + Z/orders[0] + ...; idempotent on canonical input.
inline AbelianGroup canonicalize(std::size_t rank, std::vector<Int> torsion_orders) {
    for (const auto& n : torsion_orders)
        if (n <= 1) throw InvalidInput("torsion order must be >= 2, got " + to_string(n));
    if (is_divisibility_chain(torsion_orders)) return AbelianGroup{rank, std::move(torsion_orders)};
    const std::size_t t = torsion_orders.size();
    IntMat diag(t, IntVec(t, 0));
    for (std::size_t j = 0; j < t; ++j) diag[j][j] = torsion_orders[j];
    return AbelianGroup{rank, smith_invariant_factors(diag, t)};
}

struct GroupElement {
    IntVec free;
    IntVec torsion;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        if (a.free != b.free) return a.free < b.free;
        return a.torsion < b.torsion;
    }
};

inline GroupElement zero_element(const AbelianGroup& d) {
    return GroupElement{IntVec(d.rank, 0), IntVec(d.torsion_count(), 0)};
}

inline GroupElement make_element(const AbelianGroup& d, IntVec free, IntVec torsion) {
    if (free.size() != d.rank || torsion.size() != d.torsion_count())
        throw InvalidInput("group element has wrong number of coordinates");
    for (std::size_t j = 0; j < torsion.size(); ++j) {
        torsion[j] %= d.invariant_factors[j];
        if (torsion[j] < 0) torsion[j] += d.invariant_factors[j];
    }
    return GroupElement{std::move(free), std::move(torsion)};
}

// Split a flat coordinate vector (free part first, then torsion residues).
inline GroupElement element_from_flat(const AbelianGroup& d, const IntVec& coords) {
    if (coords.size() != d.lift_dim())
        throw InvalidInput("degree vector has length " + std::to_string(coords.size()) +
                           ", expected " + std::to_string(d.lift_dim()));
    return make_element(d, IntVec(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(d.rank)),
                        IntVec(coords.begin() + static_cast<std::ptrdiff_t>(d.rank), coords.end()));
}

inline bool is_zero(const GroupElement& a) {
    auto all0 = [](const IntVec& v) {
        return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
    };
    return all0(a.free) && all0(a.torsion);
}

inline GroupElement add(const AbelianGroup& d, const GroupElement& a, const GroupElement& b) {
    GroupElement s = a;
    for (std::size_t j = 0; j < d.rank; ++j) s.free[j] += b.free[j];
    for (std::size_t j = 0; j < d.torsion_count(); ++j) {
        s.torsion[j] += b.torsion[j];
        if (s.torsion[j] >= d.invariant_factors[j]) s.torsion[j] -= d.invariant_factors[j];
    }
    return s;
}

inline GroupElement negate(const AbelianGroup& d, const GroupElement& a) {
    GroupElement s = a;
    for (auto& e : s.free) e = -e;
    for (std::size_t j = 0; j < d.torsion_count(); ++j)
        if (s.torsion[j] != 0) s.torsion[j] = d.invariant_factors[j] - s.torsion[j];
    return s;
}

inline GroupElement scale(const AbelianGroup& d, const Int& n, const GroupElement& a) {
    GroupElement s = zero_element(d);
    for (std::size_t j = 0; j < d.rank; ++j) s.free[j] = n * a.free[j];
    for (std::size_t j = 0; j < d.torsion_count(); ++j) {
        Int v = (n * a.torsion[j]) % d.invariant_factors[j];
        if (v < 0) v += d.invariant_factors[j];
        s.torsion[j] = v;
    }
    return s;
}

inline IntVec lift(const AbelianGroup& d, const GroupElement& a) {
    IntVec v = a.free;
    v.insert(v.end(), a.torsion.begin(), a.torsion.end());
    return v;
}

// Rows n_j * e_{rank+j}: the kernel of Z^{r+t} -> D.
inline IntMat relation_rows(const AbelianGroup& d) {
    IntMat rel;
    for (std::size_t j = 0; j < d.torsion_count(); ++j) {
        IntVec row(d.lift_dim(), 0);
        row[d.rank + j] = d.invariant_factors[j];
        rel.push_back(std::move(row));
    }
    return rel;
}

struct Subgroup {
    AbelianGroup ambient;
    IntMat lattice;  // HNF basis of the lifted lattice; always contains the relation rows' span

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

inline Subgroup subgroup_from_generators(const AbelianGroup& d,
                                         const std::vector<GroupElement>& gens) {
    IntMat rows = relation_rows(d);
    for (const auto& g : gens) {
        if (g.free.size() != d.rank || g.torsion.size() != d.torsion_count())
            throw InvalidInput("subgroup generator has wrong number of coordinates");
        rows.push_back(lift(d, g));
    }
    // An empty matrix carries no column count; normalize that edge away.
    if (rows.empty()) return Subgroup{d, {}};
    return Subgroup{d, hermite_normal_form(std::move(rows))};
}

// [D : H]; nullopt encodes an infinite index (lattice rank below r+t).
// For a full-rank lattice the index is the product of the HNF pivots.
inline std::optional<Int> subgroup_index(const Subgroup& h) {
    const std::size_t n = h.ambient.lift_dim();
    if (h.lattice.size() < n) return std::nullopt;
    Int det = 1;
    const auto piv = pivot_columns(h.lattice);
    for (std::size_t i = 0; i < h.lattice.size(); ++i) det *= h.lattice[i][piv[i]];
    return det;
}

inline std::optional<Int> subgroup_index(const AbelianGroup& d, const Subgroup& h) {
    if (!(h.ambient == d)) throw InvalidInput("subgroup_index: ambient group mismatch");
    return subgroup_index(h);
}

inline bool contains(const Subgroup& h, const GroupElement& d) {
    IntVec v = lift(h.ambient, d);
    if (h.lattice.empty())
        return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
    return hnf_contains(h.lattice, v);
}

inline bool subgroup_equals_ambient(const Subgroup& h) {
    auto idx = subgroup_index(h);
    return idx.has_value() && *idx == 1;
}

// Smallest N >= 1 with N*d in H; nullopt when no multiple lands in H
// (only possible for infinite-index H).
inline std::optional<Int> integrality_exponent(const Subgroup& h, const GroupElement& d) {
    IntVec v = lift(h.ambient, d);
    if (h.lattice.empty()) {
        bool zero = std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
        return zero ? std::optional<Int>(1) : std::nullopt;
    }
    auto y = solve_in_rowspace(h.lattice, v);
    if (!y) return std::nullopt;
    Int n = 1;
    for (const auto& c : *y) n = lcm_int(n, denominator(c));
    return n;
}

inline std::optional<Int> integrality_exponent(const AbelianGroup& d, const Subgroup& h,
                                               const GroupElement& el) {
    if (!(h.ambient == d)) throw InvalidInput("integrality_exponent: ambient group mismatch");
    return integrality_exponent(h, el);
}

struct GroupSchemeDecomposition {
    std::size_t gm_count = 0;
    std::vector<Int> mu_orders;
    bool connected = true;

    friend bool operator==(const GroupSchemeDecomposition&, const GroupSchemeDecomposition&) = default;
};

// Diagonalizable group scheme of D: product of gm_count tori and one mu_n per
// invariant factor; connected exactly when D is torsion-free.
inline GroupSchemeDecomposition group_scheme_decomposition(const AbelianGroup& d) {
    return GroupSchemeDecomposition{d.rank, d.invariant_factors, d.torsion_free()};
}

// Canonical presentation of the quotient lattice(basis)/lattice(relations):
// the abstract group plus a coordinate map for elements given by lift vectors.
// Used to re-grade rings by the subgroup their degrees generate and to load
// ring specs whose torsion moduli are not a divisibility chain.
class QuotientGroup {
  public:
    QuotientGroup(IntMat basis, const IntMat& relations) : basis_(std::move(basis)) {
        const std::size_t m = basis_.size();
        IntMat rel_coords;
        for (const auto& rho : relations) {
            if (m == 0) {
                // zero lattice: relations must be zero vectors
                for (const auto& e : rho)
                    if (e != 0) throw std::logic_error("quotient: relation outside lattice");
                continue;
            }
            auto y = solve_in_rowspace(basis_, rho);
            if (!y) throw std::logic_error("quotient: relation outside lattice span");
            IntVec yi(m);
            for (std::size_t i = 0; i < m; ++i) {
                if (denominator((*y)[i]) != 1)
                    throw std::logic_error("quotient: relation not integral over basis");
                yi[i] = numerator((*y)[i]);
            }
            rel_coords.push_back(std::move(yi));
        }
        snf_ = smith_normal_form(rel_coords, m);
        group_.rank = m - snf_.rank;
        for (std::size_t i = 0; i < snf_.rank; ++i)
            if (snf_.diagonal[i] > 1) {
                group_.invariant_factors.push_back(snf_.diagonal[i]);
                torsion_pos_.push_back(i);
            }
    }

    const AbelianGroup& group() const { return group_; }

    // Canonical coordinates of a lattice vector in the quotient group.
    GroupElement element_of(const IntVec& v) const {
        const std::size_t m = basis_.size();
        IntVec x(m);
        if (m > 0) {
            auto y = solve_in_rowspace(basis_, v);
            if (!y) throw std::logic_error("quotient: vector outside lattice span");
            for (std::size_t i = 0; i < m; ++i) {
                if (denominator((*y)[i]) != 1)
                    throw std::logic_error("quotient: vector not integral over basis");
                x[i] = numerator((*y)[i]);
            }
        } else {
            for (const auto& e : v)
                if (e != 0) throw std::logic_error("quotient: vector outside zero lattice");
        }
        // w = x * V
        IntVec w(m, 0);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i) w[j] += x[i] * snf_.right[i][j];
        IntVec free(w.begin() + static_cast<std::ptrdiff_t>(snf_.rank), w.end());
        IntVec torsion;
        torsion.reserve(torsion_pos_.size());
        for (std::size_t i : torsion_pos_) torsion.push_back(w[i]);
        return make_element(group_, std::move(free), std::move(torsion));
    }

  private:
    IntMat basis_;
    SmithDecomposition snf_;
    AbelianGroup group_;
    std::vector<std::size_t> torsion_pos_;
};

inline std::string element_to_string(const AbelianGroup& d, const GroupElement& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < d.rank; ++j) {
        if (j) os << ", ";
        os << a.free[j];
    }
    if (d.torsion_count() > 0) {
        os << "; ";
        for (std::size_t j = 0; j < d.torsion_count(); ++j) {
            if (j) os << ", ";
            os << a.torsion[j];
        }
    }
    os << ')';
    return os.str();
}

inline std::string group_to_string(const AbelianGroup& d) {
    if (d.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (d.rank > 0) {
        os << "Z";
        if (d.rank > 1) os << "^" << d.rank;
        first = false;
    }
    for (const auto& n : d.invariant_factors) {
        if (!first) os << " x ";
        os << "Z/" << n;
        first = false;
    }
    return os.str();
}

}  // namespace mgproj
