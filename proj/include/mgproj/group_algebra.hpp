#pragma once

// The group algebra k[D] with its Hopf structure: convolution product,
// diagonal comultiplication, counit, antipode, and the group-like test.

#include <utility>

#include "abelian_group.hpp"

namespace mgproj {

struct GroupAlgebraElement {
    AbelianGroup group;
    std::map<GroupElement, Rat> coeffs;  // nonzero coefficients only

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.group == b.group && a.coeffs == b.coeffs;
    }
};

// Element of k[D] (x) k[D]; comultiplication lands here.
struct GroupAlgebraTensor {
    AbelianGroup group;
    std::map<std::pair<GroupElement, GroupElement>, Rat> coeffs;

    friend bool operator==(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b) {
        return a.group == b.group && a.coeffs == b.coeffs;
    }
};

inline GroupAlgebraElement ga_zero(const AbelianGroup& g) { return {g, {}}; }

inline GroupAlgebraElement ga_basis(const AbelianGroup& g, const GroupElement& d) {
    GroupAlgebraElement x{g, {}};
    x.coeffs[make_element(g, d.free, d.torsion)] = 1;
    return x;
}

inline void ga_accumulate(GroupAlgebraElement& x, const GroupElement& d, const Rat& c) {
    auto it = x.coeffs.find(d);
    if (it == x.coeffs.end()) {
        if (c != 0) x.coeffs.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) x.coeffs.erase(it);
}

inline GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (!(a.group == b.group)) throw InvalidInput("group algebra elements over different groups");
    GroupAlgebraElement r = a;
    for (const auto& [d, c] : b.coeffs) ga_accumulate(r, d, c);
    return r;
}

inline GroupAlgebraElement ga_scale(const Rat& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement r{a.group, {}};
    if (c == 0) return r;
    for (const auto& [d, v] : a.coeffs) r.coeffs.emplace(d, c * v);
    return r;
}

inline GroupAlgebraElement ga_negate(const GroupAlgebraElement& a) { return ga_scale(-1, a); }

inline GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (!(a.group == b.group)) throw InvalidInput("group algebra elements over different groups");
    GroupAlgebraElement r{a.group, {}};
    for (const auto& [d, cd] : a.coeffs)
        for (const auto& [e, ce] : b.coeffs) ga_accumulate(r, add(a.group, d, e), cd * ce);
    return r;
}

inline GroupAlgebraElement ga_one(const AbelianGroup& g) { return ga_basis(g, zero_element(g)); }

// Delta(chi^d) = chi^d (x) chi^d, extended linearly.
inline GroupAlgebraTensor ga_comultiply(const GroupAlgebraElement& a) {
    GroupAlgebraTensor t{a.group, {}};
    for (const auto& [d, c] : a.coeffs) t.coeffs.emplace(std::pair{d, d}, c);
    return t;
}

inline GroupAlgebraTensor ga_tensor(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (!(a.group == b.group)) throw InvalidInput("group algebra elements over different groups");
    GroupAlgebraTensor t{a.group, {}};
    for (const auto& [d, cd] : a.coeffs)
        for (const auto& [e, ce] : b.coeffs) t.coeffs.emplace(std::pair{d, e}, cd * ce);
    return t;
}

// counit: chi^d -> 1
inline Rat ga_counit(const GroupAlgebraElement& a) {
    Rat s = 0;
    for (const auto& [d, c] : a.coeffs) s += c;
    return s;
}

// antipode: chi^d -> chi^{-d}
inline GroupAlgebraElement ga_antipode(const GroupAlgebraElement& a) {
    GroupAlgebraElement r{a.group, {}};
    for (const auto& [d, c] : a.coeffs) ga_accumulate(r, negate(a.group, d), c);
    return r;
}

// x is group-like iff Delta(x) = x (x) x and counit(x) = 1; the coefficient
// equations this encodes force x = chi^d for a single d.
inline bool is_group_like(const GroupAlgebraElement& a) {
    return ga_counit(a) == 1 && ga_comultiply(a) == ga_tensor(a, a);
}

inline std::string group_algebra_to_string(const GroupAlgebraElement& a) {
    if (a.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, c] : a.coeffs) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (mag != 1) s += to_string(mag) + "*";
        s += "chi" + element_to_string(a.group, d);
    }
    return s;
}

}  // namespace mgproj
