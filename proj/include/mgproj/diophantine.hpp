#pragma once

// Hilbert bases of homogeneous linear Diophantine systems with congruences.
//
// The solution set {x in N^m : equations and congruences hold} is the set of
// lattice points of a pointed rational cone. hilbert_basis reads its unique
// minimal generating set off that geometry: a Smith kernel gives the solution
// lattice, exact LP peels off implicit equalities, the cone is triangulated
// over its extreme rays, and each simplicial piece contributes its rays plus
// the lattice points of its half-open ray parallelepiped. A Contejean-Devie
// completion engine is kept in detail:: as an independent cross-check.

#include "exact_lp.hpp"
#include "normal_form.hpp"
#include "types.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace mgproj {

struct Congruence {
    IntVec coeffs;
    Int modulus;  // >= 2
};

struct DiophantineSystem {
    std::size_t num_vars = 0;
    IntMat equations;                     // rows of length num_vars
    std::vector<Congruence> congruences;  // row . x = 0 (mod modulus)
};

struct SolverOptions {
    std::uint64_t step_budget = 1'000'000;  // candidates examined before giving up
};

inline bool satisfies(const DiophantineSystem& sys, const IntVec& x) {
    for (const auto& row : sys.equations) {
        Int s = 0;
        for (std::size_t i = 0; i < sys.num_vars; ++i) s += row[i] * x[i];
        if (s != 0) return false;
    }
    for (const auto& cg : sys.congruences) {
        Int s = 0;
        for (std::size_t i = 0; i < sys.num_vars; ++i) s += cg.coeffs[i] * x[i];
        if (s % cg.modulus != 0) return false;
    }
    return true;
}

namespace detail {

inline void validate_system(const DiophantineSystem& sys) {
    if (sys.num_vars < 1) throw InvalidInput("diophantine system needs at least one variable");
    for (const auto& row : sys.equations)
        if (row.size() != sys.num_vars) throw InvalidInput("equation row has wrong length");
    for (const auto& cg : sys.congruences) {
        if (cg.coeffs.size() != sys.num_vars) throw InvalidInput("congruence row has wrong length");
        if (cg.modulus < 2) throw InvalidInput("congruence modulus must be >= 2");
    }
}

// Scale equations to primitive rows with positive leading entry, reduce
// congruence coefficients to balanced residues, drop rows made trivial,
// dedupe. The solution set is unchanged.
inline DiophantineSystem normalized_system(const DiophantineSystem& sys) {
    DiophantineSystem out;
    out.num_vars = sys.num_vars;
    std::set<IntVec> eq_rows;
    for (const auto& row : sys.equations) {
        Int g = 0;
        for (const auto& e : row) g = gcd_int(g, e);
        if (g == 0) continue;
        IntVec e = row;
        for (auto& v : e) v /= g;
        if (*std::find_if(e.begin(), e.end(), [](const Int& x) { return x != 0; }) < 0)
            for (auto& v : e) v = -v;
        eq_rows.insert(std::move(e));
    }
    std::set<std::pair<IntVec, Int>> cong_rows;
    for (const auto& cg : sys.congruences) {
        IntVec e = cg.coeffs;
        bool nontrivial = false;
        for (auto& v : e) {
            v %= cg.modulus;
            if (v < 0) v += cg.modulus;
            if (2 * v > cg.modulus) v -= cg.modulus;  // balanced residue
            nontrivial = nontrivial || v != 0;
        }
        if (nontrivial) cong_rows.insert({std::move(e), cg.modulus});
    }
    out.equations.assign(eq_rows.begin(), eq_rows.end());
    for (const auto& [row, modulus] : cong_rows) out.congruences.push_back({row, modulus});
    return out;
}

// Minimal nonzero solutions of a x = 0 over N^nvars (Contejean-Devie).
// Breadth-first by total degree; a coordinate is incremented only when it
// moves the value vector toward zero, and nodes dominating a known solution
// are pruned. Each level finishes its solution sweep before expanding, so
// the domination filter always sees every smaller solution.
//
// The completion runs on flat 64-bit arrays: every quantity is bounded by
// max|a_ij| * (total increments) <= max|a_ij| * budget, which is checked
// against the 64-bit range up front.
inline std::vector<IntVec> contejean_devie(const IntMat& a, std::size_t nvars,
                                           std::uint64_t budget) {
    using I64 = std::int64_t;
    const std::size_t rows = a.size();

    I64 amax = 1;
    for (const auto& row : a)
        for (const auto& e : row) {
            if (e > std::numeric_limits<std::int32_t>::max() ||
                e < std::numeric_limits<std::int32_t>::min())
                throw InvalidInput("diophantine coefficients exceed the supported range");
            amax = std::max(amax, static_cast<I64>(abs_int(e)));
        }
    if (budget > (std::uint64_t(1) << 56) / static_cast<std::uint64_t>(amax))
        throw InvalidInput("step budget too large for 64-bit completion arithmetic");

    // col[i] = column i of a, flattened
    std::vector<I64> col(nvars * rows);
    for (std::size_t i = 0; i < nvars; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            col[i * rows + j] = static_cast<I64>(a[j][i]);

    std::vector<std::vector<I64>> basis;
    auto dominated_by_basis = [&](const I64* x) {
        for (const auto& b : basis) {
            bool le = true;
            for (std::size_t i = 0; i < nvars && le; ++i) le = (b[i] <= x[i]);
            if (le) return true;
        }
        return false;
    };

    // frontier nodes at the current level, stored as flat pools
    std::vector<I64> xs, vs;
    xs.reserve(nvars * nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        for (std::size_t k = 0; k < nvars; ++k) xs.push_back(k == i ? 1 : 0);
        for (std::size_t j = 0; j < rows; ++j) vs.push_back(col[i * rows + j]);
    }

    const std::size_t node_cap = 8'000'000;  // memory guard per level
    std::uint64_t steps = 0;
    std::vector<I64> next_xs, next_vs;
    std::vector<std::size_t> order;
    while (!xs.empty()) {
        const std::size_t count = xs.size() / nvars;
        // collect solutions of this level before expanding
        for (std::size_t k = 0; k < count; ++k) {
            const I64* v = vs.data() + k * rows;
            if (std::all_of(v, v + rows, [](I64 e) { return e == 0; })) {
                const I64* x = xs.data() + k * nvars;
                if (!dominated_by_basis(x)) basis.emplace_back(x, x + nvars);
            }
        }
        next_xs.clear();
        next_vs.clear();
        for (std::size_t k = 0; k < count; ++k) {
            const I64* x = xs.data() + k * nvars;
            const I64* v = vs.data() + k * rows;
            if (std::all_of(v, v + rows, [](I64 e) { return e == 0; })) continue;
            if (dominated_by_basis(x)) continue;
            for (std::size_t i = 0; i < nvars; ++i) {
                const I64* ci = col.data() + i * rows;
                I64 descent = 0;
                for (std::size_t j = 0; j < rows; ++j) descent += v[j] * ci[j];
                if (descent >= 0) continue;
                if (++steps > budget)
                    throw ResourceLimit("hilbert basis completion exceeded " +
                                        std::to_string(budget) + " steps");
                const std::size_t at = next_xs.size();
                next_xs.insert(next_xs.end(), x, x + nvars);
                ++next_xs[at + i];
                if (dominated_by_basis(next_xs.data() + at)) {
                    next_xs.resize(at);
                    continue;
                }
                if (next_xs.size() / nvars > node_cap)
                    throw ResourceLimit("hilbert basis frontier exceeded " +
                                        std::to_string(node_cap) + " nodes per level");
                const std::size_t vat = next_vs.size();
                next_vs.insert(next_vs.end(), v, v + rows);
                for (std::size_t j = 0; j < rows; ++j) next_vs[vat + j] += ci[j];
            }
        }
        // dedupe while keeping first-generation order
        const std::size_t produced = next_xs.size() / nvars;
        order.resize(produced);
        for (std::size_t k = 0; k < produced; ++k) order[k] = k;
        auto lex_less = [&](std::size_t lhs, std::size_t rhs) {
            const I64* p = next_xs.data() + lhs * nvars;
            const I64* q = next_xs.data() + rhs * nvars;
            for (std::size_t i = 0; i < nvars; ++i)
                if (p[i] != q[i]) return p[i] < q[i];
            return lhs < rhs;
        };
        auto lex_eq = [&](std::size_t lhs, std::size_t rhs) {
            const I64* p = next_xs.data() + lhs * nvars;
            const I64* q = next_xs.data() + rhs * nvars;
            return std::equal(p, p + nvars, q);
        };
        std::sort(order.begin(), order.end(), lex_less);
        std::vector<char> keep(produced, 1);
        // within each run of equal vectors only the first-generated survives
        for (std::size_t k = 0; k < produced;) {
            std::size_t end = k + 1;
            while (end < produced && lex_eq(order[end], order[k])) ++end;
            std::size_t smallest = order[k];
            for (std::size_t t = k; t < end; ++t) smallest = std::min(smallest, order[t]);
            for (std::size_t t = k; t < end; ++t) keep[order[t]] = (order[t] == smallest);
            k = end;
        }
        xs.clear();
        vs.clear();
        for (std::size_t k = 0; k < produced; ++k) {
            if (!keep[k]) continue;
            const I64* x = next_xs.data() + k * nvars;
            const I64* v = next_vs.data() + k * rows;
            xs.insert(xs.end(), x, x + nvars);
            vs.insert(vs.end(), v, v + rows);
        }
    }

    std::vector<IntVec> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.emplace_back(b.begin(), b.end());
    return out;
}

// Reference engine: Contejean-Devie completion over the slack-extended
// system. Congruences enter through one signed slack variable each (split
// into a difference of naturals); slacks are projected away after completion
// and the projected set is re-minimized. The completion walks every candidate
// below the basis pointwise, so it only reaches moderate instances, but it
// shares no code with hilbert_basis and serves as an independent cross-check.
inline std::vector<IntVec> hilbert_basis_completion(const DiophantineSystem& input,
                                                    const SolverOptions& opts = {}) {
    validate_system(input);
    const DiophantineSystem sys = normalized_system(input);
    const std::size_t m = sys.num_vars;
    const std::size_t q = sys.congruences.size();

    const std::size_t ext = m + 2 * q;
    IntMat a;
    for (const auto& row : sys.equations) {
        IntVec e = row;
        e.resize(ext, Int(0));
        a.push_back(std::move(e));
    }
    std::size_t slack = 0;
    for (const auto& cg : sys.congruences) {
        IntVec e = cg.coeffs;
        e.resize(ext, Int(0));
        e[m + 2 * slack] = cg.modulus;
        e[m + 2 * slack + 1] = -cg.modulus;
        a.push_back(std::move(e));
        ++slack;
    }

    auto raw = contejean_devie(a, ext, opts.step_budget);

    // project away the slacks, drop zero projections, dedupe
    std::set<IntVec> projected;
    for (const auto& x : raw) {
        IntVec p(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
        if (std::any_of(p.begin(), p.end(), [](const Int& e) { return e != 0; }))
            projected.insert(std::move(p));
    }

    // re-minimize: drop g when g = p + (g - p) splits into nonzero solutions
    std::vector<IntVec> cand(projected.begin(), projected.end());
    std::vector<IntVec> result;
    for (const auto& g : cand) {
        bool redundant = false;
        for (const auto& p : cand) {
            if (&p == &g || p == g) continue;
            bool le = true;
            for (std::size_t i = 0; i < m && le; ++i) le = (p[i] <= g[i]);
            if (!le) continue;
            IntVec diff(m);
            for (std::size_t i = 0; i < m; ++i) diff[i] = g[i] - p[i];
            if (satisfies(sys, diff)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) result.push_back(g);
    }
    std::sort(result.begin(), result.end());
    return result;
}

// Basis of {x in Z^dim : a x = 0}, one row per kernel dimension. The columns
// of the Smith right transform past the rank are such a basis, and, being
// columns of a unimodular matrix, they span the full kernel lattice.
inline IntMat integer_kernel(const IntMat& a, std::size_t dim) {
    auto snf = smith_normal_form(a, dim);
    IntMat out;
    out.reserve(dim - snf.rank);
    for (std::size_t j = snf.rank; j < dim; ++j) {
        IntVec row(dim);
        for (std::size_t i = 0; i < dim; ++i) row[i] = snf.right[i][j];
        out.push_back(std::move(row));
    }
    return out;
}

inline Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

// Exact inverse of a full-rank square integer matrix, by Gauss-Jordan.
inline std::vector<RatVec> invert_square(const IntMat& r) {
    const std::size_t d = r.size();
    std::vector<RatVec> a(d, RatVec(2 * d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a[i][j] = Rat(r[i][j]);
        a[i][d + i] = 1;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && a[piv][c] == 0) ++piv;
        if (piv == d) throw std::logic_error("invert_square: singular matrix");
        std::swap(a[c], a[piv]);
        Rat p = a[c][c];
        for (auto& e : a[c]) e /= p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < 2 * d; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<RatVec> inv(d, RatVec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv[i][j] = std::move(a[i][d + j]);
    return inv;
}

// Does {z : rows . z >= 0 componentwise} contain a point with probe . z >= 1?
// Phase-1 simplex on the equality form: z = p - q with p, q >= 0, one surplus
// variable per inequality. Exact, so "no" certifies an implicit equality.
inline bool cone_meets_open_halfspace(const std::vector<IntVec>& rows, const IntVec& probe) {
    const std::size_t d = probe.size();
    const std::size_t m = rows.size();
    const std::size_t cols = 2 * d + m + 1;
    std::vector<RatVec> a;
    RatVec b;
    auto push = [&](const IntVec& r, std::size_t surplus, const Rat& rhs) {
        RatVec out(cols, Rat(0));
        for (std::size_t j = 0; j < d; ++j) {
            out[j] = Rat(r[j]);
            out[d + j] = Rat(-r[j]);
        }
        out[surplus] = -1;
        a.push_back(std::move(out));
        b.push_back(rhs);
    };
    for (std::size_t k = 0; k < m; ++k) push(rows[k], 2 * d + k, Rat(0));
    push(probe, 2 * d + m, Rat(1));
    return simplex_feasible(std::move(a), std::move(b));
}

// Geometric Hilbert basis engine.
//
//   1. Lattice: a Smith kernel of the equations, refined by the congruences
//      through a second kernel carrying one modulus column per congruence.
//   2. Cone: every coordinate x_i >= 0 becomes an inequality row over basis
//      coordinates. Rows the cone cannot make positive (decided by exact LP)
//      hold with equality everywhere, so the basis shrinks to their kernel;
//      afterwards the cone is full-dimensional and pointed (x = 0 forces
//      z = 0 because the basis rows stay independent).
//   3. Rays and triangulation: extreme rays are the admissible kernel lines
//      of (d-1)-subsets of the inequality rows; a placing triangulation adds
//      rays one at a time, coning visible boundary facets.
//   4. Candidates: each simplex contributes its rays plus the nonzero lattice
//      points of its half-open ray parallelepiped, enumerated through the
//      residue box of the ray lattice's HNF (diagonal pivots, so the box is
//      a product of intervals). Any monoid element drops into some simplex
//      as ray multiples plus such a point, so the candidates generate.
//   5. Basis: candidates minimal under the componentwise order. Domination
//      needs no solution check since differences of solutions stay solutions.
//
// The step budget bounds ray subsets examined plus parallelepiped points
// enumerated; exceeding it raises ResourceLimit.
inline std::vector<IntVec> hilbert_basis_cone(const DiophantineSystem& sys,
                                              std::uint64_t budget) {
    const std::size_t m = sys.num_vars;

    IntMat basis = integer_kernel(sys.equations, m);
    if (!sys.congruences.empty() && !basis.empty()) {
        const std::size_t d = basis.size();
        const std::size_t q = sys.congruences.size();
        IntMat w(q, IntVec(d + q, Int(0)));
        for (std::size_t j = 0; j < q; ++j) {
            for (std::size_t i = 0; i < d; ++i) {
                Int s = 0;
                for (std::size_t k = 0; k < m; ++k)
                    s += sys.congruences[j].coeffs[k] * basis[i][k];
                w[j][i] = s;
            }
            w[j][d + j] = sys.congruences[j].modulus;
        }
        IntMat coords = integer_kernel(w, d + q);  // d rows: moduli keep full rank
        IntMat refined;
        refined.reserve(coords.size());
        for (const auto& y : coords) {
            IntVec x(m, Int(0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < m; ++k) x[k] += y[i] * basis[i][k];
            refined.push_back(std::move(x));
        }
        basis = hermite_normal_form(refined);  // canonical basis of the refined lattice
    }

    std::vector<IntVec> ineqs;
    for (;;) {
        if (basis.empty()) return {};
        const std::size_t d = basis.size();
        std::set<IntVec> rows;
        for (std::size_t i = 0; i < m; ++i) {
            IntVec row(d);
            Int g = 0;
            for (std::size_t j = 0; j < d; ++j) {
                row[j] = basis[j][i];
                g = gcd_int(g, row[j]);
            }
            if (g == 0) continue;  // coordinate vanishes on the whole lattice
            if (g > 1)
                for (auto& e : row) e /= g;
            rows.insert(std::move(row));
        }
        ineqs.assign(rows.begin(), rows.end());
        IntMat implicit;
        for (const auto& row : ineqs)
            if (!cone_meets_open_halfspace(ineqs, row)) implicit.push_back(row);
        if (implicit.empty()) break;
        IntMat sub = integer_kernel(implicit, d);  // strictly smaller: rows are nonzero
        IntMat next;
        next.reserve(sub.size());
        for (const auto& y : sub) {
            IntVec x(m, Int(0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < m; ++k) x[k] += y[i] * basis[i][k];
            next.push_back(std::move(x));
        }
        basis = std::move(next);
    }

    const std::size_t d = basis.size();
    Int steps = 0;
    const Int step_cap = Int(budget);
    auto charge = [&](const Int& n) {
        steps += n;
        if (steps > step_cap)
            throw ResourceLimit("hilbert basis enumeration exceeded " +
                                std::to_string(budget) + " steps");
    };

    // extreme rays: the cone side of each kernel line of a (d-1)-subset
    std::set<IntVec> ray_set;
    const std::size_t k = d - 1;
    std::vector<std::size_t> sel(k);
    std::iota(sel.begin(), sel.end(), std::size_t{0});
    auto inside = [&](const IntVec& z) {
        for (const auto& row : ineqs) {
            Int s = 0;
            for (std::size_t j = 0; j < d; ++j) s += row[j] * z[j];
            if (s < 0) return false;
        }
        return true;
    };
    for (bool more = k <= ineqs.size(); more;) {
        charge(1);
        IntMat sub;
        sub.reserve(k);
        for (auto ix : sel) sub.push_back(ineqs[ix]);
        IntMat line = integer_kernel(sub, d);
        if (line.size() == 1) {
            IntVec u = std::move(line.front());
            if (inside(u)) {
                ray_set.insert(std::move(u));
            } else {
                for (auto& e : u) e = -e;
                if (inside(u)) ray_set.insert(std::move(u));
            }
        }
        more = false;
        for (std::size_t i_plus = k; i_plus > 0; --i_plus) {
            const std::size_t i = i_plus - 1;
            if (sel[i] + (k - i) < ineqs.size()) {
                ++sel[i];
                for (std::size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
                more = true;
                break;
            }
        }
    }
    std::vector<IntVec> rays(ray_set.begin(), ray_set.end());
    if (rays.empty()) throw std::logic_error("hilbert_basis: full-dimensional cone without rays");

    // placing triangulation over the rays in lexicographic order
    std::vector<std::vector<std::size_t>> simplices;
    std::vector<char> used(rays.size(), 0);
    {
        std::vector<std::size_t> init;
        IntMat span;
        for (std::size_t i = 0; i < rays.size() && init.size() < d; ++i) {
            span.push_back(rays[i]);
            if (lattice_rank(span) == span.size()) {
                init.push_back(i);
                used[i] = 1;
            } else {
                span.pop_back();
            }
        }
        if (init.size() < d)
            throw std::logic_error("hilbert_basis: rays do not span the cone");
        simplices.push_back(std::move(init));
    }
    for (std::size_t rix = 0; rix < rays.size(); ++rix) {
        if (used[rix]) continue;
        used[rix] = 1;
        // boundary facet = index set in exactly one simplex; remember the
        // opposite ray of its owner to orient the facet normal inward
        std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facets;
        for (const auto& s : simplices)
            for (std::size_t drop = 0; drop < d; ++drop) {
                std::vector<std::size_t> f;
                f.reserve(d - 1);
                for (std::size_t t = 0; t < d; ++t)
                    if (t != drop) f.push_back(s[t]);
                ++facets.try_emplace(std::move(f), 0, s[drop]).first->second.first;
            }
        std::vector<std::vector<std::size_t>> grown;
        for (const auto& [f, info] : facets) {
            if (info.first != 1) continue;
            IntMat fm;
            fm.reserve(d - 1);
            for (auto ix : f) fm.push_back(rays[ix]);
            IntMat normal = integer_kernel(fm, d);
            if (normal.size() != 1) throw std::logic_error("hilbert_basis: degenerate facet");
            IntVec n = std::move(normal.front());
            Int orient = 0;
            for (std::size_t j = 0; j < d; ++j) orient += n[j] * rays[info.second][j];
            if (orient == 0) throw std::logic_error("hilbert_basis: degenerate simplex");
            if (orient < 0)
                for (auto& e : n) e = -e;
            Int side = 0;
            for (std::size_t j = 0; j < d; ++j) side += n[j] * rays[rix][j];
            if (side >= 0) continue;  // facet not visible from the new ray
            std::vector<std::size_t> s(f.begin(), f.end());
            s.push_back(rix);
            std::sort(s.begin(), s.end());
            grown.push_back(std::move(s));
        }
        if (grown.empty())
            throw std::logic_error("hilbert_basis: extreme ray inside the current cone");
        simplices.insert(simplices.end(), grown.begin(), grown.end());
    }

    // candidates: rays plus parallelepiped points of every simplex
    std::set<IntVec> zpoints(ray_set.begin(), ray_set.end());
    for (const auto& s : simplices) {
        IntMat r;
        r.reserve(d);
        for (auto ix : s) r.push_back(rays[ix]);
        IntMat h = hermite_normal_form(r);  // square, pivots on the diagonal
        Int det = 1;
        for (std::size_t i = 0; i < d; ++i) det *= h[i][i];
        if (det == 1) continue;  // unimodular piece: no interior candidates
        charge(det - 1);
        auto rinv = invert_square(r);
        IntVec v(d, Int(0));
        for (;;) {
            // odometer over the residue box, skipping the origin
            std::size_t i = 0;
            while (i < d && v[i] + 1 == h[i][i]) {
                v[i] = 0;
                ++i;
            }
            if (i == d) break;
            ++v[i];
            // unique representative of v's class inside the half-open
            // parallelepiped: retract by the floor of its ray coordinates
            RatVec y(d, Rat(0));
            for (std::size_t jj = 0; jj < d; ++jj)
                for (std::size_t kk = 0; kk < d; ++kk) y[jj] += Rat(v[kk]) * rinv[kk][jj];
            IntVec p = v;
            for (std::size_t jj = 0; jj < d; ++jj) {
                Int u = rat_floor(y[jj]);
                if (u == 0) continue;
                for (std::size_t kk = 0; kk < d; ++kk) p[kk] -= u * r[jj][kk];
            }
            zpoints.insert(std::move(p));
        }
    }

    std::set<IntVec> xset;
    for (const auto& z : zpoints) {
        IntVec x(m, Int(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t kk = 0; kk < m; ++kk) x[kk] += z[i] * basis[i][kk];
        for (const auto& e : x)
            if (e < 0) throw std::logic_error("hilbert_basis: candidate left the orthant");
        if (!satisfies(sys, x)) throw std::logic_error("hilbert_basis: candidate misses the lattice");
        xset.insert(std::move(x));
    }

    // keep the componentwise-minimal candidates; by degree order it is enough
    // to test domination against the survivors found so far
    std::vector<IntVec> cand(xset.begin(), xset.end());
    std::stable_sort(cand.begin(), cand.end(), [](const IntVec& lhs, const IntVec& rhs) {
        Int ls = 0, rs = 0;
        for (const auto& e : lhs) ls += e;
        for (const auto& e : rhs) rs += e;
        return ls < rs;
    });
    std::vector<IntVec> kept;
    for (const auto& g : cand) {
        bool redundant = false;
        for (const auto& p : kept) {
            bool le = true;
            for (std::size_t i = 0; i < m && le; ++i) le = (p[i] <= g[i]);
            if (le) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace detail

// The unique minimal generating set of {x in N^m : equations and congruences
// hold}, sorted lexicographically.
inline std::vector<IntVec> hilbert_basis(const DiophantineSystem& sys,
                                         const SolverOptions& opts = {}) {
    detail::validate_system(sys);
    return detail::hilbert_basis_cone(detail::normalized_system(sys), opts.step_budget);
}

}  // namespace mgproj
