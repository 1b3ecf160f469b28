#pragma once

// Command-line surface: gens | relevant | chart | atlas | torsor | dim |
// group | veronese | grouplike, with text and canonical JSON reports.

#include <CLI11.hpp>
#include <fstream>

#include "oracle.hpp"
#include "proj.hpp"
#include "ring_spec.hpp"

namespace mgproj {
namespace detail {

struct CliOptions {
    std::string ring_file;
    bool json = false;
    bool oracle = false;
    bool effectivize = false;
    std::uint64_t budget = SolverOptions{}.step_budget;

    std::string expr;                       // chart / relevant / torsor / dim
    std::string element;                    // grouplike
    std::vector<std::string> subgroup_gens; // veronese
    bool free_part = false;                 // veronese
};

inline void add_common_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--ring", o.ring_file, "ring spec JSON file")->required();
    cmd->add_flag("--json", o.json, "emit a single canonical JSON document");
    cmd->add_flag("--oracle", o.oracle, "append brute-force cross-checks");
    cmd->add_option("--budget", o.budget, "Hilbert-basis step budget");
    cmd->add_flag("--effectivize", o.effectivize,
                  "re-grade a non-effective ring by the subgroup its degrees generate");
}

inline GradedRing load_ring(const CliOptions& o, bool& regraded) {
    std::ifstream in(o.ring_file);
    if (!in) throw InvalidInput("cannot open ring file '" + o.ring_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    GradedRing ring = parse_ring_spec(buf.str());
    regraded = false;
    if (!ring.effective) {
        if (!o.effectivize)
            throw NotEffective(
                "the grading of '" + o.ring_file +
                "' is not effective (the degrees do not generate the group); "
                "pass --effectivize to re-grade");
        ring = effectivize(ring).ring;
        regraded = true;
    }
    return ring;
}

inline Monomial monomial_arg(const GradedRing& ring, const std::string& text,
                             const std::string& what) {
    auto m = as_monomial(parse_expression(ring, text));
    if (!m) throw InvalidInput(what + " must be a single monomial with coefficient 1");
    return *m;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

// subscript form: variable names juxtaposed, as in S_(xy)
inline std::string subscript(const GradedRing& ring, const Monomial& m) {
    std::string s = monomial_to_string(ring, m);
    std::erase(s, '*');
    return s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string scheme_to_string(const GroupSchemeDecomposition& g) {
    std::vector<std::string> parts;
    if (g.gm_count == 1) parts.push_back("G_m");
    if (g.gm_count > 1) parts.push_back("G_m^" + std::to_string(g.gm_count));
    for (const auto& n : g.mu_orders) parts.push_back("mu_" + to_string(n));
    return parts.empty() ? "1" : join(parts, " x ");
}

inline std::vector<std::string> fraction_strings(const GradedRing& ring, const Chart& c) {
    std::vector<std::string> out;
    out.reserve(c.generators.size());
    for (const auto& fr : c.generators) out.push_back(fraction_to_string(ring, fr));
    return out;
}

inline Json scheme_json(const GroupSchemeDecomposition& g) {
    Json j;
    j["gm"] = json_int(Int(g.gm_count));
    j["mu"] = Json::array();
    for (const auto& n : g.mu_orders) j["mu"].push_back(json_int(n));
    j["connected"] = g.connected;
    return j;
}

inline Json chart_json(const GradedRing& ring, const Chart& c) {
    Json j;
    j["f"] = monomial_to_string(ring, c.f);
    j["generators"] = fraction_strings(ring, c);
    j["index"] = json_int(c.index);
    j["strongly_relevant"] = c.strongly_relevant;
    j["pseudo_g_torsor"] = c.pseudo_g_torsor;
    j["gf_torsor"] = c.gf_torsor;
    j["dimension"] = json_int(Int(c.dimension));
    return j;
}

// Hilbert basis restricted to the box equals the brute-force minimal set.
inline bool hilbert_box_agrees(const DiophantineSystem& sys, const SolverOptions& sopts,
                               const SearchBudget& budget) {
    auto hb = hilbert_basis(sys, sopts);
    IntMat in_box;
    for (const auto& v : hb) {
        bool inside = true;
        for (const auto& e : v)
            if (e > Int(budget.exponent_bound)) inside = false;
        if (inside) in_box.push_back(v);
    }
    std::sort(in_box.begin(), in_box.end());
    return in_box == brute_minimal_solutions(sys, budget);
}

struct OracleOutcome {
    std::vector<std::pair<std::string, std::optional<bool>>> checks;  // nullopt = skipped

    void add(const std::string& name, std::optional<bool> result) {
        checks.emplace_back(name, result);
    }
    bool all_good() const {
        for (const auto& [name, r] : checks)
            if (r.has_value() && !*r) return false;
        return true;
    }
    void render_text(std::ostream& out) const {
        for (const auto& [name, r] : checks)
            out << "oracle " << name << ": "
                << (!r.has_value() ? "skipped (budget)" : (*r ? "ok" : "MISMATCH")) << "\n";
    }
    void render_json(Json& doc) const {
        Json j;
        for (const auto& [name, r] : checks) {
            if (r.has_value())
                j[name] = *r;
            else
                j[name] = nullptr;
        }
        doc["oracle"] = std::move(j);
    }
};

}  // namespace detail

// Parses argv (program name excluded), runs one subcommand, writes the report
// to `out` and diagnostics to `err`. Exit status: 0 success, 2 user error,
// 3 resource limit, 1 internal error.
inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using detail::CliOptions;
    CLI::App app{"exact Proj skeletons of multigraded polynomial rings"};
    app.require_subcommand(1);
    CliOptions o;

    auto* c_gens = app.add_subcommand("gens", "monomic generators of the irrelevant ideal S+");
    auto* c_rel = app.add_subcommand("relevant", "relevance test for a homogeneous element");
    auto* c_chart = app.add_subcommand("chart", "degree-zero localization S_(f)");
    auto* c_atlas = app.add_subcommand("atlas", "all charts of Proj with diagnostics");
    auto* c_torsor = app.add_subcommand("torsor", "quotient/torsor diagnostics for a chart");
    auto* c_dim = app.add_subcommand("dim", "dimension of a chart");
    auto* c_group = app.add_subcommand("group", "diagonalizable group scheme of the grading group");
    auto* c_veronese = app.add_subcommand("veronese", "generators of the Veronese subring S_H");
    auto* c_grouplike = app.add_subcommand("grouplike", "group-like test in the group algebra");
    for (auto* c : {c_gens, c_rel, c_chart, c_atlas, c_torsor, c_dim, c_group, c_veronese, c_grouplike})
        detail::add_common_flags(c, o);
    for (auto* c : {c_rel, c_chart, c_torsor, c_dim})
        c->add_option("expr", o.expr, "element of the ring, e.g. \"x*y\"")->required();
    c_veronese->add_option("generator", o.subgroup_gens,
                           "subgroup generator as flat coordinates, e.g. \"2,0\"");
    c_veronese->add_flag("--free-part", o.free_part, "include the free part of the group");
    c_grouplike->add_option("element", o.element, "e.g. \"chi(1,0)\" or \"2*chi(0) - chi(1)\"")
        ->required();

    try {
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        bool regraded = false;
        GradedRing ring = detail::load_ring(o, regraded);
        SolverOptions sopts;
        sopts.step_budget = o.budget;
        SearchBudget sbudget;
        detail::OracleOutcome oracle;

        Json doc;
        doc["ring"] = ring_spec_json(ring);
        std::ostringstream text;
        if (regraded)
            text << "re-graded to effective grading over " << group_to_string(ring.group) << "\n";

        if (app.got_subcommand(c_gens)) {
            auto gens = monomic_generators(ring);
            std::vector<std::string> strs;
            for (const auto& g : gens) strs.push_back(monomial_to_string(ring, g));
            text << "S+ generators: " << (strs.empty() ? "(none)" : detail::join(strs, ", "))
                 << "\n";
            doc["gens"] = strs;
            if (o.oracle) {
                bool ok = true;
                for (const auto& g : gens) ok = ok && brute_relevant(ring, g, sbudget);
                oracle.add("generators_relevant_by_unit_search", ok);
            }
        } else if (app.got_subcommand(c_rel)) {
            Polynomial p = parse_expression(ring, o.expr);
            bool rel = is_relevant_polynomial(ring, p);
            text << "f = " << polynomial_to_string(ring, p) << "\n";
            text << "relevant: " << detail::yes_no(rel) << "\n";
            doc["f"] = polynomial_to_string(ring, p);
            doc["relevant"] = rel;
            if (p.terms.size() == 1) {
                auto rep = relevance_report(ring, p.terms.begin()->first);
                text << "index [D : D^f]: " << (rep.index ? to_string(*rep.index) : "infinite")
                     << "\n";
                text << "strongly relevant: " << detail::yes_no(rep.strongly_relevant) << "\n";
                doc["index"] = rep.index ? json_int(*rep.index) : Json("infinite");
                doc["strongly_relevant"] = rep.strongly_relevant;
                doc["cone_full_dim"] = rep.cone_full_dim;
                doc["deg_in_interior"] = rep.deg_in_interior;
                if (o.oracle)
                    oracle.add("unit_search_agrees",
                               brute_relevant(ring, p.terms.begin()->first, sbudget) == rel);
            }
        } else if (app.got_subcommand(c_chart)) {
            Monomial f = detail::monomial_arg(ring, o.expr, "chart");
            Chart c = build_chart(ring, f, sopts);
            auto strs = detail::fraction_strings(ring, c);
            text << "generators of S_(" << detail::subscript(ring, f)
                 << "): " << (strs.empty() ? "(none)" : detail::join(strs, ", "))
                 << "; D^f index: " << to_string(c.index)
                 << "; pseudo G-torsor: " << detail::yes_no(c.pseudo_g_torsor)
                 << "; dim: " << c.dimension << "\n";
            Json cj = detail::chart_json(ring, c);
            for (auto& [k, v] : cj.items()) doc[k] = v;
            if (o.oracle)
                oracle.add("hilbert_basis_box_agrees",
                           detail::hilbert_box_agrees(degree_zero_system(ring, f), sopts, sbudget));
        } else if (app.got_subcommand(c_atlas)) {
            ProjAtlas atlas = build_atlas(ring, sopts);
            std::vector<std::string> gen_strs;
            for (const auto& c : atlas.charts) gen_strs.push_back(monomial_to_string(ring, c.f));
            if (atlas.is_trivial) {
                text << "single chart, dimension 0 (Proj is a point)\n";
            } else {
                text << "S+ generators: "
                     << (gen_strs.empty() ? "(none)" : detail::join(gen_strs, ", ")) << "\n";
                for (const auto& c : atlas.charts) {
                    auto strs = detail::fraction_strings(ring, c);
                    text << "chart S_(" << detail::subscript(ring, c.f)
                         << "): generators " << (strs.empty() ? "(none)" : detail::join(strs, ", "))
                         << "; index " << to_string(c.index)
                         << "; pseudo G-torsor: " << detail::yes_no(c.pseudo_g_torsor)
                         << "; dim " << c.dimension << "\n";
                }
                for (const auto& grp : atlas.duplicate_groups) {
                    if (grp.size() < 2) continue;
                    std::vector<std::string> names;
                    for (auto i : grp) names.push_back(monomial_to_string(ring, atlas.charts[i].f));
                    text << "duplicate charts (identical localizations): {"
                         << detail::join(names, ", ") << "}\n";
                }
                text << "group scheme: " << detail::scheme_to_string(atlas.group) << " ("
                     << (atlas.group.connected ? "connected" : "not connected") << ")\n";
            }
            doc["gens"] = gen_strs;
            doc["charts"] = Json::array();
            for (const auto& c : atlas.charts) doc["charts"].push_back(detail::chart_json(ring, c));
            doc["duplicates"] = Json::array();
            for (const auto& grp : atlas.duplicate_groups) {
                if (grp.size() < 2) continue;
                Json names = Json::array();
                for (auto i : grp) names.push_back(monomial_to_string(ring, atlas.charts[i].f));
                doc["duplicates"].push_back(std::move(names));
            }
            doc["group"] = detail::scheme_json(atlas.group);
            doc["trivial"] = atlas.is_trivial;
            if (o.oracle) {
                std::optional<bool> idx_ok = true;
                bool hb_ok = true;
                for (const auto& c : atlas.charts) {
                    auto brute = brute_subgroup_index(c.support_group, sbudget);
                    if (!brute)
                        idx_ok = std::nullopt;  // walk did not close within budget
                    else if (idx_ok.has_value())
                        idx_ok = *idx_ok && (*brute == c.index);
                    hb_ok = hb_ok && detail::hilbert_box_agrees(degree_zero_system(ring, c.f),
                                                                sopts, sbudget);
                }
                oracle.add("index_agrees", idx_ok);
                oracle.add("hilbert_basis_box_agrees", hb_ok);
            }
        } else if (app.got_subcommand(c_torsor)) {
            Monomial f = detail::monomial_arg(ring, o.expr, "torsor");
            TorsorDiagnostics t = torsor_diagnostics(ring, f);
            text << "f = " << monomial_to_string(ring, f) << "\n";
            text << "index [D : D^f]: " << to_string(t.index) << "\n";
            text << "strongly relevant: " << detail::yes_no(t.strongly_relevant) << "\n";
            text << "pseudo G-torsor: " << detail::yes_no(t.pseudo_g_torsor) << "\n";
            text << "G^f-torsor: " << detail::yes_no(t.gf_torsor) << "\n";
            text << "geometric quotient: " << detail::yes_no(t.geometric_quotient) << "\n";
            doc["f"] = monomial_to_string(ring, f);
            doc["index"] = json_int(t.index);
            doc["strongly_relevant"] = t.strongly_relevant;
            doc["pseudo_g_torsor"] = t.pseudo_g_torsor;
            doc["gf_torsor"] = t.gf_torsor;
            doc["geometric_quotient"] = t.geometric_quotient;
            if (o.oracle) {
                auto rep = relevance_report(ring, f);
                auto brute = brute_subgroup_index(rep.support_group, sbudget);
                oracle.add("index_agrees",
                           brute ? std::optional<bool>(*brute == t.index) : std::nullopt);
            }
        } else if (app.got_subcommand(c_dim)) {
            Monomial f = detail::monomial_arg(ring, o.expr, "dim");
            std::size_t d = chart_dimension(ring, f, sopts);
            text << "dim S_(" << detail::subscript(ring, f) << ") = " << d << "\n";
            doc["f"] = monomial_to_string(ring, f);
            doc["dimension"] = json_int(Int(d));
            if (o.oracle)
                oracle.add("hilbert_basis_box_agrees",
                           detail::hilbert_box_agrees(degree_zero_system(ring, f), sopts, sbudget));
        } else if (app.got_subcommand(c_group)) {
            auto g = group_scheme_decomposition(ring.group);
            text << "G = " << detail::scheme_to_string(g) << " ("
                 << (g.connected ? "connected" : "not connected") << ")\n";
            doc["group"] = detail::scheme_json(g);
        } else if (app.got_subcommand(c_veronese)) {
            if (o.subgroup_gens.empty() && !o.free_part)
                throw InvalidInput("veronese needs at least one generator or --free-part");
            std::vector<GroupElement> hgens;
            if (o.free_part)
                for (std::size_t i = 0; i < ring.group.rank; ++i) {
                    IntVec free(ring.group.rank, 0);
                    free[i] = 1;
                    hgens.push_back(
                        make_element(ring.group, free, IntVec(ring.group.torsion_count(), 0)));
                }
            for (const auto& s : o.subgroup_gens)
                hgens.push_back(parse_group_element(ring.group, s));
            Subgroup h = subgroup_from_generators(ring.group, hgens);
            auto gens = veronese_generators(ring, h, sopts);
            std::vector<std::string> strs;
            for (const auto& g : gens) strs.push_back(monomial_to_string(ring, g));
            text << "S_H generators: " << (strs.empty() ? "(none)" : detail::join(strs, ", "))
                 << "\n";
            doc["lattice"] = Json::array();
            for (const auto& row : h.lattice) {
                Json r = Json::array();
                for (const auto& e : row) r.push_back(json_int(e));
                doc["lattice"].push_back(std::move(r));
            }
            doc["gens"] = strs;
            if (o.oracle)
                oracle.add("hilbert_basis_box_agrees",
                           detail::hilbert_box_agrees(veronese_system(ring, h), sopts, sbudget));
        } else if (app.got_subcommand(c_grouplike)) {
            GroupAlgebraElement el = parse_group_algebra(ring.group, o.element);
            bool gl = is_group_like(el);
            text << "element: " << group_algebra_to_string(el) << "\n";
            text << "group-like: " << detail::yes_no(gl) << "\n";
            doc["element"] = group_algebra_to_string(el);
            doc["group_like"] = gl;
            if (o.oracle) {
                bool expected = el.coeffs.size() == 1 && el.coeffs.begin()->second == 1;
                oracle.add("basis_element_characterization", gl == expected);
            }
        }

        if (o.oracle) {
            if (o.json)
                oracle.render_json(doc);
            else
                oracle.render_text(text);
        }
        if (o.json)
            out << doc.dump(2) << "\n";
        else
            out << text.str();
        if (o.oracle && !oracle.all_good()) {
            err << "error: oracle cross-check mismatch\n";
            return 1;
        }
        return 0;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mgproj
