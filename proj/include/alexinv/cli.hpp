#pragma once

#include <cstdlib>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alexinv/io.hpp"
#include "alexinv/local_invariants.hpp"
#include "alexinv/quasiadjunction.hpp"

namespace alexinv::cli {

using io::json;

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_math = 3;
constexpr int exit_usage = 64;

inline const char *usage_text() {
    return "usage: alexinv <subcommand> [options] [--format text|json]\n"
           "\n"
           "subcommands:\n"
           "  local      local Alexander polynomial, zeta function and resolution of a germ\n"
           "  global     Alexander polynomial and divisibility report of a projective curve\n"
           "  fox        Alexander matrix and module of a presentation\n"
           "  charvar    local-system cohomology at a character\n"
           "  covers     Betti numbers of abelian covers\n"
           "  quasiadj   constants and ideals of quasiadjunction\n"
           "  lct        log-canonical threshold and region test\n"
           "  vankampen  presentation from braid monodromy\n"
           "  faces      local or global faces of quasiadjunction\n"
           "\n"
           "Run 'alexinv <subcommand> --help' for the options of a subcommand.\n";
}

// ---------------------------------------------------------------------------
// Text rendering of a report.

namespace detail {

/// Polynomials and groups carry a "text" field; text reports show only that.
inline bool is_scalar(const json &j) { return (!j.is_object() && !j.is_array()) || (j.is_object() && j.contains("text")); }

inline std::string scalar_text(const json &j) {
    if (j.is_object()) return j["text"].get<std::string>();
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

inline std::string inline_text(const json &j) {
    if (is_scalar(j)) return scalar_text(j);
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
        return s + "]";
    }
    std::string s = "{";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        s += (first ? "" : ", ") + it.key() + ": " + inline_text(it.value());
        first = false;
    }
    return s + "}";
}

/// Short enough to print on one line.
inline bool compact(const json &j) {
    if (is_scalar(j)) return true;
    if (j.is_array()) {
        for (const auto &x : j)
            if (!is_scalar(x) && !(x.is_array() && std::all_of(x.begin(), x.end(), is_scalar))) return false;
        return inline_text(j).size() <= 100;
    }
    return false;
}

inline void render(std::ostream &out, const json &j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (compact(it.value())) {
                out << pad << it.key() << ": " << inline_text(it.value()) << "\n";
            } else {
                out << pad << it.key() << ":\n";
                render(out, it.value(), indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto &x : j) {
            if (compact(x)) {
                out << pad << "- " << inline_text(x) << "\n";
            } else {
                out << pad << "-\n";
                render(out, x, indent + 2);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

inline long jet_bound_from_env() {
    const char *v = std::getenv("ALEXINV_JET_BOUND");
    if (!v || !*v) return 0;
    try {
        long b = std::stol(v);
        if (b < 1) throw std::invalid_argument("nonpositive");
        return b;
    } catch (const std::exception &) {
        fail(ErrorKind::Validation, std::string("ALEXINV_JET_BOUND must be a positive integer, got '") + v + "'");
    }
}

inline PlaneCurveGerm germ_from(const std::vector<std::string> &branches) {
    if (branches.empty()) fail(ErrorKind::Validation, "give the germ with --germ (once per branch)");
    return PlaneCurveGerm::parse(branches);
}

inline json exponent_list(const std::vector<Exponent> &es) {
    json a = json::array();
    for (const auto &e : es) a.push_back(format_polynomial(LaurentPolynomial::monomial(e, 1)));
    return a;
}

inline json tree_report(const ResolutionTree &t) {
    json nodes = json::array();
    for (std::size_t k = 0; k < t.nodes.size(); ++k) {
        const auto &n = t.nodes[k];
        json adj = json::array();
        for (auto a : n.adj) adj.push_back(a + 1);
        nodes.push_back({{"id", k + 1}, {"a", n.a}, {"c", n.c}, {"adj", adj}, {"euler", n.euler_open()}});
    }
    return nodes;
}

inline json face_hyperplane(const std::vector<Halfspace> &supporting) {
    if (supporting.empty()) return nullptr;
    return {{"coeffs", io::rational_vector_json(supporting.front().normal)}, {"level", io::rational_json(supporting.front().bound)}};
}

inline json local_faces_report(const QuasiAdjunction &q) {
    json faces = json::array();
    for (const auto &f : faces_of_quasiadjunction(polytopes_and_faces(q))) {
        json verts = json::array();
        for (const auto &v : f.vertices) verts.push_back(io::rational_vector_json(v));
        faces.push_back({{"dimension", f.dimension},
                         {"hyperplane", face_hyperplane(f.supporting)},
                         {"vertices", verts},
                         {"point", io::rational_vector_json(f.point)},
                         {"ideal_staircase", exponent_list(f.staircase)},
                         {"dim_quotient", f.dim_quotient},
                         {"dim_quotient_weight_one", f.dim_quotient_weight_one}});
    }
    return faces;
}

inline IdealVariant variant_from(const std::string &s) {
    if (s == "A" || s == "strict") return IdealVariant::Strict;
    if (s == "A'" || s == "weight-one") return IdealVariant::WeightOne;
    if (s == "A''" || s == "log") return IdealVariant::Log;
    fail(ErrorKind::Validation, "unknown ideal variant '" + s + "' (use A, A', A'')");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Subcommands. Each fills `report` or throws alexinv::Error.

struct Options {
    std::string format = "text";
    std::vector<std::string> germ;
    std::string tree, curve, presentation, braids, sublinks, polynomial;
    std::string character, orders, xi, variant = "A", member, direction, gamma, koszul, newton;
    long cyclic = 0;
    long k = 1;
    bool projective = false, semisimple = false;
};

inline json cmd_local(const Options &o) {
    json rep;
    ResolutionTree t;
    if (!o.tree.empty()) {
        t = io::tree_from_json(io::read_json_file(o.tree));
        rep["input"] = o.tree;
    } else {
        auto g = detail::germ_from(o.germ);
        json branches = json::array();
        for (const auto &c : g.components) branches.push_back(format_polynomial(c));
        rep["germ"] = branches;
        t = resolve(g);
    }
    rep["components"] = t.r;
    rep["resolution"] = detail::tree_report(t);
    rep["zeta"] = acampo_zeta(t).to_string();
    rep["alexander"] = io::polynomial_json(local_alexander(t));
    if (t.r >= 2) {
        auto m = multivariable_link_alexander(t);
        json mv = {{"product", m.to_string()}};
        try {
            mv["expanded"] = io::polynomial_json(m.expand());
        } catch (const Error &) {
            mv["expanded"] = nullptr;
        }
        rep["multivariable_alexander"] = mv;
    }
    return rep;
}

inline json cmd_global(const Options &o) {
    if (o.curve.empty()) fail(ErrorKind::Validation, "global needs --curve FILE");
    auto spec = io::curve_from_json(io::read_json_file(o.curve));
    CurveContext ctx(spec, detail::jet_bound_from_env());
    json rep;
    rep["degree"] = spec.degree;
    std::vector<long> degs;
    for (const auto &c : spec.components) degs.push_back(c.degree);
    rep["h1_complement"] = io::group_json(h1_complement(degs));
    json constants = json::array();
    for (const auto &k : contributing_constants(ctx)) {
        auto s = superabundance(ctx, k);
        constants.push_back({{"kappa", io::rational_json(k)}, {"degree", s.degree}, {"h0", s.h0}, {"chi", s.chi}, {"superabundance", s.h1}});
    }
    rep["constants"] = constants;
    auto f = global_alexander(ctx);
    json factors = json::array();
    for (const auto &[k, s] : f.factors) factors.push_back({{"kappa", io::rational_json(k)}, {"exponent", s}});
    rep["alexander"] = {{"factors", factors},
                        {"t_minus_one_exponent", f.t_minus_one_exponent},
                        {"polynomial", f.assembled ? io::polynomial_json(*f.assembled) : json(nullptr)}};
    rep["local_product"] = io::polynomial_json(local_alexander_product(spec));
    rep["infinity"] = io::polynomial_json(infinity_alexander(spec.degree));
    if (f.assembled) {
        auto d = divisibility_check(ctx);
        rep["divisibility"] = {{"local", "PASS"},
                               {"local_quotient", d.local_quotient.to_string()},
                               {"infinity", "PASS"},
                               {"infinity_quotient", d.infinity_quotient.to_string()}};
        if (o.cyclic > 0) {
            auto c = cyclic_cover_h1(*f.assembled, o.cyclic, true);
            json ev = json::array();
            for (const auto &[k, m] : c.eigenvalues) ev.push_back({{"exponent", io::rational_json(k)}, {"multiplicity", m}});
            rep["cyclic_cover"] = {{"n", o.cyclic}, {"rank", c.rank}, {"eigenvalues", ev}};
        }
    }
    long nodes = 0, cusps = 0;
    bool nodal_cuspidal = true;
    for (const auto &s : spec.singularities) {
        if (s.type == "node") ++nodes;
        else if (s.type == "cusp") ++cusps;
        else nodal_cuspidal = false;
    }
    if (nodal_cuspidal) rep["abelian_certificate"] = nori_abelian_certificate(spec.degree, nodes, cusps);
    json warnings = json::array();
    for (const auto &w : f.warnings) warnings.push_back(w);
    rep["warnings"] = warnings;
    return rep;
}

inline GroupPresentation presentation_from(const Options &o) {
    if (o.presentation.empty()) fail(ErrorKind::Validation, "--presentation FILE is required");
    return io::presentation_from_json(io::read_json_file(o.presentation));
}

inline json cmd_fox(const Options &o) {
    auto p = presentation_from(o);
    auto a = fox_jacobian(p);
    json rep;
    rep["generators"] = p.generators;
    rep["relators"] = p.relators.size();
    rep["rank"] = p.rank;
    rep["abelianization"] = io::group_json(abelianization(p));
    json m = json::array();
    for (const auto &row : a.entries) {
        json r = json::array();
        for (const auto &e : row) r.push_back(e.to_string());
        m.push_back(r);
    }
    rep["alexander_matrix"] = m;
    if (p.rank == 1) {
        auto mod = alexander_module(a);
        json factors = json::array();
        for (const auto &f : mod.cyclic_factors) factors.push_back(f.to_string());
        rep["module"] = {{"generic_rank", mod.generic_rank}, {"cyclic_factors", factors}};
        try {
            rep["alexander"] = io::polynomial_json(one_variable_alexander(p));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NonTorsion) throw;
            rep["alexander"] = nullptr;
            rep["note"] = e.what();
        }
    } else if (p.generators >= 1) {
        json minors = json::array();
        for (const auto &f : fitting_minors(a, p.generators - 1)) minors.push_back(f.to_string());
        rep["first_fitting_minors"] = minors;
    }
    return rep;
}

inline json cmd_charvar(const Options &o) {
    if (o.character.empty()) fail(ErrorKind::Validation, "--character \"k/m,...\" is required");
    CharacterPoint chi(io::parse_rational_list(o.character));
    json rep;
    rep["character"] = io::rational_vector_json(chi.coords);
    if (!o.koszul.empty()) {
        auto rn = io::parse_long_list(o.koszul);
        if (rn.size() != 2 || rn[0] < 1 || rn[1] < 1) fail(ErrorKind::Validation, "--koszul expects \"r,n\"");
        rep["koszul"] = {{"r", rn[0]}, {"n", rn[1]},
                         {"in_support", koszul_support_membership(static_cast<std::size_t>(rn[0]), static_cast<std::size_t>(rn[1]), chi)}};
        return rep;
    }
    auto p = presentation_from(o);
    long h1 = local_system_h1_dim(p, chi);
    rep["h1_local_system"] = h1;
    rep["depth"] = std::max(0L, h1);
    rep["k"] = o.k;
    rep["in_V_k"] = charvar_membership(p, o.k, chi);
    return rep;
}

inline json cmd_covers(const Options &o) {
    json rep;
    if (!o.polynomial.empty()) {
        if (o.cyclic < 1) fail(ErrorKind::Validation, "--cyclic n is required");
        auto d = parse_polynomial(o.polynomial, {"t"});
        auto c = cyclic_cover_h1(d, o.cyclic, o.semisimple);
        rep["polynomial"] = normalize_unit(d).to_string();
        rep["n"] = o.cyclic;
        rep["rank"] = c.rank;
        if (o.semisimple) {
            json ev = json::array();
            for (const auto &[k, m] : c.eigenvalues) ev.push_back({{"exponent", io::rational_json(k)}, {"multiplicity", m}});
            rep["eigenvalues"] = ev;
        }
        return rep;
    }
    auto p = presentation_from(o);
    std::vector<long> n;
    if (!o.orders.empty()) n = io::parse_long_list(o.orders);
    else if (o.cyclic > 0) n.assign(p.rank, o.cyclic);
    else fail(ErrorKind::Validation, "give --cyclic n or --orders n1,...,nr");
    json orders = n;
    rep["orders"] = orders;
    rep["unbranched_b1"] = unbranched_cover_betti(p, n);
    SublinkData data;
    if (!o.sublinks.empty()) data = io::sublinks_from_json(io::read_json_file(o.sublinks));
    else if (p.rank == 1) data[{0}] = p;
    if (!data.empty()) rep["branched_b1"] = branched_cover_betti(data, n);
    else rep["branched_b1"] = nullptr;
    return rep;
}

inline json cmd_quasiadj(const Options &o) {
    if (!o.newton.empty()) {
        auto v = io::parse_long_list(o.newton);
        if (v.size() != 6) fail(ErrorKind::Validation, "--newton expects \"a,b,n,i,j,k\"");
        json rep;
        rep["kappa"] = io::rational_json(kappa_constant(v[0], v[1], v[3], v[4]));
        rep["xi_steps"] = xi_steps(v[0], v[1], v[3], v[4], v[2]);
        rep["adjoint"] = newton_adjoint_membership(v[0], v[1], v[2], v[3], v[4], v[5]);
        return rep;
    }
    auto t = resolve(detail::germ_from(o.germ));
    QuasiAdjunction q(t, detail::jet_bound_from_env());
    json rep;
    rep["components"] = t.r;
    rep["jet_bound"] = q.jet_bound();
    if (t.r == 1) {
        json c = json::array();
        for (const auto &k : constants_of_quasiadjunction(q)) c.push_back(io::rational_json(k));
        rep["constants"] = c;
    }
    if (!o.xi.empty()) {
        auto xi = io::parse_rational_list(o.xi);
        auto variant = detail::variant_from(o.variant);
        auto d = q.ideal(xi, variant);
        rep["ideal"] = {{"variant", to_string(variant)},
                        {"xi", io::rational_vector_json(xi)},
                        {"colength", d.colength},
                        {"outside", detail::exponent_list(d.non_members)}};
        if (!o.member.empty()) rep["ideal"]["member"] = q.member(parse_polynomial(o.member), xi, variant);
    }
    return rep;
}

inline json cmd_lct(const Options &o) {
    auto t = resolve(detail::germ_from(o.germ));
    std::vector<Rational> w = o.direction.empty() ? std::vector<Rational>(t.r, Rational(1)) : io::parse_rational_list(o.direction);
    json rep;
    rep["direction"] = io::rational_vector_json(w);
    rep["threshold"] = io::rational_json(lct_threshold(t, w));
    if (!o.gamma.empty()) {
        auto g = io::parse_rational_list(o.gamma);
        rep["gamma"] = io::rational_vector_json(g);
        rep["log_canonical"] = lct_region(t, g);
    }
    return rep;
}

inline json cmd_vankampen(const Options &o) {
    if (o.braids.empty()) fail(ErrorKind::Validation, "vankampen needs --braids FILE");
    auto m = io::monodromy_from_json(io::read_json_file(o.braids));
    const auto mode = o.projective ? VanKampenMode::Projective : VanKampenMode::Affine;
    auto p = vankampen_presentation(m, mode);
    json rep;
    rep["mode"] = o.projective ? "projective" : "affine";
    rep["full_twist"] = full_twist_check(m);
    rep["presentation"] = io::presentation_json(p);
    rep["abelianization"] = io::group_json(abelianization(p));
    if (p.rank == 1) {
        try {
            rep["alexander"] = io::polynomial_json(one_variable_alexander(p));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NonTorsion) throw;
            rep["alexander"] = nullptr;
        }
    }
    return rep;
}

inline json cmd_faces(const Options &o) {
    json rep;
    if (!o.curve.empty()) {
        auto spec = io::curve_from_json(io::read_json_file(o.curve));
        CurveContext ctx(spec, detail::jet_bound_from_env());
        json faces = json::array();
        for (const auto &f : global_faces_and_components(ctx)) {
            json verts = json::array(), conj = json::array();
            for (const auto &v : f.vertices) verts.push_back(io::rational_vector_json(v));
            for (const auto &v : f.conjugate_vertices) conj.push_back(io::rational_vector_json(v));
            json face = {{"dimension", f.dimension}, {"vertices", verts}, {"conjugate_vertices", conj},
                         {"level", f.level ? io::rational_json(*f.level) : json(nullptr)}};
            if (f.level && is_integer(*f.level)) {
                face["twist_degree"] = f.twist_degree;
                face["h1"] = f.h1;
                face["predicted_depth"] = f.predicted_depth;
            }
            faces.push_back(face);
        }
        rep["faces"] = faces;
        return rep;
    }
    auto t = resolve(detail::germ_from(o.germ));
    QuasiAdjunction q(t, detail::jet_bound_from_env());
    rep["components"] = t.r;
    rep["faces"] = detail::local_faces_report(q);
    return rep;
}

// ---------------------------------------------------------------------------

inline void add_common(CLI::App &app, Options &o) {
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

/// Runs one command line (without the program name). Output is deterministic.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    if (args.empty()) {
        err << usage_text();
        return exit_usage;
    }
    const std::string sub = args[0];
    if (sub == "--help" || sub == "-h" || sub == "help") {
        out << usage_text();
        return exit_ok;
    }
    static const std::vector<std::string> known{"local", "global", "fox", "charvar", "covers",
                                                "quasiadj", "lct", "vankampen", "faces"};
    if (std::find(known.begin(), known.end(), sub) == known.end()) {
        err << "alexinv: unknown subcommand '" << sub << "'\n\n" << usage_text();
        return exit_usage;
    }

    Options o;
    CLI::App app{"alexinv " + sub, "alexinv " + sub};
    add_common(app, o);
    if (sub == "local") {
        app.add_option("--germ", o.germ, "branch polynomial in x, y (repeat per branch)");
        app.add_option("--tree", o.tree, "resolution tree JSON file");
    } else if (sub == "global") {
        app.add_option("--curve", o.curve, "curve spec JSON file")->required();
        app.add_option("--cyclic", o.cyclic, "also report the n-fold cyclic cover");
    } else if (sub == "fox") {
        app.add_option("--presentation", o.presentation, "presentation JSON file")->required();
    } else if (sub == "charvar") {
        app.add_option("--presentation", o.presentation, "presentation JSON file");
        app.add_option("--character", o.character, "character exponents, e.g. \"1/6,5/6\"")->required();
        app.add_option("--k", o.k, "depth to test");
        app.add_option("--koszul", o.koszul, "generic arrangement model \"r,n\"");
    } else if (sub == "covers") {
        app.add_option("--presentation", o.presentation, "presentation JSON file");
        app.add_option("--cyclic", o.cyclic, "cyclic cover order");
        app.add_option("--orders", o.orders, "cover orders \"n1,...,nr\"");
        app.add_option("--sublinks", o.sublinks, "sublink presentations JSON file");
        app.add_option("--polynomial", o.polynomial, "Alexander polynomial in t");
        app.add_flag("--semisimple", o.semisimple, "report eigenvalue multiplicities");
    } else if (sub == "quasiadj") {
        app.add_option("--germ", o.germ, "branch polynomial in x, y (repeat per branch)");
        app.add_option("--xi", o.xi, "point of the cube, e.g. \"1/6\"");
        app.add_option("--variant", o.variant, "A, A' or A''");
        app.add_option("--member", o.member, "polynomial to test for membership");
        app.add_option("--newton", o.newton, "closed formulas for z^n = x^a + y^b: \"a,b,n,i,j,k\"");
    } else if (sub == "lct") {
        app.add_option("--germ", o.germ, "branch polynomial in x, y (repeat per branch)");
        app.add_option("--direction", o.direction, "ray direction");
        app.add_option("--gamma", o.gamma, "point to test");
    } else if (sub == "vankampen") {
        app.add_option("--braids", o.braids, "braid monodromy JSON file")->required();
        app.add_flag("--projective", o.projective, "add the relation at infinity");
    } else if (sub == "faces") {
        app.add_option("--germ", o.germ, "branch polynomial in x, y (repeat per branch)");
        app.add_option("--curve", o.curve, "curve spec JSON file (global faces)");
    }

    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end()); // CLI11 consumes the vector from the back
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "alexinv " << sub << ": " << e.what() << "\n";
        return exit_validation;
    }

    try {
        json rep;
        if (sub == "local") rep = cmd_local(o);
        else if (sub == "global") rep = cmd_global(o);
        else if (sub == "fox") rep = cmd_fox(o);
        else if (sub == "charvar") rep = cmd_charvar(o);
        else if (sub == "covers") rep = cmd_covers(o);
        else if (sub == "quasiadj") rep = cmd_quasiadj(o);
        else if (sub == "lct") rep = cmd_lct(o);
        else if (sub == "vankampen") rep = cmd_vankampen(o);
        else rep = cmd_faces(o);
        json full = {{"command", sub}, {"schema", "alexinv/report/v1"}, {"result", rep}};
        if (o.format == "json") out << full.dump(2) << "\n";
        else detail::render(out, rep, 0);
        return exit_ok;
    } catch (const Error &e) {
        err << "alexinv " << sub << ": " << e.what() << "\n";
        return is_validation_kind(e.kind()) ? exit_validation : exit_math;
    }
}

inline int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace alexinv::cli
