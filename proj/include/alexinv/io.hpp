#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "alexinv/braid.hpp"
#include "alexinv/charvar.hpp"
#include "alexinv/curve_global.hpp"
#include "alexinv/poly_parse.hpp"
#include "alexinv/resolution.hpp"

namespace alexinv::io {

using json = nlohmann::ordered_json;

/// Collects every problem in an input before failing.
class Violations {
  public:
    void add(const std::string &where, const std::string &what) { list_.push_back(where.empty() ? what : where + ": " + what); }
    bool empty() const { return list_.empty(); }
    const std::vector<std::string> &list() const { return list_; }
    void throw_if_any(const std::string &what) const {
        if (list_.empty()) return;
        std::string msg = what + " is invalid:";
        for (const auto &v : list_) msg += "\n  - " + v;
        fail(ErrorKind::Validation, msg);
    }

  private:
    std::vector<std::string> list_;
};

inline json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Validation, "cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        fail(ErrorKind::Parse, "'" + path + "' is not valid JSON: " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Values.

inline std::string rational_text(const Rational &q) { return q.get_str(); }

inline json rational_json(const Rational &q) { return rational_text(q); }

inline std::optional<Rational> rational_from(const json &j) {
    try {
        if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const Error &) {
    }
    return std::nullopt;
}

inline json rational_vector_json(const std::vector<Rational> &v) {
    json a = json::array();
    for (const auto &x : v) a.push_back(rational_json(x));
    return a;
}

inline json polynomial_json(const LaurentPolynomial &p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exp", it->first}, {"num", it->second.get_num().get_str()}, {"den", it->second.get_den().get_str()}});
    return {{"vars", p.var_count()}, {"terms", terms}, {"text", p.to_string()}};
}

inline LaurentPolynomial polynomial_from_json(const json &j) {
    Violations v;
    if (!j.is_object() || !j.contains("vars") || !j["vars"].is_number_unsigned() || !j.contains("terms") ||
        !j["terms"].is_array())
        fail(ErrorKind::Validation, "polynomial needs 'vars' and 'terms'");
    const auto vars = j["vars"].get<std::size_t>();
    LaurentPolynomial p(vars);
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
        const auto &t = j["terms"][i];
        const std::string at = "term " + std::to_string(i + 1);
        if (!t.contains("exp") || !t["exp"].is_array() || t["exp"].size() != vars) {
            v.add(at, "exponent must have " + std::to_string(vars) + " entries");
            continue;
        }
        auto num = t.contains("num") ? rational_from(t["num"]) : std::nullopt;
        auto den = t.contains("den") ? rational_from(t["den"]) : std::optional<Rational>(Rational(1));
        if (!num || !den || *den == 0) {
            v.add(at, "coefficient needs integer 'num' and nonzero 'den'");
            continue;
        }
        p.add_term(t["exp"].get<Exponent>(), *num / *den);
    }
    v.throw_if_any("polynomial");
    return p;
}

inline json group_json(const AbelianGroupInvariants &g) {
    json t = json::array();
    for (const auto &d : g.torsion) t.push_back(d.get_str());
    return {{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

// ---------------------------------------------------------------------------
// Presentations: {"generators": s, "relators": [[[j, +-1], ...]], "phi": [[...], ...]}
// with 1-based generator indices.

inline GroupPresentation presentation_from_json(const json &j) {
    Violations v;
    GroupPresentation p;
    if (!j.is_object()) fail(ErrorKind::Validation, "presentation must be a JSON object");
    if (!j.contains("generators") || !j["generators"].is_number_unsigned() || j["generators"].get<std::size_t>() == 0)
        v.add("generators", "must be a positive integer");
    else
        p.generators = j["generators"].get<std::size_t>();
    if (!j.contains("relators") || !j["relators"].is_array()) {
        v.add("relators", "must be an array of words");
    } else {
        for (std::size_t r = 0; r < j["relators"].size(); ++r) {
            const auto &w = j["relators"][r];
            const std::string at = "relator " + std::to_string(r + 1);
            if (!w.is_array()) {
                v.add(at, "must be an array of [generator, exponent] pairs");
                continue;
            }
            GroupWord word;
            for (std::size_t k = 0; k < w.size(); ++k) {
                const auto &l = w[k];
                const std::string lat = at + " letter " + std::to_string(k + 1);
                if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer()) {
                    v.add(lat, "must be [generator, exponent]");
                    continue;
                }
                long g = l[0].get<long>(), e = l[1].get<long>();
                if (g < 1 || (p.generators > 0 && static_cast<std::size_t>(g) > p.generators)) {
                    v.add(lat, "generator " + std::to_string(g) + " is out of range");
                    continue;
                }
                if (e == 0) {
                    v.add(lat, "exponent must be nonzero");
                    continue;
                }
                for (long n = 0; n < (e < 0 ? -e : e); ++n) word.push_back({static_cast<std::size_t>(g - 1), e < 0 ? -1 : 1});
            }
            p.relators.push_back(std::move(word));
        }
    }
    if (j.contains("phi")) {
        const auto &f = j["phi"];
        if (!f.is_array() || f.size() != p.generators) {
            v.add("phi", "must list one image per generator");
        } else {
            p.rank = f.empty() || !f[0].is_array() ? 0 : f[0].size();
            for (std::size_t g = 0; g < f.size(); ++g) {
                if (!f[g].is_array() || f[g].size() != p.rank) {
                    v.add("phi", "image of generator " + std::to_string(g + 1) + " has the wrong length");
                    continue;
                }
                std::vector<long> img;
                for (const auto &x : f[g]) {
                    if (!x.is_number_integer()) {
                        v.add("phi", "images must be integer vectors");
                        break;
                    }
                    img.push_back(x.get<long>());
                }
                p.phi.push_back(img);
            }
        }
    } else {
        p.rank = 1;
        p.phi.assign(p.generators, std::vector<long>{1});
    }
    v.throw_if_any("presentation");
    p.validate();
    return p;
}

inline json presentation_json(const GroupPresentation &p) {
    json rel = json::array();
    for (const auto &w : p.relators) {
        json word = json::array();
        for (const auto &l : w) word.push_back({l.gen + 1, l.exp});
        rel.push_back(word);
    }
    json phi = json::array();
    for (const auto &x : p.phi) phi.push_back(x);
    return {{"generators", p.generators}, {"relators", rel}, {"phi", phi}};
}

/// {"sublinks": [{"components": [1, 2], "presentation": {...}}, ...]}
inline SublinkData sublinks_from_json(const json &j) {
    Violations v;
    SublinkData out;
    if (!j.contains("sublinks") || !j["sublinks"].is_array()) fail(ErrorKind::Validation, "sublink file needs 'sublinks'");
    for (std::size_t i = 0; i < j["sublinks"].size(); ++i) {
        const auto &e = j["sublinks"][i];
        const std::string at = "sublink " + std::to_string(i + 1);
        if (!e.contains("components") || !e["components"].is_array() || !e.contains("presentation")) {
            v.add(at, "needs 'components' and 'presentation'");
            continue;
        }
        std::vector<std::size_t> comps;
        for (const auto &c : e["components"])
            if (c.is_number_integer() && c.get<long>() >= 1) comps.push_back(c.get<std::size_t>() - 1);
            else v.add(at, "component indices are 1-based integers");
        std::sort(comps.begin(), comps.end());
        try {
            out[comps] = presentation_from_json(e["presentation"]);
        } catch (const Error &err) {
            v.add(at, err.what());
        }
    }
    v.throw_if_any("sublink data");
    return out;
}

/// {"coords": ["k/m", ...]}
inline CharacterPoint character_from_json(const json &j) {
    Violations v;
    std::vector<Rational> c;
    if (!j.contains("coords") || !j["coords"].is_array()) fail(ErrorKind::Validation, "character needs 'coords'");
    for (std::size_t i = 0; i < j["coords"].size(); ++i) {
        auto q = rational_from(j["coords"][i]);
        if (!q) v.add("coordinate " + std::to_string(i + 1), "must be a rational \"p/q\"");
        else c.push_back(*q);
    }
    v.throw_if_any("character");
    return CharacterPoint(c);
}

// ---------------------------------------------------------------------------
// Braid monodromy: {"strands": d, "braids": [[1, 1], [-2, 1]], "labels": {"1": "C1", ...}}

inline MonodromyData monodromy_from_json(const json &j) {
    Violations v;
    MonodromyData m;
    if (!j.is_object()) fail(ErrorKind::Validation, "braid file must be a JSON object");
    if (!j.contains("strands") || !j["strands"].is_number_unsigned() || j["strands"].get<std::size_t>() == 0)
        v.add("strands", "must be a positive integer");
    else
        m.strands = j["strands"].get<std::size_t>();
    if (!j.contains("braids") || !j["braids"].is_array()) {
        v.add("braids", "must be an array of braid words");
    } else {
        for (std::size_t b = 0; b < j["braids"].size(); ++b) {
            BraidWord w;
            w.strands = m.strands;
            const auto &arr = j["braids"][b];
            if (!arr.is_array()) {
                v.add("braid " + std::to_string(b + 1), "must be an array of signed generator indices");
                continue;
            }
            for (std::size_t k = 0; k < arr.size(); ++k) {
                if (!arr[k].is_number_integer()) {
                    v.add("braid " + std::to_string(b + 1) + " letter " + std::to_string(k + 1), "must be an integer");
                    continue;
                }
                long x = arr[k].get<long>();
                long i = x < 0 ? -x : x;
                if (i == 0 || static_cast<std::size_t>(i) >= m.strands)
                    v.add("braid " + std::to_string(b + 1) + " letter " + std::to_string(k + 1),
                          "index " + std::to_string(x) + " must lie in 1.." + std::to_string(m.strands - 1));
                w.letters.push_back(static_cast<int>(x));
            }
            m.braids.push_back(std::move(w));
        }
    }
    if (j.contains("labels")) {
        const auto &l = j["labels"];
        if (!l.is_object()) {
            v.add("labels", "must map strand numbers to labels");
        } else {
            m.labels.assign(m.strands, "");
            for (auto it = l.begin(); it != l.end(); ++it) {
                std::size_t s = 0;
                try {
                    s = std::stoul(it.key());
                } catch (const std::exception &) {
                    s = 0;
                }
                if (s < 1 || s > m.strands || !it.value().is_string()) {
                    v.add("labels", "entry '" + it.key() + "' is not a strand number with a string label");
                    continue;
                }
                m.labels[s - 1] = it.value().get<std::string>();
            }
            for (std::size_t s = 0; s < m.labels.size(); ++s)
                if (m.labels[s].empty()) v.add("labels", "strand " + std::to_string(s + 1) + " has no label");
        }
    }
    v.throw_if_any("braid file");
    m.validate();
    return m;
}

// ---------------------------------------------------------------------------
// Resolution trees: {"r": 2, "nodes": [{"id": 1, "a": [2, 2], "c": 1, "adj": [3], "strict": [[1, 1]]}]}
// with optional "center": {"x": "...", "y": "..."} in chart variables u, v.

inline ResolutionTree tree_from_json(const json &j) {
    Violations v;
    ResolutionTree t;
    if (!j.is_object()) fail(ErrorKind::Validation, "tree must be a JSON object");
    if (!j.contains("r") || !j["r"].is_number_unsigned() || j["r"].get<std::size_t>() == 0) v.add("r", "must be a positive integer");
    else t.r = j["r"].get<std::size_t>();
    if (!j.contains("nodes") || !j["nodes"].is_array()) {
        v.add("nodes", "must be an array");
        v.throw_if_any("tree");
    }
    const auto &nodes = j["nodes"];
    std::map<long, std::size_t> index;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto &n = nodes[k];
        long id = n.contains("id") && n["id"].is_number_integer() ? n["id"].get<long>() : static_cast<long>(k + 1);
        if (!index.emplace(id, k).second) v.add("node " + std::to_string(id), "duplicate id");
    }
    t.nodes.resize(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto &n = nodes[k];
        const std::string at = "node " + std::to_string(k + 1);
        auto &node = t.nodes[k];
        if (!n.contains("a") || !n["a"].is_array()) v.add(at, "needs 'a'");
        else
            for (const auto &x : n["a"])
                if (x.is_number_integer()) node.a.push_back(x.get<long>());
                else v.add(at, "'a' entries must be integers");
        if (!n.contains("c") || !n["c"].is_number_integer()) v.add(at, "needs integer 'c'");
        else node.c = n["c"].get<long>();
        if (n.contains("adj"))
            for (const auto &x : n["adj"]) {
                auto it = x.is_number_integer() ? index.find(x.get<long>()) : index.end();
                if (it == index.end()) v.add(at, "adjacency names an unknown node");
                else node.adj.insert(it->second);
            }
        if (n.contains("strict"))
            for (const auto &x : n["strict"]) {
                if (!x.is_array() || x.size() != 2 || !x[0].is_number_integer() || !x[1].is_number_integer() ||
                    x[0].get<long>() < 1 || static_cast<std::size_t>(x[0].get<long>()) > t.r || x[1].get<long>() < 0) {
                    v.add(at, "strict entries are [component, count] with a 1-based component");
                    continue;
                }
                node.strict[x[0].get<std::size_t>() - 1] += x[1].get<long>();
            }
        if (n.contains("center")) {
            try {
                CenterMap c;
                c.x = parse_polynomial(n["center"].at("x").get<std::string>(), {"u", "v"});
                c.y = parse_polynomial(n["center"].at("y").get<std::string>(), {"u", "v"});
                node.center = c;
            } catch (const std::exception &e) {
                v.add(at, std::string("bad center: ") + e.what());
            }
        }
    }
    for (std::size_t k = 0; k < t.nodes.size(); ++k)
        for (auto a : t.nodes[k].adj)
            if (!t.nodes[a].adj.count(k))
                v.add("node " + std::to_string(k + 1), "adjacency is not symmetric with node " + std::to_string(a + 1));
    v.throw_if_any("tree");
    t.validate();
    return t;
}

inline json tree_json(const ResolutionTree &t) {
    json nodes = json::array();
    for (std::size_t k = 0; k < t.nodes.size(); ++k) {
        const auto &n = t.nodes[k];
        json adj = json::array(), strict = json::array();
        for (auto a : n.adj) adj.push_back(a + 1);
        for (const auto &[c, m] : n.strict) strict.push_back({c + 1, m});
        json node = {{"id", k + 1}, {"a", n.a}, {"c", n.c}, {"adj", adj}, {"strict", strict}};
        if (n.center)
            node["center"] = {{"x", n.center->x.to_string({"u", "v"})}, {"y", n.center->y.to_string({"u", "v"})}};
        nodes.push_back(node);
    }
    return {{"r", t.r}, {"nodes", nodes}};
}

// ---------------------------------------------------------------------------
// Curve specs: {"degree": 6, "components": [{"label": "C", "degree": 6}],
//   "singularities": [{"pos": ["0", "0"], "type": "cusp"} | {"pos": [..], "germ": "x^2 - y^3"}]}

inline ProjectiveCurveSpec curve_from_json(const json &j) {
    Violations v;
    ProjectiveCurveSpec s;
    if (!j.is_object()) fail(ErrorKind::Validation, "curve spec must be a JSON object");
    if (!j.contains("degree") || !j["degree"].is_number_integer()) v.add("degree", "must be an integer");
    else s.degree = j["degree"].get<long>();
    if (j.contains("components")) {
        if (!j["components"].is_array()) v.add("components", "must be an array");
        else
            for (std::size_t i = 0; i < j["components"].size(); ++i) {
                const auto &c = j["components"][i];
                if (!c.is_object() || !c.contains("label") || !c["label"].is_string() || !c.contains("degree") ||
                    !c["degree"].is_number_integer()) {
                    v.add("component " + std::to_string(i + 1), "needs string 'label' and integer 'degree'");
                    continue;
                }
                s.components.push_back({c["label"].get<std::string>(), c["degree"].get<long>()});
            }
    } else {
        s.components.push_back({"C", s.degree});
    }
    if (j.contains("singularities")) {
        if (!j["singularities"].is_array()) v.add("singularities", "must be an array");
        else
            for (std::size_t i = 0; i < j["singularities"].size(); ++i) {
                const auto &e = j["singularities"][i];
                const std::string at = "singularity " + std::to_string(i + 1);
                SingularitySpec p;
                if (!e.is_object()) {
                    v.add(at, "must be an object");
                    continue;
                }
                if (!e.contains("pos") || !e["pos"].is_array() || e["pos"].size() != 2) {
                    v.add(at, "'pos' must hold two rationals");
                } else {
                    auto x = rational_from(e["pos"][0]), y = rational_from(e["pos"][1]);
                    if (!x || !y) v.add(at, "'pos' must hold two rationals");
                    else {
                        p.x = *x;
                        p.y = *y;
                    }
                }
                if (e.contains("germ")) {
                    p.type = "germ";
                    if (e["germ"].is_string()) p.branches.push_back(e["germ"].get<std::string>());
                    else if (e["germ"].is_array())
                        for (const auto &b : e["germ"])
                            if (b.is_string()) p.branches.push_back(b.get<std::string>());
                            else v.add(at, "germ branches must be strings");
                    else v.add(at, "'germ' must be a string or an array of strings");
                    for (const auto &b : p.branches) try {
                            parse_polynomial(b);
                        } catch (const Error &err) {
                            v.add(at, err.what());
                        }
                } else if (e.contains("type") && e["type"].is_string()) {
                    p.type = e["type"].get<std::string>();
                    if (p.type == "torus") {
                        if (!e.contains("p") || !e.contains("q") || !e["p"].is_number_integer() || !e["q"].is_number_integer())
                            v.add(at, "torus type needs integers 'p' and 'q'");
                        else {
                            p.p = e["p"].get<long>();
                            p.q = e["q"].get<long>();
                        }
                    }
                } else {
                    v.add(at, "needs 'type' or 'germ'");
                }
                if (e.contains("incidence")) {
                    if (e["incidence"].is_string()) p.incidence.push_back(e["incidence"].get<std::string>());
                    else if (e["incidence"].is_array())
                        for (const auto &l : e["incidence"])
                            if (l.is_string()) p.incidence.push_back(l.get<std::string>());
                            else v.add(at, "incidence entries must be labels");
                    else v.add(at, "'incidence' must be a label or an array of labels");
                }
                s.singularities.push_back(std::move(p));
            }
    }
    if (v.empty())
        for (const auto &x : s.violations()) v.add("", x);
    v.throw_if_any("curve spec");
    return s;
}

// ---------------------------------------------------------------------------
// Command-line lists.

inline std::vector<Rational> parse_rational_list(const std::string &text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) fail(ErrorKind::Validation, "empty list");
    return out;
}

inline std::vector<long> parse_long_list(const std::string &text) {
    std::vector<long> out;
    for (const auto &q : parse_rational_list(text)) {
        if (!is_integer(q)) fail(ErrorKind::Validation, "expected integers in '" + text + "'");
        out.push_back(to_long(floor_of(q)));
    }
    return out;
}

} // namespace alexinv::io
