#include "motifalg/json_io.hpp"

#include <algorithm>

#include "motifalg/graph6.hpp"

namespace motifalg {

namespace {

long long json_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ValidationError(std::string("expected an integer for ") + what);
    return j.get<long long>();
}

Rational rational_from_ll(long long value) {
    Rational q(static_cast<long>(value));
    return q;
}

} // namespace

Json rational_json(const Rational& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw InternalError("rational too large for JSON integers");
    return Json{{"num", q.get_num().get_si()}, {"den", q.get_den().get_si()}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return rational_from_ll(j.get<long long>());
    long long num = json_int(j.at("num"), "num");
    long long den = j.contains("den") ? json_int(j.at("den"), "den") : 1;
    return make_rational(num, den);
}

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    return Json{{"n", g.n()}, {"edges", edges}};
}

Json graph_json(const OrderedGraph& g) {
    Json j = graph_json(g.graph);
    j["ordered"] = true;
    return j;
}

Json graph_json(const ColoredGraph& g) {
    Json j = graph_json(g.graph);
    j["colors"] = g.colors;
    j["palette"] = g.palette;
    return j;
}

Graph graph_from_json(const Json& j) {
    int n = static_cast<int>(json_int(j.at("n"), "n"));
    Graph g(n);
    for (const auto& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2)
            throw ValidationError("edge entries must be [u, v] pairs");
        g.set_edge(static_cast<int>(json_int(edge[0], "edge endpoint")),
                   static_cast<int>(json_int(edge[1], "edge endpoint")));
    }
    return g;
}

OrderedGraph ordered_from_json(const Json& j) {
    if (!j.value("ordered", false))
        throw NotOrdered("graph JSON lacks \"ordered\": true");
    return {graph_from_json(j)};
}

ColoredGraph colored_from_json(const Json& j) {
    if (!j.contains("colors"))
        throw ValidationError("colored graph JSON lacks \"colors\"");
    ColoredGraph g{graph_from_json(j), j.at("colors").get<std::vector<int>>(), 0};
    if (j.contains("palette"))
        g.palette = static_cast<int>(json_int(j.at("palette"), "palette"));
    else
        g.palette = g.colors.empty() ? 0 : *std::max_element(g.colors.begin(), g.colors.end());
    validate(g);
    return g;
}

Json pattern_json(const ParamKind& kind, const CanonicalKey& key) {
    switch (kind.kind) {
    case Kind::unordered:
        return to_graph6(graph_from_key(key));
    case Kind::ordered:
        return graph_json(ordered_from_key(key));
    case Kind::colored:
        return graph_json(colored_from_key(key));
    case Kind::relational:
        return relstructure_json(rel_from_key(key));
    }
    throw KindMismatch("unknown kind");
}

CanonicalKey pattern_from_json(const ParamKind& kind, const Json& j, const Caps& caps) {
    switch (kind.kind) {
    case Kind::unordered:
        if (j.is_string())
            return canonical_form(from_graph6(j.get<std::string>()), caps);
        return canonical_form(graph_from_json(j), caps);
    case Kind::ordered:
        return canonical_form(ordered_from_json(j), caps);
    case Kind::colored: {
        ColoredGraph g = colored_from_json(j);
        g.palette = kind.palette;
        validate(g);
        return canonical_form(g, caps);
    }
    case Kind::relational: {
        RelStructure a = relstructure_from_json(j);
        return rel_canonical_key(a, caps);
    }
    }
    throw KindMismatch("unknown kind");
}

Json motif_json(const MotifParameter& phi) {
    Json out;
    out["kind"] = kind_name(phi.kind.kind);
    if (phi.kind.kind == Kind::colored)
        out["palette"] = phi.kind.palette;
    if (phi.kind.kind == Kind::relational) {
        Json type = Json::array();
        for (const auto& slot : phi.kind.rel_type->slots)
            type.push_back(Json{{"arity", slot.arity}, {"variant", variant_name(slot.variant)}});
        out["rel_type"] = type;
        out["rel_ordered"] = phi.kind.rel_ordered;
        if (phi.kind.rel_padding) {
            Json bits = Json::array();
            for (auto b : phi.kind.rel_padding->bits)
                bits.push_back(int(b));
            out["padding"] = bits;
        }
    }
    Json terms = Json::array();
    for (const auto& [key, coeff] : phi.terms) {
        Json term;
        term["pattern"] = pattern_json(phi.kind, key);
        term["num"] = rational_json(coeff)["num"];
        term["den"] = rational_json(coeff)["den"];
        terms.push_back(term);
    }
    out["terms"] = terms;
    return out;
}

namespace {

RelVariant variant_from_name(const std::string& name) {
    if (name == "set")
        return RelVariant::set;
    if (name == "multiset")
        return RelVariant::multiset;
    if (name == "list_norep")
        return RelVariant::list_norep;
    if (name == "list_rep")
        return RelVariant::list_rep;
    throw ValidationError("unknown relation variant: " + name);
}

MixedType mixed_type_from_json(const Json& j) {
    MixedType type;
    for (const auto& slot : j)
        type.slots.push_back({static_cast<int>(json_int(slot.at("arity"), "arity")),
                              variant_from_name(slot.at("variant").get<std::string>())});
    return type;
}

} // namespace

MotifParameter motif_from_json(const Json& j, const Caps& caps) {
    std::string kind_text = j.value("kind", "unordered");
    ParamKind kind;
    if (kind_text == "unordered")
        kind = ParamKind::unordered();
    else if (kind_text == "ordered")
        kind = ParamKind::ordered();
    else if (kind_text == "colored")
        kind = ParamKind::colored(static_cast<int>(json_int(j.at("palette"), "palette")));
    else if (kind_text == "relational") {
        std::optional<PaddingProfile> padding;
        if (j.contains("padding")) {
            PaddingProfile p;
            for (const auto& bit : j.at("padding"))
                p.bits.push_back(static_cast<std::uint8_t>(json_int(bit, "padding bit")));
            padding = p;
        }
        kind = ParamKind::relational(mixed_type_from_json(j.at("rel_type")),
                                     j.value("rel_ordered", false), padding);
    } else
        throw ValidationError("unknown parameter kind: " + kind_text);

    MotifParameter phi(kind);
    for (const auto& term : j.at("terms")) {
        CanonicalKey key = pattern_from_json(kind, term.at("pattern"), caps);
        Rational coeff = make_rational(json_int(term.at("num"), "num"),
                                       term.contains("den") ? json_int(term.at("den"), "den") : 1);
        phi.add(key, coeff);
    }
    return phi;
}

Json polynomial_json(const CountPolynomial& p) {
    Json out;
    out["basis"] = p.basis == PolynomialBasis::monomial ? "monomial" : "binomial";
    out["kind"] = kind_name(p.kind.kind);
    Json vars = Json::array();
    for (const auto& key : p.variables)
        vars.push_back(pattern_json(p.kind, key));
    out["variables"] = vars;
    Json terms = Json::array();
    for (const auto& [exps, coeff] : p.terms) {
        Json term;
        term["exponents"] = exps;
        term["num"] = rational_json(coeff)["num"];
        term["den"] = rational_json(coeff)["den"];
        terms.push_back(term);
    }
    out["terms"] = terms;
    return out;
}

CountPolynomial polynomial_from_json(const Json& j, const Caps& caps) {
    CountPolynomial p;
    std::string basis = j.value("basis", "monomial");
    if (basis == "monomial")
        p.basis = PolynomialBasis::monomial;
    else if (basis == "binomial")
        p.basis = PolynomialBasis::binomial;
    else
        throw ValidationError("unknown polynomial basis: " + basis);
    std::string kind_text = j.value("kind", "unordered");
    if (kind_text == "unordered")
        p.kind = ParamKind::unordered();
    else if (kind_text == "ordered")
        p.kind = ParamKind::ordered();
    else
        throw ValidationError("polynomials support unordered and ordered kinds");
    for (const auto& var : j.at("variables"))
        p.variables.push_back(pattern_from_json(p.kind, var, caps));
    for (const auto& term : j.at("terms")) {
        std::vector<int> exps = term.at("exponents").get<std::vector<int>>();
        Rational coeff = make_rational(json_int(term.at("num"), "num"),
                                       term.contains("den") ? json_int(term.at("den"), "den") : 1);
        if (p.terms.count(exps))
            p.terms[exps] += coeff;
        else
            p.terms[exps] = coeff;
    }
    return p;
}

Json relstructure_json(const RelStructure& a) {
    Json type = Json::array();
    for (const auto& slot : a.type.slots)
        type.push_back(Json{{"arity", slot.arity}, {"variant", variant_name(slot.variant)}});
    Json relations = Json::array();
    for (const auto& slot : a.relations) {
        Json entries = Json::array();
        for (const auto& entry : slot)
            entries.push_back(entry);
        relations.push_back(entries);
    }
    return Json{{"type", type}, {"n", a.n}, {"relations", relations}, {"ordered", a.ordered}};
}

RelStructure relstructure_from_json(const Json& j) {
    MixedType type = mixed_type_from_json(j.at("type"));
    RelStructure a(type, static_cast<int>(json_int(j.at("n"), "n")), j.value("ordered", false));
    const auto& relations = j.at("relations");
    if (relations.size() != type.slots.size())
        throw TypeMismatch("relation list length does not match type");
    for (std::size_t slot = 0; slot < relations.size(); ++slot)
        for (const auto& entry : relations[slot])
            a.add(static_cast<int>(slot), entry.get<RelEntry>());
    return a;
}

Json paramset_json(const ParamSet& x) {
    Json classes = Json::array();
    for (const auto& cls : x.classes)
        classes.push_back(cls);
    return Json{{"alphabet", x.alphabet_size}, {"N", x.N}, {"base", x.base}, {"classes", classes}};
}

ParamSet paramset_from_json(const Json& j) {
    ParamSet x;
    x.alphabet_size = static_cast<int>(json_int(j.at("alphabet"), "alphabet"));
    x.N = static_cast<int>(json_int(j.at("N"), "N"));
    x.base = j.at("base").get<std::vector<int>>();
    for (const auto& cls : j.at("classes"))
        x.classes.push_back(cls.get<std::vector<int>>());
    validate(x);
    return x;
}

} // namespace motifalg
