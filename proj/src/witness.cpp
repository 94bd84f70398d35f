#include "motifalg/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace motifalg {

EvaluationMatrix evaluation_matrix(const std::vector<CanonicalKey>& keys, const Caps& caps) {
    std::vector<CanonicalKey> index = keys;
    std::sort(index.begin(), index.end());
    if (std::adjacent_find(index.begin(), index.end()) != index.end())
        throw DuplicateKey("evaluation matrix keys must be pairwise distinct");
    EvaluationMatrix out;
    out.index = index;
    std::size_t count = index.size();
    out.entries.assign(count, std::vector<Rational>(count, Rational(0)));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            long long value = 0;
            if (index[i].kind == Kind::ordered)
                value = indsub(ordered_from_key(index[i]), ordered_from_key(index[j]), caps);
            else if (index[i].kind == Kind::colored)
                value = indsub(colored_from_key(index[i]), colored_from_key(index[j]), caps);
            else
                value = indsub(graph_from_key(index[i]), graph_from_key(index[j]), caps);
            out.entries[i][j] = Rational(static_cast<long>(value));
        }
    }
    return out;
}

namespace {

ParamKind kind_of_key(const CanonicalKey& key) {
    switch (key.kind) {
    case Kind::ordered: return ParamKind::ordered();
    case Kind::colored: return ParamKind::colored(static_cast<unsigned char>(key.payload.at(0)));
    case Kind::relational: throw KindMismatch("relational keys are not supported here");
    default: return ParamKind::unordered();
    }
}

std::set<CanonicalKey> downward_closure_classes(const CanonicalKey& key, const Caps& caps) {
    std::set<CanonicalKey> out;
    int n = key.n;
    auto add_subsets = [&](auto induce) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            std::vector<int> subset;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1)
                    subset.push_back(v);
            out.insert(induce(subset));
        }
    };
    if (key.kind == Kind::ordered) {
        OrderedGraph g = ordered_from_key(key);
        add_subsets([&](const std::vector<int>& s) { return canonical_form(induced_subgraph(g, s), caps); });
    } else if (key.kind == Kind::colored) {
        ColoredGraph g = colored_from_key(key);
        add_subsets([&](const std::vector<int>& s) { return canonical_form(induced_subgraph(g, s), caps); });
    } else {
        Graph g = graph_from_key(key);
        add_subsets([&](const std::vector<int>& s) { return canonical_form(induced_subgraph(g, s), caps); });
    }
    return out;
}

} // namespace

MotifParameter recover_coefficients(const std::map<CanonicalKey, Rational>& values,
                                    const std::vector<CanonicalKey>& support, const Caps& caps) {
    EvaluationMatrix matrix = evaluation_matrix(support, caps);
    std::set<CanonicalKey> listed(matrix.index.begin(), matrix.index.end());
    for (const auto& key : matrix.index) {
        if (!values.count(key))
            throw SupportNotDownwardClosed("missing evaluation for a listed pattern");
        for (const auto& sub : downward_closure_classes(key, caps))
            if (!listed.count(sub))
                throw SupportNotDownwardClosed("support list is not closed under induced subgraphs");
    }

    // A^T alpha = v with A unit upper triangular: forward substitution
    std::size_t count = matrix.index.size();
    std::vector<Rational> alpha(count, Rational(0));
    for (std::size_t j = 0; j < count; ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i < j; ++i)
            sum += matrix.entries[i][j] * alpha[i];
        alpha[j] = values.at(matrix.index[j]) - sum;
    }

    MotifParameter out(count == 0 ? ParamKind::unordered() : kind_of_key(matrix.index.front()));
    for (std::size_t j = 0; j < count; ++j)
        out.add(matrix.index[j], alpha[j]);
    return out;
}

namespace {

// Elements of the induced-subgraph poset of a disjoint union, represented
// as multisets of connected-component keys. Components are pattern-sized,
// so their keys stay within the canonicalization cap even when the whole
// element does not.
struct UnionPosetElement {
    std::vector<CanonicalKey> components; // sorted
    int total = 0;

    friend bool operator<(const UnionPosetElement& a, const UnionPosetElement& b) {
        if (a.total != b.total)
            return a.total < b.total;
        return a.components < b.components;
    }
    friend bool operator==(const UnionPosetElement& a, const UnionPosetElement& b) = default;
};

Graph materialize(const UnionPosetElement& e) {
    std::vector<Graph> parts;
    parts.reserve(e.components.size());
    for (const auto& key : e.components)
        parts.push_back(graph_from_key(key));
    return disjoint_union(parts);
}

std::vector<UnionPosetElement> pure_union_poset_elements(const MotifParameter& phi_bad,
                                                         const Caps& caps) {
    // per-pattern poset elements, each decomposed into component keys
    std::vector<std::vector<std::vector<CanonicalKey>>> choices;
    for (const auto& [key, coeff] : phi_bad.terms) {
        Graph h = graph_from_key(key);
        if (h.n() > caps.poset)
            throw CapExceeded("support pattern exceeds poset cap");
        std::set<std::vector<CanonicalKey>> locals;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << h.n()); ++mask) {
            std::vector<int> subset;
            for (int v = 0; v < h.n(); ++v)
                if (mask >> v & 1)
                    subset.push_back(v);
            Graph f = induced_subgraph(h, subset);
            std::vector<CanonicalKey> comps;
            for (const auto& comp : connected_components(f))
                comps.push_back(canonical_form(induced_subgraph(f, comp), caps));
            std::sort(comps.begin(), comps.end());
            locals.insert(std::move(comps));
        }
        choices.emplace_back(locals.begin(), locals.end());
    }

    std::set<UnionPosetElement> elements;
    auto rec = [&](auto&& self, std::size_t i, std::vector<CanonicalKey> acc) -> void {
        if (i == choices.size()) {
            std::sort(acc.begin(), acc.end());
            UnionPosetElement e;
            e.total = 0;
            for (const auto& c : acc)
                e.total += c.n;
            e.components = std::move(acc);
            elements.insert(std::move(e));
            return;
        }
        for (const auto& option : choices[i]) {
            std::vector<CanonicalKey> next = acc;
            next.insert(next.end(), option.begin(), option.end());
            self(self, i + 1, std::move(next));
        }
    };
    rec(rec, 0, {});

    CanonicalKey k1 = canonical_form(Graph(1), caps);
    std::vector<UnionPosetElement> pure;
    for (const auto& e : elements) {
        bool has_isolated = std::any_of(e.components.begin(), e.components.end(),
                                        [&](const CanonicalKey& c) { return c == k1; });
        if (!has_isolated)
            pure.push_back(e);
    }
    std::sort(pure.begin(), pure.end());
    return pure;
}

void check_bad_pure(const MotifParameter& phi_bad) {
    if (!is_pure(phi_bad))
        throw ValidationError("find_witness requires a pure parameter");
    bool has_negative = std::any_of(phi_bad.terms.begin(), phi_bad.terms.end(),
                                    [](const auto& term) { return term.second < 0; });
    if (!has_negative)
        throw ValidationError("find_witness requires a parameter with a negative coefficient");
}

} // namespace

std::vector<Graph> pure_union_poset(const MotifParameter& phi_bad, const Caps& caps) {
    std::vector<Graph> out;
    for (const auto& e : pure_union_poset_elements(phi_bad, caps))
        out.push_back(materialize(e));
    return out;
}

std::optional<WitnessResult> find_witness(const MotifParameter& phi_bad,
                                          const std::function<Rational(const Graph&)>& psi,
                                          const Caps& caps) {
    if (phi_bad.kind.kind != Kind::unordered)
        throw KindMismatch("this overload scans unordered graphs");
    check_bad_pure(phi_bad);
    for (const auto& e : pure_union_poset_elements(phi_bad, caps)) {
        Graph w = materialize(e);
        Rational phi_value = evaluate(phi_bad, w, caps);
        Rational psi_value = psi(w);
        if (phi_value != psi_value) {
            CanonicalKey key;
            if (w.n() <= caps.canonical) {
                key = canonical_form(w, caps);
            } else {
                key.kind = Kind::unordered;
                key.n = w.n();
                for (const auto& comp : e.components)
                    key.payload += comp.payload + '|';
            }
            return WitnessResult{std::move(w), std::move(key), phi_value, psi_value};
        }
    }
    return std::nullopt;
}

std::optional<OrderedWitnessResult> find_witness(const MotifParameter& phi_bad,
                                                 const std::function<Rational(const OrderedGraph&)>& psi,
                                                 const Caps& caps) {
    if (phi_bad.kind.kind != Kind::ordered)
        throw KindMismatch("this overload scans ordered graphs");
    check_bad_pure(phi_bad);

    // ordered: poset elements of the concatenated union are concatenations
    // of per-pattern poset elements; ordered keys are literal, so dedup
    // works at any size
    std::vector<std::vector<OrderedGraph>> choices;
    for (const auto& [key, coeff] : phi_bad.terms) {
        OrderedGraph h = ordered_from_key(key);
        if (h.n() > caps.poset)
            throw CapExceeded("support pattern exceeds poset cap");
        std::map<std::string, OrderedGraph> locals;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << h.n()); ++mask) {
            std::vector<int> subset;
            for (int v = 0; v < h.n(); ++v)
                if (mask >> v & 1)
                    subset.push_back(v);
            OrderedGraph f = induced_subgraph(h, subset);
            locals.emplace(canonical_form(f, caps).payload + "#" + std::to_string(f.n()), f);
        }
        std::vector<OrderedGraph> local_list;
        for (auto& [unused, g] : locals)
            local_list.push_back(std::move(g));
        choices.push_back(std::move(local_list));
    }

    struct Element {
        int total;
        std::string code;
        OrderedGraph g;
    };
    std::vector<Element> elements;
    std::set<std::pair<int, std::string>> seen;
    auto rec = [&](auto&& self, std::size_t i, std::vector<OrderedGraph> acc) -> void {
        if (i == choices.size()) {
            OrderedGraph g = disjoint_union(acc);
            if (!is_pure(g))
                return;
            std::string code;
            for (auto [u, v] : g.graph.edges())
                code += std::to_string(u) + "," + std::to_string(v) + ";";
            if (seen.insert({g.n(), code}).second)
                elements.push_back({g.n(), std::move(code), std::move(g)});
            return;
        }
        for (const auto& option : choices[i]) {
            std::vector<OrderedGraph> next = acc;
            next.push_back(option);
            self(self, i + 1, std::move(next));
        }
    };
    rec(rec, 0, {});
    std::sort(elements.begin(), elements.end(), [](const Element& a, const Element& b) {
        return std::tie(a.total, a.code) < std::tie(b.total, b.code);
    });

    for (const auto& e : elements) {
        Rational phi_value = evaluate(phi_bad, e.g, caps);
        Rational psi_value = psi(e.g);
        if (phi_value != psi_value)
            return OrderedWitnessResult{e.g, phi_value, psi_value};
    }
    return std::nullopt;
}

} // namespace motifalg
