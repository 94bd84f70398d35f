#include "motifalg/counting.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace motifalg {

namespace {

struct MapConstraints {
    bool ordered = false;
    const std::vector<int>* hcolors = nullptr;
    const std::vector<int>* gcolors = nullptr;
};

long long count_maps_impl(const Graph& h, const Graph& g, MapMode mode, const MapConstraints& mc) {
    int k = h.n();
    int n = g.n();
    bool injective = mode != MapMode::hom;
    std::vector<int> image(k, -1);
    std::vector<char> used(n, 0);
    long long total = 0;

    std::vector<int> hdeg(k), gdeg(n);
    for (int u = 0; u < k; ++u)
        hdeg[u] = h.degree(u);
    for (int w = 0; w < n; ++w)
        gdeg[w] = g.degree(w);

    // assign pattern vertices in label order so ordered monotonicity is a
    // lower bound on the candidate
    auto backtrack = [&](auto&& self, int u) -> void {
        if (u == k) {
            ++total;
            return;
        }
        int lo = 0;
        if (mc.ordered && u > 0)
            lo = injective ? image[u - 1] + 1 : image[u - 1];
        for (int w = lo; w < n; ++w) {
            if (injective && used[w])
                continue;
            if (mc.hcolors && (*mc.hcolors)[u] != (*mc.gcolors)[w])
                continue;
            if (injective && hdeg[u] > gdeg[w])
                continue;
            bool ok = true;
            for (int t = 0; t < u && ok; ++t) {
                bool he = h.edge(t, u);
                bool ge = g.edge(image[t], w);
                if (he && !ge)
                    ok = false;
                else if (!he && ge && mode == MapMode::strong_embed)
                    ok = false;
            }
            if (!ok)
                continue;
            image[u] = w;
            used[w] = 1;
            self(self, u + 1);
            used[w] = 0;
        }
        image[u] = -1;
    };
    backtrack(backtrack, 0);
    return total;
}

void check_pattern_cap(int k, const Caps& caps) {
    if (k > caps.canonical)
        throw CapExceeded("pattern with " + std::to_string(k) + " vertices exceeds cap " +
                          std::to_string(caps.canonical));
}

long long exact_div(long long a, long long b, const char* what) {
    if (b == 0 || a % b != 0)
        throw DivisionInexact(std::string(what) + ": " + std::to_string(a) + " not divisible by " +
                              std::to_string(b));
    return a / b;
}

} // namespace

long long count_maps(const Graph& h, const Graph& g, MapMode mode, const Caps& caps) {
    check_pattern_cap(h.n(), caps);
    return count_maps_impl(h, g, mode, {});
}

long long count_maps(const OrderedGraph& h, const OrderedGraph& g, MapMode mode, const Caps& caps) {
    check_pattern_cap(h.n(), caps);
    MapConstraints mc;
    mc.ordered = true;
    return count_maps_impl(h.graph, g.graph, mode, mc);
}

long long count_maps(const ColoredGraph& h, const ColoredGraph& g, MapMode mode, const Caps& caps) {
    check_pattern_cap(h.n(), caps);
    validate(h);
    validate(g);
    MapConstraints mc;
    mc.hcolors = &h.colors;
    mc.gcolors = &g.colors;
    return count_maps_impl(h.graph, g.graph, mode, mc);
}

long long aut(const Graph& h, const Caps& caps) { return count_maps(h, h, MapMode::strong_embed, caps); }
long long aut(const OrderedGraph& h, const Caps& caps) {
    return count_maps(h, h, MapMode::strong_embed, caps);
}
long long aut(const ColoredGraph& h, const Caps& caps) {
    return count_maps(h, h, MapMode::strong_embed, caps);
}

long long indsub(const Graph& h, const Graph& g, const Caps& caps) {
    return exact_div(count_maps(h, g, MapMode::strong_embed, caps), aut(h, caps), "indsub");
}

long long indsub(const OrderedGraph& h, const OrderedGraph& g, const Caps& caps) {
    return count_maps(h, g, MapMode::strong_embed, caps); // aut = 1 for ordered patterns
}

long long indsub(const ColoredGraph& h, const ColoredGraph& g, const Caps& caps) {
    return exact_div(count_maps(h, g, MapMode::strong_embed, caps), aut(h, caps), "indsub");
}

long long sub(const Graph& h, const Graph& g, const Caps& caps) {
    return exact_div(count_maps(h, g, MapMode::embed, caps), aut(h, caps), "sub");
}

long long sub(const OrderedGraph& h, const OrderedGraph& g, const Caps& caps) {
    return count_maps(h, g, MapMode::embed, caps);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count())
        return false;
    return count_maps_impl(a, b, MapMode::strong_embed, {}) > 0;
}

InducedPoset induced_poset(const Graph& g, const Caps& caps) {
    int n = g.n();
    if (n > caps.poset)
        throw CapExceeded("poset root with " + std::to_string(n) + " vertices exceeds poset cap " +
                          std::to_string(caps.poset));
    std::set<CanonicalKey> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                subset.push_back(v);
        classes.insert(canonical_form(induced_subgraph(g, subset), caps));
    }
    InducedPoset poset;
    poset.elements.assign(classes.begin(), classes.end());
    poset.root = canonical_form(g, caps);
    std::size_t count = poset.elements.size();
    poset.leq.assign(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        Graph hi = graph_from_key(poset.elements[i]);
        for (std::size_t j = 0; j < count; ++j) {
            Graph hj = graph_from_key(poset.elements[j]);
            poset.leq[i][j] = indsub(hi, hj, caps) >= 1 ? 1 : 0;
        }
    }
    return poset;
}

} // namespace motifalg
