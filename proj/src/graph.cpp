#include "motifalg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace motifalg {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0)
        throw InvalidVertex("negative vertex count");
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.set_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.set_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

bool Graph::edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    return bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
}

void Graph::set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InvalidVertex("self-loop at vertex " + std::to_string(u));
    auto upd = [&](int a, int b) {
        auto& word = bits_[static_cast<std::size_t>(a) * words_ + b / 64];
        if (present)
            word |= std::uint64_t{1} << (b % 64);
        else
            word &= ~(std::uint64_t{1} << (b % 64));
    };
    upd(u, v);
    upd(v, u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += __builtin_popcountll(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (edge(u, v))
                out.emplace_back(u, v);
    return out;
}

void validate(const ColoredGraph& g) {
    if (static_cast<int>(g.colors.size()) != g.graph.n())
        throw InvalidVertex("color vector size does not match vertex count");
    if (g.palette < 0 || g.palette > 255)
        throw InvalidRange("palette outside 0..255");
    for (int c : g.colors)
        if (c < 0 || c > g.palette)
            throw InvalidRange("color " + std::to_string(c) + " outside palette 0.." + std::to_string(g.palette));
}

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::unordered: return "unordered";
    case Kind::ordered: return "ordered";
    case Kind::colored: return "colored";
    case Kind::relational: return "relational";
    }
    return "?";
}

namespace {

// Upper-triangle bit positions in column order: (0,1), (0,2), (1,2), (0,3), ...
// This matches graph6 and lets the canonical search fix bits level by level.
inline int bit_pos(int i, int j) { return j * (j - 1) / 2 + i; }

std::string pack_bits(const std::vector<std::uint8_t>& bits) {
    std::string out((bits.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            out[i / 8] |= static_cast<char>(0x80u >> (i % 8));
    return out;
}

std::vector<std::uint8_t> unpack_bits(const std::string& bytes, int count) {
    std::vector<std::uint8_t> bits(count, 0);
    for (int i = 0; i < count; ++i)
        bits[i] = (static_cast<unsigned char>(bytes[i / 8]) >> (7 - i % 8)) & 1;
    return bits;
}

std::vector<std::uint8_t> literal_code(const Graph& g) {
    int n = g.n();
    std::vector<std::uint8_t> bits(n * (n - 1) / 2, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits[bit_pos(i, j)] = g.edge(i, j) ? 1 : 0;
    return bits;
}

// Branch-and-bound minimization of the code over all vertex orderings.
// Placing the level-th vertex fixes exactly the bits against the already
// placed ones, so prefixes extend monotonically. best_ starts as the
// all-ones code, the lexicographic maximum.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.n()), placed_(n_), best_(n_ * (n_ - 1) / 2, 1), cur_(best_.size(), 0) {}

    std::vector<std::uint8_t> run() {
        used_.assign(n_, false);
        descend(0, true);
        return best_;
    }

private:
    // equal: cur_ and best_ agree on all bits before this level's block.
    // When false, cur_'s prefix is strictly smaller, so every completion
    // improves on best_. Returns whether best_ changed in this subtree.
    bool descend(int level, bool equal) {
        if (level == n_) {
            if (!equal) {
                best_ = cur_;
                return true;
            }
            return false;
        }
        bool updated = false;
        int base = bit_pos(0, level);
        for (int v = 0; v < n_; ++v) {
            if (used_[v])
                continue;
            bool child_equal = equal || updated;
            bool worse = false;
            for (int t = 0; t < level; ++t) {
                std::uint8_t bit = g_.edge(placed_[t], v) ? 1 : 0;
                cur_[base + t] = bit;
                if (child_equal) {
                    if (bit > best_[base + t]) {
                        worse = true;
                        break;
                    }
                    if (bit < best_[base + t])
                        child_equal = false;
                }
            }
            if (worse)
                continue;
            used_[v] = true;
            placed_[level] = v;
            if (descend(level + 1, child_equal))
                updated = true;
            used_[v] = false;
        }
        return updated;
    }

    const Graph& g_;
    int n_;
    std::vector<int> placed_;
    std::vector<std::uint8_t> best_, cur_;
    std::vector<char> used_;
};

void check_canonical_cap(int n, const Caps& caps) {
    if (n > caps.canonical)
        throw CapExceeded("graph with " + std::to_string(n) + " vertices exceeds canonicalization cap " +
                          std::to_string(caps.canonical));
}

} // namespace

CanonicalKey canonical_form(const Graph& g, const Caps& caps) {
    check_canonical_cap(g.n(), caps);
    CanonicalSearch search(g);
    return {Kind::unordered, g.n(), pack_bits(search.run())};
}

CanonicalKey canonical_form_plain(const Graph& g, const Caps& caps) {
    check_canonical_cap(g.n(), caps);
    int n = g.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::vector<std::uint8_t> best;
    do {
        std::vector<std::uint8_t> code(n * (n - 1) / 2, 0);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code[bit_pos(i, j)] = g.edge(perm[i], perm[j]) ? 1 : 0;
        if (best.empty() || code < best)
            best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {Kind::unordered, n, pack_bits(best)};
}

CanonicalKey canonical_form(const OrderedGraph& g, const Caps& caps) {
    check_canonical_cap(g.n(), caps);
    return {Kind::ordered, g.n(), pack_bits(literal_code(g.graph))};
}

CanonicalKey canonical_form(const ColoredGraph& g, const Caps& caps) {
    validate(g);
    check_canonical_cap(g.n(), caps);
    int n = g.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    // minimize (adjacency bits, color vector) pairs over all permutations
    std::vector<std::uint8_t> best;
    bool first = true;
    do {
        std::vector<std::uint8_t> code(n * (n - 1) / 2 + n, 0);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code[bit_pos(i, j)] = g.graph.edge(perm[i], perm[j]) ? 1 : 0;
        for (int i = 0; i < n; ++i)
            code[n * (n - 1) / 2 + i] = static_cast<std::uint8_t>(g.colors[perm[i]]);
        if (first || code < best) {
            best = std::move(code);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string payload;
    payload.push_back(static_cast<char>(g.palette));
    payload += pack_bits({best.begin(), best.begin() + n * (n - 1) / 2});
    for (int i = 0; i < n; ++i)
        payload.push_back(static_cast<char>(best[n * (n - 1) / 2 + i]));
    return {Kind::colored, n, payload};
}

Graph graph_from_key(const CanonicalKey& key) {
    if (key.kind != Kind::unordered && key.kind != Kind::ordered)
        throw KindMismatch("key does not encode a plain graph");
    int n = key.n;
    Graph g(n);
    auto bits = unpack_bits(key.payload, n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[bit_pos(i, j)])
                g.set_edge(i, j);
    return g;
}

OrderedGraph ordered_from_key(const CanonicalKey& key) {
    if (key.kind != Kind::ordered)
        throw KindMismatch("key does not encode an ordered graph");
    return {graph_from_key(key)};
}

ColoredGraph colored_from_key(const CanonicalKey& key) {
    if (key.kind != Kind::colored)
        throw KindMismatch("key does not encode a colored graph");
    int n = key.n;
    int palette = static_cast<unsigned char>(key.payload.at(0));
    int adj_bytes = (n * (n - 1) / 2 + 7) / 8;
    Graph g(n);
    auto bits = unpack_bits(key.payload.substr(1, adj_bytes), n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[bit_pos(i, j)])
                g.set_edge(i, j);
    std::vector<int> colors(n);
    for (int i = 0; i < n; ++i)
        colors[i] = static_cast<unsigned char>(key.payload.at(1 + adj_bytes + i));
    return {std::move(g), std::move(colors), palette};
}

std::vector<CanonicalKey> enumerate_graphs(int n_max, EnumKind kind, const Caps& caps) {
    if (n_max < 0)
        throw InvalidRange("negative n_max");
    int cap = kind.kind == Kind::ordered ? caps.enum_ordered
              : kind.kind == Kind::colored ? caps.enum_ordered
                                           : caps.enum_unordered;
    if (n_max > cap)
        throw CapExceeded("enumeration up to " + std::to_string(n_max) + " vertices exceeds cap " +
                          std::to_string(cap));

    std::vector<CanonicalKey> out;

    if (kind.kind == Kind::ordered) {
        for (int n = 0; n <= n_max; ++n) {
            std::set<CanonicalKey> level;
            int m = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                Graph g(n);
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (mask >> bit_pos(i, j) & 1)
                            g.set_edge(i, j);
                level.insert(canonical_form(OrderedGraph{std::move(g)}, caps));
            }
            out.insert(out.end(), level.begin(), level.end());
        }
        return out;
    }

    if (kind.kind == Kind::colored) {
        // grow representatives one vertex at a time: every colored class on n
        // vertices extends one on n-1 by a neighborhood mask and a color
        std::vector<ColoredGraph> prev = {ColoredGraph{Graph(0), {}, kind.palette}};
        out.push_back(canonical_form(prev[0], caps));
        for (int n = 1; n <= n_max; ++n) {
            std::set<CanonicalKey> level;
            for (const auto& rep : prev) {
                for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
                    for (int color = 0; color <= kind.palette; ++color) {
                        ColoredGraph g{Graph(n), rep.colors, kind.palette};
                        g.colors.push_back(color);
                        for (auto [u, v] : rep.graph.edges())
                            g.graph.set_edge(u, v);
                        for (int t = 0; t < n - 1; ++t)
                            if (mask >> t & 1)
                                g.graph.set_edge(t, n - 1);
                        level.insert(canonical_form(g, caps));
                    }
                }
            }
            prev.clear();
            for (const auto& key : level)
                prev.push_back(colored_from_key(key));
            out.insert(out.end(), level.begin(), level.end());
        }
        return out;
    }

    std::vector<Graph> prev = {Graph(0)};
    out.push_back(canonical_form(prev[0], caps));
    for (int n = 1; n <= n_max; ++n) {
        std::set<CanonicalKey> level;
        for (const auto& rep : prev) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
                Graph g(n);
                for (auto [u, v] : rep.edges())
                    g.set_edge(u, v);
                for (int t = 0; t < n - 1; ++t)
                    if (mask >> t & 1)
                        g.set_edge(t, n - 1);
                level.insert(canonical_form(g, caps));
            }
        }
        prev.clear();
        for (const auto& key : level)
            prev.push_back(graph_from_key(key));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

namespace {

std::vector<int> checked_subset(int n, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n)
            throw InvalidVertex("subset vertex " + std::to_string(sorted[i]) + " out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw InvalidVertex("subset vertex repeated: " + std::to_string(sorted[i]));
    }
    return sorted;
}

} // namespace

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    auto sorted = checked_subset(g.n(), vertices);
    Graph out(static_cast<int>(sorted.size()));
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b)
            if (g.edge(sorted[a], sorted[b]))
                out.set_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

OrderedGraph induced_subgraph(const OrderedGraph& g, const std::vector<int>& vertices) {
    return {induced_subgraph(g.graph, vertices)};
}

ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vertices) {
    auto sorted = checked_subset(g.n(), vertices);
    ColoredGraph out{induced_subgraph(g.graph, vertices), {}, g.palette};
    for (int v : sorted)
        out.colors.push_back(g.colors[v]);
    return out;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const auto& p : parts)
        total += p.n();
    Graph out(total);
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges())
            out.set_edge(offset + u, offset + v);
        offset += p.n();
    }
    return out;
}

OrderedGraph disjoint_union(const std::vector<OrderedGraph>& parts) {
    std::vector<Graph> raw;
    raw.reserve(parts.size());
    for (const auto& p : parts)
        raw.push_back(p.graph);
    return {disjoint_union(raw)};
}

std::vector<OrderedGraph> orderings(const Graph& h, const Caps& caps) {
    check_canonical_cap(h.n(), caps);
    int n = h.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::set<CanonicalKey> seen;
    std::vector<OrderedGraph> out;
    do {
        // position i holds original vertex perm[i]
        Graph relabeled(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (h.edge(perm[i], perm[j]))
                    relabeled.set_edge(i, j);
        OrderedGraph og{std::move(relabeled)};
        if (seen.insert(canonical_form(og, caps)).second)
            out.push_back(std::move(og));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end(), [&](const OrderedGraph& a, const OrderedGraph& b) {
        return canonical_form(a, caps) < canonical_form(b, caps);
    });
    return out;
}

bool is_pure(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            return false;
    return true;
}

bool is_pure(const OrderedGraph& g) { return is_pure(g.graph); }

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.n();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack = {s};
        comp[s] = id;
        out.push_back({});
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w = 0; w < n; ++w)
                if (comp[w] < 0 && g.edge(v, w)) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::optional<Graph> named_graph(const std::string& name) {
    if (name == "triangle")
        return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    if (name.size() < 2)
        return std::nullopt;
    char family = name[0];
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            return std::nullopt;
        n = n * 10 + (name[i] - '0');
    }
    if (n > 16)
        return std::nullopt;
    switch (family) {
    case 'K': {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.set_edge(u, v);
        return g;
    }
    case 'I':
        if (n < 1)
            return std::nullopt;
        return Graph(n);
    case 'P': {
        if (n < 1)
            return std::nullopt;
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v)
            g.set_edge(v, v + 1);
        return g;
    }
    case 'C': {
        if (n < 3)
            return std::nullopt;
        Graph g(n);
        for (int v = 0; v < n; ++v)
            g.set_edge(v, (v + 1) % n);
        return g;
    }
    default:
        return std::nullopt;
    }
}

} // namespace motifalg
