#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motifalg/caps.hpp"
#include "motifalg/errors.hpp"

namespace motifalg {

// Finite simple graph on vertices 0..n-1, adjacency stored as bitset rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool edge(int u, int v) const;
    void set_edge(int u, int v, bool present = true);
    int degree(int v) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Graph whose vertex labels 0..n-1 are also its total order.
struct OrderedGraph {
    Graph graph;
    int n() const { return graph.n(); }
    friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;
};

// Graph with a color per vertex; colors range over 0..palette.
struct ColoredGraph {
    Graph graph;
    std::vector<int> colors;
    int palette = 0;
    int n() const { return graph.n(); }
    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

void validate(const ColoredGraph& g);

enum class Kind : std::uint8_t { unordered = 0, ordered = 1, colored = 2, relational = 3 };

const char* kind_name(Kind k);

// Total-order key: (kind, vertex count, canonical payload). Equal keys iff
// isomorphic (iff identical, for ordered graphs). The payload encodes the
// whole object, so keys decode back to a representative.
struct CanonicalKey {
    Kind kind = Kind::unordered;
    std::int32_t n = 0;
    std::string payload;

    friend std::strong_ordering operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_form(const Graph& g, const Caps& caps = default_caps());
CanonicalKey canonical_form(const OrderedGraph& g, const Caps& caps = default_caps());
CanonicalKey canonical_form(const ColoredGraph& g, const Caps& caps = default_caps());

// Reference canonicalizer: plain minimum over all n! permutations, no
// pruning. Kept as the cross-check oracle for the search-based one.
CanonicalKey canonical_form_plain(const Graph& g, const Caps& caps = default_caps());

Graph graph_from_key(const CanonicalKey& key);
OrderedGraph ordered_from_key(const CanonicalKey& key);
ColoredGraph colored_from_key(const CanonicalKey& key);

struct EnumKind {
    Kind kind = Kind::unordered;
    int palette = 0; // colored only: colors 0..palette

    static EnumKind unordered() { return {Kind::unordered, 0}; }
    static EnumKind ordered() { return {Kind::ordered, 0}; }
    static EnumKind colored(int palette) { return {Kind::colored, palette}; }
};

// One representative key per isomorphism class with <= n_max vertices,
// sorted by CanonicalKey. Deterministic.
std::vector<CanonicalKey> enumerate_graphs(int n_max, EnumKind kind = EnumKind::unordered(),
                                           const Caps& caps = default_caps());

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
OrderedGraph induced_subgraph(const OrderedGraph& g, const std::vector<int>& vertices);
ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vertices);

Graph disjoint_union(const std::vector<Graph>& parts);
OrderedGraph disjoint_union(const std::vector<OrderedGraph>& parts);

// One ordered representative per isomorphism class of orderings of h;
// list length = n!/aut(h), sorted by key.
std::vector<OrderedGraph> orderings(const Graph& h, const Caps& caps = default_caps());

// Pure: minimum degree >= 1. K0 is pure vacuously.
bool is_pure(const Graph& g);
bool is_pure(const OrderedGraph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Named shorthands: K<n>, I<n>, P<n>, C<n>, triangle.
std::optional<Graph> named_graph(const std::string& name);

} // namespace motifalg
