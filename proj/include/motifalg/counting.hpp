#pragma once

#include <vector>

#include "motifalg/graph.hpp"

namespace motifalg {

enum class MapMode { hom, embed, strong_embed };

// Exact map counts by backtracking. Pattern h goes first. hom allows any
// vertex map preserving edges, embed is injective, strong_embed is injective
// and preserves non-edges too. Ordered overloads require monotone maps.
long long count_maps(const Graph& h, const Graph& g, MapMode mode, const Caps& caps = default_caps());
long long count_maps(const OrderedGraph& h, const OrderedGraph& g, MapMode mode,
                     const Caps& caps = default_caps());
long long count_maps(const ColoredGraph& h, const ColoredGraph& g, MapMode mode,
                     const Caps& caps = default_caps());

long long aut(const Graph& h, const Caps& caps = default_caps());
long long aut(const OrderedGraph& h, const Caps& caps = default_caps());
long long aut(const ColoredGraph& h, const Caps& caps = default_caps());

// indsub = strong embeddings / aut, sub = embeddings / aut; both divisions
// are exact by construction and checked.
long long indsub(const Graph& h, const Graph& g, const Caps& caps = default_caps());
long long indsub(const OrderedGraph& h, const OrderedGraph& g, const Caps& caps = default_caps());
long long indsub(const ColoredGraph& h, const ColoredGraph& g, const Caps& caps = default_caps());
long long sub(const Graph& h, const Graph& g, const Caps& caps = default_caps());
long long sub(const OrderedGraph& h, const OrderedGraph& g, const Caps& caps = default_caps());

bool isomorphic(const Graph& a, const Graph& b);

// Poset of induced subgraphs of a root graph, one canonical representative
// per isomorphism class, with H <= H' iff H embeds strongly into H'.
struct InducedPoset {
    std::vector<CanonicalKey> elements; // sorted by key
    std::vector<std::vector<char>> leq; // leq[i][j]: element i below element j
    CanonicalKey root;

    bool below(std::size_t i, std::size_t j) const { return leq[i][j] != 0; }
};

InducedPoset induced_poset(const Graph& g, const Caps& caps = default_caps());

} // namespace motifalg
