#pragma once

#include <json.hpp>

#include "motifalg/linearize.hpp"
#include "motifalg/motif.hpp"
#include "motifalg/relstruct.hpp"
#include "motifalg/universes.hpp"

namespace motifalg {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json graph_json(const Graph& g);
Json graph_json(const OrderedGraph& g);
Json graph_json(const ColoredGraph& g);
Graph graph_from_json(const Json& j);
OrderedGraph ordered_from_json(const Json& j);
ColoredGraph colored_from_json(const Json& j);

// Pattern rendering inside parameters: graph6 text for unordered keys,
// JSON graph objects otherwise.
Json pattern_json(const ParamKind& kind, const CanonicalKey& key);
CanonicalKey pattern_from_json(const ParamKind& kind, const Json& j, const Caps& caps = default_caps());

Json motif_json(const MotifParameter& phi);
MotifParameter motif_from_json(const Json& j, const Caps& caps = default_caps());

Json polynomial_json(const CountPolynomial& p);
CountPolynomial polynomial_from_json(const Json& j, const Caps& caps = default_caps());

Json relstructure_json(const RelStructure& a);
RelStructure relstructure_from_json(const Json& j);

Json paramset_json(const ParamSet& x);
ParamSet paramset_from_json(const Json& j);

} // namespace motifalg
