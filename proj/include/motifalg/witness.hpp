#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "motifalg/motif.hpp"

namespace motifalg {

// A[i][j] = indsub(pattern_i, pattern_j) over patterns sorted by
// (vertex count, canonical key): unit diagonal, zero below it, hence
// invertible over the rationals.
struct EvaluationMatrix {
    std::vector<CanonicalKey> index;
    std::vector<std::vector<Rational>> entries;
};

EvaluationMatrix evaluation_matrix(const std::vector<CanonicalKey>& keys,
                                   const Caps& caps = default_caps());

// Solves the triangular system for the unique parameter matching the given
// evaluations on a downward-closed support list.
MotifParameter recover_coefficients(const std::map<CanonicalKey, Rational>& values,
                                    const std::vector<CanonicalKey>& support,
                                    const Caps& caps = default_caps());

struct WitnessResult {
    Graph witness;
    CanonicalKey key; // canonical key when within cap, else a deterministic stand-in
    Rational phi_value;
    Rational psi_value;
};

struct OrderedWitnessResult {
    OrderedGraph witness;
    Rational phi_value;
    Rational psi_value;
};

// Scans the pure part of the induced-subgraph poset of the disjoint union
// of supp(phi_bad), in canonical order, for the first W where psi differs
// from phi_bad. Empty result = no witness on the scanned poset (psi is not
// good-on-poset, or equals phi_bad).
std::optional<WitnessResult> find_witness(const MotifParameter& phi_bad,
                                          const std::function<Rational(const Graph&)>& psi,
                                          const Caps& caps = default_caps());

std::optional<OrderedWitnessResult> find_witness(const MotifParameter& phi_bad,
                                                 const std::function<Rational(const OrderedGraph&)>& psi,
                                                 const Caps& caps = default_caps());

// The elements scanned by find_witness, in scan order (test hook).
std::vector<Graph> pure_union_poset(const MotifParameter& phi_bad, const Caps& caps = default_caps());

} // namespace motifalg
