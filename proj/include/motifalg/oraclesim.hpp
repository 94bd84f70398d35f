#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "motifalg/motif.hpp"

namespace motifalg {

// Oracle-encoded graph on j vertices; labels are bit strings of length
// ceil(log2 j). Queries outside 0..j-1 answer 0, and (u,v) answers like
// (v,u), so the encoding is consistent by convention.
struct OracleGraph {
    std::uint64_t j = 0;
    int label_bits = 0;
    Graph adjacency;

    static OracleGraph from_graph(const Graph& g);
    bool query(std::uint64_t u, std::uint64_t v) const;
};

struct StepAction {
    enum class Type { query, accept, reject };
    Type type = Type::reject;
    std::uint64_t u = 0, v = 0;

    static StepAction make_query(std::uint64_t u, std::uint64_t v) {
        return {Type::query, u, v};
    }
    static StepAction accept() { return {Type::accept, 0, 0}; }
    static StepAction reject() { return {Type::reject, 0, 0}; }
};

// Adaptive nondeterministic query program: the witness is the guess, the
// step function consumes it together with the oracle answers so far.
// Deterministic given (j, witness, answers); every path must finish within
// query_budget queries.
struct QueryStrategy {
    std::function<int(std::uint64_t j)> witness_bits;
    int query_budget = 0;
    std::function<StepAction(std::uint64_t j, const std::vector<std::uint8_t>& witness,
                             const std::vector<std::uint8_t>& answers)>
        step;
};

struct QueryRecord {
    std::uint64_t u = 0, v = 0;
    std::uint8_t answer = 0;
    friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

// Computation path: choice bits plus oracle answers, chronologically.
struct Trace {
    std::vector<std::uint8_t> witness;
    std::vector<QueryRecord> queries;

    std::vector<std::uint64_t> queried_vertices() const;
    std::string key() const; // canonical serialization, usable as a map key
    std::string log_line() const;
    friend bool operator==(const Trace&, const Trace&) = default;
};

struct RunResult {
    bool accepted = false;
    Trace trace;
};

RunResult run_path(const QueryStrategy& s, const OracleGraph& o,
                   const std::vector<std::uint8_t>& witness);

struct AcceptingPaths {
    long long count = 0;
    std::vector<Trace> traces;
};

// Exhaustive witness enumeration; guards 2^witness_bits <= 2^20.
AcceptingPaths count_accepting(const QueryStrategy& s, const OracleGraph& o);

// Guess k strictly increasing vertex labels, query all pairs, accept iff
// the observed graph is isomorphic to the pattern. Accepting paths on an
// oracle graph G count exactly indsub(pattern, G).
QueryStrategy naive_indsub_strategy(const Graph& pattern, const Caps& caps = default_caps());

// Certifies the embedding of poset(G) into same-size oracle graphs: inst
// maps each vertex subset of G to a j-vertex oracle, perc sends accepting
// traces back to the subset of G they observed.
struct SetInstantiator {
    std::uint64_t j = 0;
    std::uint64_t spread = 0;                     // the n used by the spreading map
    std::vector<std::uint64_t> xi;                // monotone spreading map on V(G)
    std::map<std::uint32_t, OracleGraph> inst;    // subset mask -> oracle graph
    std::map<std::string, std::uint32_t> perc;    // accepting trace key -> subset mask
    std::vector<Trace> accepting_traces;          // traces on inst(V(G))
};

SetInstantiator build_set_instantiator(const QueryStrategy& s, const OrderedGraph& g,
                                       const MotifParameter& phi, std::uint64_t seed,
                                       std::uint64_t n_start = 4, int max_retries = 16,
                                       const Caps& caps = default_caps());

struct VerificationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Exhaustively checks both defining properties for every subset of V(G):
// acceptance on inst(H) iff the perceived subset is inside H, and phi is
// blind to the instantiation.
VerificationReport verify_set_instantiator(const SetInstantiator& si, const QueryStrategy& s,
                                           const OrderedGraph& g, const MotifParameter& phi,
                                           const Caps& caps = default_caps());

OrderedGraph decode_ordered(const OracleGraph& o);

} // namespace motifalg
