#include "motifalg/oraclesim.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace motifalg {

OracleGraph OracleGraph::from_graph(const Graph& g) {
    OracleGraph o;
    o.j = static_cast<std::uint64_t>(g.n());
    o.label_bits = 0;
    while ((std::uint64_t{1} << o.label_bits) < o.j)
        ++o.label_bits;
    o.adjacency = g;
    return o;
}

bool OracleGraph::query(std::uint64_t u, std::uint64_t v) const {
    if (u >= j || v >= j || u == v)
        return false; // malformed or diagonal queries answer 0
    return adjacency.edge(static_cast<int>(u), static_cast<int>(v));
}

std::vector<std::uint64_t> Trace::queried_vertices() const {
    std::set<std::uint64_t> seen;
    for (const auto& q : queries) {
        seen.insert(q.u);
        seen.insert(q.v);
    }
    return {seen.begin(), seen.end()};
}

std::string Trace::key() const {
    std::string out;
    out.reserve(witness.size() + queries.size() * 8);
    for (std::uint8_t b : witness)
        out.push_back(b ? '1' : '0');
    for (const auto& q : queries) {
        out.push_back('|');
        out += std::to_string(q.u);
        out.push_back(',');
        out += std::to_string(q.v);
        out.push_back(':');
        out.push_back(q.answer ? '1' : '0');
    }
    return out;
}

std::string Trace::log_line() const {
    std::ostringstream out;
    out << "witness=";
    if (witness.empty())
        out << "-";
    for (std::uint8_t b : witness)
        out << (b ? '1' : '0');
    out << " queries=";
    if (queries.empty())
        out << "-";
    for (std::size_t i = 0; i < queries.size(); ++i) {
        if (i)
            out << ";";
        out << queries[i].u << "," << queries[i].v << ":" << int(queries[i].answer);
    }
    out << " vertices=";
    auto verts = queried_vertices();
    if (verts.empty())
        out << "-";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i)
            out << ",";
        out << verts[i];
    }
    return out.str();
}

RunResult run_path(const QueryStrategy& s, const OracleGraph& o,
                   const std::vector<std::uint8_t>& witness) {
    RunResult result;
    result.trace.witness = witness;
    std::vector<std::uint8_t> answers;
    while (true) {
        StepAction action = s.step(o.j, witness, answers);
        switch (action.type) {
        case StepAction::Type::accept:
            result.accepted = true;
            return result;
        case StepAction::Type::reject:
            result.accepted = false;
            return result;
        case StepAction::Type::query: {
            if (static_cast<int>(answers.size()) >= s.query_budget)
                throw BudgetExceeded("path exceeded query budget " + std::to_string(s.query_budget));
            std::uint8_t answer = o.query(action.u, action.v) ? 1 : 0;
            answers.push_back(answer);
            result.trace.queries.push_back({action.u, action.v, answer});
            break;
        }
        }
    }
}

AcceptingPaths count_accepting(const QueryStrategy& s, const OracleGraph& o) {
    int bits = s.witness_bits(o.j);
    if (bits < 0 || bits > 20)
        throw CapExceeded("witness space 2^" + std::to_string(bits) + " exceeds the desk guard 2^20");
    AcceptingPaths out;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << bits); ++w) {
        std::vector<std::uint8_t> witness(bits);
        for (int i = 0; i < bits; ++i)
            witness[i] = w >> (bits - 1 - i) & 1; // MSB first
        RunResult run = run_path(s, o, witness);
        if (run.accepted) {
            ++out.count;
            out.traces.push_back(std::move(run.trace));
        }
    }
    return out;
}

QueryStrategy naive_indsub_strategy(const Graph& pattern, const Caps& caps) {
    if (pattern.n() > caps.canonical)
        throw CapExceeded("pattern exceeds canonicalization cap");
    int k = pattern.n();
    // all adjacency masks on k labeled vertices isomorphic to the pattern,
    // in pair order (0,1),(0,2),...,(1,2),...
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            pairs.emplace_back(a, b);
    std::set<std::uint32_t> accept_masks;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        Graph candidate(k);
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if (mask >> t & 1)
                candidate.set_edge(pairs[t].first, pairs[t].second);
        if (isomorphic(candidate, pattern))
            accept_masks.insert(mask);
    }

    QueryStrategy s;
    s.query_budget = static_cast<int>(pairs.size());
    s.witness_bits = [k](std::uint64_t j) {
        int label_bits = 0;
        while ((std::uint64_t{1} << label_bits) < j)
            ++label_bits;
        return k * label_bits;
    };
    s.step = [k, pairs, accept_masks](std::uint64_t j, const std::vector<std::uint8_t>& witness,
                                      const std::vector<std::uint8_t>& answers) -> StepAction {
        int label_bits = 0;
        while ((std::uint64_t{1} << label_bits) < j)
            ++label_bits;
        std::vector<std::uint64_t> labels(k, 0);
        for (int i = 0; i < k; ++i)
            for (int b = 0; b < label_bits; ++b)
                labels[i] = labels[i] << 1 | witness[i * label_bits + b];
        for (int i = 0; i < k; ++i) {
            if (labels[i] >= j)
                return StepAction::reject();
            if (i > 0 && labels[i - 1] >= labels[i])
                return StepAction::reject(); // guesses must be strictly increasing
        }
        if (answers.size() < pairs.size()) {
            auto [a, b] = pairs[answers.size()];
            return StepAction::make_query(labels[a], labels[b]);
        }
        std::uint32_t observed = 0;
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if (answers[t])
                observed |= std::uint32_t{1} << t;
        return accept_masks.count(observed) ? StepAction::accept() : StepAction::reject();
    };
    return s;
}

namespace {

std::vector<int> mask_to_subset(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1)
            out.push_back(v);
    return out;
}

OracleGraph instantiate_subset(const OrderedGraph& g, std::uint32_t mask,
                               const std::vector<std::uint64_t>& xi, std::uint64_t j) {
    Graph big(static_cast<int>(j));
    for (auto [u, v] : g.graph.edges())
        if ((mask >> u & 1) && (mask >> v & 1))
            big.set_edge(static_cast<int>(xi[u]), static_cast<int>(xi[v]));
    return OracleGraph::from_graph(big);
}

} // namespace

SetInstantiator build_set_instantiator(const QueryStrategy& s, const OrderedGraph& g,
                                       const MotifParameter& phi, std::uint64_t seed,
                                       std::uint64_t n_start, int max_retries, const Caps& caps) {
    if (phi.kind.kind != Kind::ordered)
        throw KindMismatch("set-instantiators are built for ordered parameters");
    if (!is_pure(phi))
        throw ValidationError("set-instantiators require a pure parameter");
    int vg = g.n();
    if (vg > caps.poset)
        throw CapExceeded("root graph exceeds the poset cap");
    if (n_start < 1)
        throw InvalidRange("n_start must be positive");

    std::mt19937_64 rng(seed);
    std::uint64_t n = n_start;
    std::string last_failure;
    for (int attempt = 0; attempt < max_retries; ++attempt, n *= 2) {
        std::vector<std::uint64_t> xi_hat(vg);
        for (int v = 0; v < vg; ++v)
            xi_hat[v] = std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
        std::vector<std::uint64_t> xi(vg);
        for (int v = 0; v < vg; ++v)
            xi[v] = static_cast<std::uint64_t>(v) * n + xi_hat[v]; // monotone by blocks
        std::uint64_t j = static_cast<std::uint64_t>(vg) * n;
        if (vg == 0)
            j = 1; // K0 still needs a nonempty oracle universe

        SetInstantiator si;
        si.j = j;
        si.spread = n;
        si.xi = xi;

        bool good = true;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << vg) && good; ++mask) {
            OracleGraph oracle = instantiate_subset(g, mask, xi, j);
            AcceptingPaths paths = count_accepting(s, oracle);
            // accepting paths must not touch spread images outside the subset
            std::set<std::uint64_t> forbidden;
            for (int v = 0; v < vg; ++v)
                if (!(mask >> v & 1))
                    forbidden.insert(xi[v]);
            for (const auto& trace : paths.traces) {
                for (std::uint64_t vertex : trace.queried_vertices()) {
                    if (forbidden.count(vertex)) {
                        good = false;
                        last_failure = "subset mask " + std::to_string(mask) +
                                       " has an accepting path touching a forbidden vertex: " +
                                       trace.log_line();
                        break;
                    }
                }
                if (!good)
                    break;
            }
            si.inst.emplace(mask, std::move(oracle));
        }
        if (!good)
            continue;

        std::uint32_t full = (std::uint32_t{1} << vg) - 1;
        AcceptingPaths on_full = count_accepting(s, si.inst.at(full));
        for (const auto& trace : on_full.traces) {
            std::uint32_t perceived = 0;
            for (int v = 0; v < vg; ++v) {
                std::uint64_t image = xi[v];
                auto verts = trace.queried_vertices();
                if (std::find(verts.begin(), verts.end(), image) != verts.end())
                    perceived |= std::uint32_t{1} << v;
            }
            si.perc.emplace(trace.key(), perceived);
        }
        si.accepting_traces = std::move(on_full.traces);
        return si;
    }
    throw RetriesExhausted("no spreading map found after " + std::to_string(max_retries) +
                           " retries; last failure: " + last_failure);
}

VerificationReport verify_set_instantiator(const SetInstantiator& si, const QueryStrategy& s,
                                           const OrderedGraph& g, const MotifParameter& phi,
                                           const Caps& caps) {
    VerificationReport report;
    int vg = g.n();
    auto note = [&](std::string text) {
        report.ok = false;
        report.violations.push_back(std::move(text));
    };

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << vg); ++mask) {
        const OracleGraph& oracle = si.inst.at(mask);
        AcceptingPaths paths = count_accepting(s, oracle);

        // accepting here -> perceived subset lies inside the mask
        for (const auto& trace : paths.traces) {
            auto it = si.perc.find(trace.key());
            if (it == si.perc.end()) {
                note("subset " + std::to_string(mask) + ": accepting trace unknown to perc: " +
                     trace.log_line());
                continue;
            }
            if ((it->second & mask) != it->second)
                note("subset " + std::to_string(mask) +
                     ": accepting trace perceived outside the subset: " + trace.log_line());
        }

        // perceived inside the mask -> the same path accepts here
        std::set<std::string> accepted_keys;
        for (const auto& trace : paths.traces)
            accepted_keys.insert(trace.key());
        for (const auto& trace : si.accepting_traces) {
            std::uint32_t perceived = si.perc.at(trace.key());
            if ((perceived & mask) != perceived)
                continue;
            RunResult replay = run_path(s, oracle, trace.witness);
            if (!replay.accepted || !(replay.trace == trace))
                note("subset " + std::to_string(mask) +
                     ": path with perception inside the subset does not replay: " + trace.log_line());
            else if (!accepted_keys.count(trace.key()))
                note("subset " + std::to_string(mask) + ": replayed path missing from enumeration");
        }

        // phi is blind to the instantiation
        OrderedGraph decoded = decode_ordered(oracle);
        OrderedGraph sub = induced_subgraph(g, mask_to_subset(mask, vg));
        if (evaluate(phi, decoded, caps) != evaluate(phi, sub, caps))
            note("subset " + std::to_string(mask) + ": phi distinguishes inst(H) from H");
    }
    return report;
}

OrderedGraph decode_ordered(const OracleGraph& o) { return OrderedGraph{o.adjacency}; }

} // namespace motifalg
