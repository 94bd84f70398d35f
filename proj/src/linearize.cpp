#include "motifalg/linearize.hpp"

#include <algorithm>
#include <string>

#include "motifalg/witness.hpp"

namespace motifalg {

namespace {

ParamKind kind_of_patterns(const std::vector<CanonicalKey>& patterns) {
    if (patterns.empty())
        return ParamKind::unordered();
    Kind kind = patterns.front().kind;
    for (const auto& key : patterns)
        if (key.kind != kind)
            throw KindMismatch("product patterns must share one kind");
    switch (kind) {
    case Kind::unordered: return ParamKind::unordered();
    case Kind::ordered: return ParamKind::ordered();
    case Kind::colored: return ParamKind::colored(static_cast<unsigned char>(patterns.front().payload.at(0)));
    default: throw KindMismatch("relational patterns are not supported in linearization");
    }
}

EnumKind enum_kind_of(const ParamKind& kind) {
    switch (kind.kind) {
    case Kind::unordered: return EnumKind::unordered();
    case Kind::ordered: return EnumKind::ordered();
    case Kind::colored: return EnumKind::colored(kind.palette);
    default: throw KindMismatch("relational parameters are not supported in linearization");
    }
}

int enum_cap_of(const ParamKind& kind, const Caps& caps) {
    return kind.kind == Kind::unordered ? caps.enum_unordered : caps.enum_ordered;
}

// all vertex subsets of b inducing a copy of the pattern, as bitmasks
template <typename G>
std::vector<std::uint32_t> occurrences(const CanonicalKey& pattern, const G& b, const Caps& caps) {
    int k = pattern.n;
    int n = b.n();
    std::vector<std::uint32_t> out;
    if (k > n)
        return out;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int low) -> void {
        if (static_cast<int>(subset.size()) == k) {
            if (canonical_form(induced_subgraph(b, subset), caps) == pattern) {
                std::uint32_t mask = 0;
                for (int v : subset)
                    mask |= std::uint32_t{1} << v;
                out.push_back(mask);
            }
            return;
        }
        for (int v = low; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

template <typename G>
std::vector<std::uint32_t> occurrences_any(const CanonicalKey& pattern, const CanonicalKey& target,
                                           const Caps& caps);

template <>
std::vector<std::uint32_t> occurrences_any<Graph>(const CanonicalKey& pattern,
                                                  const CanonicalKey& target, const Caps& caps) {
    return occurrences(pattern, graph_from_key(target), caps);
}

template <>
std::vector<std::uint32_t> occurrences_any<OrderedGraph>(const CanonicalKey& pattern,
                                                         const CanonicalKey& target, const Caps& caps) {
    return occurrences(pattern, ordered_from_key(target), caps);
}

template <>
std::vector<std::uint32_t> occurrences_any<ColoredGraph>(const CanonicalKey& pattern,
                                                         const CanonicalKey& target, const Caps& caps) {
    return occurrences(pattern, colored_from_key(target), caps);
}

long long covering_tuples(const std::vector<std::vector<std::uint32_t>>& occ, std::uint32_t full) {
    long long total = 0;
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t covered) -> void {
        // no pruning on coverage feasibility; lists are tiny
        if (i == occ.size()) {
            if (covered == full)
                ++total;
            return;
        }
        for (std::uint32_t mask : occ[i])
            self(self, i + 1, covered | mask);
    };
    rec(rec, 0, 0);
    return total;
}

long long covering_sets(const std::vector<std::uint32_t>& occ, int k, std::uint32_t full) {
    long long total = 0;
    auto rec = [&](auto&& self, std::size_t next, int taken, std::uint32_t covered) -> void {
        if (taken == k) {
            if (covered == full)
                ++total;
            return;
        }
        for (std::size_t i = next; i < occ.size(); ++i)
            self(self, i + 1, taken + 1, covered | occ[i]);
    };
    rec(rec, 0, 0, 0);
    return total;
}

template <typename G>
MotifParameter linearize_product_impl(const std::vector<CanonicalKey>& patterns, const ParamKind& kind,
                                      const Caps& caps) {
    int total_vertices = 0;
    for (const auto& key : patterns)
        total_vertices += key.n;
    if (total_vertices > enum_cap_of(kind, caps))
        throw CapExceeded("product patterns span " + std::to_string(total_vertices) +
                          " vertices, above the enumeration cap");
    MotifParameter out(kind);
    for (const auto& candidate : enumerate_graphs(total_vertices, enum_kind_of(kind), caps)) {
        std::vector<std::vector<std::uint32_t>> occ;
        occ.reserve(patterns.size());
        for (const auto& pattern : patterns)
            occ.push_back(occurrences_any<G>(pattern, candidate, caps));
        std::uint32_t full = candidate.n == 32 ? ~std::uint32_t{0}
                                               : (std::uint32_t{1} << candidate.n) - 1;
        long long coeff = covering_tuples(occ, full);
        if (coeff != 0)
            out.add(candidate, Rational(static_cast<long>(coeff)));
    }
    return out;
}

template <typename G>
MotifParameter linearize_binomial_impl(const CanonicalKey& pattern, int k, const ParamKind& kind,
                                       const Caps& caps) {
    long long total_vertices = static_cast<long long>(k) * pattern.n;
    if (total_vertices > enum_cap_of(kind, caps))
        throw CapExceeded("binomial expansion spans " + std::to_string(total_vertices) +
                          " vertices, above the enumeration cap");
    MotifParameter out(kind);
    for (const auto& candidate : enumerate_graphs(static_cast<int>(total_vertices),
                                                  enum_kind_of(kind), caps)) {
        auto occ = occurrences_any<G>(pattern, candidate, caps);
        std::uint32_t full = candidate.n == 32 ? ~std::uint32_t{0}
                                               : (std::uint32_t{1} << candidate.n) - 1;
        long long coeff = covering_sets(occ, k, full);
        if (coeff != 0)
            out.add(candidate, Rational(static_cast<long>(coeff)));
    }
    return out;
}

} // namespace

MotifParameter linearize_product(const std::vector<CanonicalKey>& patterns, const Caps& caps) {
    ParamKind kind = kind_of_patterns(patterns);
    switch (kind.kind) {
    case Kind::ordered: return linearize_product_impl<OrderedGraph>(patterns, kind, caps);
    case Kind::colored: return linearize_product_impl<ColoredGraph>(patterns, kind, caps);
    default: return linearize_product_impl<Graph>(patterns, kind, caps);
    }
}

MotifParameter linearize_binomial(const CanonicalKey& pattern, int k, const Caps& caps) {
    if (k < 0)
        throw InvalidRange("negative binomial order");
    ParamKind kind = kind_of_patterns({pattern});
    switch (kind.kind) {
    case Kind::ordered: return linearize_binomial_impl<OrderedGraph>(pattern, k, kind, caps);
    case Kind::colored: return linearize_binomial_impl<ColoredGraph>(pattern, k, kind, caps);
    default: return linearize_binomial_impl<Graph>(pattern, k, kind, caps);
    }
}

MotifParameter motif_product(const MotifParameter& a, const MotifParameter& b, const Caps& caps) {
    if (!(a.kind == b.kind))
        throw KindMismatch("multiplying motif parameters of different kinds");
    MotifParameter out(a.kind);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            MotifParameter expanded = linearize_product({ka, kb}, caps);
            for (const auto& [key, coeff] : expanded.terms)
                out.add(key, ca * cb * coeff);
        }
    return out;
}

namespace {

CanonicalKey empty_pattern(const ParamKind& kind, const Caps& caps) {
    switch (kind.kind) {
    case Kind::ordered: return canonical_form(OrderedGraph{Graph(0)}, caps);
    case Kind::colored: return canonical_form(ColoredGraph{Graph(0), {}, kind.palette}, caps);
    default: return canonical_form(Graph(0), caps);
    }
}

void validate_polynomial(const CountPolynomial& p) {
    for (const auto& [exps, coeff] : p.terms) {
        if (exps.size() != p.variables.size())
            throw ValidationError("exponent vector length does not match variables");
        for (int e : exps)
            if (e < 0)
                throw InvalidRange("negative exponent");
    }
}

} // namespace

MotifParameter linearize_polynomial(const CountPolynomial& p, const Caps& caps) {
    validate_polynomial(p);
    MotifParameter out(p.kind);
    for (const auto& [exps, coeff] : p.terms) {
        MotifParameter term(p.kind);
        term.add(empty_pattern(p.kind, caps), Rational(1)); // multiplicative unit #K0
        if (p.basis == PolynomialBasis::monomial) {
            std::vector<CanonicalKey> factors;
            for (std::size_t i = 0; i < exps.size(); ++i)
                for (int rep = 0; rep < exps[i]; ++rep)
                    factors.push_back(p.variables[i]);
            if (!factors.empty())
                term = linearize_product(factors, caps);
        } else {
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0)
                    continue; // binom(x, 0) = 1
                term = motif_product(term, linearize_binomial(p.variables[i], exps[i], caps), caps);
            }
        }
        for (const auto& [key, c] : term.terms)
            out.add(key, coeff * c);
    }
    return out;
}

namespace {

template <typename G>
Rational evaluate_polynomial_impl(const CountPolynomial& p, const G& g,
                                  long long (*count)(const CanonicalKey&, const G&, const Caps&),
                                  const Caps& caps) {
    validate_polynomial(p);
    std::vector<long long> counts;
    counts.reserve(p.variables.size());
    for (const auto& var : p.variables)
        counts.push_back(count(var, g, caps));
    Rational total = 0;
    for (const auto& [exps, coeff] : p.terms) {
        Rational term = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (p.basis == PolynomialBasis::monomial) {
                for (int rep = 0; rep < exps[i]; ++rep)
                    term *= Rational(static_cast<long>(counts[i]));
            } else {
                term *= Rational(binomial(BigInt(static_cast<long>(counts[i])), exps[i]));
            }
        }
        total += term;
    }
    return total;
}

long long count_unordered(const CanonicalKey& key, const Graph& g, const Caps& caps) {
    return indsub(graph_from_key(key), g, caps);
}

long long count_ordered(const CanonicalKey& key, const OrderedGraph& g, const Caps& caps) {
    return indsub(ordered_from_key(key), g, caps);
}

} // namespace

Rational evaluate_polynomial(const CountPolynomial& p, const Graph& g, const Caps& caps) {
    if (p.kind.kind != Kind::unordered)
        throw KindMismatch("polynomial kind is not unordered");
    return evaluate_polynomial_impl(p, g, count_unordered, caps);
}

Rational evaluate_polynomial(const CountPolynomial& p, const OrderedGraph& g, const Caps& caps) {
    if (p.kind.kind != Kind::ordered)
        throw KindMismatch("polynomial kind is not ordered");
    return evaluate_polynomial_impl(p, g, count_ordered, caps);
}

MotifParameter linearize_polynomial_by_solve(const CountPolynomial& p, const Caps& caps) {
    validate_polynomial(p);
    int span = 0;
    for (const auto& [exps, coeff] : p.terms) {
        int value = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            value += exps[i] * p.variables[i].n;
        span = std::max(span, value);
    }
    std::vector<CanonicalKey> support = enumerate_graphs(span, enum_kind_of(p.kind), caps);
    std::map<CanonicalKey, Rational> values;
    for (const auto& key : support) {
        if (p.kind.kind == Kind::ordered)
            values[key] = evaluate_polynomial(p, ordered_from_key(key), caps);
        else
            values[key] = evaluate_polynomial(p, graph_from_key(key), caps);
    }
    return recover_coefficients(values, support, caps);
}

MotifParameter linearize_product_by_solve(const std::vector<CanonicalKey>& patterns, const Caps& caps) {
    CountPolynomial p;
    p.basis = PolynomialBasis::monomial;
    p.kind = kind_of_patterns(patterns);
    std::vector<int> exps;
    for (const auto& key : patterns) {
        auto it = std::find(p.variables.begin(), p.variables.end(), key);
        if (it == p.variables.end()) {
            p.variables.push_back(key);
            exps.push_back(1);
        } else {
            ++exps[static_cast<std::size_t>(it - p.variables.begin())];
        }
    }
    p.terms[exps] = 1;
    return linearize_polynomial_by_solve(p, caps);
}

} // namespace motifalg
