#include "motifalg/motif.hpp"

#include <algorithm>
#include <string>

namespace motifalg {

void MotifParameter::add(const CanonicalKey& pattern, const Rational& coeff) {
    auto it = terms.find(pattern);
    if (it == terms.end()) {
        if (coeff != 0)
            terms.emplace(pattern, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms.erase(it);
}

const Rational* MotifParameter::coefficient(const CanonicalKey& pattern) const {
    auto it = terms.find(pattern);
    return it == terms.end() ? nullptr : &it->second;
}

MotifParameter operator*(const Rational& scale, const MotifParameter& phi) {
    MotifParameter out(phi.kind);
    if (scale == 0)
        return out;
    for (const auto& [key, coeff] : phi.terms)
        out.terms.emplace(key, scale * coeff);
    return out;
}

MotifParameter operator+(const MotifParameter& a, const MotifParameter& b) {
    if (!(a.kind == b.kind) && !a.terms.empty() && !b.terms.empty())
        throw KindMismatch("adding motif parameters of different kinds");
    MotifParameter out = a.terms.empty() ? MotifParameter(b.kind) : a;
    for (const auto& [key, coeff] : b.terms)
        out.add(key, coeff);
    return out;
}

namespace {

void expect_kind(const MotifParameter& phi, Kind kind, const char* what) {
    if (phi.kind.kind != kind)
        throw KindMismatch(std::string(what) + ": parameter kind is " + kind_name(phi.kind.kind));
}

} // namespace

Rational evaluate(const MotifParameter& phi, const Graph& g, const Caps& caps) {
    expect_kind(phi, Kind::unordered, "evaluate on an unordered graph");
    Rational total = 0;
    for (const auto& [key, coeff] : phi.terms)
        total += coeff * Rational(static_cast<long>(indsub(graph_from_key(key), g, caps)));
    return total;
}

Rational evaluate(const MotifParameter& phi, const OrderedGraph& g, const Caps& caps) {
    expect_kind(phi, Kind::ordered, "evaluate on an ordered graph");
    Rational total = 0;
    for (const auto& [key, coeff] : phi.terms)
        total += coeff * Rational(static_cast<long>(indsub(ordered_from_key(key), g, caps)));
    return total;
}

Rational evaluate(const MotifParameter& phi, const ColoredGraph& g, const Caps& caps) {
    expect_kind(phi, Kind::colored, "evaluate on a colored graph");
    if (phi.kind.palette != g.palette)
        throw KindMismatch("palette mismatch between parameter and target");
    Rational total = 0;
    for (const auto& [key, coeff] : phi.terms)
        total += coeff * Rational(static_cast<long>(indsub(colored_from_key(key), g, caps)));
    return total;
}

Rational evaluate(const MotifParameter& phi, const RelStructure& a, const Caps& caps) {
    expect_kind(phi, Kind::relational, "evaluate on a relational structure");
    (void)caps;
    Rational total = 0;
    for (const auto& [key, coeff] : phi.terms) {
        RelStructure pattern = rel_from_key(key);
        total += coeff * Rational(static_cast<long>(indsub_struct(pattern, a)));
    }
    return total;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Good: return "Good";
    case Verdict::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case Verdict::NegativeCoefficient: return "NegativeCoefficient";
    case Verdict::ImpureSupport: return "ImpureSupport";
    }
    return "?";
}

bool is_pure_pattern(const ParamKind& kind, const CanonicalKey& pattern) {
    switch (kind.kind) {
    case Kind::unordered:
        return is_pure(graph_from_key(pattern));
    case Kind::ordered:
        return is_pure(ordered_from_key(pattern));
    case Kind::colored: {
        // the spare color 0 plays the padding role
        ColoredGraph g = colored_from_key(pattern);
        return std::all_of(g.colors.begin(), g.colors.end(), [](int c) { return c >= 1; });
    }
    case Kind::relational: {
        RelStructure a = rel_from_key(pattern);
        PaddingProfile p = kind.rel_padding ? *kind.rel_padding : zero_padding(a.type);
        return is_P_pure(a, p);
    }
    }
    return true;
}

bool is_pure(const MotifParameter& phi) {
    for (const auto& [key, coeff] : phi.terms)
        if (!is_pure_pattern(phi.kind, key))
            return false;
    return true;
}

Classification classify(const MotifParameter& phi) {
    Classification out;
    for (const auto& [key, coeff] : phi.terms)
        if (!is_pure_pattern(phi.kind, key))
            out.impure_support = true;
    // map order is (n, payload), so the first hit is a minimal-vertex witness
    for (const auto& [key, coeff] : phi.terms) {
        if (!is_integer(coeff)) {
            out.verdict = Verdict::NonIntegerCoefficient;
            out.witness = ClassificationWitness{key, coeff, key};
            return out;
        }
    }
    for (const auto& [key, coeff] : phi.terms) {
        if (coeff < 0) {
            out.verdict = Verdict::NegativeCoefficient;
            out.witness = ClassificationWitness{key, coeff, key};
            return out;
        }
    }
    out.verdict = Verdict::Good;
    return out;
}

MotifParameter symmetrize(const MotifParameter& phi, const Caps& caps) {
    expect_kind(phi, Kind::unordered, "symmetrize");
    MotifParameter out(ParamKind::ordered());
    for (const auto& [key, coeff] : phi.terms)
        for (const auto& og : orderings(graph_from_key(key), caps))
            out.add(canonical_form(og, caps), coeff);
    return out;
}

ScanResult check_nonnegative_upto(const MotifParameter& phi, int n_max, const Caps& caps) {
    EnumKind enum_kind;
    switch (phi.kind.kind) {
    case Kind::unordered:
        enum_kind = EnumKind::unordered();
        break;
    case Kind::ordered:
        enum_kind = EnumKind::ordered();
        break;
    case Kind::colored:
        enum_kind = EnumKind::colored(phi.kind.palette);
        break;
    case Kind::relational:
        throw KindMismatch("nonnegativity scan is not defined for relational parameters");
    }
    ScanResult result;
    for (const auto& key : enumerate_graphs(n_max, enum_kind, caps)) {
        Rational value;
        switch (phi.kind.kind) {
        case Kind::unordered:
            value = evaluate(phi, graph_from_key(key), caps);
            break;
        case Kind::ordered:
            value = evaluate(phi, ordered_from_key(key), caps);
            break;
        default:
            value = evaluate(phi, colored_from_key(key), caps);
            break;
        }
        if (value < 0) {
            result.all_nonnegative = false;
            result.counterexample = key;
            result.value = value;
            return result;
        }
    }
    return result;
}

OrderedGraph blowup_pad(const OrderedGraph& g, int k) {
    if (k < 0)
        throw InvalidRange("negative padding count");
    int n = g.n();
    if (n <= 1 || k == 0)
        return g;
    Graph padded(n + k * (n - 1));
    for (auto [u, v] : g.graph.edges())
        padded.set_edge(u * (k + 1), v * (k + 1));
    return {std::move(padded)};
}

long long blowup_bound(const MotifParameter& phi, const InducedPoset& poset, const Caps& caps) {
    expect_kind(phi, Kind::unordered, "blowup_bound");
    Rational best = 0;
    for (const auto& key : poset.elements) {
        Graph h = graph_from_key(key);
        if (!is_pure(h))
            continue;
        Rational value = evaluate(phi, h, caps);
        if (value > best)
            best = value;
    }
    BigInt ceiling;
    mpz_cdiv_q(ceiling.get_mpz_t(), best.get_num().get_mpz_t(), best.get_den().get_mpz_t());
    return ceiling.get_si() + 1;
}

} // namespace motifalg
