#pragma once

#include <map>
#include <optional>

#include "motifalg/counting.hpp"
#include "motifalg/graph.hpp"
#include "motifalg/rational.hpp"
#include "motifalg/relstruct.hpp"

namespace motifalg {

struct ParamKind {
    Kind kind = Kind::unordered;
    int palette = 0;                         // colored: colors 0..palette
    std::optional<MixedType> rel_type;       // relational
    bool rel_ordered = false;                // relational
    std::optional<PaddingProfile> rel_padding; // relational purity profile; default all-zeros

    friend bool operator==(const ParamKind&, const ParamKind&) = default;

    static ParamKind unordered() { return {}; }
    static ParamKind ordered() { return {Kind::ordered, 0, {}, false, {}}; }
    static ParamKind colored(int palette) { return {Kind::colored, palette, {}, false, {}}; }
    static ParamKind relational(MixedType type, bool ordered,
                                std::optional<PaddingProfile> padding = {}) {
        return {Kind::relational, 0, std::move(type), ordered, std::move(padding)};
    }
};

// Finite rational linear combination of induced-subobject counting
// functions, stored as canonical pattern -> nonzero coefficient.
struct MotifParameter {
    ParamKind kind;
    std::map<CanonicalKey, Rational> terms;

    MotifParameter() = default;
    explicit MotifParameter(ParamKind k) : kind(std::move(k)) {}

    void add(const CanonicalKey& pattern, const Rational& coeff);
    const Rational* coefficient(const CanonicalKey& pattern) const;

    friend bool operator==(const MotifParameter&, const MotifParameter&) = default;
};

MotifParameter operator*(const Rational& scale, const MotifParameter& phi);
MotifParameter operator+(const MotifParameter& a, const MotifParameter& b);

Rational evaluate(const MotifParameter& phi, const Graph& g, const Caps& caps = default_caps());
Rational evaluate(const MotifParameter& phi, const OrderedGraph& g, const Caps& caps = default_caps());
Rational evaluate(const MotifParameter& phi, const ColoredGraph& g, const Caps& caps = default_caps());
Rational evaluate(const MotifParameter& phi, const RelStructure& a, const Caps& caps = default_caps());

enum class Verdict { Good, NonIntegerCoefficient, NegativeCoefficient, ImpureSupport };

const char* verdict_name(Verdict v);

struct ClassificationWitness {
    CanonicalKey pattern;
    Rational coefficient;
    CanonicalKey witness_graph;
};

// Good iff every coefficient is a nonnegative integer. A non-integer
// coefficient wins over a negative one and comes with the smallest such
// pattern H, on which the parameter itself evaluates to a non-integer.
// Impure support is reported as a separate flag: the dichotomy only
// applies to pure parameters.
struct Classification {
    Verdict verdict = Verdict::Good;
    bool impure_support = false;
    std::optional<ClassificationWitness> witness;
};

Classification classify(const MotifParameter& phi);

bool is_pure_pattern(const ParamKind& kind, const CanonicalKey& pattern);
bool is_pure(const MotifParameter& phi);

// Expand each unordered term over one ordered representative per ordering
// class of its pattern; coefficients carry over with sign.
MotifParameter symmetrize(const MotifParameter& phi, const Caps& caps = default_caps());

struct ScanResult {
    bool all_nonnegative = true;
    std::optional<CanonicalKey> counterexample;
    Rational value;
};

// Evaluates phi on every isomorphism class up to n_max vertices, in
// canonical order; reports the first negative value.
ScanResult check_nonnegative_upto(const MotifParameter& phi, int n_max,
                                  const Caps& caps = default_caps());

// Inserts k isolated vertices between every pair of order-consecutive
// vertices. Pure pattern counts are unchanged; all-isolated counts grow.
OrderedGraph blowup_pad(const OrderedGraph& g, int k);

// The padding count that dominates every pure evaluation on the poset:
// 1 + max over pure poset elements of phi.
long long blowup_bound(const MotifParameter& phi, const InducedPoset& poset,
                       const Caps& caps = default_caps());

} // namespace motifalg
