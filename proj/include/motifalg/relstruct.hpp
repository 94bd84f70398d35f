#pragma once

#include <cstdint>
#include <vector>

#include "motifalg/graph.hpp"

namespace motifalg {

enum class RelVariant : std::uint8_t { set = 0, multiset = 1, list_norep = 2, list_rep = 3 };

const char* variant_name(RelVariant v);

struct RelSlot {
    int arity = 1;
    RelVariant variant = RelVariant::set;
    friend bool operator==(const RelSlot&, const RelSlot&) = default;
};

// Mixed type: arities plus the container variant of each relation slot.
struct MixedType {
    std::vector<RelSlot> slots;
    friend bool operator==(const MixedType&, const MixedType&) = default;
};

using RelEntry = std::vector<int>;

// Finite relational structure over a mixed type. Entries are kept
// normalized (set/multiset entries sorted) and each slot holds a sorted
// duplicate-free entry list, so containment tests are canonical.
struct RelStructure {
    MixedType type;
    int n = 0;
    std::vector<std::vector<RelEntry>> relations;
    bool ordered = false;

    RelStructure() = default;
    RelStructure(MixedType t, int universe, bool ordered_flag = false);

    void add(int slot, RelEntry entry);
    bool contains(int slot, const RelEntry& normalized) const;

    friend bool operator==(const RelStructure&, const RelStructure&) = default;
};

RelEntry normalize_entry(const RelSlot& slot, RelEntry entry, int n);
void validate(const RelStructure& a);

RelStructure induced_substructure(const RelStructure& a, const std::vector<int>& vertices);

// Isomorphism respecting variants and, for ordered structures, the order.
bool rel_isomorphic(const RelStructure& a, const RelStructure& b);

// Number of vertex subsets S of A with A[S] isomorphic to the pattern B.
long long indsub_struct(const RelStructure& pattern, const RelStructure& a);

struct PaddingProfile {
    std::vector<std::uint8_t> bits; // one per slot
    friend bool operator==(const PaddingProfile&, const PaddingProfile&) = default;
};

PaddingProfile zero_padding(const MixedType& type);

// v is P-padding when, for each slot, it is in no entry (p=0) or in every
// possible entry through v (p=1).
bool is_P_padding(int v, const RelStructure& a, const PaddingProfile& p);
bool is_P_pure(const RelStructure& a, const PaddingProfile& p);

bool is_irreducible(const RelStructure& a);

// True iff no substructure of a (not necessarily induced) is isomorphic to
// an element of forbidden.
bool forb_check(const RelStructure& a, const std::vector<RelStructure>& forbidden);

// Optional validator for the caller contract behind forb_check's
// induced/plain equivalence: closure of F under adding entries.
bool is_upwards_closed(const std::vector<RelStructure>& forbidden);

// Translation of an ordered mixed structure into an ordered set-relational
// one. Multiset slots split by compositions of the arity, list slots by
// total orders (no repetition) or total preorders (with repetition) of the
// positions; tags are enumerated in a fixed canonical order.
struct ConvLayout {
    MixedType derived;                        // all slots set-variant
    std::vector<int> source_slot;             // per derived slot
    std::vector<std::vector<int>> tag;        // composition or rank vector; empty for set slots
};

ConvLayout conv_layout(const MixedType& mixed);
RelStructure conv(const RelStructure& a);
RelStructure conv_inverse(const RelStructure& converted, const MixedType& original);

CanonicalKey rel_canonical_key(const RelStructure& a, const Caps& caps = default_caps());
RelStructure rel_from_key(const CanonicalKey& key);

// Colored graphs as set-relational structures: one binary edge slot plus a
// unary slot per color 1..palette; color 0 is encoded by absence.
MixedType colored_encoding_type(int palette);
RelStructure rel_from_colored(const ColoredGraph& g, bool ordered = false);

} // namespace motifalg
