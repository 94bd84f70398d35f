#include "motifalg/relstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace motifalg {

const char* variant_name(RelVariant v) {
    switch (v) {
    case RelVariant::set: return "set";
    case RelVariant::multiset: return "multiset";
    case RelVariant::list_norep: return "list_norep";
    case RelVariant::list_rep: return "list_rep";
    }
    return "?";
}

RelStructure::RelStructure(MixedType t, int universe, bool ordered_flag)
    : type(std::move(t)), n(universe), relations(type.slots.size()), ordered(ordered_flag) {
    if (universe < 0)
        throw InvalidVertex("negative universe size");
    for (const auto& slot : type.slots)
        if (slot.arity < 1)
            throw InvalidRange("relation arity must be >= 1");
}

RelEntry normalize_entry(const RelSlot& slot, RelEntry entry, int n) {
    if (static_cast<int>(entry.size()) != slot.arity)
        throw TypeMismatch("entry size " + std::to_string(entry.size()) + " does not match arity " +
                           std::to_string(slot.arity));
    for (int v : entry)
        if (v < 0 || v >= n)
            throw InvalidVertex("entry vertex " + std::to_string(v) + " out of range");
    switch (slot.variant) {
    case RelVariant::set: {
        std::sort(entry.begin(), entry.end());
        if (std::adjacent_find(entry.begin(), entry.end()) != entry.end())
            throw TypeMismatch("set entry has repeated vertices");
        return entry;
    }
    case RelVariant::multiset:
        std::sort(entry.begin(), entry.end());
        return entry;
    case RelVariant::list_norep: {
        RelEntry copy = entry;
        std::sort(copy.begin(), copy.end());
        if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
            throw TypeMismatch("list_norep entry has repeated vertices");
        return entry;
    }
    case RelVariant::list_rep:
        return entry;
    }
    return entry;
}

void RelStructure::add(int slot, RelEntry entry) {
    if (slot < 0 || slot >= static_cast<int>(type.slots.size()))
        throw TypeMismatch("slot index out of range");
    RelEntry norm = normalize_entry(type.slots[slot], std::move(entry), n);
    auto& list = relations[slot];
    auto it = std::lower_bound(list.begin(), list.end(), norm);
    if (it == list.end() || *it != norm)
        list.insert(it, std::move(norm));
}

bool RelStructure::contains(int slot, const RelEntry& normalized) const {
    const auto& list = relations[slot];
    return std::binary_search(list.begin(), list.end(), normalized);
}

void validate(const RelStructure& a) {
    if (a.relations.size() != a.type.slots.size())
        throw TypeMismatch("relation list does not match type");
    for (std::size_t i = 0; i < a.type.slots.size(); ++i) {
        for (const auto& e : a.relations[i]) {
            RelEntry norm = normalize_entry(a.type.slots[i], e, a.n);
            if (norm != e)
                throw TypeMismatch("entry not normalized");
        }
        if (!std::is_sorted(a.relations[i].begin(), a.relations[i].end()))
            throw TypeMismatch("slot entries not sorted");
    }
}

RelStructure induced_substructure(const RelStructure& a, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> relabel(a.n, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= a.n)
            throw InvalidVertex("subset vertex out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw InvalidVertex("subset vertex repeated");
        relabel[sorted[i]] = static_cast<int>(i);
    }
    RelStructure out(a.type, static_cast<int>(sorted.size()), a.ordered);
    for (std::size_t slot = 0; slot < a.relations.size(); ++slot) {
        for (const auto& e : a.relations[slot]) {
            bool inside = std::all_of(e.begin(), e.end(), [&](int v) { return relabel[v] >= 0; });
            if (!inside)
                continue;
            RelEntry mapped(e.size());
            std::transform(e.begin(), e.end(), mapped.begin(), [&](int v) { return relabel[v]; });
            out.add(static_cast<int>(slot), std::move(mapped));
        }
    }
    return out;
}

namespace {

// image of a structure under a vertex bijection, renormalized
RelStructure apply_perm(const RelStructure& a, const std::vector<int>& perm) {
    RelStructure out(a.type, a.n, a.ordered);
    for (std::size_t slot = 0; slot < a.relations.size(); ++slot) {
        for (const auto& e : a.relations[slot]) {
            RelEntry mapped(e.size());
            std::transform(e.begin(), e.end(), mapped.begin(), [&](int v) { return perm[v]; });
            out.add(static_cast<int>(slot), std::move(mapped));
        }
    }
    return out;
}

void check_same_type(const RelStructure& a, const RelStructure& b) {
    if (!(a.type == b.type))
        throw TypeMismatch("mixed types differ");
    if (a.ordered != b.ordered)
        throw TypeMismatch("ordered flags differ");
}

// all entries of the given slot over n vertices that contain v
std::vector<RelEntry> entries_through(const RelSlot& slot, int n, int v) {
    std::vector<RelEntry> out;
    int k = slot.arity;
    switch (slot.variant) {
    case RelVariant::set:
    case RelVariant::multiset: {
        // nondecreasing tuples (distinct for set) over 0..n-1 containing v
        RelEntry cur;
        auto rec = [&](auto&& self, int low) -> void {
            if (static_cast<int>(cur.size()) == k) {
                if (std::find(cur.begin(), cur.end(), v) != cur.end())
                    out.push_back(cur);
                return;
            }
            for (int w = low; w < n; ++w) {
                cur.push_back(w);
                self(self, slot.variant == RelVariant::set ? w + 1 : w);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }
    case RelVariant::list_norep:
    case RelVariant::list_rep: {
        RelEntry cur;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(cur.size()) == k) {
                if (std::find(cur.begin(), cur.end(), v) != cur.end())
                    out.push_back(cur);
                return;
            }
            for (int w = 0; w < n; ++w) {
                if (slot.variant == RelVariant::list_norep &&
                    std::find(cur.begin(), cur.end(), w) != cur.end())
                    continue;
                cur.push_back(w);
                self(self);
                cur.pop_back();
            }
        };
        rec(rec);
        return out;
    }
    }
    return out;
}

} // namespace

bool rel_isomorphic(const RelStructure& a, const RelStructure& b) {
    check_same_type(a, b);
    if (a.n != b.n)
        return false;
    for (std::size_t slot = 0; slot < a.relations.size(); ++slot)
        if (a.relations[slot].size() != b.relations[slot].size())
            return false;
    if (a.ordered)
        return a.relations == b.relations;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (apply_perm(a, perm).relations == b.relations)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

long long indsub_struct(const RelStructure& pattern, const RelStructure& a) {
    check_same_type(pattern, a);
    int k = pattern.n;
    if (k > a.n)
        return 0;
    long long count = 0;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int low) -> void {
        if (static_cast<int>(subset.size()) == k) {
            if (rel_isomorphic(pattern, induced_substructure(a, subset)))
                ++count;
            return;
        }
        for (int v = low; v < a.n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

PaddingProfile zero_padding(const MixedType& type) {
    return {std::vector<std::uint8_t>(type.slots.size(), 0)};
}

bool is_P_padding(int v, const RelStructure& a, const PaddingProfile& p) {
    if (v < 0 || v >= a.n)
        throw InvalidVertex("padding check: vertex out of range");
    if (p.bits.size() != a.type.slots.size())
        throw TypeMismatch("padding profile length does not match type");
    for (std::size_t slot = 0; slot < a.type.slots.size(); ++slot) {
        if (p.bits[slot] == 0) {
            for (const auto& e : a.relations[slot])
                if (std::find(e.begin(), e.end(), v) != e.end())
                    return false;
        } else {
            for (const auto& e : entries_through(a.type.slots[slot], a.n, v))
                if (!a.contains(static_cast<int>(slot), e))
                    return false;
        }
    }
    return true;
}

bool is_P_pure(const RelStructure& a, const PaddingProfile& p) {
    for (int v = 0; v < a.n; ++v)
        if (is_P_padding(v, a, p))
            return false;
    return true;
}

bool is_irreducible(const RelStructure& a) {
    for (int u = 0; u < a.n; ++u) {
        for (int v = u + 1; v < a.n; ++v) {
            bool joined = false;
            for (const auto& slot : a.relations) {
                for (const auto& e : slot) {
                    if (std::find(e.begin(), e.end(), u) != e.end() &&
                        std::find(e.begin(), e.end(), v) != e.end()) {
                        joined = true;
                        break;
                    }
                }
                if (joined)
                    break;
            }
            if (!joined)
                return false;
        }
    }
    return true;
}

namespace {

// injective (monotone when ordered) map with every pattern entry landing in
// the target relation; witnesses plain substructure containment
bool embeds_weak(const RelStructure& pattern, const RelStructure& a) {
    int k = pattern.n;
    std::vector<int> image(k, -1);
    std::vector<char> used(a.n, 0);
    auto entry_maps = [&](int upto) {
        for (std::size_t slot = 0; slot < pattern.relations.size(); ++slot) {
            for (const auto& e : pattern.relations[slot]) {
                if (std::any_of(e.begin(), e.end(), [&](int v) { return v > upto; }))
                    continue;
                RelEntry mapped(e.size());
                std::transform(e.begin(), e.end(), mapped.begin(), [&](int v) { return image[v]; });
                mapped = normalize_entry(a.type.slots[slot], std::move(mapped), a.n);
                if (!a.contains(static_cast<int>(slot), mapped))
                    return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, int u) -> bool {
        if (u == k)
            return true;
        int lo = pattern.ordered && u > 0 ? image[u - 1] + 1 : 0;
        for (int w = lo; w < a.n; ++w) {
            if (used[w])
                continue;
            image[u] = w;
            used[w] = 1;
            bool ok = entry_maps(u) && self(self, u + 1);
            used[w] = 0;
            image[u] = -1;
            if (ok)
                return true;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

bool forb_check(const RelStructure& a, const std::vector<RelStructure>& forbidden) {
    for (const auto& f : forbidden) {
        check_same_type(f, a);
        if (embeds_weak(f, a))
            return false;
    }
    return true;
}

bool is_upwards_closed(const std::vector<RelStructure>& forbidden) {
    for (const auto& f : forbidden) {
        for (std::size_t slot = 0; slot < f.type.slots.size(); ++slot) {
            // try every absent entry; adding it must stay inside F
            std::set<RelEntry> candidates;
            for (int v = 0; v < f.n; ++v)
                for (const auto& e : entries_through(f.type.slots[slot], f.n, v))
                    candidates.insert(normalize_entry(f.type.slots[slot], e, f.n));
            for (const auto& e : candidates) {
                if (f.contains(static_cast<int>(slot), e))
                    continue;
                RelStructure extended = f;
                extended.add(static_cast<int>(slot), e);
                bool found = std::any_of(forbidden.begin(), forbidden.end(), [&](const RelStructure& g) {
                    return g.type == extended.type && g.ordered == extended.ordered &&
                           g.n == extended.n && rel_isomorphic(g, extended);
                });
                if (!found)
                    return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<std::vector<int>> compositions_of(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    rec(rec, k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> permutation_ranks(int k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// canonical rank vectors of total preorders on k positions: functions onto
// an initial segment {0..m-1}
std::vector<std::vector<int>> preorder_ranks(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            int mx = *std::max_element(cur.begin(), cur.end());
            std::set<int> seen(cur.begin(), cur.end());
            if (static_cast<int>(seen.size()) == mx + 1)
                out.push_back(cur);
            return;
        }
        for (int r = 0; r < k; ++r) {
            cur[pos] = r;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ConvLayout conv_layout(const MixedType& mixed) {
    ConvLayout layout;
    for (std::size_t slot = 0; slot < mixed.slots.size(); ++slot) {
        const RelSlot& s = mixed.slots[slot];
        switch (s.variant) {
        case RelVariant::set:
            layout.derived.slots.push_back({s.arity, RelVariant::set});
            layout.source_slot.push_back(static_cast<int>(slot));
            layout.tag.push_back({});
            break;
        case RelVariant::multiset:
            for (const auto& comp : compositions_of(s.arity)) {
                layout.derived.slots.push_back({static_cast<int>(comp.size()), RelVariant::set});
                layout.source_slot.push_back(static_cast<int>(slot));
                layout.tag.push_back(comp);
            }
            break;
        case RelVariant::list_norep:
            for (const auto& rank : permutation_ranks(s.arity)) {
                layout.derived.slots.push_back({s.arity, RelVariant::set});
                layout.source_slot.push_back(static_cast<int>(slot));
                layout.tag.push_back(rank);
            }
            break;
        case RelVariant::list_rep:
            for (const auto& rank : preorder_ranks(s.arity)) {
                int blocks = *std::max_element(rank.begin(), rank.end()) + 1;
                layout.derived.slots.push_back({blocks, RelVariant::set});
                layout.source_slot.push_back(static_cast<int>(slot));
                layout.tag.push_back(rank);
            }
            break;
        }
    }
    return layout;
}

RelStructure conv(const RelStructure& a) {
    if (!a.ordered)
        throw NotOrdered("conv requires an ordered structure");
    validate(a);
    ConvLayout layout = conv_layout(a.type);
    std::map<std::pair<int, std::vector<int>>, int> slot_index;
    for (std::size_t d = 0; d < layout.tag.size(); ++d)
        slot_index[{layout.source_slot[d], layout.tag[d]}] = static_cast<int>(d);

    RelStructure out(layout.derived, a.n, true);
    for (std::size_t slot = 0; slot < a.relations.size(); ++slot) {
        const RelSlot& s = a.type.slots[slot];
        for (const auto& e : a.relations[slot]) {
            switch (s.variant) {
            case RelVariant::set:
                out.add(slot_index.at({static_cast<int>(slot), {}}), e);
                break;
            case RelVariant::multiset: {
                // e is sorted; collapse runs into (values, multiplicities)
                std::vector<int> values, mult;
                for (int v : e) {
                    if (!values.empty() && values.back() == v)
                        ++mult.back();
                    else {
                        values.push_back(v);
                        mult.push_back(1);
                    }
                }
                out.add(slot_index.at({static_cast<int>(slot), mult}), values);
                break;
            }
            case RelVariant::list_norep:
            case RelVariant::list_rep: {
                std::vector<int> distinct = e;
                std::sort(distinct.begin(), distinct.end());
                distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                std::vector<int> rank(e.size());
                for (std::size_t i = 0; i < e.size(); ++i)
                    rank[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), e[i]) -
                                               distinct.begin());
                out.add(slot_index.at({static_cast<int>(slot), rank}), distinct);
                break;
            }
            }
        }
    }
    return out;
}

RelStructure conv_inverse(const RelStructure& converted, const MixedType& original) {
    if (!converted.ordered)
        throw NotOrdered("conv_inverse requires an ordered structure");
    ConvLayout layout = conv_layout(original);
    if (!(layout.derived == converted.type))
        throw TypeMismatch("converted structure does not match the layout of the original type");
    RelStructure out(original, converted.n, true);
    for (std::size_t d = 0; d < converted.relations.size(); ++d) {
        int slot = layout.source_slot[d];
        const auto& tag = layout.tag[d];
        const RelSlot& s = original.slots[slot];
        for (const auto& e : converted.relations[d]) {
            switch (s.variant) {
            case RelVariant::set:
                out.add(slot, e);
                break;
            case RelVariant::multiset: {
                RelEntry entry;
                for (std::size_t i = 0; i < e.size(); ++i)
                    entry.insert(entry.end(), tag[i], e[i]);
                out.add(slot, std::move(entry));
                break;
            }
            case RelVariant::list_norep:
            case RelVariant::list_rep: {
                RelEntry entry(tag.size());
                for (std::size_t i = 0; i < tag.size(); ++i)
                    entry[i] = e[tag[i]];
                out.add(slot, std::move(entry));
                break;
            }
            }
        }
    }
    return out;
}

namespace {

std::string rel_serialize(const RelStructure& a) {
    std::string out;
    out.push_back(a.ordered ? 1 : 0);
    out.push_back(static_cast<char>(a.type.slots.size()));
    for (const auto& s : a.type.slots) {
        out.push_back(static_cast<char>(s.arity));
        out.push_back(static_cast<char>(s.variant));
    }
    for (const auto& slot : a.relations) {
        out.push_back(static_cast<char>(slot.size() >> 8));
        out.push_back(static_cast<char>(slot.size() & 0xff));
        for (const auto& e : slot)
            for (int v : e)
                out.push_back(static_cast<char>(v));
    }
    return out;
}

} // namespace

CanonicalKey rel_canonical_key(const RelStructure& a, const Caps& caps) {
    validate(a);
    if (a.n > caps.canonical)
        throw CapExceeded("structure with " + std::to_string(a.n) +
                          " vertices exceeds canonicalization cap " + std::to_string(caps.canonical));
    if (a.ordered)
        return {Kind::relational, a.n, rel_serialize(a)};
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
        std::string code = rel_serialize(apply_perm(a, perm));
        if (first || code < best) {
            best = std::move(code);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {Kind::relational, a.n, best};
}

RelStructure rel_from_key(const CanonicalKey& key) {
    if (key.kind != Kind::relational)
        throw KindMismatch("key does not encode a relational structure");
    const std::string& s = key.payload;
    std::size_t pos = 0;
    auto byte = [&]() -> int {
        if (pos >= s.size())
            throw ValidationError("truncated relational key");
        return static_cast<unsigned char>(s[pos++]);
    };
    bool ordered = byte() != 0;
    int slots = byte();
    MixedType type;
    for (int i = 0; i < slots; ++i) {
        int arity = byte();
        int variant = byte();
        type.slots.push_back({arity, static_cast<RelVariant>(variant)});
    }
    RelStructure out(type, key.n, ordered);
    for (int i = 0; i < slots; ++i) {
        int count = byte() << 8;
        count |= byte();
        for (int e = 0; e < count; ++e) {
            RelEntry entry(type.slots[i].arity);
            for (int& v : entry)
                v = byte();
            out.add(i, std::move(entry));
        }
    }
    return out;
}

MixedType colored_encoding_type(int palette) {
    MixedType type;
    type.slots.push_back({2, RelVariant::set});
    for (int c = 1; c <= palette; ++c)
        type.slots.push_back({1, RelVariant::set});
    return type;
}

RelStructure rel_from_colored(const ColoredGraph& g, bool ordered) {
    validate(g);
    RelStructure out(colored_encoding_type(g.palette), g.n(), ordered);
    for (auto [u, v] : g.graph.edges())
        out.add(0, {u, v});
    for (int v = 0; v < g.n(); ++v)
        if (g.colors[v] >= 1)
            out.add(g.colors[v], {v});
    return out;
}

} // namespace motifalg
