#pragma once

namespace motifalg {

// Size guards. Everything in this library is exact and exhaustive, so the
// guards are what keeps a call from silently taking forever.
struct Caps {
    int canonical = 10;       // max vertices for canonical forms / pattern graphs
    int enum_unordered = 8;   // max vertices for unordered/colored enumeration
    int enum_ordered = 6;     // max vertices for ordered enumeration
    int poset = 8;            // max vertices for induced-subgraph posets

    static Caps uniform(int n) { return Caps{n, n, n, n}; }
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

} // namespace motifalg
