#include "motifalg/graph6.hpp"

namespace motifalg {

std::string to_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62)
        throw CapExceeded("graph6 encoder supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int m = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    // bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit groups
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (m % 6 != 0)
        out.push_back(static_cast<char>((acc << (6 - m % 6)) + 63));
    return out;
}

Graph from_graph6(const std::string& text) {
    if (text.empty())
        throw ValidationError("empty graph6 string");
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw CapExceeded("graph6 decoder supports at most 62 vertices");
    if (first < 63 || first > 125)
        throw ValidationError("invalid graph6 size byte");
    int n = first - 63;
    int m = n * (n - 1) / 2;
    std::size_t need = 1 + (m + 5) / 6;
    if (text.size() != need)
        throw ValidationError("graph6 string has wrong length");
    Graph g(n);
    int pos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            unsigned char c = static_cast<unsigned char>(text[1 + pos / 6]);
            if (c < 63 || c > 126)
                throw ValidationError("invalid graph6 data byte");
            if ((c - 63) >> (5 - pos % 6) & 1)
                g.set_edge(i, j);
            ++pos;
        }
    }
    if (m % 6 != 0) {
        unsigned char last = static_cast<unsigned char>(text.back()) - 63;
        if (last & ((1u << (6 - m % 6)) - 1))
            throw ValidationError("graph6 padding bits not zero");
    }
    return g;
}

} // namespace motifalg
