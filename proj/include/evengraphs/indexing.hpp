#ifndef EVENGRAPHS_INDEXING_HPP
#define EVENGRAPHS_INDEXING_HPP

#include <stdexcept>
#include <utility>

namespace evengraphs {

// Lexicographic 0-based indexing of the unordered pairs {u,v}, u < v, and
// of the ordered pairs (u,v), u != v, over the vertex set {0..n-1}.
// index({0,1}) = 0 and indices increase in (u,v) lexicographic order.

inline int edge_count(int n) { return n * (n - 1) / 2; }
inline int arc_count(int n) { return n * (n - 1); }

// u < v, 0-based.
inline int edge_index(int n, int u, int v) {
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

inline std::pair<int, int> edge_of_index(int n, int idx) {
    int u = 0;
    int row = n - 1;
    while (idx >= row) {
        idx -= row;
        --row;
        ++u;
    }
    return {u, u + 1 + idx};
}

// u != v, 0-based.
inline int arc_index(int n, int u, int v) {
    return u * (n - 1) + v - (v > u ? 1 : 0);
}

inline std::pair<int, int> arc_of_index(int n, int idx) {
    const int u = idx / (n - 1);
    int v = idx % (n - 1);
    if (v >= u) ++v;
    return {u, v};
}

inline int arc_reverse_index(int n, int idx) {
    const auto [u, v] = arc_of_index(n, idx);
    return arc_index(n, v, u);
}

} // namespace evengraphs

#endif // EVENGRAPHS_INDEXING_HPP
