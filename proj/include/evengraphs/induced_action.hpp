#ifndef EVENGRAPHS_INDUCED_ACTION_HPP
#define EVENGRAPHS_INDUCED_ACTION_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "evengraphs/indexing.hpp"
#include "evengraphs/permutation.hpp"

namespace evengraphs {

// A permutation of edge or arc indices, stored as an image table.
using IndexPermutation = std::vector<int>;

enum class CycleDomain { Edge, Arc };

// A cycle of an induced action, identified with its support, elements in
// traversal order starting from the minimum index.
struct Cycle {
    CycleDomain domain;
    std::vector<int> elements;

    bool operator==(const Cycle& o) const {
        return domain == o.domain && elements == o.elements;
    }
};

// g_E: the action of p on unordered pairs.
inline IndexPermutation induced_edge_action(const Permutation& p) {
    const int n = p.degree();
    if (n < 2)
        throw std::invalid_argument("edge action needs degree >= 2");
    IndexPermutation q(static_cast<std::size_t>(edge_count(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int a = p.apply(u), b = p.apply(v);
            q[static_cast<std::size_t>(edge_index(n, u, v))] =
                edge_index(n, std::min(a, b), std::max(a, b));
        }
    return q;
}

// g_A: the action of p on ordered pairs.
inline IndexPermutation induced_arc_action(const Permutation& p) {
    const int n = p.degree();
    if (n < 2)
        throw std::invalid_argument("arc action needs degree >= 2");
    IndexPermutation q(static_cast<std::size_t>(arc_count(n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            q[static_cast<std::size_t>(arc_index(n, u, v))] =
                arc_index(n, p.apply(u), p.apply(v));
        }
    return q;
}

// Cycle decomposition of an index permutation; fixed points become
// singleton cycles. Each cycle starts at its minimum index and the list
// is sorted by starting index.
inline std::vector<Cycle> cycles(const IndexPermutation& q, CycleDomain domain) {
    std::vector<Cycle> out;
    std::vector<char> done(q.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (done[i]) continue;
        Cycle c{domain, {}};
        for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(q[j])) {
            done[j] = 1;
            c.elements.push_back(static_cast<int>(j));
        }
        out.push_back(std::move(c));
    }
    return out;
}

// C is self-paired iff reversing every arc yields C again.
inline bool is_self_paired(int n, const Cycle& c) {
    if (c.domain != CycleDomain::Arc)
        throw std::invalid_argument("self-paired test applies to arc cycles");
    std::vector<int> rev;
    rev.reserve(c.elements.size());
    for (int a : c.elements) rev.push_back(arc_reverse_index(n, a));
    std::vector<int> orig = c.elements;
    std::sort(orig.begin(), orig.end());
    std::sort(rev.begin(), rev.end());
    return orig == rev;
}

// Rotate so the minimum element comes first.
inline void normalize_rotation(std::vector<int>& elems) {
    auto it = std::min_element(elems.begin(), elems.end());
    std::rotate(elems.begin(), it, elems.end());
}

// The edge cycle obtained by forgetting orientation; a self-paired arc
// cycle of length 2k maps to an edge cycle of length k.
inline Cycle undirected_image(int n, const Cycle& c) {
    if (c.domain != CycleDomain::Arc)
        throw std::invalid_argument("undirected image applies to arc cycles");
    std::vector<int> edges;
    edges.reserve(c.elements.size());
    for (int a : c.elements) {
        const auto [u, v] = arc_of_index(n, a);
        edges.push_back(edge_index(n, std::min(u, v), std::max(u, v)));
    }
    const std::size_t half = edges.size() / 2;
    if (edges.size() % 2 == 0 && edges[half] == edges[0])
        edges.resize(half); // wrapped around twice
    normalize_rotation(edges);
    return Cycle{CycleDomain::Edge, std::move(edges)};
}

// Number of edges {u,v} in c with u < v and u^p > v^p.
inline int inversion_count_in_edge_cycle(const Permutation& p, const Cycle& c) {
    if (c.domain != CycleDomain::Edge)
        throw std::invalid_argument("inversion count applies to edge cycles");
    const int n = p.degree();
    int count = 0;
    for (int e : c.elements) {
        const auto [u, v] = edge_of_index(n, e);
        if (p.apply(u) > p.apply(v)) ++count;
    }
    return count;
}

} // namespace evengraphs

#endif // EVENGRAPHS_INDUCED_ACTION_HPP
