#ifndef EVENGRAPHS_LABELLED_HPP
#define EVENGRAPHS_LABELLED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "evengraphs/indexing.hpp"
#include "evengraphs/permutation.hpp"

namespace evengraphs {

// A labelled graph on {1..n}: one bit per unordered pair in edge-index
// order. Degrees up to 11 fit in 64 bits; enumeration caps are far lower.
struct LabelledGraph {
    int n = 1;
    std::uint64_t edges = 0;

    bool operator==(const LabelledGraph& o) const { return n == o.n && edges == o.edges; }
};

// A labelled tournament: bit for pair {u,v}, u < v, is 1 iff the arc goes
// from u to v, 0 iff from v to u.
struct LabelledTournament {
    int n = 1;
    std::uint64_t orient = 0;

    bool operator==(const LabelledTournament& o) const {
        return n == o.n && orient == o.orient;
    }
};

inline std::string mask_to_bitstring(int n, std::uint64_t mask) {
    const int m = edge_count(n);
    std::string s(static_cast<std::size_t>(m), '0');
    for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline std::uint64_t bitstring_to_mask(const std::string& s) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            mask |= std::uint64_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
    return mask;
}

// The action of one permutation on pair bitstrings: where each pair index
// goes, and which pairs have their low/high order inverted (the flip bits
// re-orient tournament arcs).
struct PairAction {
    std::vector<int> edge_map;
    std::uint64_t flip = 0;

    static PairAction of(const Permutation& p) {
        const int n = p.degree();
        PairAction a;
        a.edge_map.resize(static_cast<std::size_t>(edge_count(n)));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const int i = edge_index(n, u, v);
                const int pu = p.apply(u), pv = p.apply(v);
                a.edge_map[static_cast<std::size_t>(i)] =
                    edge_index(n, std::min(pu, pv), std::max(pu, pv));
                if (pu > pv) a.flip |= std::uint64_t{1} << i;
            }
        return a;
    }

    std::uint64_t apply_edges(std::uint64_t mask) const {
        std::uint64_t out = 0;
        for (std::uint64_t rest = mask; rest;) {
            const int i = __builtin_ctzll(rest);
            rest &= rest - 1;
            out |= std::uint64_t{1} << edge_map[static_cast<std::size_t>(i)];
        }
        return out;
    }

    std::uint64_t apply_orientations(std::uint64_t orient) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < edge_map.size(); ++i) {
            const std::uint64_t bit = ((orient >> i) ^ (flip >> i)) & 1;
            out |= bit << edge_map[i];
        }
        return out;
    }
};

// The relabelled graph { {u^p, v^p} : {u,v} in E(X) }.
inline LabelledGraph apply(const Permutation& p, const LabelledGraph& X) {
    if (p.degree() != X.n)
        throw std::invalid_argument("permutation degree does not match graph order");
    return LabelledGraph{X.n, PairAction::of(p).apply_edges(X.edges)};
}

inline LabelledTournament apply(const Permutation& p, const LabelledTournament& T) {
    if (p.degree() != T.n)
        throw std::invalid_argument("permutation degree does not match tournament order");
    return LabelledTournament{T.n, PairAction::of(p).apply_orientations(T.orient)};
}

// Bits for the pairs {u,v}, u < v, with u^p > v^p.
inline std::uint64_t inversion_mask(const Permutation& p) {
    const int n = p.degree();
    std::uint64_t mask = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p.apply(u) > p.apply(v))
                mask |= std::uint64_t{1} << edge_index(n, u, v);
    return mask;
}

} // namespace evengraphs

#endif // EVENGRAPHS_LABELLED_HPP
