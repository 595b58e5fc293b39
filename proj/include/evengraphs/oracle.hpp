#ifndef EVENGRAPHS_ORACLE_HPP
#define EVENGRAPHS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "evengraphs/bigcount.hpp"
#include "evengraphs/count_engine.hpp"
#include "evengraphs/cycle_type.hpp"
#include "evengraphs/labelled.hpp"

namespace evengraphs {

// Brute-force caps: the full self-check suite stays in the minutes range.
inline constexpr int kGraphCanonicalCap = 8;
inline constexpr int kTournamentCanonicalCap = 7;
inline constexpr int kClassEnumerationCap = 7;
inline constexpr int kAutomorphismCap = 7;
inline constexpr int kFixedPointCap = 5;

struct ParityVerdict {
    bool odd = false;
    std::optional<Permutation> witness; // present iff odd; has sign -1
};

namespace detail {

// All of Sym(n) with precomputed pair actions and inversion masks.
struct PermTables {
    std::vector<Permutation> perms;
    std::vector<PairAction> actions;
    std::vector<std::uint64_t> inversions;
};

inline PermTables build_perm_tables(int n) {
    PermTables t;
    for_each_permutation(n, [&](const Permutation& p) {
        t.actions.push_back(PairAction::of(p));
        t.inversions.push_back(inversion_mask(p));
        t.perms.push_back(p);
    });
    return t;
}

inline const PermTables& perm_tables(int n) {
    static std::vector<std::optional<PermTables>> cache(kGraphCanonicalCap + 1);
    if (n < 1 || n > kGraphCanonicalCap)
        throw resource_limit_error("degree " + std::to_string(n) +
                                   " exceeds the brute-force permutation cap");
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) slot = build_perm_tables(n);
    return *slot;
}

inline void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw resource_limit_error(std::string(what) + ": n = " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(cap));
    if (n < 1)
        throw std::invalid_argument("n must be positive");
}

// Union-find with path halving.
class OrbitPartition {
public:
    explicit OrbitPartition(std::size_t size) : parent_(size) {
        for (std::size_t i = 0; i < size; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::uint64_t> roots() {
        std::vector<std::uint64_t> out;
        for (std::uint32_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i) out.push_back(i);
        return out;
    }

private:
    std::vector<std::uint32_t> parent_;
};

// Generators (1,2) and (1,2,...,n); they generate all of Sym(n).
inline std::vector<Permutation> symmetric_generators(int n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(Permutation::cycle(n, {1, 2}));
        std::vector<int> full(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i + 1;
        gens.push_back(Permutation::cycle(n, full));
    }
    return gens;
}

} // namespace detail

// Lexicographically minimal bitstring over all relabellings.
inline std::uint64_t canonical_mask(const LabelledGraph& X) {
    detail::check_cap(X.n, kGraphCanonicalCap, "graph canonical form");
    const auto& t = detail::perm_tables(X.n);
    std::uint64_t best = X.edges;
    for (const auto& a : t.actions)
        best = std::min(best, a.apply_edges(X.edges));
    return best;
}

inline std::uint64_t canonical_mask(const LabelledTournament& T) {
    detail::check_cap(T.n, kTournamentCanonicalCap, "tournament canonical form");
    const auto& t = detail::perm_tables(T.n);
    std::uint64_t best = T.orient;
    for (const auto& a : t.actions)
        best = std::min(best, a.apply_orientations(T.orient));
    return best;
}

inline std::string canonical_form(const LabelledGraph& X) {
    return mask_to_bitstring(X.n, canonical_mask(X));
}

inline std::string canonical_form(const LabelledTournament& T) {
    return mask_to_bitstring(T.n, canonical_mask(T));
}

enum class ObjectKind { Graphs, Tournaments };

// One canonical representative mask per isomorphism class, sorted.
// Orbits are computed by union-find under two Sym(n) generators rather
// than per-object canonicalization; only the class representatives are
// canonicalized afterwards.
inline std::vector<std::uint64_t> isomorphism_class_masks(int n, ObjectKind kind) {
    detail::check_cap(n, kClassEnumerationCap, "class enumeration");
    const std::size_t total = std::uint64_t{1} << edge_count(n);
    detail::OrbitPartition uf(total);
    for (const auto& g : detail::symmetric_generators(n)) {
        const PairAction a = PairAction::of(g);
        for (std::uint64_t m = 0; m < total; ++m) {
            const std::uint64_t img = (kind == ObjectKind::Graphs)
                                          ? a.apply_edges(m)
                                          : a.apply_orientations(m);
            uf.unite(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(img));
        }
    }
    std::vector<std::uint64_t> reps;
    for (std::uint64_t root : uf.roots()) {
        reps.push_back(kind == ObjectKind::Graphs
                           ? canonical_mask(LabelledGraph{n, root})
                           : canonical_mask(LabelledTournament{n, root}));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

inline std::vector<Permutation> automorphism_group(const LabelledGraph& X) {
    detail::check_cap(X.n, kAutomorphismCap, "automorphism group");
    const auto& t = detail::perm_tables(X.n);
    std::vector<Permutation> aut;
    for (std::size_t i = 0; i < t.perms.size(); ++i)
        if (t.actions[i].apply_edges(X.edges) == X.edges) aut.push_back(t.perms[i]);
    return aut;
}

inline std::vector<Permutation> automorphism_group(const LabelledTournament& T) {
    detail::check_cap(T.n, kAutomorphismCap, "automorphism group");
    const auto& t = detail::perm_tables(T.n);
    std::vector<Permutation> aut;
    for (std::size_t i = 0; i < t.perms.size(); ++i)
        if (t.actions[i].apply_orientations(T.orient) == T.orient) aut.push_back(t.perms[i]);
    return aut;
}

// sgn_X(p) = (-1)^(number of edges of X that are inversions of p), under
// the fixed low-to-high orientation.
inline int sign_of_automorphism(const LabelledGraph& X, const Permutation& p) {
    if (apply(p, X) != X)
        throw std::invalid_argument("permutation is not an automorphism of the graph");
    const int k = __builtin_popcountll(X.edges & inversion_mask(p));
    return (k % 2 == 0) ? 1 : -1;
}

inline ParityVerdict classify_parity(const LabelledGraph& X) {
    detail::check_cap(X.n, kAutomorphismCap, "parity classification");
    const auto& t = detail::perm_tables(X.n);
    for (std::size_t i = 0; i < t.perms.size(); ++i) {
        if (t.actions[i].apply_edges(X.edges) != X.edges) continue;
        if (__builtin_popcountll(X.edges & t.inversions[i]) % 2 == 1)
            return ParityVerdict{true, t.perms[i]};
    }
    return ParityVerdict{false, std::nullopt};
}

// Exhaustively counts labelled objects fixed by p and compares against the
// closed formula: 2^c(g_E) for graphs; for tournaments 0 when |p| is even,
// else 2^(c(g_A)/2).
inline std::pair<BigCount, BigCount> fixed_count_check(const Permutation& p, ObjectKind kind) {
    const int n = p.degree();
    detail::check_cap(n, kFixedPointCap, "fixed-point exhaustion");
    const PairAction a = PairAction::of(p);
    const std::uint64_t total = std::uint64_t{1} << edge_count(n);
    BigCount enumerated = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
        const std::uint64_t img = (kind == ObjectKind::Graphs) ? a.apply_edges(m)
                                                               : a.apply_orientations(m);
        if (img == m) ++enumerated;
    }
    const CycleType t = CycleType::of(p);
    BigCount formula = 0;
    if (kind == ObjectKind::Graphs) {
        formula = 1;
        formula <<= static_cast<unsigned long>(t.edge_cycle_count());
    } else if (!t.has_even_part()) {
        formula = 1;
        formula <<= static_cast<unsigned long>(t.arc_cycle_count() / 2);
    }
    return {enumerated, formula};
}

namespace detail {

// Number of edges of X whose sense p reverses, under an explicit
// orientation (bit i = 1 means pair i is oriented high-to-low).
inline int reversed_edge_count(const LabelledGraph& X, const Permutation& p,
                               std::uint64_t orientation) {
    const int n = X.n;
    int reversed = 0;
    for (std::uint64_t rest = X.edges; rest;) {
        const int i = __builtin_ctzll(rest);
        rest &= rest - 1;
        const auto [u, v] = edge_of_index(n, i);
        int tail = u, head = v;
        if ((orientation >> i) & 1) std::swap(tail, head);
        const int itail = p.apply(tail), ihead = p.apply(head);
        const int j = edge_index(n, std::min(itail, ihead), std::max(itail, ihead));
        int jtail = std::min(itail, ihead), jhead = std::max(itail, ihead);
        if ((orientation >> j) & 1) std::swap(jtail, jhead);
        if (itail == jhead && ihead == jtail) ++reversed;
    }
    return reversed;
}

} // namespace detail

// Checks that the parity of sense-reversed edges matches between the
// canonical low-to-high orientation and `trials` random orientations.
inline bool orientation_parity_check(const LabelledGraph& X, const Permutation& p,
                                     int trials, std::uint64_t seed = 0x5eed) {
    if (apply(p, X) != X)
        throw std::invalid_argument("permutation is not an automorphism of the graph");
    const int reference = detail::reversed_edge_count(X, p, 0) % 2;
    std::mt19937_64 rng(seed);
    const std::uint64_t pair_mask =
        (edge_count(X.n) == 64) ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << edge_count(X.n)) - 1;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t orientation = rng() & pair_mask;
        if (detail::reversed_edge_count(X, p, orientation) % 2 != reference)
            return false;
    }
    return true;
}

// Independent ground truth for the counting expressions: isomorphism
// classes by orbit partition, parity by exhaustive automorphism scan.
inline CountReport brute_counts(int n) {
    detail::check_cap(n, kClassEnumerationCap, "brute-force counts");
    CountReport r;
    r.n = n;
    const auto graph_reps = isomorphism_class_masks(n, ObjectKind::Graphs);
    const auto tourn_reps = isomorphism_class_masks(n, ObjectKind::Tournaments);
    r.graphs = static_cast<unsigned long>(graph_reps.size());
    r.tournaments = static_cast<unsigned long>(tourn_reps.size());
    unsigned long odd = 0;
    for (std::uint64_t rep : graph_reps)
        if (classify_parity(LabelledGraph{n, rep}).odd) ++odd;
    r.odd_graphs = odd;
    r.even_graphs = r.graphs - r.odd_graphs;
    r.identity_holds = (r.graphs == r.tournaments + r.odd_graphs);
    return r;
}

} // namespace evengraphs

#endif // EVENGRAPHS_ORACLE_HPP
