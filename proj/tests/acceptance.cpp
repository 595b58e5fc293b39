// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria.

#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evengraphs/cli.hpp"
#include "evengraphs/count_engine.hpp"
#include "evengraphs/induced_action.hpp"
#include "evengraphs/oracle.hpp"

namespace ev = evengraphs;

namespace {

int line_count(const std::string& s) {
    int lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

// 1. Figure-level reproduction at n = 4.
bool criterion_figures() {
    std::ostringstream out1, out2, out3, out4, err;
    if (ev::cli::run_count("tournaments", 4, ev::kDefaultCountCap, "", out1, err) != 0)
        return false;
    if (ev::cli::run_count("even", 4, ev::kDefaultCountCap, "", out2, err) != 0)
        return false;
    if (out1.str() != "4\n" || out2.str() != "4\n") return false;
    if (ev::cli::run_enumerate("tournaments", 4, ev::kClassEnumerationCap, out3, err) != 0)
        return false;
    if (ev::cli::run_enumerate("even", 4, ev::kClassEnumerationCap, out4, err) != 0)
        return false;
    return line_count(out3.str()) == 4 && line_count(out4.str()) == 4;
}

// 2. Theorem 1 as exact big-integer equalities for 2 <= n <= 50.
bool criterion_theorem_at_scale() {
    for (int n = 2; n <= 50; ++n) {
        const ev::BigCount graphs = ev::count_graphs(n);
        const ev::BigCount tournaments = ev::count_tournaments(n);
        const ev::BigCount odd = ev::count_odd_graphs(n);
        if (graphs - odd != tournaments) return false;
        if (graphs != tournaments + odd) return false;
    }
    return true;
}

// 3. Brute-force oracle equals the count engine for n <= 7.
bool criterion_oracle_equivalence() {
    const std::vector<long> graphs{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<long> tournaments{1, 1, 2, 4, 12, 56, 456};
    for (int n = 1; n <= 7; ++n) {
        const ev::CountReport brute = ev::brute_counts(n);
        if (brute.graphs != graphs[static_cast<std::size_t>(n - 1)]) return false;
        if (brute.tournaments != tournaments[static_cast<std::size_t>(n - 1)]) return false;
        const ev::CountReport engine = ev::verify_identity(n);
        if (brute.graphs != engine.graphs || brute.tournaments != engine.tournaments ||
            brute.odd_graphs != engine.odd_graphs ||
            brute.even_graphs != engine.even_graphs)
            return false;
        if (!engine.identity_holds) return false;
    }
    return true;
}

// 4. Fixed-point formulas by exhaustion for every g in Sym(n), n <= 5.
bool criterion_fixed_points() {
    for (int n = 1; n <= 5; ++n) {
        bool ok = true;
        ev::for_each_permutation(n, [&](const ev::Permutation& p) {
            for (ev::ObjectKind kind : {ev::ObjectKind::Graphs, ev::ObjectKind::Tournaments}) {
                const auto [enumerated, formula] = ev::fixed_count_check(p, kind);
                if (enumerated != formula) ok = false;
            }
        });
        if (!ok) return false;
    }
    return true;
}

// 5. Lemma suite: self-paired iff even order, inversion parity iff
// self-paired image, closed cycle-count forms, all g in Sym(n), n <= 6.
bool criterion_lemmas() {
    return !ev::cli::detail::check_self_paired_iff_even_order(6) &&
           !ev::cli::detail::check_inversion_parity(6) &&
           !ev::cli::detail::check_cycle_count_forms(6) &&
           !ev::cli::detail::check_undirected_image_cover(6);
}

// 6. Corollary suites: odd-order tournament groups; 0-or-half odd
// automorphisms; multiplicative sign map; all on <= 6 vertices.
bool criterion_corollaries() {
    return !ev::cli::detail::check_tournament_aut_odd(6) &&
           !ev::cli::detail::check_sign_structure(6);
}

// 7. Double-count identity for n <= 5.
bool criterion_double_count() {
    return !ev::cli::detail::check_double_count(5);
}

// 8. Orientation-independent reversal parity, 200 seeded triples, n <= 6.
bool criterion_orientation_parity() {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const std::uint64_t pair_mask = (std::uint64_t{1} << ev::edge_count(n)) - 1;
        const ev::LabelledGraph X{n, rng() & pair_mask};
        const auto aut = ev::automorphism_group(X);
        const ev::Permutation& p = aut[static_cast<std::size_t>(rng() % aut.size())];
        if (!ev::orientation_parity_check(X, p, 1, rng())) return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"1. figure counts at n=4 (4 tournaments, 4 even graphs)", criterion_figures},
        {"2. graphs = tournaments + odd and even = tournaments, 2 <= n <= 50",
         criterion_theorem_at_scale},
        {"3. brute-force oracle equals count engine, n <= 7", criterion_oracle_equivalence},
        {"4. fixed-point formulas by exhaustion, n <= 5", criterion_fixed_points},
        {"5. lemma suite (self-paired, inversion parity, closed forms), n <= 6",
         criterion_lemmas},
        {"6. corollary suites (tournament Aut order, sign structure), n <= 6",
         criterion_corollaries},
        {"7. double-count identity, n <= 5", criterion_double_count},
        {"8. orientation-independent parity, 200 seeded triples, n <= 6",
         criterion_orientation_parity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const bool ok = c.run();
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << std::endl;
        if (!ok) ++failures;
    }
    return failures;
}
