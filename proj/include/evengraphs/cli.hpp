#ifndef EVENGRAPHS_CLI_HPP
#define EVENGRAPHS_CLI_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "evengraphs/count_engine.hpp"
#include "evengraphs/edge_list.hpp"
#include "evengraphs/induced_action.hpp"
#include "evengraphs/oracle.hpp"

// Command implementations behind the evengraphs binary. Each returns the
// process exit code: 0 success, 1 verification/identity failure, 2
// input/resource error.

namespace evengraphs::cli {

inline int run_count(const std::string& kind_str, int n, int cap,
                     const std::string& cache_path, std::ostream& out,
                     std::ostream& err) {
    const auto kind = kind_from_name(kind_str);
    if (!kind) {
        err << "unknown kind '" << kind_str
            << "' (expected graphs|tournaments|odd|even)\n";
        return 2;
    }
    if (n < 1 || n > cap) {
        err << "n must be in 1.." << cap << "\n";
        return 2;
    }
    try {
        BigCount value;
        if (cache_path.empty()) {
            CountCache scratch;
            value = count_with_cache(n, *kind, scratch);
        } else {
            CountCache cache;
            cache.load_file(cache_path);
            value = count_with_cache(n, *kind, cache);
            cache.save_file(cache_path);
        }
        out << value.get_str() << "\n";
        return 0;
    } catch (const consistency_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

inline int run_table(int max_n, int cap, const std::string& cache_path,
                     std::ostream& out, std::ostream& err) {
    if (max_n < 1 || max_n > cap) {
        err << "max-n must be in 1.." << cap << "\n";
        return 2;
    }
    CountCache cache;
    if (!cache_path.empty()) {
        try {
            cache.load_file(cache_path);
        } catch (const std::runtime_error& e) {
            err << e.what() << "\n";
            return 2;
        }
    }
    bool all_ok = true;
    for (int n = 1; n <= max_n; ++n) {
        const BigCount graphs = count_with_cache(n, CountKind::Graphs, cache);
        const BigCount tournaments = count_with_cache(n, CountKind::Tournaments, cache);
        const BigCount odd = count_with_cache(n, CountKind::OddGraphs, cache);
        const BigCount even = graphs - odd;
        cache.store(n, CountKind::EvenGraphs, even);
        const bool ok = (graphs == tournaments + odd) && (n < 2 || even == tournaments);
        all_ok = all_ok && ok;
        out << n << '\t' << graphs.get_str() << '\t' << tournaments.get_str() << '\t'
            << odd.get_str() << '\t' << even.get_str() << '\t' << (ok ? "ok" : "FAIL")
            << "\n";
    }
    if (!cache_path.empty()) cache.save_file(cache_path);
    return all_ok ? 0 : 1;
}

inline int run_classify(std::istream& in, int cap, std::ostream& out,
                        std::ostream& err) {
    EdgeListDocument doc;
    try {
        doc = parse_edge_list(in);
    } catch (const edge_list_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    if (doc.n > cap) {
        err << "n = " << doc.n << " exceeds classification cap " << cap << "\n";
        return 2;
    }
    const ParityVerdict verdict = classify_parity(to_labelled_graph(doc));
    if (verdict.odd)
        out << "odd " << verdict.witness->cycle_string() << "\n";
    else
        out << "even\n";
    return 0;
}

inline int run_enumerate(const std::string& kind_str, int n, int cap,
                         std::ostream& out, std::ostream& err) {
    if (n < 1 || n > cap) {
        err << "n must be in 1.." << cap << "\n";
        return 2;
    }
    try {
        std::vector<std::uint64_t> reps;
        if (kind_str == "graphs" || kind_str == "tournaments") {
            reps = isomorphism_class_masks(
                n, kind_str == "graphs" ? ObjectKind::Graphs : ObjectKind::Tournaments);
        } else if (kind_str == "even" || kind_str == "odd") {
            const bool want_odd = (kind_str == "odd");
            for (std::uint64_t rep : isomorphism_class_masks(n, ObjectKind::Graphs))
                if (classify_parity(LabelledGraph{n, rep}).odd == want_odd)
                    reps.push_back(rep);
        } else {
            err << "unknown kind '" << kind_str
                << "' (expected graphs|tournaments|even|odd)\n";
            return 2;
        }
        for (std::uint64_t rep : reps)
            out << n << ':' << mask_to_bitstring(n, rep) << "\n";
        return 0;
    } catch (const resource_limit_error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

namespace detail {

// A self-check suite returns the first counterexample, or nothing.
using Suite = std::function<std::optional<std::string>()>;

inline std::string perm_label(int n, const Permutation& p) {
    return "n=" + std::to_string(n) + " g=" + p.cycle_string();
}

inline std::optional<std::string> check_cycle_count_forms(int max_n) {
    for (int n = 2; n <= std::min(max_n, 7); ++n) {
        std::optional<std::string> bad;
        for_each_permutation(n, [&](const Permutation& p) {
            if (bad) return;
            const CycleType t = CycleType::of(p);
            const auto ec = cycles(induced_edge_action(p), CycleDomain::Edge);
            const auto ac = cycles(induced_arc_action(p), CycleDomain::Arc);
            long long self_paired = 0;
            for (const auto& c : ac)
                if (is_self_paired(n, c)) ++self_paired;
            if (t.edge_cycle_count() != static_cast<long long>(ec.size()) ||
                t.arc_cycle_count() != static_cast<long long>(ac.size()) ||
                t.self_paired_cycle_count() != self_paired ||
                t.arc_cycle_count() != 2 * t.edge_cycle_count() - self_paired)
                bad = perm_label(n, p);
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_self_paired_iff_even_order(int max_n) {
    for (int n = 2; n <= std::min(max_n, 7); ++n) {
        std::optional<std::string> bad;
        for_each_permutation(n, [&](const Permutation& p) {
            if (bad) return;
            bool any = false;
            for (const auto& c : cycles(induced_arc_action(p), CycleDomain::Arc))
                if (is_self_paired(n, c)) any = true;
            if (any != (p.order() % 2 == 0)) bad = perm_label(n, p);
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_inversion_parity(int max_n) {
    for (int n = 2; n <= std::min(max_n, 7); ++n) {
        std::optional<std::string> bad;
        for_each_permutation(n, [&](const Permutation& p) {
            if (bad) return;
            for (const auto& c : cycles(induced_arc_action(p), CycleDomain::Arc)) {
                const bool sp = is_self_paired(n, c);
                const int inv = inversion_count_in_edge_cycle(p, undirected_image(n, c));
                if ((inv % 2 == 1) != sp) {
                    bad = perm_label(n, p);
                    return;
                }
            }
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

// Undirected images of g_A cycles, one per pair {C, C-bar} and one per
// self-paired cycle, are exactly the cycles of g_E.
inline std::optional<std::string> check_undirected_image_cover(int max_n) {
    for (int n = 2; n <= std::min(max_n, 7); ++n) {
        std::optional<std::string> bad;
        for_each_permutation(n, [&](const Permutation& p) {
            if (bad) return;
            std::map<std::vector<int>, int> images;
            for (const auto& c : cycles(induced_arc_action(p), CycleDomain::Arc))
                images[undirected_image(n, c).elements] += is_self_paired(n, c) ? 2 : 1;
            std::map<std::vector<int>, int> expected;
            for (const auto& c : cycles(induced_edge_action(p), CycleDomain::Edge))
                expected[c.elements] += 2;
            if (images != expected) bad = perm_label(n, p);
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_class_sizes(int max_n) {
    for (int n = 1; n <= std::min(max_n, kDefaultCountCap); ++n) {
        BigCount sum = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            sum += CycleType::from_parts(n, parts).class_size();
        });
        if (sum != factorial(n)) return "n=" + std::to_string(n);
    }
    return std::nullopt;
}

inline std::optional<std::string> check_tournament_aut_odd(int max_n) {
    for (int n = 1; n <= std::min(max_n, 6); ++n)
        for (std::uint64_t rep : isomorphism_class_masks(n, ObjectKind::Tournaments))
            if (automorphism_group(LabelledTournament{n, rep}).size() % 2 == 0)
                return "n=" + std::to_string(n) + " T=" + mask_to_bitstring(n, rep);
    return std::nullopt;
}

inline std::optional<std::string> check_sign_structure(int max_n) {
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        for (std::uint64_t rep : isomorphism_class_masks(n, ObjectKind::Graphs)) {
            const LabelledGraph X{n, rep};
            const auto aut = automorphism_group(X);
            std::size_t negatives = 0;
            for (const auto& p : aut)
                if (sign_of_automorphism(X, p) == -1) ++negatives;
            if (negatives != 0 && 2 * negatives != aut.size())
                return "n=" + std::to_string(n) + " X=" + mask_to_bitstring(n, rep);
            const bool odd = classify_parity(X).odd;
            if (odd != (negatives != 0))
                return "n=" + std::to_string(n) + " X=" + mask_to_bitstring(n, rep);
            for (const auto& p : aut)
                for (const auto& q : aut)
                    if (sign_of_automorphism(X, p.compose(q)) !=
                        sign_of_automorphism(X, p) * sign_of_automorphism(X, q))
                        return "n=" + std::to_string(n) + " X=" + mask_to_bitstring(n, rep) +
                               " p=" + p.cycle_string() + " q=" + q.cycle_string();
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> check_fixed_counts(int max_n) {
    for (int n = 1; n <= std::min(max_n, kFixedPointCap); ++n) {
        std::optional<std::string> bad;
        for_each_permutation(n, [&](const Permutation& p) {
            if (bad) return;
            for (ObjectKind kind : {ObjectKind::Graphs, ObjectKind::Tournaments}) {
                const auto [enumerated, formula] = fixed_count_check(p, kind);
                if (enumerated != formula) {
                    bad = perm_label(n, p);
                    return;
                }
            }
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

// Sum over even-order g of 2^(c(g_E)-1) equals (odd classes) * n!/2.
inline std::optional<std::string> check_double_count(int max_n) {
    for (int n = 2; n <= std::min(max_n, kFixedPointCap); ++n) {
        BigCount pair_sum = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const CycleType t = CycleType::from_parts(n, parts);
            if (!t.has_even_part()) return;
            BigCount term = t.class_size();
            term <<= static_cast<unsigned long>(t.edge_cycle_count() - 1);
            pair_sum += term;
        });
        const CountReport brute = brute_counts(n);
        if (2 * pair_sum != brute.odd_graphs * factorial(n))
            return "n=" + std::to_string(n);
    }
    return std::nullopt;
}

inline std::optional<std::string> check_orientation_parity(int max_n, std::uint64_t seed) {
    if (max_n < 2) return std::nullopt;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                               std::max(1, std::min(max_n, 6) - 1)));
        const std::uint64_t pair_mask = (std::uint64_t{1} << edge_count(n)) - 1;
        const LabelledGraph X{n, rng() & pair_mask};
        const auto aut = automorphism_group(X);
        const Permutation& p = aut[static_cast<std::size_t>(rng() % aut.size())];
        if (!orientation_parity_check(X, p, 20, rng()))
            return "n=" + std::to_string(n) + " X=" + mask_to_bitstring(n, X.edges) +
                   " g=" + p.cycle_string();
    }
    return std::nullopt;
}

inline std::optional<std::string> check_engine_vs_brute(int max_n) {
    for (int n = 1; n <= std::min(max_n, kClassEnumerationCap); ++n) {
        const CountReport brute = brute_counts(n);
        const CountReport engine = verify_identity(n);
        if (brute.graphs != engine.graphs || brute.tournaments != engine.tournaments ||
            brute.odd_graphs != engine.odd_graphs ||
            brute.even_graphs != engine.even_graphs || !engine.identity_holds)
            return "n=" + std::to_string(n);
    }
    return std::nullopt;
}

} // namespace detail

inline int run_selfcheck(int max_n, std::uint64_t seed, std::ostream& out,
                         std::ostream& err) {
    if (max_n < 1 || max_n > kClassEnumerationCap) {
        err << "max-n must be in 1.." << kClassEnumerationCap << "\n";
        return 2;
    }
    const std::vector<std::pair<std::string, detail::Suite>> suites = {
        {"cycle-count closed forms", [&] { return detail::check_cycle_count_forms(max_n); }},
        {"self-paired cycle iff even order",
         [&] { return detail::check_self_paired_iff_even_order(max_n); }},
        {"inversion parity iff self-paired image",
         [&] { return detail::check_inversion_parity(max_n); }},
        {"undirected images cover edge cycles",
         [&] { return detail::check_undirected_image_cover(max_n); }},
        {"class sizes sum to n!", [&] { return detail::check_class_sizes(max_n); }},
        {"tournament automorphism groups have odd order",
         [&] { return detail::check_tournament_aut_odd(max_n); }},
        {"sign homomorphism and half-odd dichotomy",
         [&] { return detail::check_sign_structure(max_n); }},
        {"fixed-point formulas", [&] { return detail::check_fixed_counts(max_n); }},
        {"double-count identity", [&] { return detail::check_double_count(max_n); }},
        {"orientation-independent parity",
         [&] { return detail::check_orientation_parity(max_n, seed); }},
        {"count engine matches brute force",
         [&] { return detail::check_engine_vs_brute(max_n); }},
    };
    bool all_ok = true;
    for (const auto& [name, suite] : suites) {
        const auto counterexample = suite();
        if (counterexample) {
            all_ok = false;
            out << name << ": FAIL (" << *counterexample << ")\n";
        } else {
            out << name << ": pass\n";
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace evengraphs::cli

#endif // EVENGRAPHS_CLI_HPP
