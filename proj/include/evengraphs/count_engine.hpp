#ifndef EVENGRAPHS_COUNT_ENGINE_HPP
#define EVENGRAPHS_COUNT_ENGINE_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "evengraphs/bigcount.hpp"
#include "evengraphs/cycle_type.hpp"
#include "evengraphs/partitions.hpp"

namespace evengraphs {

// Default ceiling on n for the counting expressions; p(60) is just under a
// million partitions. Callers may raise it explicitly.
inline constexpr int kDefaultCountCap = 60;

enum class CountKind { Graphs, Tournaments, OddGraphs, EvenGraphs };

inline const char* kind_name(CountKind k) {
    switch (k) {
        case CountKind::Graphs: return "graphs";
        case CountKind::Tournaments: return "tournaments";
        case CountKind::OddGraphs: return "odd";
        case CountKind::EvenGraphs: return "even";
    }
    return "?";
}

inline std::optional<CountKind> kind_from_name(const std::string& s) {
    if (s == "graphs") return CountKind::Graphs;
    if (s == "tournaments") return CountKind::Tournaments;
    if (s == "odd") return CountKind::OddGraphs;
    if (s == "even") return CountKind::EvenGraphs;
    return std::nullopt;
}

namespace detail {

// Sum of class_size * 2^c(g_E) over conjugacy classes of Sym(n), restricted
// by order parity, divided exactly by n!.
inline BigCount class_sum(int n, bool include_odd_order, bool include_even_order) {
    BigCount total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const CycleType t = CycleType::from_parts(n, parts);
        const bool even_order = t.has_even_part();
        if (even_order ? !include_even_order : !include_odd_order) return;
        BigCount term = t.class_size();
        term <<= static_cast<unsigned long>(t.edge_cycle_count());
        total += term;
    });
    return exact_quotient(total, factorial(n), "orbit-count sum not divisible by n!");
}

} // namespace detail

// (1/n!) sum over all of Sym(n) of 2^c(g_E).
inline BigCount count_graphs(int n) { return detail::class_sum(n, true, true); }

// Same sum restricted to odd-order permutations.
inline BigCount count_tournaments(int n) { return detail::class_sum(n, true, false); }

// Same sum restricted to even-order permutations.
inline BigCount count_odd_graphs(int n) { return detail::class_sum(n, false, true); }

inline BigCount count_even_graphs(int n) {
    const BigCount even = count_graphs(n) - count_odd_graphs(n);
    if (n >= 2 && even != count_tournaments(n))
        throw consistency_error("even-graph count differs from tournament count");
    return even;
}

struct CountReport {
    int n = 0;
    BigCount graphs;
    BigCount tournaments;
    BigCount odd_graphs;
    BigCount even_graphs;
    bool identity_holds = false;
};

inline CountReport verify_identity(int n) {
    CountReport r;
    r.n = n;
    r.graphs = count_graphs(n);
    r.tournaments = count_tournaments(n);
    r.odd_graphs = count_odd_graphs(n);
    r.even_graphs = r.graphs - r.odd_graphs;
    r.identity_holds = (r.graphs == r.tournaments + r.odd_graphs) &&
                       (r.even_graphs == r.graphs - r.odd_graphs);
    return r;
}

// Line-oriented count cache: "n<TAB>kind<TAB>decimal-value", sorted by
// (n, kind). Unknown kinds are rejected on load.
class CountCache {
public:
    void load(std::istream& in) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            std::istringstream fields(line);
            std::string n_str, kind_str, value_str;
            if (!std::getline(fields, n_str, '\t') ||
                !std::getline(fields, kind_str, '\t') ||
                !std::getline(fields, value_str))
                throw std::runtime_error("cache line " + std::to_string(lineno) +
                                         ": expected n<TAB>kind<TAB>value");
            if (!kind_from_name(kind_str))
                throw std::runtime_error("cache line " + std::to_string(lineno) +
                                         ": unknown kind '" + kind_str + "'");
            int n = 0;
            try {
                n = std::stoi(n_str);
            } catch (const std::exception&) {
                throw std::runtime_error("cache line " + std::to_string(lineno) +
                                         ": bad n '" + n_str + "'");
            }
            entries_[{n, kind_str}] = BigCount(value_str);
        }
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) return; // absent cache file is an empty cache
        load(in);
    }

    std::optional<BigCount> lookup(int n, CountKind kind) const {
        auto it = entries_.find({n, kind_name(kind)});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void store(int n, CountKind kind, const BigCount& value) {
        entries_[{n, kind_name(kind)}] = value;
    }

    void save(std::ostream& out) const {
        for (const auto& [key, value] : entries_)
            out << key.first << '\t' << key.second << '\t' << value.get_str() << '\n';
    }

    void save_file(const std::string& path) const {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write cache file " + path);
        save(out);
    }

    std::size_t size() const { return entries_.size(); }

private:
    // map keyed by (n, kind name) keeps the on-disk order sorted.
    std::map<std::pair<int, std::string>, BigCount> entries_;
};

// Cache-aware count: consult the cache first, compute and record on miss.
inline BigCount count_with_cache(int n, CountKind kind, CountCache& cache) {
    if (auto hit = cache.lookup(n, kind)) return *hit;
    BigCount value;
    switch (kind) {
        case CountKind::Graphs: value = count_graphs(n); break;
        case CountKind::Tournaments: value = count_tournaments(n); break;
        case CountKind::OddGraphs: value = count_odd_graphs(n); break;
        case CountKind::EvenGraphs: value = count_even_graphs(n); break;
    }
    cache.store(n, kind, value);
    return value;
}

} // namespace evengraphs

#endif // EVENGRAPHS_COUNT_ENGINE_HPP
