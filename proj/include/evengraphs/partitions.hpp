#ifndef EVENGRAPHS_PARTITIONS_HPP
#define EVENGRAPHS_PARTITIONS_HPP

#include <stdexcept>
#include <vector>

namespace evengraphs {

namespace detail {

template <typename F>
void partitions_rec(int remaining, int max_part, std::vector<int>& parts, F& f) {
    if (remaining == 0) {
        f(const_cast<const std::vector<int>&>(parts));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(remaining - p, p, parts, f);
        parts.pop_back();
    }
}

} // namespace detail

// Visits every partition of n exactly once, parts in decreasing order,
// in reverse-lexicographic order: (n), ..., (1,1,...,1).
template <typename F>
void for_each_partition(int n, F&& f) {
    if (n < 1)
        throw std::invalid_argument("partitions require n >= 1");
    std::vector<int> parts;
    detail::partitions_rec(n, n, parts, f);
}

} // namespace evengraphs

#endif // EVENGRAPHS_PARTITIONS_HPP
