#ifndef EVENGRAPHS_CYCLE_TYPE_HPP
#define EVENGRAPHS_CYCLE_TYPE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "evengraphs/bigcount.hpp"
#include "evengraphs/permutation.hpp"

namespace evengraphs {

// Integer partition of n recording a conjugacy class of Sym(n):
// (length, multiplicity) pairs with lengths strictly decreasing.
class CycleType {
public:
    static CycleType of(const Permutation& p) {
        std::vector<int> lens;
        for (const auto& cyc : p.vertex_cycles())
            lens.push_back(static_cast<int>(cyc.size()));
        return from_parts(p.degree(), std::move(lens));
    }

    // parts: cycle lengths in any order, each >= 1, summing to n.
    static CycleType from_parts(int n, std::vector<int> parts) {
        if (n < 1)
            throw std::invalid_argument("cycle type degree must be positive");
        long long sum = 0;
        std::map<int, int, std::greater<int>> mult;
        for (int len : parts) {
            if (len < 1)
                throw std::invalid_argument("cycle length must be positive");
            sum += len;
            ++mult[len];
        }
        if (sum != n)
            throw std::invalid_argument("cycle lengths must sum to the degree");
        CycleType t;
        t.n_ = n;
        t.parts_.assign(mult.begin(), mult.end());
        return t;
    }

    int degree() const { return n_; }

    // (length, multiplicity), lengths strictly decreasing.
    const std::vector<std::pair<int, int>>& parts() const { return parts_; }

    // |g| is even iff some cycle length is even.
    bool has_even_part() const {
        for (const auto& [len, mult] : parts_)
            if (len % 2 == 0) return true;
        return false;
    }

    // c(g_E): within each k-cycle floor(k/2) edge cycles, gcd(k,l) between
    // each pair of vertex cycles (same-length pairs included).
    long long edge_cycle_count() const {
        long long c = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            const auto [k, m] = parts_[i];
            c += static_cast<long long>(m) * (k / 2);
            c += static_cast<long long>(m) * (m - 1) / 2 * k; // gcd(k,k) = k
            for (std::size_t j = i + 1; j < parts_.size(); ++j) {
                const auto [l, ml] = parts_[j];
                c += static_cast<long long>(m) * ml * std::gcd(k, l);
            }
        }
        return c;
    }

    // c(g_A): k-1 arc cycles within each k-cycle, 2*gcd(k,l) between pairs.
    long long arc_cycle_count() const {
        long long c = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            const auto [k, m] = parts_[i];
            c += static_cast<long long>(m) * (k - 1);
            c += static_cast<long long>(m) * (m - 1) * k; // 2 * C(m,2) * gcd(k,k)
            for (std::size_t j = i + 1; j < parts_.size(); ++j) {
                const auto [l, ml] = parts_[j];
                c += 2LL * m * ml * std::gcd(k, l);
            }
        }
        return c;
    }

    // One self-paired arc cycle per even vertex cycle; none between
    // distinct vertex cycles.
    int self_paired_cycle_count() const {
        int c = 0;
        for (const auto& [len, mult] : parts_)
            if (len % 2 == 0) c += mult;
        return c;
    }

    // Conjugacy class size n! / prod(k^m_k * m_k!).
    BigCount class_size() const {
        BigCount denom = 1;
        for (const auto& [k, m] : parts_) {
            BigCount pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k),
                          static_cast<unsigned long>(m));
            denom *= pw * factorial(m);
        }
        return exact_quotient(factorial(n_), denom, "class size division not exact");
    }

    bool operator==(const CycleType& o) const { return n_ == o.n_ && parts_ == o.parts_; }

private:
    CycleType() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> parts_;
};

} // namespace evengraphs

#endif // EVENGRAPHS_CYCLE_TYPE_HPP
