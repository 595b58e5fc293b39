#ifndef EVENGRAPHS_PERMUTATION_HPP
#define EVENGRAPHS_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace evengraphs {

// A permutation of {1..n}. Stored 0-based internally; construction and
// printing use the 1-based convention.
class Permutation {
public:
    static Permutation identity(int n) {
        if (n < 1)
            throw std::invalid_argument("permutation degree must be positive");
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    // images[i] = image of vertex i+1, values in {1..n}.
    static Permutation from_one_based(const std::vector<int>& images) {
        const int n = static_cast<int>(images.size());
        if (n < 1)
            throw std::invalid_argument("permutation degree must be positive");
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const int v = images[static_cast<std::size_t>(i)];
            if (v < 1 || v > n)
                throw std::invalid_argument("image value " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(v - 1)]++)
                throw std::invalid_argument("duplicated image value " + std::to_string(v));
            img[static_cast<std::size_t>(i)] = v - 1;
        }
        for (int v = 1; v <= n; ++v)
            if (!seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("missing image value " + std::to_string(v));
        return Permutation(std::move(img));
    }

    // Single cycle (1,2,...,k) padded with fixed points up to degree n.
    static Permutation cycle(int n, const std::vector<int>& verts) {
        Permutation p = identity(n);
        const int k = static_cast<int>(verts.size());
        for (int i = 0; i < k; ++i)
            p.img_[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)] - 1)] =
                verts[static_cast<std::size_t>((i + 1) % k)] - 1;
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }

    // 0-based application.
    int apply(int v) const { return img_[static_cast<std::size_t>(v)]; }

    // this first, then other.
    Permutation compose(const Permutation& other) const {
        if (degree() != other.degree())
            throw std::invalid_argument("degree mismatch in composition");
        std::vector<int> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            img[i] = other.img_[static_cast<std::size_t>(img_[i])];
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
        return Permutation(std::move(img));
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

    // lcm of cycle lengths.
    long long order() const {
        long long ord = 1;
        std::vector<char> done(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (done[i]) continue;
            long long len = 0;
            for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(img_[j])) {
                done[j] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    // Disjoint cycles of the permutation, each starting at its minimum
    // element (0-based), sorted by starting element. Fixed points included.
    std::vector<std::vector<int>> vertex_cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> done(img_.size(), 0);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (done[i]) continue;
            std::vector<int> cyc;
            for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(img_[j])) {
                done[j] = 1;
                cyc.push_back(static_cast<int>(j));
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    // 1-based disjoint-cycle notation, fixed points omitted; identity is "()".
    std::string cycle_string() const {
        std::ostringstream os;
        bool any = false;
        for (const auto& cyc : vertex_cycles()) {
            if (cyc.size() < 2) continue;
            any = true;
            os << '(';
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (i) os << ',';
                os << cyc[i] + 1;
            }
            os << ')';
        }
        if (!any) return "()";
        return os.str();
    }

    const std::vector<int>& images() const { return img_; }

private:
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_;
};

// Visits all n! permutations of degree n in lexicographic image order.
template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        f(Permutation::from_one_based(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

} // namespace evengraphs

#endif // EVENGRAPHS_PERMUTATION_HPP
