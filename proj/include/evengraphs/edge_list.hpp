#ifndef EVENGRAPHS_EDGE_LIST_HPP
#define EVENGRAPHS_EDGE_LIST_HPP

#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evengraphs/indexing.hpp"
#include "evengraphs/labelled.hpp"

namespace evengraphs {

class edge_list_error : public std::runtime_error {
public:
    edge_list_error(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// First line "n m", then m lines "u v" (1-based, either endpoint order,
// no duplicate pairs).
struct EdgeListDocument {
    int n = 1;
    std::vector<std::pair<int, int>> edges; // normalized u < v, 1-based
};

inline EdgeListDocument parse_edge_list(std::istream& in) {
    EdgeListDocument doc;
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        ++lineno;
        return false;
    };

    if (!next_line())
        throw edge_list_error(lineno, "missing header line \"n m\"");
    std::istringstream head(line);
    int n = 0, m = 0;
    if (!(head >> n >> m) || n < 1 || m < 0)
        throw edge_list_error(lineno, "expected header \"n m\" with n >= 1, m >= 0");
    std::string junk;
    if (head >> junk)
        throw edge_list_error(lineno, "trailing tokens after header");
    doc.n = n;

    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        if (!next_line())
            throw edge_list_error(lineno, "expected " + std::to_string(m) +
                                              " edges, got " + std::to_string(i));
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v))
            throw edge_list_error(lineno, "expected edge \"u v\"");
        if (es >> junk)
            throw edge_list_error(lineno, "trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            throw edge_list_error(lineno, "endpoint out of range 1.." + std::to_string(n));
        if (u == v)
            throw edge_list_error(lineno, "self-loop not allowed");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw edge_list_error(lineno, "duplicate edge {" + std::to_string(u) + "," +
                                              std::to_string(v) + "}");
        doc.edges.emplace_back(u, v);
    }
    return doc;
}

inline LabelledGraph to_labelled_graph(const EdgeListDocument& doc) {
    LabelledGraph X{doc.n, 0};
    for (const auto& [u, v] : doc.edges)
        X.edges |= std::uint64_t{1} << edge_index(doc.n, u - 1, v - 1);
    return X;
}

} // namespace evengraphs

#endif // EVENGRAPHS_EDGE_LIST_HPP
