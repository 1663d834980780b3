#include "monopolies/edge_list.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monopolies {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

// Strips one trailing \r so files with Windows line endings parse the same.
bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::pair<long long, long long> two_ints(const std::string& line, int line_no,
                                         const char* what) {
    std::istringstream ss(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra))
        fail(line_no, std::string("expected ") + what);
    return {a, b};
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    do {
        if (!read_line(in, line)) fail(1, "missing header");
        ++line_no;
    } while (line.find_first_not_of(" \t") == std::string::npos);

    auto [n, m] = two_ints(line, line_no, "header \"n m\"");
    if (n < 1) fail(line_no, "graph order must be at least 1");
    if (m < 0) fail(line_no, "edge count must be non-negative");
    if (n > 1000000 || m > 10000000) fail(line_no, "header values out of supported range");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<long long>(edges.size()) < m) {
        if (!read_line(in, line)) fail(line_no + 1, "unexpected end of input, expected an edge");
        ++line_no;
        if (line.find_first_not_of(" \t") == std::string::npos)
            fail(line_no, "blank line where an edge was expected");
        auto [u, v] = two_ints(line, line_no, "edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(line_no, "vertex out of range [0, " + std::to_string(n - 1) + "]");
        if (u == v) fail(line_no, "self loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (read_line(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t") != std::string::npos)
            fail(line_no, "trailing content after the declared edges");
    }

    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("edge list invalid: ") + e.what());
    }
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

} // namespace monopolies
