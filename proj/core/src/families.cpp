#include "monopolies/families.hpp"

#include <stdexcept>
#include <utility>

namespace monopolies {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph make_path(int n) {
    if (n < 2) throw std::invalid_argument("path needs n >= 2");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph make_complete_bipartite(int r, int t) {
    if (r < 1 || t < 1) throw std::invalid_argument("complete bipartite needs r, t >= 1");
    EdgeList e;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < t; ++j) e.emplace_back(i, r + j);
    return Graph::from_edges(r + t, e);
}

Graph make_wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
    EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 1);
    return Graph::from_edges(n, e);
}

Graph make_fan(int n) {
    if (n < 2) throw std::invalid_argument("fan needs n >= 2");
    EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph make_hypercube(int d) {
    if (d < 1 || d > 16) throw std::invalid_argument("hypercube needs 1 <= d <= 16");
    int n = 1 << d;
    EdgeList e;
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < d; ++b) {
            int y = x ^ (1 << b);
            if (x < y) e.emplace_back(x, y);
        }
    return Graph::from_edges(n, e);
}

// Clique block 0..t-1, satellite block t..2t-1. Satellite i is adjacent to
// the (t-1)/2 consecutive clique vertices i, i+1, ..., i+(t-3)/2 (mod t), so
// every vertex of either block has exactly (t-1)/2 neighbors across blocks.
Graph make_family_f(int t) {
    if (t < 5 || (t - 1) % 4 != 0)
        throw std::invalid_argument("family_f needs t >= 5 with t = 1 (mod 4)");
    EdgeList e;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) e.emplace_back(i, j);
    int span = (t - 3) / 2;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j <= span; ++j) e.emplace_back(t + i, (i + j) % t);
    return Graph::from_edges(2 * t, e);
}

int want_params(const FamilySpec& spec, std::size_t count) {
    if (spec.params.size() != count)
        throw std::invalid_argument(std::string(family_name(spec.family)) + " takes " +
                                    std::to_string(count) + " parameter(s)");
    return spec.params[0];
}

// Arity and domain are checked at parse time so a spec in hand is always
// generable. The makers keep their own guards for specs built by hand.
void validate(const FamilySpec& spec) {
    const std::size_t arity = spec.family == Family::complete_bipartite ? 2 : 1;
    if (spec.params.size() != arity)
        throw std::invalid_argument(std::string(family_name(spec.family)) + " takes " +
                                    std::to_string(arity) + " parameter(s)");
    const int p = spec.params[0];
    switch (spec.family) {
        case Family::path:
            if (p < 2) throw std::invalid_argument("path needs n >= 2");
            break;
        case Family::cycle:
            if (p < 3) throw std::invalid_argument("cycle needs n >= 3");
            break;
        case Family::complete:
            if (p < 2) throw std::invalid_argument("complete graph needs n >= 2");
            break;
        case Family::complete_bipartite:
            if (p < 1 || spec.params[1] < 1)
                throw std::invalid_argument("complete bipartite needs r, t >= 1");
            break;
        case Family::wheel:
            if (p < 4) throw std::invalid_argument("wheel needs n >= 4");
            break;
        case Family::fan:
            if (p < 2) throw std::invalid_argument("fan needs n >= 2");
            break;
        case Family::hypercube:
            if (p < 1 || p > 16) throw std::invalid_argument("hypercube needs 1 <= d <= 16");
            break;
        case Family::family_f:
            if (p < 5 || (p - 1) % 4 != 0)
                throw std::invalid_argument("family_f needs t >= 5 with t = 1 (mod 4)");
            break;
    }
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::wheel: return "wheel";
        case Family::fan: return "fan";
        case Family::hypercube: return "hypercube";
        case Family::family_f: return "family_f";
    }
    return "?";
}

std::string FamilySpec::to_string() const {
    std::string out = family_name(family);
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
    }
    return out;
}

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw std::invalid_argument("family spec must look like name:p1[,p2]");
    std::string name = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    FamilySpec spec;
    if (name == "path") spec.family = Family::path;
    else if (name == "cycle") spec.family = Family::cycle;
    else if (name == "complete") spec.family = Family::complete;
    else if (name == "complete_bipartite") spec.family = Family::complete_bipartite;
    else if (name == "wheel") spec.family = Family::wheel;
    else if (name == "fan") spec.family = Family::fan;
    else if (name == "hypercube") spec.family = Family::hypercube;
    else if (name == "family_f") spec.family = Family::family_f;
    else throw std::invalid_argument("unknown family '" + name + "'");

    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty parameter in family spec");
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad parameter '" + tok + "' in family spec");
        }
        if (used != tok.size())
            throw std::invalid_argument("bad parameter '" + tok + "' in family spec");
        spec.params.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (spec.params.empty()) throw std::invalid_argument("family spec needs parameters");
    validate(spec);
    return spec;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return make_path(want_params(spec, 1));
        case Family::cycle: return make_cycle(want_params(spec, 1));
        case Family::complete: return make_complete(want_params(spec, 1));
        case Family::complete_bipartite: {
            if (spec.params.size() != 2)
                throw std::invalid_argument("complete_bipartite takes 2 parameters");
            return make_complete_bipartite(spec.params[0], spec.params[1]);
        }
        case Family::wheel: return make_wheel(want_params(spec, 1));
        case Family::fan: return make_fan(want_params(spec, 1));
        case Family::hypercube: return make_hypercube(want_params(spec, 1));
        case Family::family_f: return make_family_f(want_params(spec, 1));
    }
    throw std::invalid_argument("unknown family");
}

} // namespace monopolies
