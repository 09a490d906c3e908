#include "dpe/error.hpp"
#include "dpe/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dpe {

namespace {

std::vector<Edge> complete_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return e;
}

std::vector<Edge> without(std::vector<Edge> edges, std::initializer_list<Edge> removed) {
    std::erase_if(edges, [&](const Edge& e) { return std::find(removed.begin(), removed.end(), e) != removed.end(); });
    return edges;
}

void require(bool ok, std::string_view family, const std::string& why) {
    if (!ok) throw std::invalid_argument(std::string(family) + ": " + why);
}

using Builder = std::function<Graph(std::span<const int>)>;

struct FamilySpec {
    int arity;
    Builder build;
};

const std::map<std::string, FamilySpec, std::less<>>& family_table() {
    static const std::map<std::string, FamilySpec, std::less<>> table = {
        {"path", {1, [](std::span<const int> p) {
             require(p[0] >= 1, "path", "n >= 1");
             std::vector<Edge> e;
             for (int i = 0; i + 1 < p[0]; ++i) e.emplace_back(i, i + 1);
             return Graph(p[0], e, "P" + std::to_string(p[0]));
         }}},
        {"cycle", {1, [](std::span<const int> p) {
             require(p[0] >= 3, "cycle", "n >= 3");
             std::vector<Edge> e;
             for (int i = 0; i < p[0]; ++i) e.emplace_back(i, (i + 1) % p[0]);
             return Graph(p[0], e, "C" + std::to_string(p[0]));
         }}},
        {"complete", {1, [](std::span<const int> p) {
             require(p[0] >= 1, "complete", "n >= 1");
             return Graph(p[0], complete_edges(p[0]), "K" + std::to_string(p[0]));
         }}},
        {"star", {1, [](std::span<const int> p) {
             require(p[0] >= 1, "star", "n >= 1");
             std::vector<Edge> e;
             for (int i = 1; i < p[0]; ++i) e.emplace_back(0, i);
             return Graph(p[0], e, "S" + std::to_string(p[0]));
         }}},
        {"complete_bipartite", {2, [](std::span<const int> p) {
             require(p[0] >= 1 && p[1] >= 1, "complete_bipartite", "a, b >= 1");
             std::vector<Edge> e;
             for (int i = 0; i < p[0]; ++i)
                 for (int j = 0; j < p[1]; ++j) e.emplace_back(i, p[0] + j);
             return Graph(p[0] + p[1], e, "K" + std::to_string(p[0]) + "," + std::to_string(p[1]));
         }}},
        {"complete_minus_edge", {1, [](std::span<const int> p) {
             require(p[0] >= 2, "complete_minus_edge", "n >= 2");
             return Graph(p[0], without(complete_edges(p[0]), {{0, 1}}), "K" + std::to_string(p[0]) + "-e");
         }}},
        {"complete_minus_two_nonincident_edges", {1, [](std::span<const int> p) {
             require(p[0] >= 4, "complete_minus_two_nonincident_edges", "n >= 4");
             return Graph(p[0], without(complete_edges(p[0]), {{0, 1}, {2, 3}}),
                          "K" + std::to_string(p[0]) + "-{e1,e2}");
         }}},
        {"complete_minus_two_incident_edges", {1, [](std::span<const int> p) {
             require(p[0] >= 3, "complete_minus_two_incident_edges", "n >= 3");
             return Graph(p[0], without(complete_edges(p[0]), {{0, 1}, {0, 2}}),
                          "K" + std::to_string(p[0]) + "-{f1,f2}");
         }}},
        {"clique_plus_pendant_p", {2, [](std::span<const int> p) {
             require(p[0] >= 1 && p[1] >= 1 && p[1] <= p[0], "clique_plus_pendant_p", "1 <= p <= w");
             auto e = complete_edges(p[0]);
             for (int i = 0; i < p[1]; ++i) e.emplace_back(i, p[0]);
             return Graph(p[0] + 1, e, "K" + std::to_string(p[0]) + "^" + std::to_string(p[1]));
         }}},
        {"star_plus_edge", {1, [](std::span<const int> p) {
             require(p[0] >= 3, "star_plus_edge", "n >= 3");
             std::vector<Edge> e;
             for (int i = 1; i < p[0]; ++i) e.emplace_back(0, i);
             e.emplace_back(1, 2);
             return Graph(p[0], e, "S" + std::to_string(p[0]) + "+");
         }}},
        {"wheel", {1, [](std::span<const int> p) {
             require(p[0] >= 4, "wheel", "n >= 4");
             const int rim = p[0] - 1;
             std::vector<Edge> e;
             for (int i = 1; i <= rim; ++i) {
                 e.emplace_back(0, i);
                 e.emplace_back(i, i % rim + 1);
             }
             return Graph(p[0], e, "W" + std::to_string(p[0]));
         }}},
    };
    return table;
}

} // namespace

Graph make_family(std::string_view family, std::span<const int> params) {
    const auto& table = family_table();
    const auto it = table.find(family);
    if (it == table.end()) throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
    if (static_cast<int>(params.size()) != it->second.arity)
        throw std::invalid_argument(std::string(family) + " expects " + std::to_string(it->second.arity) +
                                    " parameter(s), got " + std::to_string(params.size()));
    for (int p : params)
        if (p > kMaxGraphOrder) throw std::invalid_argument(std::string(family) + ": parameter too large");
    return it->second.build(params);
}

Graph make_family(std::string_view family, std::initializer_list<int> params) {
    return make_family(family, std::span<const int>(params.begin(), params.size()));
}

std::vector<std::string> family_names() {
    std::vector<std::string> names;
    for (const auto& [name, spec] : family_table()) names.push_back(name);
    return names;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splits on whitespace and parses every token as a non-negative integer.
std::vector<long long> integers(std::string_view line, int lineno) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        long long value = 0;
        const auto tok = line.substr(i, j - i);
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(lineno, "expected an integer, got '" + std::string(tok) + "'");
        out.push_back(value);
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto nums = integers(line, lineno);
        if (!n) {
            if (nums.size() != 1 || nums[0] < 0 || nums[0] > kMaxGraphOrder)
                throw ParseError(lineno, "first line must be a vertex count in [0, 64]");
            n = static_cast<int>(nums[0]);
            continue;
        }
        if (nums.size() != 2) throw ParseError(lineno, "expected 'u v'");
        if (nums[0] < 0 || nums[0] >= *n || nums[1] < 0 || nums[1] >= *n)
            throw ParseError(lineno, "vertex out of range [0, " + std::to_string(*n) + ")");
        if (nums[0] == nums[1]) throw ParseError(lineno, "self-loop at vertex " + std::to_string(nums[0]));
        edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    if (!n) throw ParseError(0, "empty edge list: missing vertex count");
    return Graph(*n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    if (!g.name().empty()) os << "# " << g.name() << '\n';
    os << g.order() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::vector<Graph> parse_graph6(std::string_view text) {
    std::vector<Graph> graphs;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++lineno;
        constexpr std::string_view header = ">>graph6<<";
        if (line.starts_with(header)) line.remove_prefix(header.size());
        if (line.empty()) continue;
        for (char c : line)
            if (c < 63 || c > 126) throw ParseError(lineno, "graph6 byte outside 63..126");

        std::size_t at = 0;
        long long n = 0;
        auto take = [&](int count) {
            if (at + count > line.size()) throw ParseError(lineno, "truncated graph6 order field");
            long long v = 0;
            for (int i = 0; i < count; ++i) v = (v << 6) | (line[at++] - 63);
            return v;
        };
        if (line[0] != 126) {
            n = take(1);
        } else if (line.size() > 1 && line[1] != 126) {
            at = 1;
            n = take(3);
        } else {
            at = 2;
            n = take(6);
        }
        if (n > kMaxGraphOrder) throw ParseError(lineno, "graph6 order " + std::to_string(n) + " exceeds 64");
        const long long bits = n * (n - 1) / 2;
        const long long need = (bits + 5) / 6;
        if (static_cast<long long>(line.size() - at) != need)
            throw ParseError(lineno, "graph6 body has " + std::to_string(line.size() - at) + " bytes, expected " +
                                         std::to_string(need));
        std::vector<Edge> edges;
        long long k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                const int byte = line[at + k / 6] - 63;
                if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
            }
        graphs.emplace_back(static_cast<int>(n), edges);
    }
    return graphs;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace dpe
