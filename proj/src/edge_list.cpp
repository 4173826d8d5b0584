#include "cgg/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgg/errors.hpp"

namespace cgg {

namespace {

struct RawPairs {
    std::optional<std::size_t> declared_nodes;
    std::vector<std::pair<std::string, std::string>> pairs;
};

RawPairs read_pairs(std::istream& in) {
    RawPairs raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a)) continue;
        if (a[0] == '#') {
            std::string word;
            std::size_t count = 0;
            if (ls >> word && word == "nodes" && ls >> count) raw.declared_nodes = count;
            continue;
        }
        std::string b;
        std::string extra;
        if (!(ls >> b) || (ls >> extra))
            throw InvalidGraph("edge list line " + std::to_string(line_no) + ": expected exactly two labels");
        raw.pairs.emplace_back(std::move(a), std::move(b));
    }
    return raw;
}

Node parse_label(const std::string& token) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token[0] == '-')
        throw InvalidGraph("edge list: label '" + token + "' is not a non-negative integer");
    return static_cast<Node>(value);
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.num_nodes() << '\n';
    for (const Edge& e : g.canonical_edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in, std::optional<std::size_t> n) {
    const RawPairs raw = read_pairs(in);
    std::vector<Edge> edges;
    edges.reserve(raw.pairs.size());
    std::size_t max_label_plus_one = 0;
    for (const auto& [a, b] : raw.pairs) {
        const Node u = parse_label(a);
        const Node v = parse_label(b);
        edges.emplace_back(u, v);
        max_label_plus_one = std::max<std::size_t>({max_label_plus_one, std::size_t{u} + 1, std::size_t{v} + 1});
    }
    const std::size_t nodes = raw.declared_nodes ? *raw.declared_nodes : n.value_or(max_label_plus_one);
    return Graph::from_edges(nodes, edges);
}

Graph read_edge_list_relabel(std::istream& in) {
    const RawPairs raw = read_pairs(in);
    std::unordered_map<std::string, Node> ids;
    auto id_of = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<Node>(ids.size()));
        return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& [a, b] : raw.pairs) {
        const Node u = id_of(a);
        const Node v = id_of(b);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(ids.size(), edges);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_edge_list(out, g);
}

Graph load_edge_list(const std::filesystem::path& path, std::optional<std::size_t> n) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path.string());
    return read_edge_list(in, n);
}

}  // namespace cgg
