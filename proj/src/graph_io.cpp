#include "qwmvc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "qwmvc/errors.hpp"

namespace qwmvc {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') {
            return true;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source_name) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) {
            continue;
        }
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) {
                throw parse_error(source_name, line_no, "expected header 'n m'");
            }
            std::string extra;
            if (ls >> extra) {
                throw parse_error(source_name, line_no, "trailing token '" + extra + "' after header");
            }
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) {
            throw parse_error(source_name, line_no, "expected edge 'u v'");
        }
        std::string extra;
        if (ls >> extra) {
            throw parse_error(source_name, line_no, "trailing token '" + extra + "' after edge");
        }
        if (u == v) {
            throw parse_error(source_name, line_no, "self-loop " + std::to_string(u) + " " + std::to_string(v));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw parse_error(source_name, line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw parse_error(source_name, line_no, "more than the declared " + std::to_string(m) + " edges");
        }
        const Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second) {
            throw parse_error(source_name, line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        edges.push_back(e);
    }
    if (n < 0) {
        throw parse_error(source_name, line_no, "missing header 'n m'");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw parse_error(source_name, line_no,
                          "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(source_name, line_no, e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error(path, 0, "cannot open file");
    }
    return read_edge_list(in, path);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    write_edge_list(g, out);
}

}  // namespace qwmvc
