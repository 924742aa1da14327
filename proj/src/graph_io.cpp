#include "flexcol/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace flexcol {

namespace {

void bad(const std::string& why) { throw std::invalid_argument("graph6: " + why); }

}  // namespace

Graph read_graph6(const std::string& raw) {
    std::string s = raw;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) bad("empty");

    std::size_t pos = 0;
    long n;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) bad("truncated");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) bad("byte out of range");
        return c - 63;
    };
    if (s[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (s.size() >= 4 && s[1] != '~') {
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        bad("n too large");
        return Graph();
    }

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long need = (nbits + 5) / 6;
    if (static_cast<long>(s.size() - pos) != need) bad("wrong length");
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string s;
    long n = g.n();
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back('~');
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        bad("n too large");
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) s.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return s;
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        int u = std::stoi(tok);
        int v;
        if (ls >> v) {
            edges.emplace_back(u, v);
            n = std::max({n, u + 1, v + 1});
        } else {
            n = std::max(n, u);  // vertex-count line
        }
    }
    return Graph::from_edges(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph load_graph(const std::string& path, GraphFormat fmt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (fmt == GraphFormat::g6) {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("empty file " + path);
        return read_graph6(line);
    }
    return read_edge_list(in);
}

}  // namespace flexcol
