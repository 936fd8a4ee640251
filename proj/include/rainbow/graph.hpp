// Simple undirected labeled graphs on a small vertex range, plus graph6 I/O.
//
// Vertices are 0..n-1.  Edges are stored normalized (u < v) and sorted, so
// iterating Graph::edges() follows the lexicographic edge order throughout
// the library (edge i of a coloring is edges()[i]).
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

constexpr int kMaxVertices = 30;  // adjacency sets fit in uint32_t

struct Edge {
    int u = 0, v = 0;  // u < v
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

class graph_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// graph6 parse failure; byte_offset is the 0-based offending position.
class graph6_error : public graph_error {
  public:
    graph6_error(const std::string& what, std::size_t byte_offset)
        : graph_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

class Graph {
  public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0u) {
        if (n < 0 || n > kMaxVertices) throw graph_error("vertex count out of range");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
        for (auto [u, v] : edge_list) add_edge(u, v);
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    // Lexicographic edge order: (u,v) with u<v sorted by (u,v) ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    uint32_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return __builtin_popcount(neighbors(v)); }

    // Position of (u,v) in the lexicographic order, or -1.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        Edge e{u, v};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || !(*it == e)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw graph_error("loop edge rejected");
        if (u > v) std::swap(u, v);
        Edge e{u, v};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e) throw graph_error("parallel edge rejected");
        edges_.insert(it, e);
        adj_[static_cast<std::size_t>(u)] |= 1u << v;
        adj_[static_cast<std::size_t>(v)] |= 1u << u;
    }

    void remove_edge(int u, int v) {
        if (u > v) std::swap(u, v);
        int idx = edge_index(u, v);
        if (idx < 0) throw graph_error("edge not present");
        edges_.erase(edges_.begin() + idx);
        adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
        adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
    }

    // BFS distances from src; unreachable vertices get -1.
    std::vector<int> distances_from(int src) const {
        check_vertex(src);
        std::vector<int> dist(static_cast<std::size_t>(n_), -1);
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(n_));
        dist[static_cast<std::size_t>(src)] = 0;
        queue.push_back(src);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            uint32_t nb = adj_[static_cast<std::size_t>(u)];
            while (nb) {
                int w = __builtin_ctz(nb);
                nb &= nb - 1;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        auto dist = distances_from(0);
        return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
    }

    // Vertex bitmask of the component containing src.
    uint32_t component_mask(int src) const {
        auto dist = distances_from(src);
        uint32_t mask = 0;
        for (int v = 0; v < n_; ++v)
            if (dist[static_cast<std::size_t>(v)] >= 0) mask |= 1u << v;
        return mask;
    }

    Graph relabeled(const std::vector<int>& new_label) const {
        Graph h(n_);
        for (const Edge& e : edges_)
            h.add_edge(new_label[static_cast<std::size_t>(e.u)],
                       new_label[static_cast<std::size_t>(e.v)]);
        return h;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw graph_error("vertex id out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<uint32_t> adj_;
};

inline void require_connected(const Graph& g, const char* who) {
    if (!g.is_connected()) throw graph_error(std::string(who) + ": graph must be connected");
}

// d(v, H) = min over x in H of d_G(v, x).  H given as vertex list.
inline int vertex_to_set_distance(const Graph& g, int v, const std::vector<int>& set) {
    if (set.empty()) throw graph_error("vertex_to_set_distance: empty target set");
    auto dist = g.distances_from(v);
    int best = -1;
    for (int x : set) {
        if (x < 0 || x >= g.order()) throw graph_error("vertex_to_set_distance: vertex out of range");
        int d = dist[static_cast<std::size_t>(x)];
        if (d < 0) throw graph_error("vertex_to_set_distance: target not reachable");
        if (best < 0 || d < best) best = d;
    }
    return best;
}

// ---------------------------------------------------------------------------
// graph6 (one record per line; bytes are value+63; the upper triangle is
// serialized column by column: (0,1), (0,2), (1,2), (0,3), ...).

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw graph_error("to_graph6: only orders up to 62 are emitted");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int nbits = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (nbits % 6 != 0) {
        acc <<= 6 - nbits % 6;
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

inline Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > text.size())
            throw graph6_error("truncated graph6 record", text.size());
    };
    auto byte = [&](std::size_t at) {
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw graph6_error("byte out of graph6 range", at);
        return static_cast<int>(c) - 63;
    };
    need(1);
    long n;
    if (text[0] == '~') {
        // 4-byte header '~' b1 b2 b3 (orders 63..258047)
        need(4);
        if (text[1] == '~') throw graph6_error("8-byte order header unsupported", 1);
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw graph6_error("graph order " + std::to_string(n) + " exceeds supported maximum", 0);
    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) != nbytes)
        throw graph6_error(static_cast<long>(text.size() - pos) > nbytes
                               ? "trailing garbage after graph6 record"
                               : "graph6 record shorter than header requires",
                           pos + static_cast<std::size_t>(std::min<long>(
                                     nbytes, static_cast<long>(text.size() - pos))));
    long bit = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + static_cast<std::size_t>(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero for a bit-exact round trip
    if (nbits % 6 != 0) {
        int last = byte(pos + static_cast<std::size_t>(nbytes - 1));
        int pad = 6 - static_cast<int>(nbits % 6);
        if (last & ((1 << pad) - 1))
            throw graph6_error("nonzero padding bits", pos + static_cast<std::size_t>(nbytes - 1));
    }
    return g;
}

// Reads one graph6 record per line; '#' lines and blank lines are skipped.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

// Convenience builders used all over the tests and the catalog.
inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 0; i < leaves; ++i) g.add_edge(i, leaves);
    return g;
}

}  // namespace rainbow
