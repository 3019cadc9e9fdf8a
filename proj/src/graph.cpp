#include "spanfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spanfactor {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loops are not representable");
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    rows_[static_cast<unsigned>(u)] |= std::uint64_t{1} << v;
    rows_[static_cast<unsigned>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    rows_[static_cast<unsigned>(u)] &= ~(std::uint64_t{1} << v);
    rows_[static_cast<unsigned>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
    return std::popcount(rows_[static_cast<unsigned>(v)]);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(rows_[static_cast<unsigned>(v)]);
    return total / 2;
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::isolated_count() const {
    int count = 0;
    for (int v = 0; v < n_; ++v)
        if (rows_[static_cast<unsigned>(v)] == 0) ++count;
    return count;
}

VertexSet Graph::component_of(int v) const {
    VertexSet comp = std::uint64_t{1} << v;
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= rows_[static_cast<unsigned>(u)];
        }
        frontier = next & ~comp;
        comp |= next;
    }
    return comp;
}

bool Graph::is_connected() const {
    return component_of(0) == full_set(n_);
}

int Graph::component_count() const {
    VertexSet seen = 0;
    const VertexSet all = full_set(n_);
    int count = 0;
    while (seen != all) {
        int v = std::countr_zero(~seen & all);
        seen |= component_of(v);
        ++count;
    }
    return count;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = rows_[static_cast<unsigned>(u)] >> (u + 1) << (u + 1);
        while (above) {
            int v = std::countr_zero(above);
            above &= above - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (rows_[static_cast<unsigned>(v)] != other.rows_[static_cast<unsigned>(v)]) return false;
    return true;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) {
    return Graph(n);
}

Graph circulant_graph(int n, int t) {
    check_order(n);
    if (t < 0 || t > n - 1) throw std::invalid_argument("degree must be in 0..n-1");
    if ((static_cast<long long>(n) * t) % 2 != 0)
        throw std::invalid_argument("no t-regular graph on n vertices of this parity (n*t odd)");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= t / 2; ++j) g.add_edge(i, (i + j) % n);
    if (t % 2 == 1) {
        // n is even here by the parity precondition.
        for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
    }
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > kMaxVertices) throw std::invalid_argument("join exceeds 64 vertices");
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > kMaxVertices) throw std::invalid_argument("disjoint union exceeds 64 vertices");
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
    return g;
}

Graph delete_vertices(const Graph& g, VertexSet s) {
    const int n = g.order();
    s &= full_set(n);
    const int removed = std::popcount(s);
    if (removed >= n) throw std::invalid_argument("cannot delete all vertices");
    std::array<int, kMaxVertices> relabel{};
    int next = 0;
    for (int v = 0; v < n; ++v) relabel[static_cast<unsigned>(v)] = ((s >> v) & 1u) ? -1 : next++;
    Graph h(n - removed);
    for (auto [u, v] : g.edges())
        if (relabel[static_cast<unsigned>(u)] >= 0 && relabel[static_cast<unsigned>(v)] >= 0)
            h.add_edge(relabel[static_cast<unsigned>(u)], relabel[static_cast<unsigned>(v)]);
    return h;
}

GraphStats stats(const Graph& g) {
    return GraphStats{g.edge_count(), g.min_degree(), g.isolated_count(), g.is_connected(),
                      g.component_count()};
}

namespace {

// Unit-capacity max flow on the vertex-split digraph: node v becomes v_in=2v,
// v_out=2v+1 with a capacity-1 arc between them; each edge contributes
// unbounded arcs u_out->v_in and v_out->u_in. Flow value s_out -> t_in equals
// the number of internally vertex-disjoint s-t paths.
int disjoint_path_count(const Graph& g, int s, int t) {
    const int n = g.order();
    const int nodes = 2 * n;
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(nodes));
    auto add_arc = [&](int from, int to, int cap) {
        arcs[static_cast<std::size_t>(from)].push_back(
            {to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
        arcs[static_cast<std::size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, n);
        add_arc(2 * v + 1, 2 * u, n);
    }
    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    std::vector<int> prev_node(static_cast<std::size_t>(nodes));
    std::vector<int> prev_arc(static_cast<std::size_t>(nodes));
    while (true) {
        std::fill(prev_node.begin(), prev_node.end(), -1);
        prev_node[static_cast<std::size_t>(source)] = source;
        std::vector<int> queue{source};
        for (std::size_t head = 0; head < queue.size() && prev_node[static_cast<std::size_t>(sink)] < 0; ++head) {
            int u = queue[head];
            const auto& out = arcs[static_cast<std::size_t>(u)];
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (out[i].cap <= 0 || prev_node[static_cast<std::size_t>(out[i].to)] >= 0) continue;
                prev_node[static_cast<std::size_t>(out[i].to)] = u;
                prev_arc[static_cast<std::size_t>(out[i].to)] = static_cast<int>(i);
                queue.push_back(out[i].to);
            }
        }
        if (prev_node[static_cast<std::size_t>(sink)] < 0) break;
        for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
            Arc& a = arcs[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                         [static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
            a.cap -= 1;
            arcs[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.rev)].cap += 1;
        }
        ++flow;
    }
    return flow;
}

bool disconnects(const Graph& g, VertexSet cut) {
    const int n = g.order();
    VertexSet alive = full_set(n) & ~cut;
    int v0 = std::countr_zero(alive);
    VertexSet comp = std::uint64_t{1} << v0;
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.row(u);
        }
        next &= alive;
        frontier = next & ~comp;
        comp |= next;
    }
    return comp != alive;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs n >= 2");
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;
    if (!g.is_connected()) return 0;
    const int delta = g.min_degree();
    if (n <= 16) {
        // Smallest cut first: try every subset of size 1..delta.
        for (int size = 1; size <= delta; ++size) {
            VertexSet set = (std::uint64_t{1} << size) - 1;
            const VertexSet limit = std::uint64_t{1} << n;
            while (set < limit) {
                if (disconnects(g, set)) return size;
                // Gosper's hack: next subset of the same cardinality.
                std::uint64_t c = set & (~set + 1);
                std::uint64_t r = set + c;
                set = (((r ^ set) >> 2) / c) | r;
            }
        }
        return delta;
    }
    int best = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) best = std::min(best, disjoint_path_count(g, u, v));
    return best;
}

namespace {

constexpr int kG6Offset = 63;

[[noreturn]] void malformed(const std::string& why) {
    throw std::invalid_argument("malformed graph6: " + why);
}

}  // namespace

Graph graph6_decode(std::string_view text) {
    if (text.empty()) malformed("empty input");
    for (char c : text)
        if (c < 63 || c > 126) malformed("byte out of printable range");
    const int n = text[0] - kG6Offset;
    if (n < 1) malformed("order must be at least 1");
    if (n > 62) malformed("short form supports n <= 62");
    const int bits = n * (n - 1) / 2;
    const int payload = (bits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + payload) malformed("payload length mismatch");
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int value = text[static_cast<std::size_t>(1 + bit / 6)] - kG6Offset;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::domain_error("graph6 short form supports n <= 62");
    const int bits = n * (n - 1) / 2;
    std::string out(static_cast<std::size_t>(1 + (bits + 5) / 6), static_cast<char>(kG6Offset));
    out[0] = static_cast<char>(n + kG6Offset);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(u, v))
                out[static_cast<std::size_t>(1 + bit / 6)] =
                    static_cast<char>(out[static_cast<std::size_t>(1 + bit / 6)] + (1 << (5 - bit % 6)));
        }
    }
    return out;
}

namespace {

// Joint refinement of vertex classes by multiset of neighbor classes, with
// class ids drawn from a dictionary shared by both graphs so that ids stay
// comparable across them. Returns false when the class histograms diverge.
bool refine_classes(const Graph& g1, const Graph& g2, std::vector<int>& cls1,
                    std::vector<int>& cls2) {
    const int n = g1.order();
    cls1.assign(static_cast<std::size_t>(n), 0);
    cls2.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        cls1[static_cast<std::size_t>(v)] = g1.degree(v);
        cls2[static_cast<std::size_t>(v)] = g2.degree(v);
    }
    auto signatures = [n](const Graph& g, const std::vector<int>& cls) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(cls[static_cast<std::size_t>(v)]);
            std::uint64_t nb = g.row(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                s.push_back(cls[static_cast<std::size_t>(u)]);
            }
            std::sort(s.begin() + 1, s.end());
        }
        return sig;
    };
    while (true) {
        auto sig1 = signatures(g1, cls1);
        auto sig2 = signatures(g2, cls2);
        std::vector<std::vector<int>> dict;
        dict.reserve(static_cast<std::size_t>(2 * n));
        dict.insert(dict.end(), sig1.begin(), sig1.end());
        dict.insert(dict.end(), sig2.begin(), sig2.end());
        std::sort(dict.begin(), dict.end());
        dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
        auto lookup = [&dict](const std::vector<int>& s) {
            return static_cast<int>(std::lower_bound(dict.begin(), dict.end(), s) - dict.begin());
        };
        std::vector<int> next1(static_cast<std::size_t>(n)), next2(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            next1[static_cast<std::size_t>(v)] = lookup(sig1[static_cast<std::size_t>(v)]);
            next2[static_cast<std::size_t>(v)] = lookup(sig2[static_cast<std::size_t>(v)]);
        }
        std::vector<int> hist1(next1), hist2(next2);
        std::sort(hist1.begin(), hist1.end());
        std::sort(hist2.begin(), hist2.end());
        if (hist1 != hist2) return false;
        if (next1 == cls1 && next2 == cls2) return true;
        cls1 = std::move(next1);
        cls2 = std::move(next2);
    }
}

bool extend_mapping(const Graph& g1, const Graph& g2, const std::vector<int>& cls1,
                    const std::vector<int>& cls2, std::vector<int>& map, std::uint64_t used, int v) {
    const int n = g1.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (cls2[static_cast<std::size_t>(w)] != cls1[static_cast<std::size_t>(v)]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g1.adjacent(u, v) != g2.adjacent(map[static_cast<std::size_t>(u)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        if (extend_mapping(g1, g2, cls1, cls2, map, used | (std::uint64_t{1} << w), v + 1)) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    const int n = g1.order();
    if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    std::vector<int> cls1, cls2;
    if (!refine_classes(g1, g2, cls1, cls2)) return false;
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    return extend_mapping(g1, g2, cls1, cls2, map, 0, 0);
}

}  // namespace spanfactor
