#include "blowup/ordered_graph.hpp"

#include "blowup/error.hpp"

#include <string>

namespace blowup {

OrderedGraph::OrderedGraph(int n)
{
    if (n < 0) throw InvalidInput("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

OrderedGraph OrderedGraph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    OrderedGraph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

OrderedGraph OrderedGraph::complete(int n)
{
    OrderedGraph g(n);
    for (int v = 0; v < n; ++v) {
        g.rows_[static_cast<std::size_t>(v)] = Bitset::full(static_cast<std::size_t>(n));
        g.rows_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(v));
    }
    return g;
}

void OrderedGraph::add_edge(int u, int v)
{
    rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

void OrderedGraph::remove_edge(int u, int v)
{
    rows_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
    rows_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(u));
}

std::size_t OrderedGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto & r : rows_) twice += r.count();
    return twice / 2;
}

double OrderedGraph::density() const
{
    const double n = size();
    if (n < 2) return 0.0;
    return static_cast<double>(edge_count()) / (n * (n - 1) / 2);
}

std::vector<std::pair<int, int>> OrderedGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u) {
        const auto & r = rows_[static_cast<std::size_t>(u)];
        for (std::size_t v = r.next(static_cast<std::size_t>(u) + 1); v < r.size(); v = r.next(v + 1))
            out.emplace_back(u, static_cast<int>(v));
    }
    return out;
}

OrderedGraph OrderedGraph::induced(std::span<const int> vertices) const
{
    const int m = static_cast<int>(vertices.size());
    OrderedGraph g(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (adjacent(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)])) g.add_edge(a, b);
    return g;
}

OrderedGraph complement(const OrderedGraph & g)
{
    OrderedGraph c(g.size());
    for (int v = 0; v < g.size(); ++v) {
        Bitset row = ~g.neighbors(v);
        row.reset(static_cast<std::size_t>(v));
        for (int u = 0; u < g.size(); ++u)
            if (row.test(static_cast<std::size_t>(u))) c.add_edge(v, u);
    }
    return c;
}

Bitset to_bitset(std::span<const int> vertices, int n)
{
    Bitset b(static_cast<std::size_t>(n));
    for (int v : vertices) b.set(static_cast<std::size_t>(v));
    return b;
}

} // namespace blowup
