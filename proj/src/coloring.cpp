#include "blowup/coloring.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <string>
#include <unordered_map>

namespace blowup {

namespace {

void check_vertex_count(int n)
{
    if (n < 0 || n > OrderedColoring::kMaxVertices)
        throw InvalidInput("coloring size " + std::to_string(n) + " outside 0.." + std::to_string(OrderedColoring::kMaxVertices));
}

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Next subset of the same popcount in colex order (Gosper).
std::uint64_t next_combination(std::uint64_t x)
{
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

bool acyclic_masks(std::span<const std::uint64_t> out, std::uint64_t remaining)
{
    while (remaining) {
        std::uint64_t incoming = 0;
        for (std::uint64_t m = remaining; m; m &= m - 1) incoming |= out[static_cast<std::size_t>(std::countr_zero(m))];
        std::uint64_t sources = remaining & ~incoming;
        if (!sources) return false;
        remaining &= ~sources;
    }
    return true;
}

} // namespace

OrderedColoring::OrderedColoring(int n) : n_(n)
{
    check_vertex_count(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

OrderedColoring OrderedColoring::all_red(int n)
{
    OrderedColoring c(n);
    for (int i = 0; i < n; ++i) c.rows_[static_cast<std::size_t>(i)] = c.vertex_mask() & ~bit(i);
    return c;
}

OrderedColoring OrderedColoring::from_red_edges(int n, std::span<const std::pair<int, int>> red)
{
    OrderedColoring c(n);
    for (auto [i, j] : red) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw InvalidInput("red pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        if (i == j) throw InvalidInput("red pair is a loop at " + std::to_string(i));
        if (c.is_red(i, j))
            throw InvalidInput("red pair (" + std::to_string(i) + "," + std::to_string(j) + ") listed twice");
        c.set_color(i, j, Color::Red);
    }
    return c;
}

void OrderedColoring::set_color(int i, int j, Color c)
{
    if (c == Color::Red) {
        rows_[static_cast<std::size_t>(i)] |= bit(j);
        rows_[static_cast<std::size_t>(j)] |= bit(i);
    }
    else {
        rows_[static_cast<std::size_t>(i)] &= ~bit(j);
        rows_[static_cast<std::size_t>(j)] &= ~bit(i);
    }
}

std::vector<std::pair<int, int>> OrderedColoring::red_edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (std::uint64_t m = rows_[static_cast<std::size_t>(i)] & ~(bit(i + 1) - 1); m; m &= m - 1)
            out.emplace_back(i, std::countr_zero(m));
    return out;
}

OrderedColoring OrderedColoring::with_vertex(std::uint64_t red_to_previous) const
{
    check_vertex_count(n_ + 1);
    OrderedColoring c = *this;
    red_to_previous &= vertex_mask();
    c.n_ = n_ + 1;
    c.rows_.push_back(red_to_previous);
    for (std::uint64_t m = red_to_previous; m; m &= m - 1) c.rows_[static_cast<std::size_t>(std::countr_zero(m))] |= bit(n_);
    return c;
}

bool DependencyDigraph::has_arc(int from, int to) const
{
    return std::binary_search(arcs.begin(), arcs.end(), std::pair{from, to});
}

std::vector<std::uint64_t> dependency_out_masks(const OrderedColoring & coloring)
{
    const int n = coloring.size();
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i) {
        if (!coloring.is_red(i, i + 1)) continue;
        const std::uint64_t pair = bit(i) | bit(i + 1);
        for (std::uint64_t m = coloring.blue_row(i) & coloring.blue_row(i + 1); m; m &= m - 1)
            out[static_cast<std::size_t>(std::countr_zero(m))] |= pair;
    }
    return out;
}

DependencyDigraph dependency_digraph(const OrderedColoring & coloring)
{
    DependencyDigraph d;
    d.n = coloring.size();
    auto out = dependency_out_masks(coloring);
    for (int j = 0; j < d.n; ++j)
        for (std::uint64_t m = out[static_cast<std::size_t>(j)]; m; m &= m - 1) d.arcs.emplace_back(j, std::countr_zero(m));
    return d;
}

bool is_acyclic(const DependencyDigraph & digraph)
{
    const auto n = static_cast<std::size_t>(digraph.n);
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indegree(n, 0);
    for (auto [a, b] : digraph.arcs) {
        succ[static_cast<std::size_t>(a)].push_back(b);
        ++indegree[static_cast<std::size_t>(b)];
    }
    std::vector<int> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
    std::size_t removed = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++removed;
        for (int w : succ[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
    return removed == n;
}

bool is_admissible(const OrderedColoring & coloring)
{
    auto out = dependency_out_masks(coloring);
    return acyclic_masks(out, coloring.vertex_mask());
}

std::optional<std::vector<int>> dependency_topological_order(const OrderedColoring & coloring)
{
    auto out = dependency_out_masks(coloring);
    std::uint64_t remaining = coloring.vertex_mask();
    std::vector<int> order;
    while (remaining) {
        std::uint64_t incoming = 0;
        for (std::uint64_t m = remaining; m; m &= m - 1) incoming |= out[static_cast<std::size_t>(std::countr_zero(m))];
        std::uint64_t sources = remaining & ~incoming;
        if (!sources) return std::nullopt;
        int v = std::countr_zero(sources);
        order.push_back(v);
        remaining &= ~bit(v);
    }
    return order;
}

SubsetColoring induce(const OrderedColoring & coloring, std::span<const int> vertices)
{
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        if (vertices[a] < 0 || vertices[a] >= coloring.size())
            throw InvalidInput("vertex " + std::to_string(vertices[a]) + " out of range");
        if (a > 0 && vertices[a] <= vertices[a - 1]) throw InvalidInput("vertex list must be strictly increasing");
    }
    SubsetColoring sub{std::vector<int>(vertices.begin(), vertices.end()), OrderedColoring(static_cast<int>(vertices.size()))};
    for (std::size_t b = 1; b < vertices.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (coloring.is_red(vertices[a], vertices[b])) sub.coloring.set_color(static_cast<int>(a), static_cast<int>(b), Color::Red);
    return sub;
}

std::uint32_t induced_pattern(const OrderedColoring & coloring, std::uint64_t subset)
{
    std::array<int, OrderedColoring::kMaxVertices> v{};
    int k = 0;
    for (std::uint64_t m = subset; m; m &= m - 1) v[static_cast<std::size_t>(k++)] = std::countr_zero(m);
    std::uint32_t pattern = 0;
    int bitpos = 0;
    for (int b = 1; b < k; ++b)
        for (int a = 0; a < b; ++a, ++bitpos)
            if (coloring.is_red(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)])) pattern |= std::uint32_t{1} << bitpos;
    return pattern;
}

AdmissibilityTable::AdmissibilityTable(int k) : k_(k)
{
    const int pairs = k * (k - 1) / 2;
    verdict_.assign(std::size_t{1} << pairs, 0);
    for (std::uint32_t pattern = 0; pattern < verdict_.size(); ++pattern) {
        OrderedColoring c(k);
        int bitpos = 0;
        for (int b = 1; b < k; ++b)
            for (int a = 0; a < b; ++a, ++bitpos)
                if ((pattern >> bitpos) & 1U) c.set_color(a, b, Color::Red);
        verdict_[pattern] = is_admissible(c) ? 1 : 0;
    }
}

const AdmissibilityTable & AdmissibilityTable::get(int k)
{
    if (k < 1 || k > kMaxK) throw InvalidInput("admissibility table supports 1 <= k <= " + std::to_string(kMaxK));
    static std::array<std::once_flag, kMaxK + 1> once;
    static std::array<const AdmissibilityTable *, kMaxK + 1> tables{};
    std::call_once(once[static_cast<std::size_t>(k)], [k] { tables[static_cast<std::size_t>(k)] = new AdmissibilityTable(k); });
    return *tables[static_cast<std::size_t>(k)];
}

std::optional<std::vector<int>> has_admissible_subset(const OrderedColoring & coloring, int k)
{
    const int n = coloring.size();
    if (k < 1 || k > n) throw InvalidInput("subset size " + std::to_string(k) + " outside 1.." + std::to_string(n));

    auto to_list = [](std::uint64_t mask) {
        std::vector<int> out;
        for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
        return out;
    };

    const std::uint64_t last = k == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1) << (n - k);
    const AdmissibilityTable * table = k <= AdmissibilityTable::kMaxK ? &AdmissibilityTable::get(k) : nullptr;
    std::unordered_map<std::uint64_t, bool> memo;

    for (std::uint64_t subset = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;; subset = next_combination(subset)) {
        bool ok;
        if (table) {
            ok = table->admissible(induced_pattern(coloring, subset));
        }
        else {
            auto vertices = to_list(subset);
            auto sub = induce(coloring, vertices).coloring;
            if (k <= 11) {
                std::uint64_t key = 0;
                int bitpos = 0;
                for (int b = 1; b < k; ++b)
                    for (int a = 0; a < b; ++a, ++bitpos)
                        if (sub.is_red(a, b)) key |= std::uint64_t{1} << bitpos;
                auto [it, inserted] = memo.try_emplace(key, false);
                if (inserted) it->second = is_admissible(sub);
                ok = it->second;
            }
            else {
                ok = is_admissible(sub);
            }
        }
        if (ok) return to_list(subset);
        if (subset == last) break;
    }
    return std::nullopt;
}

} // namespace blowup
