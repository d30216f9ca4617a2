#pragma once

// Literal reference implementations, used as oracles.

#include "blowup/coloring.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace ref {

// Three nested loops straight from the definition, on 1-based labels.
inline std::set<std::pair<int, int>> dependency_arcs(const blowup::OrderedColoring & c)
{
    std::set<std::pair<int, int>> arcs;
    const int n = c.size();
    auto red = [&](int a, int b) { return c.is_red(a - 1, b - 1); };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            if (red(i, i + 1) && !red(i, j) && !red(i + 1, j)) {
                arcs.insert({j, i});
                arcs.insert({j, i + 1});
            }
        }
    return arcs;
}

// Cycle detection by repeated removal of sinks.
inline bool acyclic(int n, const std::set<std::pair<int, int>> & arcs)
{
    std::vector<bool> gone(static_cast<std::size_t>(n + 1), false);
    for (int round = 0; round < n; ++round) {
        int sink = -1;
        for (int v = 1; v <= n && sink < 0; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            bool has_out = false;
            for (auto [a, b] : arcs)
                if (a == v && !gone[static_cast<std::size_t>(b)]) has_out = true;
            if (!has_out) sink = v;
        }
        if (sink < 0) return false;
        gone[static_cast<std::size_t>(sink)] = true;
    }
    return true;
}

inline bool admissible(const blowup::OrderedColoring & c) { return acyclic(c.size(), dependency_arcs(c)); }

inline blowup::OrderedColoring restrict_to(const blowup::OrderedColoring & c, const std::vector<int> & vs)
{
    blowup::OrderedColoring out(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (c.is_red(vs[a], vs[b])) out.set_color(static_cast<int>(a), static_cast<int>(b), blowup::Color::Red);
    return out;
}

// Every k-subset, by bitmask.
inline bool has_admissible_k_subset(const blowup::OrderedColoring & c, int k)
{
    const int n = c.size();
    for (unsigned m = 0; m < (1U << n); ++m) {
        if (__builtin_popcount(m) != k) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1U) vs.push_back(v);
        if (admissible(restrict_to(c, vs))) return true;
    }
    return false;
}

inline blowup::OrderedColoring from_code(int n, std::uint64_t code)
{
    blowup::OrderedColoring c(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (code >> bit & 1U) c.set_color(i, j, blowup::Color::Red);
    return c;
}

} // namespace ref
