#include "blowup/paths.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace blowup {

namespace {

// Number of set bits of b in [lo, hi], stopping early once `cap` is reached.
int count_range(const Bitset & b, int lo, int hi, int cap)
{
    int c = 0;
    for (std::size_t v = b.next(static_cast<std::size_t>(lo)); v <= static_cast<std::size_t>(hi) && v < b.size(); v = b.next(v + 1))
        if (++c >= cap) break;
    return c;
}

class PathSearcher {
public:
    PathSearcher(const OrderedGraph & g, int m, std::uint64_t budget) :
        g_(g), m_(m), budget_(budget), intervals_(clique_intervals(g))
    {
        interval_of_.resize(static_cast<std::size_t>(g.size()));
        for (std::size_t i = 0; i < intervals_.size(); ++i)
            for (int v = intervals_[i].first; v <= intervals_[i].second; ++v) interval_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }

    PathSearchResult run()
    {
        PathSearchResult result;
        const int n = g_.size();
        Bitset forbidden(static_cast<std::size_t>(n));
        for (int v = 0; v < n && result.status == SearchStatus::None; ++v) {
            path_.assign(1, v);
            if (!charge()) {
                result.status = SearchStatus::Timeout;
                break;
            }
            result.status = extend(forbidden);
        }
        result.nodes = nodes_;
        if (result.status == SearchStatus::Found) result.vertices = path_;
        return result;
    }

private:
    bool charge() { return ++nodes_ <= budget_; }

    // Upper bound on how many more path vertices fit above `last` given the allowed set.
    int capacity(const Bitset & allowed, int last, bool last_shares_interval, int needed) const
    {
        int cap = 0;
        const int li = interval_of_[static_cast<std::size_t>(last)];
        if (!last_shares_interval) cap += count_range(allowed, last + 1, intervals_[static_cast<std::size_t>(li)].second, 1);
        for (std::size_t i = static_cast<std::size_t>(li) + 1; i < intervals_.size() && cap < needed; ++i)
            cap += count_range(allowed, intervals_[i].first, intervals_[i].second, 2);
        return cap;
    }

    SearchStatus extend(const Bitset & forbidden)
    {
        const int len = static_cast<int>(path_.size());
        if (len == m_) return SearchStatus::Found;
        const int last = path_.back();
        const int needed = m_ - len;

        Bitset allowed = ~forbidden;
        allowed.keep_above(static_cast<std::size_t>(last));
        Bitset cand = allowed & g_.neighbors(last);
        if (cand.none()) return SearchStatus::None;
        if (needed == 1) {
            path_.push_back(static_cast<int>(cand.first()));
            return SearchStatus::Found;
        }
        const bool shares = len >= 2 && interval_of_[static_cast<std::size_t>(path_[static_cast<std::size_t>(len - 2)])] == interval_of_[static_cast<std::size_t>(last)];
        if (capacity(allowed, last, shares, needed) < needed) return SearchStatus::None;

        Bitset next_forbidden = forbidden | g_.neighbors(last);
        for (std::size_t c = cand.first(); c < cand.size(); c = cand.next(c + 1)) {
            if (!charge()) return SearchStatus::Timeout;
            path_.push_back(static_cast<int>(c));
            auto s = extend(next_forbidden);
            if (s != SearchStatus::None) return s;
            path_.pop_back();
        }
        return SearchStatus::None;
    }

    const OrderedGraph & g_;
    int m_;
    std::uint64_t budget_;
    std::vector<std::pair<int, int>> intervals_;
    std::vector<int> interval_of_;
    std::vector<int> path_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Timeout: return "timeout";
    }
    return "unknown";
}

bool is_induced_monotone_path(const OrderedGraph & g, std::span<const int> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.size()) return false;
        if (i > 0 && vertices[i] <= vertices[i - 1]) return false;
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]) != (j == i + 1)) return false;
    return true;
}

std::vector<std::pair<int, int>> clique_intervals(const OrderedGraph & g)
{
    std::vector<std::pair<int, int>> out;
    const int n = g.size();
    int start = 0;
    while (start < n) {
        int end = start;
        while (end + 1 < n) {
            const auto & row = g.neighbors(end + 1);
            bool all = true;
            for (int v = start; v <= end && all; ++v) all = row.test(static_cast<std::size_t>(v));
            if (!all) break;
            ++end;
        }
        out.emplace_back(start, end);
        start = end + 1;
    }
    return out;
}

PathSearchResult find_induced_monotone_path(const OrderedGraph & g, int m, std::uint64_t node_budget)
{
    if (m < 1) throw InvalidInput("path length must be positive");
    if (g.size() == 0) return {};
    return PathSearcher(g, m, node_budget).run();
}

std::optional<std::vector<int>> embed_monotone_path(const OrderedGraph & g,
    const std::vector<std::vector<int>> & candidate_sets, const OrderedColoring & pattern)
{
    const int k = pattern.size();
    if (k < 1) throw InvalidInput("pattern coloring must have at least one vertex");
    if (static_cast<int>(candidate_sets.size()) != 2 * k) throw InvalidInput("need exactly 2k candidate sets");
    auto topo = dependency_topological_order(pattern);
    if (!topo) throw InvalidInput("pattern coloring is not admissible");

    int previous_max = -1;
    for (const auto & set : candidate_sets) {
        if (set.empty()) return std::nullopt;
        for (int v : set)
            if (v < 0 || v >= g.size()) throw InvalidInput("candidate vertex out of range");
        auto [lo, hi] = std::minmax_element(set.begin(), set.end());
        if (*lo <= previous_max) throw InvalidInput("candidate sets must be ordered and disjoint");
        previous_max = *hi;
    }

    const int slots = 2 * k;
    std::vector<Bitset> cand;
    for (const auto & set : candidate_sets) cand.push_back(to_bitset(set, g.size()));
    std::vector<int> x(static_cast<std::size_t>(slots), -1);

    auto restricted = [&](int slot, int placed_slot, int v) {
        Bitset r = cand[static_cast<std::size_t>(slot)];
        if (std::abs(slot - placed_slot) == 1) r &= g.neighbors(v);
        else r.subtract(g.neighbors(v));
        return r;
    };
    auto place = [&](int slot, int v) {
        x[static_cast<std::size_t>(slot)] = v;
        for (int i = 0; i < slots; ++i)
            if (x[static_cast<std::size_t>(i)] < 0) cand[static_cast<std::size_t>(i)] = restricted(i, slot, v);
    };
    // Smallest open candidate set left after placing u at slot p and v at slot q.
    auto score = [&](int p, int u, int q, int v) {
        std::size_t worst = std::numeric_limits<std::size_t>::max();
        for (int i = 0; i < slots; ++i) {
            if (x[static_cast<std::size_t>(i)] >= 0 || i == p || i == q) continue;
            Bitset r = cand[static_cast<std::size_t>(i)];
            if (std::abs(i - p) == 1) r &= g.neighbors(u);
            else r.subtract(g.neighbors(u));
            if (std::abs(i - q) == 1) r &= g.neighbors(v);
            else r.subtract(g.neighbors(v));
            worst = std::min(worst, r.count());
        }
        return worst;
    };

    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>((*topo)[static_cast<std::size_t>(i)])] = i;
    std::vector<int> pairs;
    for (int a = 0; a + 1 < k; ++a) pairs.push_back(a);
    std::stable_sort(pairs.begin(), pairs.end(), [&](int a, int b) {
        return std::min(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(a + 1)])
            < std::min(pos[static_cast<std::size_t>(b)], pos[static_cast<std::size_t>(b + 1)]);
    });

    constexpr std::size_t kMaxFirstChoices = 64;
    for (int a : pairs) {
        const int p = 2 * a + 1;
        const int q = p + 1;
        const auto & cp = cand[static_cast<std::size_t>(p)];
        const auto & cq = cand[static_cast<std::size_t>(q)];

        std::vector<std::pair<std::size_t, int>> firsts; // (degree into partner set, vertex)
        cp.for_each([&](std::size_t u) { firsts.emplace_back(Bitset::intersection_count(g.neighbors(static_cast<int>(u)), cq), static_cast<int>(u)); });
        std::stable_sort(firsts.begin(), firsts.end(), [](auto & l, auto & r) { return l.first > r.first; });
        if (firsts.empty() || firsts.front().first == 0) return std::nullopt;
        if (!pattern.is_red(a, a + 1)) firsts.resize(1);
        else if (firsts.size() > kMaxFirstChoices) firsts.resize(kMaxFirstChoices);

        int best_u = -1, best_v = -1;
        std::size_t best_score = 0;
        for (auto [deg, u] : firsts) {
            if (deg == 0) break;
            Bitset partners = cq & g.neighbors(u);
            partners.for_each([&](std::size_t v) {
                std::size_t s = score(p, u, q, static_cast<int>(v));
                if (best_u < 0 || s > best_score) {
                    best_u = u;
                    best_v = static_cast<int>(v);
                    best_score = s;
                }
            });
        }
        if (best_u < 0) return std::nullopt;
        place(p, best_u);
        place(q, best_v);
    }

    const int first = 0, last = slots - 1;
    const bool ends_adjacent = slots == 2;
    bool placed = false;
    cand[static_cast<std::size_t>(first)].for_each([&](std::size_t u) {
        if (placed) return;
        Bitset options = cand[static_cast<std::size_t>(last)];
        if (ends_adjacent) options &= g.neighbors(static_cast<int>(u));
        else options.subtract(g.neighbors(static_cast<int>(u)));
        if (options.any()) {
            x[static_cast<std::size_t>(first)] = static_cast<int>(u);
            x[static_cast<std::size_t>(last)] = static_cast<int>(options.first());
            placed = true;
        }
    });
    if (!placed) return std::nullopt;
    if (!is_induced_monotone_path(g, x)) throw InvariantViolation("embedded path failed verification");
    return x;
}

} // namespace blowup
