#include "blowup/ramsey_search.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <ctime>
#include <limits>
#include <mutex>
#include <thread>

namespace blowup {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint32_t compress(std::uint64_t value, std::uint64_t mask)
{
    std::uint32_t out = 0;
    int i = 0;
    for (; mask; mask &= mask - 1, ++i) out |= static_cast<std::uint32_t>((value >> std::countr_zero(mask)) & 1U) << i;
    return out;
}

constexpr int pairs_of(int j) { return j * (j - 1) / 2; }

struct Deadline {
    std::optional<Clock::time_point> at;
    std::atomic<bool> * stop = nullptr;

    bool expired() const
    {
        if (stop->load(std::memory_order_relaxed)) return true;
        if (at && Clock::now() >= *at) {
            stop->store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
};

// Depth-first extension search over colorings of 0..n-1. For every subset size
// j < k it keeps the j-subsets of the current prefix together with their color
// pattern, so that testing an extension only touches (k-1)-subsets.
class LevelSearcher {
public:
    enum class Outcome { Exhausted, Found, Stopped };

    LevelSearcher(int n, int k, const Deadline & deadline) :
        n_(n), k_(k), table_(&AdmissibilityTable::get(k)), deadline_(deadline)
    {
        subsets_[0].push_back({0, 0, k == 1 ? 1U : 0U});
    }

    void load_prefix(const OrderedColoring & prefix)
    {
        for (int v = 0; v < prefix.size(); ++v) push(prefix.red_row(v) & (bit(v) - 1));
    }

    int depth() const { return static_cast<int>(rows_.size()); }

    OrderedColoring current() const
    {
        OrderedColoring c(0);
        for (auto r : rows_) c = c.with_vertex(r);
        return c;
    }

    /// Completes the current prefix to n vertices. On Found, current() is the counterexample.
    Outcome complete() { return dfs(n_, nullptr); }

    /// Enumerates surviving prefixes of the given length in search order.
    Outcome collect(int length, std::vector<OrderedColoring> & out) { return dfs(length, &out); }

    const SearchStats & stats() const { return stats_; }

private:
    struct Entry {
        std::uint64_t mask;
        std::uint32_t pattern;
        std::uint64_t admissible_extensions; // bit c set: adding a vertex with compressed red mask c is admissible
    };

    bool extension_ok(std::uint64_t red)
    {
        const auto & top = subsets_[static_cast<std::size_t>(k_ - 1)];
        for (const auto & e : top) {
            ++stats_.subset_checks;
            if ((e.admissible_extensions >> compress(red, e.mask)) & 1U) return false;
        }
        return true;
    }

    void push(std::uint64_t red)
    {
        const int m = depth();
        std::array<std::size_t, 8> sizes{};
        for (int j = 0; j < k_; ++j) sizes[static_cast<std::size_t>(j)] = subsets_[static_cast<std::size_t>(j)].size();
        marks_.push_back(sizes);
        for (int j = k_ - 1; j >= 1; --j) {
            auto & src = subsets_[static_cast<std::size_t>(j - 1)];
            auto & dst = subsets_[static_cast<std::size_t>(j)];
            const std::size_t count = sizes[static_cast<std::size_t>(j - 1)];
            for (std::size_t idx = 0; idx < count; ++idx) {
                const Entry & e = src[idx];
                Entry added{e.mask | bit(m), e.pattern | (compress(red, e.mask) << pairs_of(j - 1)), 0};
                if (j == k_ - 1) added.admissible_extensions = extensions_of(added.pattern);
                dst.push_back(added);
            }
        }
        rows_.push_back(red);
    }

    void pop()
    {
        const auto & sizes = marks_.back();
        for (int j = 0; j < k_; ++j) subsets_[static_cast<std::size_t>(j)].resize(sizes[static_cast<std::size_t>(j)]);
        marks_.pop_back();
        rows_.pop_back();
    }

    std::uint64_t extensions_of(std::uint32_t pattern) const
    {
        std::uint64_t mask = 0;
        const int shift = pairs_of(k_ - 1);
        for (std::uint32_t c = 0; c < (1U << (k_ - 1)); ++c)
            if (table_->admissible(pattern | (c << shift))) mask |= std::uint64_t{1} << c;
        return mask;
    }

    Outcome dfs(int length, std::vector<OrderedColoring> * collected)
    {
        const int m = depth();
        if (m == length) {
            if (collected) {
                collected->push_back(current());
                return Outcome::Exhausted;
            }
            return Outcome::Found;
        }
        const std::uint64_t limit = bit(m);
        for (std::uint64_t red = 0; red < limit; ++red) {
            if ((++ticks_ & 0xFFF) == 0 && deadline_.expired()) return Outcome::Stopped;
            if (!extension_ok(red)) {
                ++stats_.prunes;
                continue;
            }
            ++stats_.nodes;
            push(red);
            Outcome o = dfs(length, collected);
            if (o != Outcome::Exhausted) return o; // keep the prefix on Found so current() reports it
            pop();
        }
        return Outcome::Exhausted;
    }

    int n_;
    int k_;
    const AdmissibilityTable * table_;
    const Deadline & deadline_;
    std::array<std::vector<Entry>, 8> subsets_;
    std::vector<std::array<std::size_t, 8>> marks_;
    std::vector<std::uint64_t> rows_;
    SearchStats stats_;
    std::uint64_t ticks_ = 0;
};

void check_level_args(int n, int k)
{
    if (k < 1 || k > AdmissibilityTable::kMaxK)
        throw InvalidInput("level search supports 1 <= k <= " + std::to_string(AdmissibilityTable::kMaxK));
    if (n < k || n > OrderedColoring::kMaxVertices)
        throw InvalidInput("level search needs k <= N <= 64, got N=" + std::to_string(n));
}

LevelResult run_items(int n, int k, std::vector<OrderedColoring> items, std::uint64_t already_completed,
    const SearchOptions & options, const Deadline & deadline, SearchStats base_stats, Clock::time_point started)
{
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{none};
    std::vector<std::uint8_t> completed(items.size(), 0);
    std::vector<std::optional<OrderedColoring>> found(items.size());
    std::mutex stats_mutex;
    SearchStats stats = base_stats;
    stats.frontier_items = already_completed + items.size();

    auto worker = [&] {
        SearchStats local;
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= items.size() || idx > best.load() || deadline.expired()) break;
            LevelSearcher searcher(n, k, deadline);
            searcher.load_prefix(items[idx]);
            auto outcome = searcher.complete();
            local += searcher.stats();
            if (outcome == LevelSearcher::Outcome::Found) {
                found[idx] = searcher.current();
                completed[idx] = 1;
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {}
            }
            else if (outcome == LevelSearcher::Outcome::Exhausted) {
                completed[idx] = 1;
            }
        }
        std::lock_guard lock(stats_mutex);
        stats += local;
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto & t : pool) t.join();
    }

    LevelResult result;
    std::uint64_t done = already_completed;
    for (auto c : completed) done += c;
    stats.frontier_completed = done;
    stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    result.stats = stats;

    if (best.load() != none) {
        result.status = LevelStatus::Counterexample;
        result.counterexample = found[best.load()];
        return result;
    }
    bool all_done = std::all_of(completed.begin(), completed.end(), [](auto c) { return c != 0; });
    if (all_done) {
        result.status = LevelStatus::Holds;
        return result;
    }
    result.status = LevelStatus::Timeout;
    FrontierSnapshot snap{n, k, done, {}};
    for (std::size_t i = 0; i < items.size(); ++i)
        if (!completed[i]) snap.pending.push_back(std::move(items[i]));
    result.frontier = std::move(snap);
    return result;
}

std::optional<Clock::time_point> deadline_from(const SearchOptions & options, Clock::time_point start)
{
    if (!options.budget) return std::nullopt;
    return start + std::chrono::duration_cast<Clock::duration>(*options.budget);
}

} // namespace

SearchStats & SearchStats::operator+=(const SearchStats & o)
{
    nodes += o.nodes;
    prunes += o.prunes;
    subset_checks += o.subset_checks;
    return *this;
}

std::string to_string(LevelStatus s)
{
    switch (s) {
    case LevelStatus::Holds: return "holds";
    case LevelStatus::Counterexample: return "counterexample";
    case LevelStatus::Timeout: return "timeout";
    }
    return "unknown";
}

LevelResult verify_level(int n, int k, const SearchOptions & options)
{
    check_level_args(n, k);
    const auto started = Clock::now();
    std::atomic<bool> stop{false};
    Deadline deadline{deadline_from(options, started), &stop};

    const int split = std::clamp(options.split_vertices, 0, n);
    std::vector<OrderedColoring> items;
    LevelSearcher splitter(n, k, deadline);
    auto outcome = splitter.collect(split, items);
    SearchStats base = splitter.stats();
    if (outcome == LevelSearcher::Outcome::Stopped) {
        LevelResult r;
        r.status = LevelStatus::Timeout;
        r.frontier = FrontierSnapshot{n, k, 0, {OrderedColoring(0)}};
        r.stats = base;
        r.stats.frontier_items = 1;
        r.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
        return r;
    }
    return run_items(n, k, std::move(items), 0, options, deadline, base, started);
}

LevelResult resume_level(const FrontierSnapshot & snapshot, const SearchOptions & options)
{
    check_level_args(snapshot.n, snapshot.k);
    for (const auto & p : snapshot.pending)
        if (p.size() > snapshot.n) throw InvalidInput("frontier prefix longer than the level");
    const auto started = Clock::now();
    std::atomic<bool> stop{false};
    Deadline deadline{deadline_from(options, started), &stop};
    return run_items(snapshot.n, snapshot.k, snapshot.pending, snapshot.completed, options, deadline, {}, started);
}

RamseyResult compute_f(int k, const SearchOptions & options)
{
    if (k < 1) throw InvalidInput("k must be positive");
    const auto started = Clock::now();
    RamseyResult result;
    result.k = k;
    result.lower_bound = k;
    for (int n = k; n <= OrderedColoring::kMaxVertices; ++n) {
        SearchOptions level_opts = options;
        if (options.budget) {
            auto left = *options.budget - (Clock::now() - started);
            if (left <= std::chrono::duration<double>::zero()) break;
            level_opts.budget = left;
        }
        auto level = verify_level(n, k, level_opts);
        result.stats += level.stats;
        result.stats.frontier_items += level.stats.frontier_items;
        result.stats.frontier_completed += level.stats.frontier_completed;
        if (level.status == LevelStatus::Holds) {
            result.f_value = n;
            break;
        }
        if (level.status == LevelStatus::Counterexample) {
            result.witness = level.counterexample;
            result.levels_with_counterexample.push_back(n);
            result.lower_bound = n + 1;
            continue;
        }
        result.frontier = level.frontier;
        break;
    }
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return result;
}

WitnessCertificate make_certificate(int k, const OrderedColoring & coloring)
{
    std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return {k, coloring.size(), coloring, buf, kCheckerVersion};
}

bool check_certificate(const WitnessCertificate & cert)
{
    if (cert.n != cert.coloring.size())
        throw InvalidInput("certificate n=" + std::to_string(cert.n) + " disagrees with coloring size " + std::to_string(cert.coloring.size()));
    if (cert.k < 1 || cert.k > cert.n) throw InvalidInput("certificate k outside 1..n");

    std::vector<int> subset(static_cast<std::size_t>(cert.k));
    for (int i = 0; i < cert.k; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (is_acyclic(dependency_digraph(induce(cert.coloring, subset).coloring))) return false;
        int i = cert.k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == cert.n - cert.k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < cert.k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

BlueLayerDecomposition blue_layers(const OrderedColoring & coloring)
{
    const int n = coloring.size();
    BlueLayerDecomposition d;
    d.sigma.assign(static_cast<std::size_t>(n), 1);
    for (int v = n - 1; v >= 0; --v)
        for (std::uint64_t m = coloring.blue_row(v) & ~(bit(v + 1) - 1); m; m &= m - 1)
            d.sigma[static_cast<std::size_t>(v)] = std::max(d.sigma[static_cast<std::size_t>(v)], d.sigma[static_cast<std::size_t>(std::countr_zero(m))] + 1);
    int top = n == 0 ? 0 : *std::max_element(d.sigma.begin(), d.sigma.end());
    d.layers.assign(static_cast<std::size_t>(top), {});
    for (int v = 0; v < n; ++v) d.layers[static_cast<std::size_t>(d.sigma[static_cast<std::size_t>(v)] - 1)].push_back(v);
    return d;
}

std::optional<std::vector<int>> blue_layer_subset(const OrderedColoring & coloring, int k)
{
    const int n = coloring.size();
    if (k < 1 || k > n) return std::nullopt;
    const auto d = blue_layers(coloring);

    // Longest blue path from v, following the smallest successor one layer down.
    auto blue_path = [&](int v, int length) {
        std::vector<int> path{v};
        while (static_cast<int>(path.size()) < length) {
            int cur = path.back();
            for (std::uint64_t m = coloring.blue_row(cur) & ~(bit(cur + 1) - 1); m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (d.sigma[static_cast<std::size_t>(w)] == d.sigma[static_cast<std::size_t>(cur)] - 1) {
                    path.push_back(w);
                    break;
                }
            }
        }
        return path;
    };

    auto checked = [&](std::vector<int> subset) {
        if (!is_admissible(induce(coloring, subset).coloring))
            throw InvariantViolation("blue-layer subset is not admissible");
        return subset;
    };

    for (int v = 0; v < n; ++v)
        if (d.sigma[static_cast<std::size_t>(v)] >= k) return checked(blue_path(v, k));

    for (int t = 1; t < k && t <= static_cast<int>(d.layers.size()); ++t) {
        const auto & layer = d.layers[static_cast<std::size_t>(t - 1)];
        const int need = k + 1 - t;
        if (static_cast<int>(layer.size()) < need) continue;
        std::vector<int> subset(layer.begin(), layer.begin() + need);
        auto path = blue_path(subset.back(), t);
        subset.insert(subset.end(), path.begin() + 1, path.end());
        return checked(std::move(subset));
    }
    return std::nullopt;
}

} // namespace blowup
