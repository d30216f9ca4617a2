#include "blowup/density.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

namespace blowup {

namespace {

std::uint64_t count_from(const OrderedGraph & g, const Bitset & cand, int remaining)
{
    if (remaining == 1) return cand.count();
    std::uint64_t total = 0;
    cand.for_each([&](std::size_t v) {
        Bitset next = cand & g.neighbors(static_cast<int>(v));
        next.keep_above(v);
        if (next.count() >= static_cast<std::size_t>(remaining - 1)) total += count_from(g, next, remaining - 1);
    });
    return total;
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t kChunk = 4096;

std::uint64_t sample_chunk(const OrderedGraph & g, int r, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count)
{
    std::mt19937_64 rng(splitmix(seed ^ splitmix(chunk)));
    const int n = g.size();
    std::vector<int> pick;
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
        // Floyd's algorithm
        pick.clear();
        for (int j = n - r; j < n; ++j) {
            int t = std::uniform_int_distribution<int>(0, j)(rng);
            if (std::find(pick.begin(), pick.end(), t) == pick.end()) pick.push_back(t);
            else pick.push_back(j);
        }
        bool clique = true;
        for (std::size_t a = 0; a < pick.size() && clique; ++a)
            for (std::size_t b = a + 1; b < pick.size() && clique; ++b) clique = g.adjacent(pick[a], pick[b]);
        hits += clique;
    }
    return hits;
}

} // namespace

double binomial(int n, int r)
{
    if (r < 0 || r > n) return 0.0;
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0));
}

double hoeffding_halfwidth(std::uint64_t n)
{
    if (n == 0) return 1.0;
    return std::sqrt(std::log(200.0) / (2.0 * static_cast<double>(n)));
}

std::uint64_t count_cliques(const OrderedGraph & g, int r)
{
    if (r < 1 || r > g.size()) return 0;
    return count_from(g, g.vertex_set(), r);
}

DensityEstimate clique_density(const OrderedGraph & g, int r, const DensityOptions & opt)
{
    const int n = g.size();
    if (r < 1 || r > n) throw InvalidInput("clique size must satisfy 1 <= r <= n");
    DensityEstimate est;
    est.r = r;
    est.seed = opt.seed;
    const double total = std::round(binomial(n, r));
    if (opt.mode == DensityMode::Exact) {
        if (total > opt.exact_cap) throw InvalidInput("C(n, r) above the exact counting cap");
        est.exact = true;
        est.point = static_cast<double>(count_cliques(g, r)) / total;
        return est;
    }
    if (opt.samples == 0) throw InvalidInput("sample count must be positive");

    const std::uint64_t chunks = (opt.samples + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> hits(chunks, 0);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t count = std::min(kChunk, opt.samples - c * kChunk);
            hits[c] = sample_chunk(g, r, opt.seed, c, count);
        }
    };
    const int workers = std::max(1, std::min<int>(opt.workers, static_cast<int>(chunks)));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto & t : pool) t.join();

    std::uint64_t sum = 0;
    for (auto h : hits) sum += h;
    est.samples = opt.samples;
    est.point = static_cast<double>(sum) / static_cast<double>(opt.samples);
    est.ci_halfwidth = hoeffding_halfwidth(opt.samples);
    return est;
}

} // namespace blowup
