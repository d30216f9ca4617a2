#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace blowup {

/// Fixed-length dynamic bitset used for adjacency rows and vertex sets.
/// Operations between two bitsets assume equal length.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    static Bitset full(std::size_t bits)
    {
        Bitset b(bits);
        for (auto & w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t * data() const { return words_.data(); }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    void clear()
    {
        for (auto & w : words_) w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const { return next(0); }

    /// Lowest set bit with index >= from, or size() when none.
    std::size_t next(std::size_t from) const
    {
        if (from >= bits_) return bits_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return bits_;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    Bitset & operator&=(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset & operator|=(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset & operator^=(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset & subtract(const Bitset & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    Bitset operator~() const
    {
        Bitset r = *this;
        for (auto & w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    friend Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset & b) { return a ^= b; }

    /// |a & b| without allocating.
    static std::size_t intersection_count(const Bitset & a, const Bitset & b)
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    /// |a ^ b| without allocating.
    static std::size_t difference_count(const Bitset & a, const Bitset & b)
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
        return c;
    }

    bool is_subset_of(const Bitset & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Keeps only bits with index > i.
    void keep_above(std::size_t i)
    {
        std::size_t wi = i >> 6;
        for (std::size_t j = 0; j < wi && j < words_.size(); ++j) words_[j] = 0;
        if (wi < words_.size()) {
            std::size_t sh = (i & 63) + 1;
            words_[wi] &= sh == 64 ? 0 : (~std::uint64_t{0} << sh);
        }
    }

    bool operator==(const Bitset &) const = default;

    std::size_t hash() const
    {
        std::size_t h = bits_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim()
    {
        if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset & b) const { return b.hash(); }
};

} // namespace blowup
