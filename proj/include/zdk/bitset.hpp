#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "zdk/error.hpp"

namespace zdk {

/// Fixed-width bitset; the width is chosen at construction and never changes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static Bitset full(std::size_t width) {
        Bitset b(width);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t width() const noexcept { return width_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// |this & other| without materializing the intersection.
    std::size_t count_and(const Bitset& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool intersects(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset complement() const {
        Bitset b(width_);
        for (std::size_t i = 0; i < words_.size(); ++i) b.words_[i] = ~words_[i];
        b.trim();
        return b;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Index of the first set bit at or after `from`, or width() if none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= width_) return width_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return width_;
            w = words_[wi];
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = next(0); i < width_; i = next(i + 1)) out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = next(0); i < width_; i = next(i + 1)) f(i);
    }

private:
    void trim() noexcept {
        if (width_ & 63) words_.back() &= (std::uint64_t{1} << (width_ & 63)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace zdk
