#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#if defined(__GNUC__) || defined(__clang__)
#define WELLCOV_POPCOUNT64(x) __builtin_popcountll(x)
#define WELLCOV_CTZ64(x) __builtin_ctzll(x)
#else
#include <bit>
#define WELLCOV_POPCOUNT64(x) std::popcount(x)
#define WELLCOV_CTZ64(x) std::countr_zero(x)
#endif

namespace wellcov {

/// Fixed-capacity bitset sized at runtime. This is the workhorse of the
/// exponential-time recognizers, so everything stays inline.
class DynamicBitset {
public:
    DynamicBitset() = default;

    explicit DynamicBitset(int n) : size_(n), words_((n + 63) / 64, 0) {}

    int size() const noexcept { return size_; }

    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }

    void reset(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void set_all() {
        if (size_ == 0) return;
        for (auto& w : words_) w = ~std::uint64_t{0};
        int spare = static_cast<int>(words_.size()) * 64 - size_;
        if (spare > 0) words_.back() >>= spare;
    }

    int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += WELLCOV_POPCOUNT64(w);
        return c;
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const noexcept { return !any(); }

    bool intersects(const DynamicBitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const DynamicBitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    DynamicBitset& operator&=(const DynamicBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    DynamicBitset& operator|=(const DynamicBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// In-place this &= ~o.
    DynamicBitset& subtract(const DynamicBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) {
        a &= b;
        return a;
    }

    friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) {
        a |= b;
        return a;
    }

    friend bool operator==(const DynamicBitset& a, const DynamicBitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    /// Index of the lowest set bit, or -1 if none.
    int find_first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + WELLCOV_CTZ64(words_[i]));
        return -1;
    }

    /// Index of the lowest set bit strictly above i, or -1 if none.
    int find_next(int i) const {
        ++i;
        if (i >= size_) return -1;
        std::size_t wi = static_cast<std::size_t>(i) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + WELLCOV_CTZ64(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + WELLCOV_CTZ64(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_set([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace wellcov
