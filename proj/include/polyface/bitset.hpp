#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace polyface {

// Dynamic bitset tuned for the order/incidence queries this library lives on:
// word-parallel and/or, popcount, subset test, and iteration over set bits.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t j = 0; j < w_.size(); ++j) w_[j] |= o.w_[j];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t j = 0; j < w_.size(); ++j) w_[j] &= o.w_[j];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t j = 0; j < w_.size(); ++j) w_[j] ^= o.w_[j];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t j = 0; j < w_.size(); ++j)
            if (w_[j] & ~o.w_[j]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t j = 0; j < w_.size(); ++j)
            if (w_[j] & o.w_[j]) return true;
        return false;
    }
    static std::size_t and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < a.w_.size(); ++j)
            c += static_cast<std::size_t>(std::popcount(a.w_[j] & b.w_[j]));
        return c;
    }

    /// Index of the lowest set bit, or -1 if empty.
    int first() const {
        for (std::size_t j = 0; j < w_.size(); ++j)
            if (w_[j]) return static_cast<int>(j * 64 + std::countr_zero(w_[j]));
        return -1;
    }

    /// Index of the highest set bit, or -1 if empty.
    int last() const {
        for (std::size_t j = w_.size(); j-- > 0;)
            if (w_[j]) return static_cast<int>(j * 64 + 63 - std::countl_zero(w_[j]));
        return -1;
    }

    static std::size_t and3_count(const Bitset& a, const Bitset& b, const Bitset& c) {
        std::size_t n = 0;
        for (std::size_t j = 0; j < a.w_.size(); ++j)
            n += static_cast<std::size_t>(std::popcount(a.w_[j] & b.w_[j] & c.w_[j]));
        return n;
    }

    /// Invoke f(i) for every set bit i in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t j = 0; j < w_.size(); ++j) {
            std::uint64_t w = w_[j];
            while (w) {
                f(static_cast<int>(j * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint64_t>& words() { return w_; }
    const std::vector<std::uint64_t>& words() const { return w_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace polyface
