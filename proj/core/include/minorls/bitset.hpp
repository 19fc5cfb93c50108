#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace minorls {

// Fixed-capacity set of vertex ids in [0, size()).
// Backed by 64-bit words; all binary operations require equal capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    static Bitset of(int n, const std::vector<int>& ids) {
        Bitset b(n);
        for (int v : ids) b.set(v);
        return b;
    }

    static Bitset full(int n) {
        Bitset b(n);
        for (int v = 0; v < n; ++v) b.set(v);
        return b;
    }

    int size() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    Bitset and_not(const Bitset& o) const {
        assert(n_ == o.n_);
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Lowest set id, -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    // Any set id strictly above i?
    bool any_above(int i) const {
        for (int v = i + 1; v < n_; ++v) {
            std::size_t wi = static_cast<std::size_t>(v >> 6);
            std::uint64_t w = w_[wi] >> (v & 63);
            if (w) return true;
            v = static_cast<int>((wi + 1) * 64) - 1;
        }
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const Bitset& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;

    friend bool lex_less(const Bitset& a, const Bitset& b);
};

// Order by the sorted id sequences: {0,5} < {1,2}, {1,2} < {1,2,3}.
inline bool lex_less(const Bitset& a, const Bitset& b) {
    assert(a.n_ == b.n_);
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
        std::uint64_t d = a.w_[i] ^ b.w_[i];
        if (!d) continue;
        int v = static_cast<int>(i * 64) + std::countr_zero(d);
        if (a.test(v)) return b.any_above(v);  // b continues past the shared prefix
        return !a.any_above(v);                // a is a proper prefix of b
    }
    return false;
}

}  // namespace minorls
