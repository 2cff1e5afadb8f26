#ifndef ZDCHROMA_BITSET_HPP
#define ZDCHROMA_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zdchroma {

// Fixed-universe dynamic bitset. Rows of the adjacency matrix and solver
// candidate sets are all instances of this; the solver hot loop only uses
// word-level ops (and/and_not/first_bit), so keep those inline.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }
    std::size_t words() const { return w_.size(); }

    void set(std::size_t i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool empty() const {
        for (auto w : w_) if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // First set bit, or npos if none.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return (i << 6) + static_cast<std::size_t>(__builtin_ctzll(w_[i]));
        return npos;
    }
    std::size_t next(std::size_t after) const {
        std::size_t i = after + 1;
        if (i >= n_) return npos;
        std::size_t wi = i >> 6;
        uint64_t w = w_[wi] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
            if (++wi == w_.size()) return npos;
            w = w_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    std::size_t and_count(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(__builtin_popcountll(w_[i] & o.w_[i]));
        return c;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f((i << 6) + static_cast<std::size_t>(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace zdchroma

#endif
