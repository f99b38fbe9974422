#pragma once

#include <cstdint>
#include <vector>

namespace mfc {

/// Fixed-capacity bit set used for reachability rows and arc-index families.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    void or_with(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    }

    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    /// Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace mfc
