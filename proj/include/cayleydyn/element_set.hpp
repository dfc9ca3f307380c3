#pragma once

#include <cstdint>
#include <vector>

namespace cayleydyn {

/// Fixed-universe bitset over element indices 0..n-1.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    void clear() { for (auto& w : words_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool operator==(const ElementSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    ElementSet& operator|=(const ElementSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    ElementSet& operator&=(const ElementSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool contains(const ElementSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace cayleydyn
