#ifndef TOLLWALK_BITS_HPP
#define TOLLWALK_BITS_HPP

#include <cstdint>
#include <vector>
#include <cassert>

namespace tollwalk {

// Dynamic bitset over a fixed universe {0, ..., n-1}.  Used for adjacency
// rows and vertex sets throughout; the universe size is pinned at
// construction so set operations can assert compatible operands.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe_size() const { return n_; }

    void insert(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= (std::uint64_t{1} << (v & 63));
    }
    void erase(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    bool contains(int v) const {
        if (v < 0 || v >= n_) return false;
        return (w_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_) if (w) return false;
        return true;
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    bool operator==(const VertexSet&) const = default;

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    // Invokes f(v) for members in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = std::size_t(n_) * 0x9e3779b97f4a7c15ull;
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace tollwalk

#endif
