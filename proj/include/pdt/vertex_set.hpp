#ifndef PDT_VERTEX_SET_HPP
#define PDT_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace pdt {

// Fixed-capacity set of vertex indices backed by machine words.  A set is
// created over a vertex range 0..capacity-1 and all set algebra stays inside
// that range, so propagation loops never allocate.
class VertexSet {
public:
    static constexpr int max_vertices = 512;
    static constexpr int words_per_set = max_vertices / 64;

    VertexSet() = default;

    explicit VertexSet(int capacity) {
        if (capacity < 0 || capacity > max_vertices)
            throw std::invalid_argument("VertexSet capacity must be in [0, 512]");
        capacity_ = capacity;
        nwords_ = (capacity + 63) / 64;
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (int w = 0; w < s.nwords_; ++w) s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int capacity, std::initializer_list<int> vertices) {
        VertexSet s(capacity);
        for (int v : vertices) s.set(v);
        return s;
    }

    static VertexSet of(int capacity, const std::vector<int>& vertices) {
        VertexSet s(capacity);
        for (int v : vertices) s.set(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool test(int v) const {
        assert(v >= 0 && v < capacity_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (int w = 0; w < nwords_; ++w) words_[w] = 0;
    }

    int count() const {
        int c = 0;
        for (int w = 0; w < nwords_; ++w) c += std::popcount(words_[w]);
        return c;
    }

    bool empty() const {
        for (int w = 0; w < nwords_; ++w)
            if (words_[w]) return false;
        return true;
    }

    bool any() const { return !empty(); }

    bool intersects(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (int w = 0; w < nwords_; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (int w = 0; w < nwords_; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (int w = 0; w < nwords_; ++w) words_[w] |= o.words_[w];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (int w = 0; w < nwords_; ++w) words_[w] &= o.words_[w];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (int w = 0; w < nwords_; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Complement within 0..capacity-1.
    VertexSet complement() const {
        VertexSet s(capacity_);
        for (int w = 0; w < nwords_; ++w) s.words_[w] = ~words_[w];
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const {
        if (capacity_ != o.capacity_) return false;
        for (int w = 0; w < nwords_; ++w)
            if (words_[w] != o.words_[w]) return false;
        return true;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lowest member, or -1 when empty.
    int first() const {
        for (int w = 0; w < nwords_; ++w)
            if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
        return -1;
    }

    // Lowest member strictly greater than v, or -1.  v == -1 gives first().
    int next_after(int v) const {
        int w = (v < 0) ? 0 : ((v + 1) >> 6);
        std::uint64_t bits = 0;
        if (w < nwords_) {
            bits = words_[w];
            if (v >= 0 && (v + 1) & 63) bits &= ~std::uint64_t{0} << ((v + 1) & 63);
        }
        while (w < nwords_) {
            if (bits) return (w << 6) + std::countr_zero(bits);
            ++w;
            if (w < nwords_) bits = words_[w];
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
        return out;
    }

    class const_iterator {
    public:
        using value_type = int;
        const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next_after(v_);
            return *this;
        }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

private:
    void trim() {
        if (capacity_ & 63)
            words_[nwords_ - 1] &= (~std::uint64_t{0}) >> (64 - (capacity_ & 63));
        for (int w = nwords_; w < words_per_set; ++w) words_[w] = 0;
    }

    int capacity_ = 0;
    int nwords_ = 0;
    std::array<std::uint64_t, words_per_set> words_{};
};

} // namespace pdt

#endif
