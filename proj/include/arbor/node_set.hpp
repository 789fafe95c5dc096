#ifndef ARBOR_NODE_SET_HPP
#define ARBOR_NODE_SET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace arbor {

// Subset of the nodes 0..n-1 of a fixed ambient tree or poset.
class node_set {
public:
    node_set() : n_(0) {}
    explicit node_set(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}
    node_set(int universe, std::initializer_list<int> members) : node_set(universe) {
        for (int e : members) insert(e);
    }

    static node_set full(int universe) {
        node_set s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int universe() const { return n_; }
    bool contains(int e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void insert(int e) { words_[e >> 6] |= 1ULL << (e & 63); }
    void erase(int e) { words_[e >> 6] &= ~(1ULL << (e & 63)); }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    node_set& operator|=(const node_set& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    node_set& operator&=(const node_set& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    node_set& operator-=(const node_set& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend node_set operator|(node_set a, const node_set& b) { return a |= b; }
    friend node_set operator&(node_set a, const node_set& b) { return a &= b; }
    friend node_set operator-(node_set a, const node_set& b) { return a -= b; }

    bool operator==(const node_set& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const node_set& o) const { return !(*this == o); }

    bool subset_of(const node_set& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const node_set& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // ascending member list
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    // low 64 bits; only meaningful when universe <= 64
    std::uint64_t mask64() const { return words_.empty() ? 0 : words_[0]; }

    static node_set from_mask64(int universe, std::uint64_t mask) {
        node_set s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

} // namespace arbor

template <>
struct std::hash<arbor::node_set> {
    std::size_t operator()(const arbor::node_set& s) const { return s.hash(); }
};

#endif
