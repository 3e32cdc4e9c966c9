#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace strength {

using Vertex = std::size_t;

/// Fixed-universe bitset over vertices [0, universe). One 64-bit word per 64 vertices.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool test(Vertex v) const noexcept { return (words_[v / word_bits] >> (v % word_bits)) & 1U; }
    void set(Vertex v) noexcept { words_[v / word_bits] |= Word{1} << (v % word_bits); }
    void reset(Vertex v) noexcept { words_[v / word_bits] &= ~(Word{1} << (v % word_bits)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    /// Lowest member, or universe() when empty.
    Vertex first() const noexcept { return next_from(0); }

    /// Lowest member >= v, or universe() when none.
    Vertex next_from(Vertex v) const noexcept {
        std::size_t wi = v / word_bits;
        if (wi >= words_.size()) return universe_;
        Word w = words_[wi] & (~Word{0} << (v % word_bits));
        while (true) {
            if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return universe_;
            w = words_[wi];
        }
    }

    /// Number of members shared with `other`, without materializing the intersection.
    std::size_t intersection_count(const VertexSet& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool intersects(const VertexSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    /// Complement within the universe.
    VertexSet operator~() const {
        VertexSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool operator==(const VertexSet&) const = default;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}

        Vertex operator*() const noexcept { return v_; }
        const_iterator& operator++() noexcept {
            v_ = set_->next_from(v_ + 1);
            return *this;
        }
        const_iterator operator++(int) noexcept {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& o) const noexcept { return v_ == o.v_; }

    private:
        const VertexSet* set_ = nullptr;
        Vertex v_ = 0;
    };

    const_iterator begin() const noexcept { return {this, first()}; }
    const_iterator end() const noexcept { return {this, universe_}; }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

private:
    void trim() noexcept {
        if (universe_ % word_bits && !words_.empty())
            words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

} // namespace strength
