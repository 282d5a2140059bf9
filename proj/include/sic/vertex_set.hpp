#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sic {

/// Fixed-capacity bitset over vertex indices 0..capacity-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity)
        : capacity_(capacity)
        , words_((capacity + 63) / 64, 0)
    {
    }

    static VertexSet full(std::size_t capacity)
    {
        VertexSet s(capacity);
        for (std::size_t i = 0; i < capacity; ++i)
            s.set(i);
        return s;
    }

    std::size_t capacity() const { return capacity_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    /// Lowest member >= from, or capacity() if none.
    std::size_t next(std::size_t from = 0) const
    {
        std::size_t wi = from >> 6;
        if (wi >= words_.size())
            return capacity_;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return capacity_;
            w = words_[wi];
        }
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = next(); i < capacity_; i = next(i + 1))
            out.push_back(i);
        return out;
    }

    VertexSet& operator&=(const VertexSet& rhs)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= rhs.words_[k];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& rhs)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~rhs.words_[k];
        return *this;
    }

    friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
    friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sic
