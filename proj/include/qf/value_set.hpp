#pragma once

// Dense bitset over [0, bound] recording which integer values occur.

#include "qf/int_types.hpp"

#include <cstdint>
#include <vector>

namespace qf {

class ValueSet {
public:
    ValueSet() : bound_(-1) {}
    explicit ValueSet(Int bound) : bound_(bound), words_((bound < 0 ? 0 : bound / 64 + 1), 0) {}

    Int bound() const { return bound_; }

    void insert(Int v) { words_[static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63); }

    bool contains(Int v) const {
        if (v < 0 || v > bound_) return false;
        return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1ULL;
    }

    // this |= other << shift, truncated at bound. other may alias *this only
    // when shift == 0.
    void or_shifted(const ValueSet& other, Int shift) {
        const std::size_t nw = words_.size();
        const std::size_t word_shift = static_cast<std::size_t>(shift >> 6);
        const unsigned bit_shift = static_cast<unsigned>(shift & 63);
        if (bit_shift == 0) {
            for (std::size_t i = word_shift; i < nw; ++i)
                words_[i] |= other.words_[i - word_shift];
        } else {
            for (std::size_t i = word_shift; i < nw; ++i) {
                std::uint64_t lo = other.words_[i - word_shift] << bit_shift;
                std::uint64_t hi = (i > word_shift)
                                       ? other.words_[i - word_shift - 1] >> (64 - bit_shift)
                                       : 0;
                words_[i] |= lo | hi;
            }
        }
        clear_tail();
    }

    void or_with(const ValueSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }

    // Smallest missing value in [lo, hi], or -1 when the range is covered.
    Int first_missing(Int lo, Int hi) const {
        for (Int v = lo; v <= hi; ++v)
            if (!contains(v)) return v;
        return -1;
    }

    bool covers_range(Int lo, Int hi) const { return first_missing(lo, hi) == -1; }

    std::size_t count(Int lo, Int hi) const {
        std::size_t c = 0;
        for (Int v = lo; v <= hi; ++v) c += contains(v) ? 1 : 0;
        return c;
    }

    std::vector<Int> to_vector(Int lo, Int hi) const {
        std::vector<Int> out;
        for (Int v = lo; v <= hi; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const ValueSet& a, const ValueSet& b) {
        return a.bound_ == b.bound_ && a.words_ == b.words_;
    }

private:
    void clear_tail() {
        unsigned used = static_cast<unsigned>((bound_ & 63) + 1);
        if (used < 64 && !words_.empty())
            words_.back() &= (used == 64) ? ~0ULL : ((1ULL << used) - 1);
    }

    Int bound_;
    std::vector<std::uint64_t> words_;
};

}  // namespace qf
