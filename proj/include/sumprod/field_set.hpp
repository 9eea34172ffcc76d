#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "sumprod/errors.hpp"
#include "sumprod/field.hpp"

namespace sumprod {

/// A subset of Z/qZ backed by a q-bit vector: O(1) membership, cached
/// cardinality, word-parallel iteration, and a cyclic rotate-OR kernel
/// (the workhorse behind sum/difference sets).
///
/// Invariant: bits at positions >= q in the last word are always zero.
class FieldSet {
public:
    explicit FieldSet(PrimeField f)
        : field_(f), words_((f.modulus() + 63) / 64, 0), count_(0), count_valid_(true) {}

    static FieldSet full(PrimeField f) {
        FieldSet s(f);
        for (auto& w : s.words_) w = ~0ull;
        s.words_.back() &= s.tail_mask();
        s.count_ = f.modulus();
        s.count_valid_ = true;
        return s;
    }

    static FieldSet of(PrimeField f, std::initializer_list<u64> vals) {
        FieldSet s(f);
        for (u64 v : vals) s.insert(f.reduce(v));
        return s;
    }

    PrimeField field() const noexcept { return field_; }
    u64 modulus() const noexcept { return field_.modulus(); }

    bool contains(u64 v) const {
        assert(v < field_.modulus());
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(u64 v) {
        assert(v < field_.modulus());
        u64& w = words_[v >> 6];
        u64 bit = 1ull << (v & 63);
        if (count_valid_ && !(w & bit)) ++count_;
        w |= bit;
    }

    void erase(u64 v) {
        assert(v < field_.modulus());
        u64& w = words_[v >> 6];
        u64 bit = 1ull << (v & 63);
        if (count_valid_ && (w & bit)) --count_;
        w &= ~bit;
    }

    std::size_t size() const {
        if (!count_valid_) {
            std::size_t c = 0;
            for (u64 w : words_) c += static_cast<std::size_t>(std::popcount(w));
            count_ = c;
            count_valid_ = true;
        }
        return count_;
    }

    bool empty() const { return size() == 0; }
    bool is_full() const { return size() == field_.modulus(); }

    /// Applies fn(u64 residue) to every member in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            u64 w = words_[i];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(static_cast<u64>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<u64> elements() const {
        std::vector<u64> out;
        out.reserve(size());
        for_each([&](u64 v) { out.push_back(v); });
        return out;
    }

    /// *this |= { x + shift mod q : x in src }. Word-parallel: the cyclic
    /// rotation is two multiword shifts ORed under the q-bit tail mask.
    void or_rotated(const FieldSet& src, u64 shift) {
        require_same_field(field_, src.field_);
        const u64 q = field_.modulus();
        shift %= q;
        const std::size_t nw = words_.size();
        if (shift == 0) {
            for (std::size_t i = 0; i < nw; ++i) words_[i] |= src.words_[i];
            count_valid_ = false;
            return;
        }
        const u64 mask = tail_mask();
        // left part: src << shift lands in bit positions [shift, q)
        {
            const std::size_t wr = static_cast<std::size_t>(shift >> 6);
            const unsigned br = static_cast<unsigned>(shift & 63);
            for (std::size_t d = nw; d-- > wr;) {
                u64 lo = src.words_[d - wr] << br;
                u64 hi = (br && d - wr >= 1) ? src.words_[d - wr - 1] >> (64 - br) : 0;
                u64 v = lo | hi;
                if (d == nw - 1) v &= mask;
                words_[d] |= v;
            }
        }
        // wrap part: src >> (q - shift) lands in bit positions [0, shift)
        {
            const u64 s = q - shift;
            const std::size_t ws = static_cast<std::size_t>(s >> 6);
            const unsigned bs = static_cast<unsigned>(s & 63);
            for (std::size_t d = 0; d + ws < nw; ++d) {
                u64 lo = src.words_[d + ws] >> bs;
                u64 hi = (bs && d + ws + 1 < nw) ? src.words_[d + ws + 1] << (64 - bs) : 0;
                words_[d] |= lo | hi;
            }
        }
        count_valid_ = false;
    }

    FieldSet rotated(u64 shift) const {
        FieldSet out(field_);
        out.or_rotated(*this, shift);
        return out;
    }

    /// Cheap fullness probe: bails at the first non-saturated word.
    bool all_bits_set() const {
        for (std::size_t i = 0; i + 1 < words_.size(); ++i)
            if (words_[i] != ~0ull) return false;
        return words_.back() == tail_mask();
    }

    bool is_subset_of(const FieldSet& other) const {
        require_same_field(field_, other.field_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    FieldSet intersect(const FieldSet& other) const {
        require_same_field(field_, other.field_);
        FieldSet out(field_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            out.words_[i] = words_[i] & other.words_[i];
        out.count_valid_ = false;
        return out;
    }

    FieldSet unite(const FieldSet& other) const {
        require_same_field(field_, other.field_);
        FieldSet out(field_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            out.words_[i] = words_[i] | other.words_[i];
        out.count_valid_ = false;
        return out;
    }

    /// Copy without the given residue; used to strip 0 before F* operations.
    FieldSet without(u64 v) const {
        FieldSet out = *this;
        out.erase(v);
        return out;
    }

    bool operator==(const FieldSet& o) const {
        return field_ == o.field_ && words_ == o.words_;
    }
    bool operator!=(const FieldSet& o) const { return !(*this == o); }

private:
    u64 tail_mask() const {
        unsigned tail = static_cast<unsigned>(field_.modulus() - 64 * (words_.size() - 1));
        return tail == 64 ? ~0ull : (1ull << tail) - 1;
    }

    PrimeField field_;
    std::vector<u64> words_;
    mutable std::size_t count_;
    mutable bool count_valid_;
};

} // namespace sumprod
