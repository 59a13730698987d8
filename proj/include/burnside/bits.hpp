#pragma once

#include <cstdint>
#include <vector>

namespace burnside {

// Dynamic bitset over group-element indices. Comparison is numeric
// (the bitset read as an integer), which fixes the canonical-representative
// order used throughout the lattice code.
class Bits {
public:
    Bits() : nbits_(0) {}
    explicit Bits(unsigned nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    unsigned size() const { return nbits_; }

    bool test(unsigned i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(unsigned i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(unsigned i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    unsigned count() const {
        unsigned c = 0;
        for (uint64_t x : w_)
            c += static_cast<unsigned>(__builtin_popcountll(x));
        return c;
    }

    bool subset_of(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k])
                return false;
        return true;
    }

    Bits operator&(const Bits& o) const {
        Bits r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k)
            r.w_[k] = w_[k] & o.w_[k];
        return r;
    }

    Bits operator|(const Bits& o) const {
        Bits r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k)
            r.w_[k] = w_[k] | o.w_[k];
        return r;
    }

    bool operator==(const Bits& o) const { return w_ == o.w_; }
    bool operator!=(const Bits& o) const { return w_ != o.w_; }

    // Numeric order: compare most-significant words first.
    bool operator<(const Bits& o) const {
        for (size_t k = w_.size(); k-- > 0;)
            if (w_[k] != o.w_[k])
                return w_[k] < o.w_[k];
        return false;
    }

    int find_first() const { return find_next(-1); }

    int find_next(int i) const {
        for (unsigned j = static_cast<unsigned>(i + 1); j < nbits_; ++j)
            if (test(j))
                return static_cast<int>(j);
        return -1;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : w_) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    unsigned nbits_;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

} // namespace burnside
