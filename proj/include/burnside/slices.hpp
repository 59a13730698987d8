#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "burnside/lattice.hpp"

namespace burnside {

inline constexpr size_t kDefaultMaxSlices = 100000;

// An n-slice: a chain S_0 <= ... <= S_n of subgroup lattice ids.
using Slice = std::vector<int>;

struct SliceHash {
    size_t operator()(const Slice& s) const {
        size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<size_t>(v) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Conjugacy classes of n-slices with canonical representatives, the order
// relation up to conjugacy, normalizers, Weyl orders, and the table of
// marks, all in a fixed linear extension. Immutable once built.
class SliceClassTable {
public:
    LatticePtr lattice;
    int n = 0;
    std::vector<Slice> classes;        // canonical reps, linear-extension order
    std::vector<int> slice_normalizer; // per class: subgroup id of N_G(Sbar)
    std::vector<Int> weyl;             // |N_G(Sbar)| / |S_0|
    std::vector<std::vector<Int>> marks; // marks[i][j] = phi_{class i}(<class j>)

    size_t class_count() const { return classes.size(); }
    const FiniteGroup& group() const { return *lattice->group; }

    Slice conjugate(const Slice& s, uint16_t g) const;
    Slice canonical(const Slice& s) const;
    int class_of(const Slice& s) const;
    bool slice_leq(const Slice& a, const Slice& b) const; // componentwise
    bool leq_classes(int a, int b) const { return leq_classes_[a * classes.size() + b]; }
    int unit_class() const { return static_cast<int>(classes.size()) - 1; }

    std::string chain_string(int cls) const;          // e.g. "1 <= 2a <= 6"
    Slice parse_chain(const std::string& text) const; // class names -> slice

    friend SliceClassTable enumerate_slice_classes(const LatticePtr& lat, int n,
                                                   size_t max_slices);

private:
    std::unordered_map<Slice, int, SliceHash> class_index_;
    std::vector<char> leq_classes_;
};

using TablePtr = std::shared_ptr<const SliceClassTable>;

SliceClassTable enumerate_slice_classes(const LatticePtr& lat, int n,
                                        size_t max_slices = kDefaultMaxSlices);
TablePtr make_table(const LatticePtr& lat, int n,
                    size_t max_slices = kDefaultMaxSlices);

// Visits every slice in Pi_n(G), in DFS order.
void for_each_slice(const SubgroupLattice& lat, int n,
                    const std::function<void(const Slice&)>& fn);

// phi_{S}( <T> ): left cosets g of G/T_0 with S^g componentwise below T.
// Depends only on the conjugacy classes of the two slices.
Int mark_slices(const SubgroupLattice& lat, const Slice& s, const Slice& t);

// The Möbius function of (Pi_n(G), <=), two ways: the componentwise product
// formula under the interleaving condition, and the direct poset recursion.
Int mobius_pi(const SliceClassTable& table, const Slice& t, const Slice& s);
Int mobius_pi_recursive(const SliceClassTable& table, const Slice& t, const Slice& s);

} // namespace burnside
