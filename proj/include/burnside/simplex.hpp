#pragma once

#include <random>

#include "burnside/elements.hpp"

namespace burnside {

// A concrete finite G-set: points 0..size-1 with the action table.
struct GSet {
    int size = 0;
    std::vector<std::vector<int>> act; // act[g][x]

    Bits stabilizer(const FiniteGroup& g, int x) const;
    std::vector<int> orbit_reps(const FiniteGroup& g) const;
    std::vector<int> fixed_points(const Bits& subgroup) const;
    void validate(const FiniteGroup& g) const;
};

// An explicit (n,G)-simplex X_0 -> X_1 -> ... -> X_n of G-sets and
// equivariant maps: the brute-force substrate behind every mark formula.
struct SimplexInstance {
    GroupPtr group;
    int n = 0;
    std::vector<GSet> sets;             // n+1 entries
    std::vector<std::vector<int>> maps; // maps[i]: X_{i-1} -> X_i, for i = 1..n

    void validate() const;
};

// The chain of projections G/S_0 -> ... -> G/S_n attached to a slice.
SimplexInstance chain_simplex(const LatticePtr& lat, const Slice& s);
SimplexInstance point_simplex(const GroupPtr& g, int n);
SimplexInstance empty_simplex(const GroupPtr& g, int n);
SimplexInstance disjoint_union(const SimplexInstance& a, const SimplexInstance& b);
SimplexInstance product_simplex(const SimplexInstance& a, const SimplexInstance& b);

// pi(X) = sum over G-orbit representatives x of X_0 of the stabilizer chain.
BurnsideElt linearize(const TablePtr& table, const SimplexInstance& sx);

// |Inv_S(X)| by nested preimages of fixed points, innermost at X_n.
Int phi_nested(const SubgroupLattice& lat, const Slice& s, const SimplexInstance& sx);

// The same count by brute-force enumeration of morphism families: tuples
// (x_0, ..., x_n) of fixed points compatible with every f_i.
Int phi_direct(const SubgroupLattice& lat, const Slice& s, const SimplexInstance& sx);

// Random G-sets glued from cosets with equivariant maps chosen orbitwise.
SimplexInstance random_simplex(const LatticePtr& lat, int n, std::mt19937& rng,
                               int max_orbits = 3, bool allow_empty = true);

} // namespace burnside
