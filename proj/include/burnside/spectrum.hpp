#pragma once

#include "burnside/elements.hpp"

namespace burnside {

// I_{S,p}: kernel of phi_S composed with reduction mod p (p = 0 keeps Z).
// Normalized form stores the unique class with Weyl order prime to p.
struct PrimeIdeal {
    int cls = 0;
    unsigned characteristic = 0; // 0 or a prime

    bool operator==(const PrimeIdeal& o) const {
        return cls == o.cls && characteristic == o.characteristic;
    }
};

// One Sylow-closure step (PS_0, ..., PS_n) with P the canonical Sylow
// p-subgroup of N_G(Sbar).
Slice slice_plus_p(const SliceClassTable& table, const Slice& s, unsigned p);

// Iterates the closure to its fixed point; the result class has Weyl order
// prime to p. Operates on classes so the choice of Sylow does not leak.
int slice_infinity_class(const TablePtr& table, int cls, unsigned p);
Slice slice_infinity(const TablePtr& table, const Slice& s, unsigned p);

PrimeIdeal normalize_ideal(const TablePtr& table, int cls, unsigned p);

// Containment J subset I for normalized ideals.
bool ideal_contains(const TablePtr& table, const PrimeIdeal& i, const PrimeIdeal& j);

// Sum of the idempotents e_{S'} over classes S' with arrow-p class S; lives
// in the p-local ring (denominators prime to p).
QBurnsideElt p_local_idempotent(const TablePtr& table, int cls, unsigned p);

// Connected components of Spec B_n(G), computed by the perfect-core
// criterion and verified against the p-closure relation.
std::vector<std::vector<int>> connected_components(const TablePtr& table);

bool is_spec_connected(const TablePtr& table);

std::vector<unsigned> prime_divisors(unsigned n);

} // namespace burnside
