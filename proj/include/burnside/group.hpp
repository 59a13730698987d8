#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/bits.hpp"
#include "burnside/perm.hpp"

namespace burnside {

inline constexpr unsigned kDefaultMaxOrder = 200;

struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A small finite group given by its full multiplication structure on an
// indexed list of permutations. Index 0 is the identity; the remaining
// elements are sorted by image tuple, so indices are stable across runs.
struct FiniteGroup {
    unsigned degree = 0;
    std::vector<Perm> elements;
    std::vector<std::vector<uint16_t>> mul;
    std::vector<uint16_t> inv;

    unsigned order() const { return static_cast<unsigned>(elements.size()); }
    uint16_t mul_of(uint16_t a, uint16_t b) const { return mul[a][b]; }
    uint16_t inv_of(uint16_t a) const { return inv[a]; }
    uint16_t conj(uint16_t g, uint16_t x) const {
        return mul[mul[g][x]][inv[g]]; // g x g^{-1}
    }
    unsigned element_order(uint16_t g) const;
    int index_of(const Perm& p) const; // -1 if absent
    Bits cyclic_subgroup(uint16_t g) const;
    Bits full_bits() const;
    Bits trivial_bits() const;

    // Exhaustive group-law check; intended for tests and small orders.
    void check_table() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr group_from_generators(const std::vector<Perm>& gens,
                               unsigned max_order = kDefaultMaxOrder);

// Grammar: C<n>, D<n> (order n, n even >= 4), S<n>, A<n>, Q8, products
// joined with 'x' (C2xS3), or perm:<cycles>[,<cycles>...].
GroupPtr named_group(const std::string& spec, unsigned max_order = kDefaultMaxOrder);

// A subgroup materialized as a group in its own right, with the index
// translation back into the parent.
struct SubgroupGroup {
    GroupPtr group;
    GroupPtr parent;
    std::vector<uint16_t> to_parent;   // element index in group -> in parent
    std::vector<int> from_parent;      // parent index -> index in group, -1 outside
};

SubgroupGroup subgroup_as_group(const GroupPtr& parent, const Bits& members);

// G/N acting faithfully on the left cosets of a normal subgroup N.
struct QuotientGroup {
    GroupPtr group;
    GroupPtr parent;
    std::vector<uint16_t> proj;        // parent element -> quotient element
};

QuotientGroup quotient_group(const GroupPtr& parent, const Bits& normal_members);

// G x H on the disjoint union of the two point sets.
struct ProductGroup {
    GroupPtr group;
    GroupPtr left;
    GroupPtr right;
    std::vector<std::pair<uint16_t, uint16_t>> factors; // element -> (g, h)
    std::vector<std::vector<uint16_t>> pair_index;      // [g][h] -> element

    Bits pair_bits(const Bits& a, const Bits& b) const;
};

ProductGroup product_group(const GroupPtr& a, const GroupPtr& b,
                           unsigned max_order = kDefaultMaxOrder);

// An isomorphism between two concrete groups, as an element-index bijection.
struct GroupIso {
    GroupPtr src;
    GroupPtr dst;
    std::vector<uint16_t> fwd;
    std::vector<uint16_t> rev;
};

// Builds the iso from generator images and verifies the homomorphism law.
GroupIso group_iso(const GroupPtr& src, const GroupPtr& dst,
                   const std::vector<uint16_t>& image_of_element);

} // namespace burnside
