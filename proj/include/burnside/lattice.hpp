#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/numeric.hpp"

namespace burnside {

struct Subgroup {
    Bits member_bits;
    unsigned order = 0;
    int lattice_id = -1;
};

// Every subgroup of G, with inclusion, conjugacy, normalizers and the full
// Möbius table. Immutable once built.
class SubgroupLattice {
public:
    GroupPtr group;
    std::vector<Subgroup> subgroups; // sorted by (order, member_bits)

    size_t size() const { return subgroups.size(); }
    unsigned order_of(int id) const { return subgroups[id].order; }
    const Bits& bits_of(int id) const { return subgroups[id].member_bits; }

    bool leq(int a, int b) const { return leq_[a * size() + b]; }
    int conj_sub(int id, uint16_t g) const { return conj_[id][g]; } // g S g^{-1}
    int class_rep(int id) const { return class_rep_[id]; }
    int normalizer(int id) const { return normalizer_[id]; }
    const Int& mobius(int a, int b) const; // mu(a, b), zero object if a !<= b
    int id_of(const Bits& b) const;        // -1 if absent
    int trivial_id() const { return 0; }
    int full_id() const { return static_cast<int>(size()) - 1; }

    const std::vector<int>& ups(int id) const { return ups_[id]; }     // {b : a <= b}
    const std::vector<int>& downs(int id) const { return downs_[id]; } // {b : b <= a}
    const std::vector<int>& class_reps() const { return class_reps_; }
    const std::vector<int>& class_members(int rep) const { return class_members_.at(rep); }

    // Stable class names: the order, plus a letter when several classes
    // share it ("2a", "2b"); a bare order otherwise.
    std::string class_name(int rep) const;
    int class_by_name(const std::string& name) const; // rep id, or throws

    friend SubgroupLattice all_subgroups(const GroupPtr& g);

private:
    std::vector<char> leq_;
    std::vector<std::vector<int>> conj_;
    std::vector<int> class_rep_;
    std::vector<int> normalizer_;
    std::vector<std::vector<Int>> mobius_;
    std::vector<std::vector<int>> ups_, downs_;
    std::vector<int> class_reps_;
    std::unordered_map<int, std::vector<int>> class_members_;
    std::unordered_map<Bits, int, BitsHash> index_;
    std::unordered_map<std::string, int> names_;
    std::vector<std::string> name_of_rep_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

// Exhaustive enumeration by breadth-first closure: seed with all cyclic
// subgroups, extend each known subgroup by one generator, dedupe by bitset.
SubgroupLattice all_subgroups(const GroupPtr& g);
LatticePtr make_lattice(const GroupPtr& g);

Bits closure_bits(const FiniteGroup& g, Bits seed);

int sylow(const SubgroupLattice& lat, int h, unsigned p);
int commutator_subgroup(const SubgroupLattice& lat, int h);
int perfect_core(const SubgroupLattice& lat, int h);
bool is_solvable(const SubgroupLattice& lat);

std::vector<uint16_t> left_coset_reps(const SubgroupLattice& lat, int s);
std::vector<uint16_t> double_coset_reps(const SubgroupLattice& lat, int s, int t);
int conjugate_subgroup(const SubgroupLattice& lat, int s, uint16_t g);

// The set product PS for P <= N_G(S); verifies closure.
int subgroup_product(const SubgroupLattice& lat, int p, int s);

int intersect_subgroups(const SubgroupLattice& lat, int a, int b);

} // namespace burnside
