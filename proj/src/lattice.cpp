#include "burnside/lattice.hpp"

#include <algorithm>
#include <set>

namespace burnside {

Bits closure_bits(const FiniteGroup& g, Bits seed) {
    seed.set(0);
    std::vector<uint16_t> members, frontier;
    for (int i = seed.find_first(); i >= 0; i = seed.find_next(i))
        frontier.push_back(static_cast<uint16_t>(i));
    members = frontier;
    while (!frontier.empty()) {
        std::vector<uint16_t> next;
        for (uint16_t a : frontier)
            for (uint16_t b : members) {
                for (uint16_t c : {g.mul[a][b], g.mul[b][a]}) {
                    if (!seed.test(c)) {
                        seed.set(c);
                        next.push_back(c);
                    }
                }
            }
        for (uint16_t c : next)
            members.push_back(c);
        frontier = std::move(next);
    }
    // Inverses come for free in a finite closed set, but keep it explicit.
    for (uint16_t a : members)
        seed.set(g.inv[a]);
    return seed;
}

const Int& SubgroupLattice::mobius(int a, int b) const {
    return mobius_[a][b];
}

int SubgroupLattice::id_of(const Bits& b) const {
    auto it = index_.find(b);
    return it == index_.end() ? -1 : it->second;
}

std::string SubgroupLattice::class_name(int rep) const {
    return name_of_rep_.at(static_cast<size_t>(
        std::lower_bound(class_reps_.begin(), class_reps_.end(), rep) -
        class_reps_.begin()));
}

int SubgroupLattice::class_by_name(const std::string& name) const {
    auto it = names_.find(name);
    if (it != names_.end())
        return it->second;
    // Convenience aliases: "C6" reads as order 6; "G" is the full group.
    if (name == "G")
        return class_rep_[full_id()];
    if (!name.empty() && (name[0] == 'C' || name[0] == 'c')) {
        auto jt = names_.find(name.substr(1));
        if (jt != names_.end())
            return jt->second;
    }
    throw input_error("unknown subgroup class \"" + name + "\"");
}

SubgroupLattice all_subgroups(const GroupPtr& gp) {
    const FiniteGroup& g = *gp;
    unsigned n = g.order();

    std::set<Bits> found;
    found.insert(g.trivial_bits());
    std::vector<Bits> frontier = {g.trivial_bits()};
    for (unsigned e = 1; e < n; ++e) {
        Bits c = g.cyclic_subgroup(static_cast<uint16_t>(e));
        if (found.insert(c).second)
            frontier.push_back(c);
    }
    while (!frontier.empty()) {
        std::vector<Bits> next;
        for (const Bits& s : frontier)
            for (unsigned e = 1; e < n; ++e) {
                if (s.test(e))
                    continue;
                Bits seed = s;
                seed.set(e);
                Bits ext = closure_bits(g, seed);
                if (found.insert(ext).second)
                    next.push_back(ext);
            }
        frontier = std::move(next);
    }

    SubgroupLattice lat;
    lat.group = gp;
    for (const Bits& b : found)
        lat.subgroups.push_back({b, b.count(), -1});
    std::sort(lat.subgroups.begin(), lat.subgroups.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  if (a.order != b.order)
                      return a.order < b.order;
                  return a.member_bits < b.member_bits;
              });
    int m = static_cast<int>(lat.subgroups.size());
    for (int i = 0; i < m; ++i) {
        lat.subgroups[i].lattice_id = i;
        lat.index_[lat.subgroups[i].member_bits] = i;
    }

    lat.leq_.assign(static_cast<size_t>(m) * m, 0);
    lat.ups_.resize(m);
    lat.downs_.resize(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (lat.subgroups[a].member_bits.subset_of(lat.subgroups[b].member_bits)) {
                lat.leq_[static_cast<size_t>(a) * m + b] = 1;
                lat.ups_[a].push_back(b);
                lat.downs_[b].push_back(a);
            }

    lat.conj_.assign(m, std::vector<int>(n));
    for (int s = 0; s < m; ++s)
        for (unsigned e = 0; e < n; ++e) {
            Bits c(n);
            const Bits& b = lat.subgroups[s].member_bits;
            for (int x = b.find_first(); x >= 0; x = b.find_next(x))
                c.set(g.conj(static_cast<uint16_t>(e), static_cast<uint16_t>(x)));
            auto it = lat.index_.find(c);
            if (it == lat.index_.end())
                throw internal_error("conjugate of a subgroup not found in lattice");
            lat.conj_[s][e] = it->second;
        }

    lat.class_rep_.assign(m, -1);
    for (int s = 0; s < m; ++s) {
        int best = s;
        for (unsigned e = 0; e < n; ++e)
            best = std::min(best, lat.conj_[s][e]);
        lat.class_rep_[s] = best;
    }
    for (int s = 0; s < m; ++s)
        if (lat.class_rep_[s] == s)
            lat.class_reps_.push_back(s);
    for (int s = 0; s < m; ++s)
        lat.class_members_[lat.class_rep_[s]].push_back(s);

    lat.normalizer_.assign(m, -1);
    for (int s = 0; s < m; ++s) {
        Bits nb(n);
        for (unsigned e = 0; e < n; ++e)
            if (lat.conj_[s][e] == s)
                nb.set(e);
        int id = lat.id_of(nb);
        if (id < 0)
            throw internal_error("normalizer not found in lattice");
        lat.normalizer_[s] = id;
    }

    // mu(a,a) = 1, mu(a,b) = -sum_{a <= u < b} mu(a,u).
    lat.mobius_.assign(m, std::vector<Int>(m, 0));
    for (int a = 0; a < m; ++a) {
        lat.mobius_[a][a] = 1;
        for (int b : lat.ups_[a]) {
            if (b == a)
                continue;
            Int acc = 0;
            for (int u : lat.ups_[a])
                if (u != b && lat.leq(u, b))
                    acc += lat.mobius_[a][u];
            lat.mobius_[a][b] = -acc;
        }
    }

    // Class names: order, suffixed a, b, ... when several classes share it.
    std::vector<std::pair<unsigned, int>> by_order;
    for (int rep : lat.class_reps_)
        by_order.push_back({lat.subgroups[rep].order, rep});
    for (size_t i = 0; i < by_order.size(); ++i) {
        unsigned ord = by_order[i].first;
        size_t span = 1;
        while (i + span < by_order.size() && by_order[i + span].first == ord)
            ++span;
        for (size_t k = 0; k < span; ++k) {
            std::string nm = std::to_string(ord);
            if (span > 1)
                nm += static_cast<char>('a' + k);
            lat.names_[nm] = by_order[i + k].second;
            lat.name_of_rep_.push_back(nm);
        }
        i += span - 1;
    }
    return lat;
}

LatticePtr make_lattice(const GroupPtr& g) {
    return std::make_shared<const SubgroupLattice>(all_subgroups(g));
}

int sylow(const SubgroupLattice& lat, int h, unsigned p) {
    if (!is_prime(p))
        throw input_error("sylow: " + std::to_string(p) + " is not prime");
    unsigned target = 1, rem = lat.order_of(h);
    while (rem % p == 0) {
        rem /= p;
        target *= p;
    }
    for (int c : lat.downs(h))
        if (lat.order_of(c) == target)
            return c; // downs are sorted by (order, bits): first hit is canonical
    throw internal_error("sylow subgroup not found");
}

int commutator_subgroup(const SubgroupLattice& lat, int h) {
    const FiniteGroup& g = *lat.group;
    const Bits& hb = lat.bits_of(h);
    Bits seed(g.order());
    for (int a = hb.find_first(); a >= 0; a = hb.find_next(a))
        for (int b = hb.find_first(); b >= 0; b = hb.find_next(b)) {
            uint16_t comm = g.mul[g.mul[g.inv[a]][g.inv[b]]][g.mul[a][b]];
            seed.set(comm);
        }
    int id = lat.id_of(closure_bits(g, seed));
    if (id < 0)
        throw internal_error("commutator subgroup not in lattice");
    return id;
}

int perfect_core(const SubgroupLattice& lat, int h) {
    int cur = h;
    for (;;) {
        int next = commutator_subgroup(lat, cur);
        if (next == cur)
            return cur;
        cur = next;
    }
}

bool is_solvable(const SubgroupLattice& lat) {
    return perfect_core(lat, lat.full_id()) == lat.trivial_id();
}

std::vector<uint16_t> left_coset_reps(const SubgroupLattice& lat, int s) {
    const FiniteGroup& g = *lat.group;
    const Bits& sb = lat.bits_of(s);
    std::vector<char> seen(g.order(), 0);
    std::vector<uint16_t> reps;
    for (unsigned e = 0; e < g.order(); ++e) {
        if (seen[e])
            continue;
        reps.push_back(static_cast<uint16_t>(e));
        for (int x = sb.find_first(); x >= 0; x = sb.find_next(x))
            seen[g.mul[e][x]] = 1;
    }
    return reps;
}

std::vector<uint16_t> double_coset_reps(const SubgroupLattice& lat, int s, int t) {
    const FiniteGroup& g = *lat.group;
    const Bits& sb = lat.bits_of(s);
    const Bits& tb = lat.bits_of(t);
    std::vector<char> seen(g.order(), 0);
    std::vector<uint16_t> reps;
    for (unsigned e = 0; e < g.order(); ++e) {
        if (seen[e])
            continue;
        reps.push_back(static_cast<uint16_t>(e));
        for (int a = sb.find_first(); a >= 0; a = sb.find_next(a))
            for (int b = tb.find_first(); b >= 0; b = tb.find_next(b))
                seen[g.mul[g.mul[a][e]][b]] = 1;
    }
    return reps;
}

int conjugate_subgroup(const SubgroupLattice& lat, int s, uint16_t g) {
    return lat.conj_sub(s, g);
}

int subgroup_product(const SubgroupLattice& lat, int p, int s) {
    const FiniteGroup& g = *lat.group;
    const Bits& pb = lat.bits_of(p);
    const Bits& sb = lat.bits_of(s);
    Bits prod(g.order());
    for (int a = pb.find_first(); a >= 0; a = pb.find_next(a))
        for (int b = sb.find_first(); b >= 0; b = sb.find_next(b))
            prod.set(g.mul[a][b]);
    int id = lat.id_of(prod);
    if (id < 0 || lat.order_of(id) != prod.count())
        throw internal_error("subgroup_product: set product is not a subgroup");
    return id;
}

int intersect_subgroups(const SubgroupLattice& lat, int a, int b) {
    int id = lat.id_of(lat.bits_of(a) & lat.bits_of(b));
    if (id < 0)
        throw internal_error("intersection of subgroups not in lattice");
    return id;
}

} // namespace burnside
