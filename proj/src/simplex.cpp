#include "burnside/simplex.hpp"

#include <algorithm>

namespace burnside {

Bits GSet::stabilizer(const FiniteGroup& g, int x) const {
    Bits b(g.order());
    for (unsigned e = 0; e < g.order(); ++e)
        if (act[e][x] == x)
            b.set(e);
    return b;
}

std::vector<int> GSet::orbit_reps(const FiniteGroup& g) const {
    std::vector<char> seen(size, 0);
    std::vector<int> reps;
    for (int x = 0; x < size; ++x) {
        if (seen[x])
            continue;
        reps.push_back(x);
        for (unsigned e = 0; e < g.order(); ++e)
            seen[act[e][x]] = 1;
    }
    return reps;
}

std::vector<int> GSet::fixed_points(const Bits& subgroup) const {
    std::vector<int> out;
    for (int x = 0; x < size; ++x) {
        bool fixed = true;
        for (int e = subgroup.find_first(); fixed && e >= 0; e = subgroup.find_next(e))
            fixed = act[e][x] == x;
        if (fixed)
            out.push_back(x);
    }
    return out;
}

void GSet::validate(const FiniteGroup& g) const {
    if (static_cast<unsigned>(act.size()) != g.order())
        throw input_error("G-set: action table has wrong group size");
    for (unsigned e = 0; e < g.order(); ++e) {
        if (static_cast<int>(act[e].size()) != size)
            throw input_error("G-set: action row has wrong length");
        for (int x = 0; x < size; ++x)
            if (act[e][x] < 0 || act[e][x] >= size)
                throw input_error("G-set: action image out of range");
    }
    for (int x = 0; x < size; ++x)
        if (act[0][x] != x)
            throw input_error("G-set: identity does not act trivially");
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = 0; b < g.order(); ++b) {
            uint16_t ab = g.mul[a][b];
            for (int x = 0; x < size; ++x)
                if (act[ab][x] != act[a][act[b][x]])
                    throw input_error("G-set: action is not compatible with the group law");
        }
}

void SimplexInstance::validate() const {
    if (static_cast<int>(sets.size()) != n + 1 || static_cast<int>(maps.size()) != n)
        throw input_error("simplex: wrong number of sets or maps");
    for (const GSet& s : sets)
        s.validate(*group);
    for (int i = 1; i <= n; ++i) {
        const auto& f = maps[i - 1];
        if (static_cast<int>(f.size()) != sets[i - 1].size)
            throw input_error("simplex: map domain mismatch");
        for (int x = 0; x < sets[i - 1].size; ++x)
            if (f[x] < 0 || f[x] >= sets[i].size)
                throw input_error("simplex: map image out of range");
        for (unsigned e = 0; e < group->order(); ++e)
            for (int x = 0; x < sets[i - 1].size; ++x)
                if (f[sets[i - 1].act[e][x]] != sets[i].act[e][f[x]])
                    throw input_error("simplex: map is not equivariant");
    }
}

namespace {

// Left cosets of S listed by least-index representative; returns the coset
// index of every group element alongside the G-set.
struct CosetSpace {
    GSet set;
    std::vector<int> coset_of; // group element -> point
    std::vector<uint16_t> reps;
};

CosetSpace coset_space(const FiniteGroup& g, const Bits& sub) {
    CosetSpace cs;
    cs.coset_of.assign(g.order(), -1);
    for (unsigned e = 0; e < g.order(); ++e) {
        if (cs.coset_of[e] >= 0)
            continue;
        int c = static_cast<int>(cs.reps.size());
        cs.reps.push_back(static_cast<uint16_t>(e));
        for (int x = sub.find_first(); x >= 0; x = sub.find_next(x))
            cs.coset_of[g.mul[e][x]] = c;
    }
    cs.set.size = static_cast<int>(cs.reps.size());
    cs.set.act.assign(g.order(), std::vector<int>(cs.set.size));
    for (unsigned e = 0; e < g.order(); ++e)
        for (int c = 0; c < cs.set.size; ++c)
            cs.set.act[e][c] = cs.coset_of[g.mul[e][cs.reps[c]]];
    return cs;
}

} // namespace

SimplexInstance chain_simplex(const LatticePtr& lat, const Slice& s) {
    const FiniteGroup& g = *lat->group;
    SimplexInstance sx;
    sx.group = lat->group;
    sx.n = static_cast<int>(s.size()) - 1;
    std::vector<CosetSpace> spaces;
    for (int id : s)
        spaces.push_back(coset_space(g, lat->bits_of(id)));
    for (auto& sp : spaces)
        sx.sets.push_back(sp.set);
    for (int i = 1; i <= sx.n; ++i) {
        std::vector<int> f(spaces[i - 1].set.size);
        for (int c = 0; c < spaces[i - 1].set.size; ++c)
            f[c] = spaces[i].coset_of[spaces[i - 1].reps[c]];
        sx.maps.push_back(std::move(f));
    }
    return sx;
}

SimplexInstance point_simplex(const GroupPtr& g, int n) {
    SimplexInstance sx;
    sx.group = g;
    sx.n = n;
    GSet pt;
    pt.size = 1;
    pt.act.assign(g->order(), {0});
    sx.sets.assign(n + 1, pt);
    sx.maps.assign(n, {0});
    return sx;
}

SimplexInstance empty_simplex(const GroupPtr& g, int n) {
    SimplexInstance sx;
    sx.group = g;
    sx.n = n;
    GSet em;
    em.size = 0;
    em.act.assign(g->order(), {});
    sx.sets.assign(n + 1, em);
    sx.maps.assign(n, {});
    return sx;
}

SimplexInstance disjoint_union(const SimplexInstance& a, const SimplexInstance& b) {
    if (a.group != b.group || a.n != b.n)
        throw input_error("disjoint union: mismatched simplices");
    SimplexInstance r;
    r.group = a.group;
    r.n = a.n;
    for (int i = 0; i <= a.n; ++i) {
        GSet s;
        s.size = a.sets[i].size + b.sets[i].size;
        s.act.assign(a.group->order(), std::vector<int>(s.size));
        for (unsigned e = 0; e < a.group->order(); ++e) {
            for (int x = 0; x < a.sets[i].size; ++x)
                s.act[e][x] = a.sets[i].act[e][x];
            for (int x = 0; x < b.sets[i].size; ++x)
                s.act[e][a.sets[i].size + x] = a.sets[i].size + b.sets[i].act[e][x];
        }
        r.sets.push_back(std::move(s));
    }
    for (int i = 1; i <= a.n; ++i) {
        std::vector<int> f(r.sets[i - 1].size);
        for (int x = 0; x < a.sets[i - 1].size; ++x)
            f[x] = a.maps[i - 1][x];
        for (int x = 0; x < b.sets[i - 1].size; ++x)
            f[a.sets[i - 1].size + x] = a.sets[i].size + b.maps[i - 1][x];
        r.maps.push_back(std::move(f));
    }
    return r;
}

SimplexInstance product_simplex(const SimplexInstance& a, const SimplexInstance& b) {
    if (a.group != b.group || a.n != b.n)
        throw input_error("product: mismatched simplices");
    SimplexInstance r;
    r.group = a.group;
    r.n = a.n;
    for (int i = 0; i <= a.n; ++i) {
        GSet s;
        s.size = a.sets[i].size * b.sets[i].size;
        s.act.assign(a.group->order(), std::vector<int>(s.size));
        for (unsigned e = 0; e < a.group->order(); ++e)
            for (int x = 0; x < a.sets[i].size; ++x)
                for (int y = 0; y < b.sets[i].size; ++y)
                    s.act[e][x * b.sets[i].size + y] =
                        a.sets[i].act[e][x] * b.sets[i].size + b.sets[i].act[e][y];
        r.sets.push_back(std::move(s));
    }
    for (int i = 1; i <= a.n; ++i) {
        std::vector<int> f(r.sets[i - 1].size);
        for (int x = 0; x < a.sets[i - 1].size; ++x)
            for (int y = 0; y < b.sets[i - 1].size; ++y)
                f[x * b.sets[i - 1].size + y] =
                    a.maps[i - 1][x] * b.sets[i].size + b.maps[i - 1][y];
        r.maps.push_back(std::move(f));
    }
    return r;
}

BurnsideElt linearize(const TablePtr& table, const SimplexInstance& sx) {
    sx.validate();
    if (sx.group != table->lattice->group)
        throw input_error("linearize: simplex over a different group");
    if (sx.n != table->n)
        throw input_error("linearize: degree mismatch");
    const FiniteGroup& g = *sx.group;
    const SubgroupLattice& lat = *table->lattice;
    BurnsideElt out(table);
    for (int x : sx.sets[0].orbit_reps(g)) {
        Slice s(sx.n + 1);
        int cur = x;
        for (int i = 0; i <= sx.n; ++i) {
            int id = lat.id_of(sx.sets[i].stabilizer(g, cur));
            if (id < 0)
                throw internal_error("stabilizer not in lattice");
            s[i] = id;
            if (i < sx.n)
                cur = sx.maps[i][cur];
        }
        out.add(table->class_of(s), 1);
    }
    return out;
}

Int phi_nested(const SubgroupLattice& lat, const Slice& s, const SimplexInstance& sx) {
    if (static_cast<int>(s.size()) != sx.n + 1)
        throw input_error("phi: slice degree mismatch");
    // Start with X_n^{S_n}, pull back, take fixed points, repeat.
    std::vector<char> alive(sx.sets[sx.n].size, 0);
    for (int x : sx.sets[sx.n].fixed_points(lat.bits_of(s[sx.n])))
        alive[x] = 1;
    for (int i = sx.n - 1; i >= 0; --i) {
        std::vector<char> pulled(sx.sets[i].size, 0);
        for (int x = 0; x < sx.sets[i].size; ++x)
            if (alive[sx.maps[i][x]])
                pulled[x] = 1;
        alive.assign(sx.sets[i].size, 0);
        const Bits& sb = lat.bits_of(s[i]);
        for (int x = 0; x < sx.sets[i].size; ++x) {
            if (!pulled[x])
                continue;
            bool fixed = true;
            for (int e = sb.find_first(); fixed && e >= 0; e = sb.find_next(e))
                fixed = sx.sets[i].act[e][x] == x;
            alive[x] = fixed;
        }
    }
    Int count = 0;
    for (char a : alive)
        count += a;
    return count;
}

Int phi_direct(const SubgroupLattice& lat, const Slice& s, const SimplexInstance& sx) {
    if (static_cast<int>(s.size()) != sx.n + 1)
        throw input_error("phi: slice degree mismatch");
    std::vector<std::vector<int>> fixed(sx.n + 1);
    for (int i = 0; i <= sx.n; ++i)
        fixed[i] = sx.sets[i].fixed_points(lat.bits_of(s[i]));
    // Enumerate candidate tuples over the products of fixed-point sets.
    Int count = 0;
    std::vector<int> tuple(sx.n + 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == sx.n + 1) {
            ++count;
            return;
        }
        for (int x : fixed[i]) {
            if (i > 0 && sx.maps[i - 1][tuple[i - 1]] != x)
                continue;
            tuple[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

SimplexInstance random_simplex(const LatticePtr& lat, int n, std::mt19937& rng,
                               int max_orbits, bool allow_empty) {
    const FiniteGroup& g = *lat->group;
    auto rand_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    SimplexInstance sx;
    sx.group = lat->group;
    sx.n = n;
    sx.sets.resize(n + 1);
    sx.maps.resize(n);

    // Build X_n from random cosets, then extend leftwards: each new orbit
    // G/K maps to a chosen point x with K below Stab(x).
    int orbits = rand_int(allow_empty ? 0 : 1, max_orbits);
    {
        GSet xn;
        xn.size = 0;
        xn.act.assign(g.order(), {});
        for (int k = 0; k < orbits; ++k) {
            CosetSpace cs = coset_space(g, lat->bits_of(rand_int(0, static_cast<int>(lat->size()) - 1)));
            int off = xn.size;
            xn.size += cs.set.size;
            for (unsigned e = 0; e < g.order(); ++e)
                for (int x = 0; x < cs.set.size; ++x)
                    xn.act[e].push_back(off + cs.set.act[e][x]);
        }
        sx.sets[n] = std::move(xn);
    }
    for (int i = n - 1; i >= 0; --i) {
        GSet xi;
        xi.size = 0;
        xi.act.assign(g.order(), {});
        std::vector<int> f;
        int k = sx.sets[i + 1].size == 0 ? 0 : rand_int(allow_empty ? 0 : 1, max_orbits);
        for (int orb = 0; orb < k; ++orb) {
            int target = rand_int(0, sx.sets[i + 1].size - 1);
            Bits stab = sx.sets[i + 1].stabilizer(g, target);
            const auto& downs = lat->downs(lat->id_of(stab));
            int sub = downs[rand_int(0, static_cast<int>(downs.size()) - 1)];
            CosetSpace cs = coset_space(g, lat->bits_of(sub));
            int off = xi.size;
            xi.size += cs.set.size;
            for (unsigned e = 0; e < g.order(); ++e)
                for (int x = 0; x < cs.set.size; ++x)
                    xi.act[e].push_back(off + cs.set.act[e][x]);
            // Equivariant extension of rep |-> target along the orbit.
            for (int c = 0; c < cs.set.size; ++c)
                f.push_back(sx.sets[i + 1].act[cs.reps[c]][target]);
        }
        sx.sets[i] = std::move(xi);
        sx.maps[i] = std::move(f);
    }
    return sx;
}

} // namespace burnside
