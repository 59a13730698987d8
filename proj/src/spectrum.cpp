#include "burnside/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "burnside/idempotents.hpp"

namespace burnside {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    return ps;
}

Slice slice_plus_p(const SliceClassTable& table, const Slice& s, unsigned p) {
    if (!is_prime(p))
        throw input_error("slice_plus_p: non-prime p");
    const SubgroupLattice& lat = *table.lattice;
    Bits nb = lat.bits_of(lat.normalizer(s[0]));
    for (size_t i = 1; i < s.size(); ++i)
        nb = nb & lat.bits_of(lat.normalizer(s[i]));
    int nid = lat.id_of(nb);
    if (nid < 0)
        throw internal_error("slice normalizer not in lattice");
    int syl = sylow(lat, nid, p);
    Slice out(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        out[i] = subgroup_product(lat, syl, s[i]); // P normalizes S_i
    if (!table.slice_leq(s, out))
        throw internal_error("slice_plus_p did not increase the slice");
    return out;
}

int slice_infinity_class(const TablePtr& table, int cls, unsigned p) {
    int cur = cls;
    for (;;) {
        int next = table->class_of(slice_plus_p(*table, table->classes[cur], p));
        if (next == cur)
            break;
        cur = next;
    }
    if (p_part(table->weyl[cur], p) != 1)
        throw internal_error("slice_infinity fixed point has Weyl order divisible by p");
    return cur;
}

Slice slice_infinity(const TablePtr& table, const Slice& s, unsigned p) {
    return table->classes[slice_infinity_class(table, table->class_of(s), p)];
}

PrimeIdeal normalize_ideal(const TablePtr& table, int cls, unsigned p) {
    if (p == 0)
        return {cls, 0};
    if (!is_prime(p))
        throw input_error("normalize_ideal: characteristic must be 0 or prime");
    return {slice_infinity_class(table, cls, p), p};
}

bool ideal_contains(const TablePtr& table, const PrimeIdeal& i, const PrimeIdeal& j) {
    if (i.characteristic == j.characteristic)
        return i.cls == j.cls;
    if (j.characteristic == 0 && i.characteristic > 0)
        return slice_infinity_class(table, j.cls, i.characteristic) == i.cls;
    return false;
}

QBurnsideElt p_local_idempotent(const TablePtr& table, int cls, unsigned p) {
    if (!is_prime(p))
        throw input_error("p_local_idempotent: non-prime p");
    if (p_part(table->weyl[cls], p) != 1)
        throw input_error("p_local_idempotent: class has Weyl order divisible by p");
    QBurnsideElt sum(table);
    for (size_t c = 0; c < table->class_count(); ++c)
        if (slice_infinity_class(table, static_cast<int>(c), p) == cls)
            sum = sum + idempotent(table, static_cast<int>(c));
    for (const auto& [k, v] : sum.coeffs)
        if (boost::multiprecision::denominator(v) % p == 0)
            throw internal_error("p-local idempotent has a denominator divisible by p");
    return sum;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> canonical_partition(std::vector<int> key_of) {
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < key_of.size(); ++i)
        groups[key_of[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [_, v] : groups)
        out.push_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::vector<int>> connected_components(const TablePtr& table) {
    const SliceClassTable& tab = *table;
    const SubgroupLattice& lat = *tab.lattice;
    size_t m = tab.class_count();

    // (a) Close the relation "same p-closure class for some prime p | |G|".
    UnionFind uf(m);
    for (unsigned p : prime_divisors(lat.group->order()))
        for (size_t c = 0; c < m; ++c)
            uf.join(static_cast<int>(c), slice_infinity_class(table, static_cast<int>(c), p));
    std::vector<int> by_closure(m);
    for (size_t c = 0; c < m; ++c)
        by_closure[c] = uf.find(static_cast<int>(c));

    // (b) Group by the conjugacy class of the perfect-core tuple.
    std::vector<int> by_core(m);
    for (size_t c = 0; c < m; ++c) {
        Slice core(tab.n + 1);
        for (int i = 0; i <= tab.n; ++i)
            core[i] = perfect_core(lat, tab.classes[c][i]);
        by_core[c] = tab.class_of(core);
    }

    auto pa = canonical_partition(by_closure);
    auto pb = canonical_partition(by_core);
    if (pa != pb)
        throw internal_error("component partitions disagree: p-closure vs perfect core");
    return pb;
}

bool is_spec_connected(const TablePtr& table) {
    return connected_components(table).size() == 1;
}

} // namespace burnside
