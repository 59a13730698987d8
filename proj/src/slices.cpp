#include "burnside/slices.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace burnside {

Slice SliceClassTable::conjugate(const Slice& s, uint16_t g) const {
    Slice r(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        r[i] = lattice->conj_sub(s[i], g);
    return r;
}

Slice SliceClassTable::canonical(const Slice& s) const {
    Slice best = s;
    const unsigned n_elems = group().order();
    for (unsigned g = 1; g < n_elems; ++g) {
        Slice c = conjugate(s, static_cast<uint16_t>(g));
        if (c < best)
            best = std::move(c);
    }
    return best;
}

int SliceClassTable::class_of(const Slice& s) const {
    if (static_cast<int>(s.size()) != n + 1)
        throw input_error("slice degree mismatch");
    auto it = class_index_.find(canonical(s));
    if (it == class_index_.end())
        throw internal_error("slice not found in class table");
    return it->second;
}

bool SliceClassTable::slice_leq(const Slice& a, const Slice& b) const {
    for (size_t i = 0; i < a.size(); ++i)
        if (!lattice->leq(a[i], b[i]))
            return false;
    return true;
}

std::string SliceClassTable::chain_string(int cls) const {
    std::ostringstream out;
    const Slice& s = classes[cls];
    for (size_t i = 0; i < s.size(); ++i) {
        if (i)
            out << " <= ";
        out << lattice->class_name(lattice->class_rep(s[i]));
    }
    return out.str();
}

Slice SliceClassTable::parse_chain(const std::string& text) const {
    std::vector<std::string> toks;
    std::string cur;
    for (size_t i = 0; i <= text.size(); ++i) {
        char c = i < text.size() ? text[i] : ' ';
        if (c == '<' || c == '=' || c == ' ' || c == ',') {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (static_cast<int>(toks.size()) != n + 1)
        throw input_error("chain \"" + text + "\" needs " + std::to_string(n + 1) +
                          " subgroup classes for degree " + std::to_string(n));
    // Resolve each token to a class, then search the class orbits for an
    // actual chain: class reps alone need not be nested.
    std::vector<int> reps(toks.size());
    for (size_t i = 0; i < toks.size(); ++i)
        reps[i] = lattice->class_by_name(toks[i]);
    Slice out(reps.size());
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == reps.size())
            return true;
        for (int cand : lattice->class_members(reps[i])) {
            if (i > 0 && !lattice->leq(out[i - 1], cand))
                continue;
            out[i] = cand;
            if (place(i + 1))
                return true;
        }
        return false;
    };
    if (!place(0))
        throw input_error("chain \"" + text + "\" has no nested realization");
    return out;
}

void for_each_slice(const SubgroupLattice& lat, int n,
                    const std::function<void(const Slice&)>& fn) {
    Slice cur(n + 1);
    std::function<void(int)> extend = [&](int pos) {
        if (pos == n + 1) {
            fn(cur);
            return;
        }
        if (pos == 0) {
            for (size_t s = 0; s < lat.size(); ++s) {
                cur[0] = static_cast<int>(s);
                extend(1);
            }
        } else {
            for (int up : lat.ups(cur[pos - 1])) {
                cur[pos] = up;
                extend(pos + 1);
            }
        }
    };
    extend(0);
}

Int mark_slices(const SubgroupLattice& lat, const Slice& s, const Slice& t) {
    if (s.size() != t.size())
        throw input_error("mark: slice degree mismatch");
    const FiniteGroup& g = *lat.group;
    Int count = 0;
    for (uint16_t rep : left_coset_reps(lat, t[0])) {
        uint16_t gi = g.inv[rep];
        bool ok = true;
        for (size_t i = 0; i < s.size() && ok; ++i)
            ok = lat.leq(lat.conj_sub(s[i], gi), t[i]); // S_i^g <= T_i
        if (ok)
            ++count;
    }
    return count;
}

SliceClassTable enumerate_slice_classes(const LatticePtr& lat, int n,
                                        size_t max_slices) {
    if (n < 0)
        throw input_error("slice degree must be non-negative");
    SliceClassTable tab;
    tab.lattice = lat;
    tab.n = n;

    size_t total = 0;
    std::unordered_map<Slice, char, SliceHash> seen;
    for_each_slice(*lat, n, [&](const Slice& s) {
        if (++total > max_slices)
            throw size_cap_error("slice count exceeds cap " + std::to_string(max_slices));
        Slice c = tab.canonical(s);
        seen.emplace(std::move(c), 1);
    });

    tab.classes.reserve(seen.size());
    for (const auto& [sl, _] : seen)
        tab.classes.push_back(sl);

    // Linear extension: sort by the tuple of part orders, then parts.
    auto key = [&](const Slice& s) {
        std::vector<unsigned> orders(s.size());
        for (size_t i = 0; i < s.size(); ++i)
            orders[i] = lat->order_of(s[i]);
        return orders;
    };
    std::sort(tab.classes.begin(), tab.classes.end(),
              [&](const Slice& a, const Slice& b) {
                  auto ka = key(a), kb = key(b);
                  if (ka != kb)
                      return ka < kb;
                  return a < b;
              });
    for (size_t i = 0; i < tab.classes.size(); ++i)
        tab.class_index_[tab.classes[i]] = static_cast<int>(i);

    size_t m = tab.classes.size();
    tab.slice_normalizer.resize(m);
    tab.weyl.resize(m);
    for (size_t i = 0; i < m; ++i) {
        Bits nb = lat->bits_of(lat->normalizer(tab.classes[i][0]));
        for (int k = 1; k <= n; ++k)
            nb = nb & lat->bits_of(lat->normalizer(tab.classes[i][k]));
        int nid = lat->id_of(nb);
        if (nid < 0)
            throw internal_error("slice normalizer not in lattice");
        tab.slice_normalizer[i] = nid;
        tab.weyl[i] = lat->order_of(nid) / lat->order_of(tab.classes[i][0]);
    }

    tab.leq_classes_.assign(m * m, 0);
    const FiniteGroup& g = *lat->group;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            bool le = false;
            for (unsigned e = 0; e < g.order() && !le; ++e)
                le = tab.slice_leq(tab.conjugate(tab.classes[a], static_cast<uint16_t>(e)),
                                   tab.classes[b]);
            tab.leq_classes_[a * m + b] = le;
        }

    tab.marks.assign(m, std::vector<Int>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (tab.leq_classes_[i * m + j])
                tab.marks[i][j] = mark_slices(*lat, tab.classes[i], tab.classes[j]);
    return tab;
}

TablePtr make_table(const LatticePtr& lat, int n, size_t max_slices) {
    return std::make_shared<const SliceClassTable>(
        enumerate_slice_classes(lat, n, max_slices));
}

Int mobius_pi(const SliceClassTable& table, const Slice& t, const Slice& s) {
    if (t.size() != s.size())
        throw input_error("mobius_pi: degree mismatch");
    const SubgroupLattice& lat = *table.lattice;
    // Interleaving T_0 <= S_0 <= T_1 <= S_1 <= ... <= T_n <= S_n.
    int n = static_cast<int>(t.size()) - 1;
    for (int i = 0; i <= n; ++i) {
        if (!lat.leq(t[i], s[i]))
            return 0;
        if (i < n && !lat.leq(s[i], t[i + 1]))
            return 0;
    }
    Int prod = 1;
    for (int i = 0; i <= n; ++i)
        prod *= lat.mobius(t[i], s[i]);
    return prod;
}

Int mobius_pi_recursive(const SliceClassTable& table, const Slice& t, const Slice& s) {
    if (t.size() != s.size())
        throw input_error("mobius_pi: degree mismatch");
    const SubgroupLattice& lat = *table.lattice;
    if (!table.slice_leq(t, s))
        return 0;
    // Enumerate the interval [t, s] in Pi_n and run the defining recursion.
    std::vector<Slice> interval;
    int n = static_cast<int>(t.size()) - 1;
    Slice cur(n + 1);
    std::function<void(int)> extend = [&](int pos) {
        if (pos == n + 1) {
            interval.push_back(cur);
            return;
        }
        for (int u : lat.ups(t[pos])) {
            if (!lat.leq(u, s[pos]))
                continue;
            if (pos > 0 && !lat.leq(cur[pos - 1], u))
                continue;
            cur[pos] = u;
            extend(pos + 1);
        }
    };
    extend(0);

    // Any linear extension works; total part order is one.
    std::sort(interval.begin(), interval.end(), [&](const Slice& a, const Slice& b) {
        unsigned oa = 0, ob = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            oa += lat.order_of(a[i]);
            ob += lat.order_of(b[i]);
        }
        if (oa != ob)
            return oa < ob;
        return a < b;
    });

    std::map<Slice, Int> mu;
    for (const Slice& v : interval) {
        if (v == t) {
            mu[v] = 1;
            continue;
        }
        Int acc = 0;
        for (const Slice& u : interval) {
            if (u == v)
                continue;
            if (table.slice_leq(u, v)) {
                auto it = mu.find(u);
                if (it != mu.end())
                    acc += it->second;
            }
        }
        mu[v] = -acc;
    }
    auto it = mu.find(s);
    return it == mu.end() ? Int(0) : it->second;
}

} // namespace burnside
