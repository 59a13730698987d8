#include "burnside/idempotents.hpp"

namespace burnside {

QBurnsideElt idempotent(const TablePtr& table, int cls) {
    const SliceClassTable& tab = *table;
    const SubgroupLattice& lat = *tab.lattice;
    const Slice& s = tab.classes[cls];
    int n = tab.n;

    // Chains are interleaved with s: T_0 below S_0, then T_i in [S_{i-1}, S_i].
    std::map<int, Int> acc; // class -> |T_0| * prod mu(T_i, S_i)
    Slice t(n + 1);
    std::function<void(int, Int)> extend = [&](int pos, Int partial) {
        if (pos == n + 1) {
            Int term = partial * lat.order_of(t[0]);
            auto [it, fresh] = acc.try_emplace(tab.class_of(t), term);
            if (!fresh)
                it->second += term;
            return;
        }
        const auto& candidates = pos == 0 ? lat.downs(s[0]) : lat.ups(s[pos - 1]);
        for (int u : candidates) {
            if (pos > 0 && !lat.leq(u, s[pos]))
                continue;
            const Int& mu = lat.mobius(u, s[pos]);
            if (mu == 0)
                continue;
            t[pos] = u;
            extend(pos + 1, partial * mu);
        }
    };
    extend(0, Int(1));

    Rat norm = Rat(1, Int(lat.order_of(tab.slice_normalizer[cls])));
    QBurnsideElt e(table);
    for (const auto& [c, v] : acc)
        e.add(c, Rat(v) * norm);
    return e;
}

std::vector<QBurnsideElt> all_idempotents(const TablePtr& table) {
    const SliceClassTable& tab = *table;
    size_t m = tab.class_count();
    std::vector<QBurnsideElt> es;
    es.reserve(m);
    for (size_t i = 0; i < m; ++i)
        es.push_back(idempotent(table, static_cast<int>(i)));

    // Verification runs on the integral lifts E_i = |N_G(S_i)| e_i, which
    // clears every denominator: e_i e_j = E_i E_j / (N_i N_j), so the
    // rational identities are equivalent to integer ones.
    std::vector<Int> norms(m);
    std::vector<std::vector<std::pair<int, Int>>> lifts(m);
    for (size_t i = 0; i < m; ++i) {
        norms[i] = tab.lattice->order_of(tab.slice_normalizer[i]);
        for (const auto& [cls, v] : es[i].coeffs) {
            Rat scaled = v * Rat(norms[i]);
            if (boost::multiprecision::denominator(scaled) != 1)
                throw internal_error("idempotent lift is not integral");
            lifts[i].push_back({cls, boost::multiprecision::numerator(scaled)});
        }
    }

    // Basis products, computed once.
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> prods(m);
    for (size_t a = 0; a < m; ++a) {
        prods[a].resize(m - a);
        for (size_t b = a; b < m; ++b) {
            BurnsideElt p = multiply(basis(table, static_cast<int>(a)),
                                     basis(table, static_cast<int>(b)));
            prods[a][b - a].assign(p.coeffs.begin(), p.coeffs.end());
        }
    }
    auto lift_product = [&](size_t i, size_t j) {
        std::map<int, Int> acc;
        for (const auto& [a, ca] : lifts[i])
            for (const auto& [b, cb] : lifts[j]) {
                Int c = ca * cb;
                const auto& terms =
                    a <= b ? prods[a][b - a] : prods[b][a - b];
                for (const auto& [cls, v] : terms)
                    acc[cls] += c * v;
            }
        for (auto it = acc.begin(); it != acc.end();)
            it = it->second == 0 ? acc.erase(it) : std::next(it);
        return acc;
    };

    for (size_t i = 0; i < m; ++i) {
        // ghost(E_i) = N_i * indicator_i.
        GhostVec<Int> g(m, Int(0));
        for (const auto& [a, c] : lifts[i])
            for (size_t k = 0; k < m; ++k)
                if (tab.marks[k][a] != 0)
                    g[k] += c * tab.marks[k][a];
        for (size_t k = 0; k < m; ++k)
            if (g[k] != (k == i ? norms[i] : 0))
                throw internal_error("idempotent ghost is not the class indicator");
        // E_i^2 = N_i E_i.
        std::map<int, Int> sq = lift_product(i, i);
        std::map<int, Int> expect;
        for (const auto& [cls, c] : lifts[i])
            expect[cls] = norms[i] * c;
        if (sq != expect)
            throw internal_error("idempotent fails e^2 = e");
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (!lift_product(i, j).empty())
                throw internal_error("idempotents are not orthogonal");
    QBurnsideElt sum(table);
    for (const auto& e : es)
        sum = sum + e;
    if (!(sum == basis_elt<Rat>(table, tab.unit_class())))
        throw internal_error("idempotents do not sum to the identity");
    return es;
}

bool characterization_check(const TablePtr& table, int cls, const QBurnsideElt& x) {
    QBurnsideElt e = idempotent(table, cls);
    Rat phi = ghost(x)[cls];
    return multiply(x, e) == scale(phi, e);
}

bool is_multiple_of_idempotent(const TablePtr& table, int cls, const QBurnsideElt& y) {
    GhostVec<Rat> g = ghost(y);
    for (size_t k = 0; k < table->class_count(); ++k)
        if (static_cast<int>(k) != cls && g[k] != 0)
            return false;
    return true;
}

} // namespace burnside
