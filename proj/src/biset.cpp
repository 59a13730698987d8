#include "burnside/biset.hpp"

#include <numeric>

namespace burnside {

int SubgroupCtx::lift(int h_sub) const {
    const Bits& hb = ctx.lattice()->bits_of(h_sub);
    Bits pb(emb.parent->order());
    for (int i = hb.find_first(); i >= 0; i = hb.find_next(i))
        pb.set(emb.to_parent[i]);
    int id = parent_lattice->id_of(pb);
    if (id < 0)
        throw internal_error("lifted subgroup not in parent lattice");
    return id;
}

int SubgroupCtx::cut(int g_sub) const {
    const Bits& gb = parent_lattice->bits_of(g_sub);
    Bits hb(ctx.group()->order());
    for (size_t i = 0; i < emb.to_parent.size(); ++i)
        if (gb.test(emb.to_parent[i]))
            hb.set(static_cast<unsigned>(i));
    int id = ctx.lattice()->id_of(hb);
    if (id < 0)
        throw internal_error("cut subgroup not in subgroup lattice");
    return id;
}

SubgroupCtx make_subgroup_ctx(const GroupCtx& parent, int subgroup_id) {
    SubgroupCtx out;
    out.emb = subgroup_as_group(parent.group(), parent.lattice()->bits_of(subgroup_id));
    out.ctx = GroupCtx(out.emb.group, parent.caps());
    out.parent_lattice = parent.lattice();
    out.parent_subgroup_id = subgroup_id;
    return out;
}

int QuotientCtx::image_subgroup(int g_sub) const {
    const Bits& gb = parent_lattice->bits_of(g_sub);
    Bits qb(ctx.group()->order());
    for (int i = gb.find_first(); i >= 0; i = gb.find_next(i))
        qb.set(quo.proj[i]);
    int id = ctx.lattice()->id_of(qb);
    if (id < 0)
        throw internal_error("image subgroup not in quotient lattice");
    return id;
}

int QuotientCtx::preimage_subgroup(int q_sub) const {
    const Bits& qb = ctx.lattice()->bits_of(q_sub);
    Bits gb(quo.parent->order());
    for (unsigned g = 0; g < quo.parent->order(); ++g)
        if (qb.test(quo.proj[g]))
            gb.set(g);
    int id = parent_lattice->id_of(gb);
    if (id < 0)
        throw internal_error("preimage subgroup not in parent lattice");
    return id;
}

QuotientCtx make_quotient_ctx(const GroupCtx& parent, int normal_id) {
    QuotientCtx out;
    out.quo = quotient_group(parent.group(), parent.lattice()->bits_of(normal_id));
    out.ctx = GroupCtx(out.quo.group, parent.caps());
    out.parent_lattice = parent.lattice();
    out.kernel_id = normal_id;
    return out;
}

void Biset::validate() const {
    unsigned nh = left->order(), ng = right->order();
    if (lact.size() != nh)
        throw input_error("biset: left action has wrong group size");
    if (static_cast<unsigned>(ract.size()) != static_cast<unsigned>(size))
        throw input_error("biset: right action has wrong size");
    for (unsigned h = 0; h < nh; ++h)
        for (int u = 0; u < size; ++u) {
            int v = lact[h][u];
            if (v < 0 || v >= size)
                throw input_error("biset: left action out of range");
        }
    for (int u = 0; u < size; ++u) {
        if (lact[0][u] != u || ract[u][0] != u)
            throw input_error("biset: identities do not act trivially");
    }
    for (unsigned a = 0; a < nh; ++a)
        for (unsigned b = 0; b < nh; ++b)
            for (int u = 0; u < size; ++u)
                if (lact[left->mul[a][b]][u] != lact[a][lact[b][u]])
                    throw input_error("biset: left action violates the group law");
    for (unsigned a = 0; a < ng; ++a)
        for (unsigned b = 0; b < ng; ++b)
            for (int u = 0; u < size; ++u)
                if (ract[ract[u][a]][b] != ract[u][right->mul[a][b]])
                    throw input_error("biset: right action violates the group law");
    for (unsigned h = 0; h < nh; ++h)
        for (unsigned g = 0; g < ng; ++g)
            for (int u = 0; u < size; ++u)
                if (ract[lact[h][u]][g] != lact[h][ract[u][g]])
                    throw input_error("biset: actions do not commute");
}

Biset res_biset(const GroupCtx& parent, const SubgroupCtx& h) {
    const FiniteGroup& g = *parent.group();
    Biset u;
    u.left = h.ctx.group();
    u.right = parent.group();
    u.size = static_cast<int>(g.order());
    u.lact.assign(u.left->order(), std::vector<int>(u.size));
    for (unsigned a = 0; a < u.left->order(); ++a)
        for (int x = 0; x < u.size; ++x)
            u.lact[a][x] = g.mul[h.emb.to_parent[a]][x];
    u.ract.assign(u.size, std::vector<int>(g.order()));
    for (int x = 0; x < u.size; ++x)
        for (unsigned b = 0; b < g.order(); ++b)
            u.ract[x][b] = g.mul[x][b];
    return u;
}

Biset ind_biset(const GroupCtx& parent, const SubgroupCtx& h) {
    const FiniteGroup& g = *parent.group();
    Biset u;
    u.left = parent.group();
    u.right = h.ctx.group();
    u.size = static_cast<int>(g.order());
    u.lact.assign(g.order(), std::vector<int>(u.size));
    for (unsigned a = 0; a < g.order(); ++a)
        for (int x = 0; x < u.size; ++x)
            u.lact[a][x] = g.mul[a][x];
    u.ract.assign(u.size, std::vector<int>(u.right->order()));
    for (int x = 0; x < u.size; ++x)
        for (unsigned b = 0; b < u.right->order(); ++b)
            u.ract[x][b] = g.mul[x][h.emb.to_parent[b]];
    return u;
}

Biset inf_biset(const GroupCtx& parent, const QuotientCtx& q) {
    const FiniteGroup& quot = *q.ctx.group();
    Biset u;
    u.left = parent.group();
    u.right = q.ctx.group();
    u.size = static_cast<int>(quot.order());
    u.lact.assign(u.left->order(), std::vector<int>(u.size));
    for (unsigned a = 0; a < u.left->order(); ++a)
        for (int x = 0; x < u.size; ++x)
            u.lact[a][x] = quot.mul[q.quo.proj[a]][x];
    u.ract.assign(u.size, std::vector<int>(quot.order()));
    for (int x = 0; x < u.size; ++x)
        for (unsigned b = 0; b < quot.order(); ++b)
            u.ract[x][b] = quot.mul[x][b];
    return u;
}

Biset def_biset(const GroupCtx& parent, const QuotientCtx& q) {
    const FiniteGroup& quot = *q.ctx.group();
    Biset u;
    u.left = q.ctx.group();
    u.right = parent.group();
    u.size = static_cast<int>(quot.order());
    u.lact.assign(quot.order(), std::vector<int>(u.size));
    for (unsigned a = 0; a < quot.order(); ++a)
        for (int x = 0; x < u.size; ++x)
            u.lact[a][x] = quot.mul[a][x];
    u.ract.assign(u.size, std::vector<int>(parent.group()->order()));
    for (int x = 0; x < u.size; ++x)
        for (unsigned b = 0; b < parent.group()->order(); ++b)
            u.ract[x][b] = quot.mul[x][q.quo.proj[b]];
    return u;
}

Biset iso_biset(const GroupIso& f) {
    const FiniteGroup& h = *f.dst;
    Biset u;
    u.left = f.dst;
    u.right = f.src;
    u.size = static_cast<int>(h.order());
    u.lact.assign(h.order(), std::vector<int>(u.size));
    for (unsigned a = 0; a < h.order(); ++a)
        for (int x = 0; x < u.size; ++x)
            u.lact[a][x] = h.mul[a][x];
    u.ract.assign(u.size, std::vector<int>(f.src->order()));
    for (int x = 0; x < u.size; ++x)
        for (unsigned b = 0; b < f.src->order(); ++b)
            u.ract[x][b] = h.mul[x][f.fwd[b]];
    return u;
}

Biset coset_biset(const ProductGroup& hg, const Bits& l) {
    const FiniteGroup& p = *hg.group;
    std::vector<int> coset_of(p.order(), -1);
    std::vector<uint16_t> reps;
    for (unsigned e = 0; e < p.order(); ++e) {
        if (coset_of[e] >= 0)
            continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(static_cast<uint16_t>(e));
        for (int x = l.find_first(); x >= 0; x = l.find_next(x))
            coset_of[p.mul[e][x]] = c;
    }
    Biset u;
    u.left = hg.left;
    u.right = hg.right;
    u.size = static_cast<int>(reps.size());
    u.lact.assign(hg.left->order(), std::vector<int>(u.size));
    for (unsigned a = 0; a < hg.left->order(); ++a) {
        uint16_t pe = hg.pair_index[a][0];
        for (int c = 0; c < u.size; ++c)
            u.lact[a][c] = coset_of[p.mul[pe][reps[c]]];
    }
    u.ract.assign(u.size, std::vector<int>(hg.right->order()));
    for (unsigned b = 0; b < hg.right->order(); ++b) {
        uint16_t pe = hg.pair_index[0][hg.right->inv[b]];
        for (int c = 0; c < u.size; ++c)
            u.ract[c][b] = coset_of[p.mul[pe][reps[c]]];
    }
    return u;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Biset compose_bisets(const Biset& v, const Biset& u) {
    if (v.right != u.left)
        throw input_error("compose_bisets: middle groups differ");
    const FiniteGroup& h = *u.left;
    int m = u.size;
    UnionFind uf(static_cast<size_t>(v.size) * m);
    for (unsigned e = 0; e < h.order(); ++e)
        for (int a = 0; a < v.size; ++a)
            for (int b = 0; b < m; ++b)
                uf.join(v.ract[a][e] * m + b, a * m + u.lact[e][b]);
    std::vector<int> cls(static_cast<size_t>(v.size) * m, -1);
    int count = 0;
    for (size_t i = 0; i < cls.size(); ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i))
            cls[i] = count++;
    for (size_t i = 0; i < cls.size(); ++i)
        cls[i] = cls[uf.find(static_cast<int>(i))];

    Biset w;
    w.left = v.left;
    w.right = u.right;
    w.size = count;
    w.lact.assign(v.left->order(), std::vector<int>(count));
    w.ract.assign(count, std::vector<int>(u.right->order()));
    for (size_t i = 0; i < cls.size(); ++i) {
        int a = static_cast<int>(i) / m, b = static_cast<int>(i) % m;
        for (unsigned k = 0; k < v.left->order(); ++k)
            w.lact[k][cls[i]] = cls[v.lact[k][a] * m + b];
        for (unsigned g = 0; g < u.right->order(); ++g)
            w.ract[cls[i]][g] = cls[a * m + u.ract[b][g]];
    }
    return w;
}

Biset disjoint_union_bisets(const Biset& a, const Biset& b) {
    if (a.left != b.left || a.right != b.right)
        throw input_error("disjoint_union_bisets: group mismatch");
    Biset u;
    u.left = a.left;
    u.right = a.right;
    u.size = a.size + b.size;
    u.lact.assign(a.left->order(), std::vector<int>(u.size));
    u.ract.assign(u.size, std::vector<int>(a.right->order()));
    for (unsigned h = 0; h < a.left->order(); ++h) {
        for (int x = 0; x < a.size; ++x)
            u.lact[h][x] = a.lact[h][x];
        for (int x = 0; x < b.size; ++x)
            u.lact[h][a.size + x] = a.size + b.lact[h][x];
    }
    for (unsigned g = 0; g < a.right->order(); ++g) {
        for (int x = 0; x < a.size; ++x)
            u.ract[x][g] = a.ract[x][g];
        for (int x = 0; x < b.size; ++x)
            u.ract[a.size + x][g] = a.size + b.ract[x][g];
    }
    return u;
}

GSet biset_tensor(const Biset& u, const GSet& x, std::vector<int>* pair_class) {
    const FiniteGroup& g = *u.right;
    int m = x.size;
    size_t total = static_cast<size_t>(u.size) * m;
    UnionFind uf(total);
    // (u.g, x) ~ (u, g.x)
    for (unsigned e = 0; e < g.order(); ++e)
        for (int a = 0; a < u.size; ++a)
            for (int b = 0; b < m; ++b)
                uf.join(u.ract[a][e] * m + b, a * m + x.act[e][b]);
    std::vector<int> cls(total, -1);
    int count = 0;
    for (size_t i = 0; i < total; ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i))
            cls[i] = count++;
    for (size_t i = 0; i < total; ++i)
        cls[i] = cls[uf.find(static_cast<int>(i))];

    GSet out;
    out.size = count;
    out.act.assign(u.left->order(), std::vector<int>(count));
    for (size_t i = 0; i < total; ++i) {
        int a = static_cast<int>(i) / m, b = static_cast<int>(i) % m;
        for (unsigned h = 0; h < u.left->order(); ++h)
            out.act[h][cls[i]] = cls[u.lact[h][a] * m + b];
    }
    if (pair_class)
        *pair_class = cls;
    return out;
}

BurnsideElt biset_apply(const Biset& u, const GroupCtx& hctx, const BurnsideElt& x) {
    const SliceClassTable& src = *x.ctx;
    TablePtr target = hctx.table(src.n);
    BurnsideElt out(target);
    for (const auto& [cls, coeff] : x.coeffs) {
        SimplexInstance chain = chain_simplex(src.lattice, src.classes[cls]);
        SimplexInstance image;
        image.group = hctx.group();
        image.n = chain.n;
        std::vector<std::vector<int>> pair_cls(chain.n + 1);
        for (int i = 0; i <= chain.n; ++i)
            image.sets.push_back(biset_tensor(u, chain.sets[i], &pair_cls[i]));
        for (int i = 1; i <= chain.n; ++i) {
            int m_prev = chain.sets[i - 1].size;
            int m_next = chain.sets[i].size;
            std::vector<int> f(image.sets[i - 1].size, -1);
            for (int a = 0; a < u.size; ++a)
                for (int b = 0; b < m_prev; ++b)
                    f[pair_cls[i - 1][a * m_prev + b]] =
                        pair_cls[i][a * m_next + chain.maps[i - 1][b]];
            image.maps.push_back(std::move(f));
        }
        BurnsideElt term = linearize(target, image);
        for (const auto& [k, v] : term.coeffs)
            out.add(k, coeff * v);
    }
    return out;
}

BurnsideElt restriction(const GroupCtx& parent, const SubgroupCtx& h, const BurnsideElt& x) {
    const SliceClassTable& src = *x.ctx;
    if (src.lattice != parent.lattice())
        throw input_error("restriction: element not over the parent group");
    const SubgroupLattice& lat = *parent.lattice();
    TablePtr target = h.ctx.table(src.n);
    BurnsideElt out(target);
    for (const auto& [cls, coeff] : x.coeffs) {
        const Slice& s = src.classes[cls];
        for (uint16_t g : double_coset_reps(lat, h.parent_subgroup_id, s[0])) {
            Slice cut(s.size());
            for (size_t i = 0; i < s.size(); ++i)
                cut[i] = h.cut(lat.conj_sub(s[i], g)); // H cap gS_ig^{-1}
            out.add(target->class_of(cut), coeff);
        }
    }
    return out;
}

BurnsideElt induction(const GroupCtx& parent, const SubgroupCtx& h, const BurnsideElt& x) {
    const SliceClassTable& src = *x.ctx;
    if (src.lattice != h.ctx.lattice())
        throw input_error("induction: element not over the subgroup");
    TablePtr target = parent.table(src.n);
    BurnsideElt out(target);
    for (const auto& [cls, coeff] : x.coeffs) {
        const Slice& t = src.classes[cls];
        Slice lifted(t.size());
        for (size_t i = 0; i < t.size(); ++i)
            lifted[i] = h.lift(t[i]);
        out.add(target->class_of(lifted), coeff);
    }
    return out;
}

BurnsideElt inflation(const GroupCtx& parent, const QuotientCtx& q, const BurnsideElt& x) {
    const SliceClassTable& src = *x.ctx;
    if (src.lattice != q.ctx.lattice())
        throw input_error("inflation: element not over the quotient");
    TablePtr target = parent.table(src.n);
    BurnsideElt out(target);
    for (const auto& [cls, coeff] : x.coeffs) {
        const Slice& t = src.classes[cls];
        Slice pre(t.size());
        for (size_t i = 0; i < t.size(); ++i)
            pre[i] = q.preimage_subgroup(t[i]);
        out.add(target->class_of(pre), coeff);
    }
    return out;
}

BurnsideElt deflation(const GroupCtx& parent, const QuotientCtx& q, const BurnsideElt& x) {
    const SliceClassTable& src = *x.ctx;
    if (src.lattice != parent.lattice())
        throw input_error("deflation: element not over the parent group");
    TablePtr target = q.ctx.table(src.n);
    BurnsideElt out(target);
    for (const auto& [cls, coeff] : x.coeffs) {
        const Slice& s = src.classes[cls];
        Slice img(s.size());
        for (size_t i = 0; i < s.size(); ++i)
            img[i] = q.image_subgroup(s[i]);
        out.add(target->class_of(img), coeff);
    }
    return out;
}

BurnsideElt transport(const GroupIso& f, const GroupCtx& src_ctx, const GroupCtx& dst_ctx,
                      const BurnsideElt& x) {
    const SliceClassTable& src = *x.ctx;
    if (src.lattice != src_ctx.lattice())
        throw input_error("transport: element not over the source context");
    TablePtr target = dst_ctx.table(src.n);
    BurnsideElt out(target);
    for (const auto& [cls, coeff] : x.coeffs) {
        const Slice& s = src.classes[cls];
        Slice img(s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            const Bits& sb = src_ctx.lattice()->bits_of(s[i]);
            Bits db(dst_ctx.group()->order());
            for (int e = sb.find_first(); e >= 0; e = sb.find_next(e))
                db.set(f.fwd[e]);
            int id = dst_ctx.lattice()->id_of(db);
            if (id < 0)
                throw internal_error("transported subgroup not in target lattice");
            img[i] = id;
        }
        out.add(target->class_of(img), coeff);
    }
    return out;
}

BurnsideElt external_product(const ProductGroup& gh, const GroupCtx& gctx,
                             const GroupCtx& hctx, const GroupCtx& ghctx,
                             const BurnsideElt& x, const BurnsideElt& y) {
    const SliceClassTable& sx = *x.ctx;
    const SliceClassTable& sy = *y.ctx;
    if (sx.n != sy.n)
        throw input_error("external product: degree mismatch");
    TablePtr target = ghctx.table(sx.n);
    BurnsideElt out(target);
    for (const auto& [ci, vi] : x.coeffs)
        for (const auto& [cj, vj] : y.coeffs) {
            const Slice& s = sx.classes[ci];
            const Slice& t = sy.classes[cj];
            Slice prod(s.size());
            for (size_t k = 0; k < s.size(); ++k) {
                Bits pb = gh.pair_bits(gctx.lattice()->bits_of(s[k]),
                                       hctx.lattice()->bits_of(t[k]));
                int id = ghctx.lattice()->id_of(pb);
                if (id < 0)
                    throw internal_error("product subgroup not in product lattice");
                prod[k] = id;
            }
            out.add(target->class_of(prod), vi * vj);
        }
    return out;
}

BisetFactorization goursat(const GroupCtx& hctx, const GroupCtx& gctx,
                           const ProductGroup& hg, const Bits& l) {
    unsigned nh = hctx.group()->order(), ng = gctx.group()->order();
    Bits d(nh), c(nh), b(ng), a(ng);
    for (int e = l.find_first(); e >= 0; e = l.find_next(e)) {
        auto [h, g] = hg.factors[e];
        d.set(h);
        b.set(g);
        if (g == 0)
            c.set(h);
        if (h == 0)
            a.set(g);
    }
    BisetFactorization f;
    f.d = hctx.lattice()->id_of(d);
    f.c = hctx.lattice()->id_of(c);
    f.b = gctx.lattice()->id_of(b);
    f.a = gctx.lattice()->id_of(a);
    if (f.d < 0 || f.c < 0 || f.b < 0 || f.a < 0)
        throw internal_error("goursat: projection or kernel is not a subgroup");
    return f;
}

BurnsideElt biset_apply_factorized(const GroupCtx& hctx, const GroupCtx& gctx,
                                   const ProductGroup& hg, const Bits& l,
                                   const BurnsideElt& x) {
    BisetFactorization f = goursat(hctx, gctx, hg, l);

    SubgroupCtx bctx = make_subgroup_ctx(gctx, f.b);
    SubgroupCtx dctx = make_subgroup_ctx(hctx, f.d);
    QuotientCtx ba = make_quotient_ctx(bctx.ctx, bctx.cut(f.a));
    QuotientCtx dc = make_quotient_ctx(dctx.ctx, dctx.cut(f.c));

    // f: B/A -> D/C maps bA to hC for any (h, b) in L.
    const FiniteGroup& qsrc = *ba.ctx.group();
    std::vector<uint16_t> fwd(qsrc.order(), 0);
    std::vector<char> have(qsrc.order(), 0);
    for (int e = l.find_first(); e >= 0; e = l.find_next(e)) {
        auto [h, g] = hg.factors[e];
        int bl = bctx.emb.from_parent[g];
        int dl = dctx.emb.from_parent[h];
        if (bl < 0 || dl < 0)
            throw internal_error("goursat: pair outside projections");
        uint16_t src_q = ba.quo.proj[bl];
        uint16_t dst_q = dc.quo.proj[dl];
        if (have[src_q] && fwd[src_q] != dst_q)
            throw internal_error("goursat: coset map is not well defined");
        fwd[src_q] = dst_q;
        have[src_q] = 1;
    }
    for (char hh : have)
        if (!hh)
            throw internal_error("goursat: coset map is partial");
    GroupIso iso = group_iso(ba.ctx.group(), dc.ctx.group(), fwd);

    BurnsideElt r1 = restriction(gctx, bctx, x);
    BurnsideElt r2 = deflation(bctx.ctx, ba, r1);
    BurnsideElt r3 = transport(iso, ba.ctx, dc.ctx, r2);
    BurnsideElt r4 = inflation(dctx.ctx, dc, r3);
    return induction(hctx, dctx, r4);
}

} // namespace burnside
