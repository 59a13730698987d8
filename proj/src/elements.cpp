#include "burnside/elements.hpp"

namespace burnside {

namespace {

void require_same_ctx(const void* a, const void* b) {
    if (a != b)
        throw input_error("elements live over different slice tables");
}

} // namespace

template <class C>
SliceElt<C> operator+(const SliceElt<C>& a, const SliceElt<C>& b) {
    require_same_ctx(a.ctx.get(), b.ctx.get());
    SliceElt<C> r = a;
    for (const auto& [k, v] : b.coeffs)
        r.add(k, v);
    return r;
}

template <class C>
SliceElt<C> operator-(const SliceElt<C>& a, const SliceElt<C>& b) {
    require_same_ctx(a.ctx.get(), b.ctx.get());
    SliceElt<C> r = a;
    for (const auto& [k, v] : b.coeffs)
        r.add(k, -v);
    return r;
}

template <class C>
SliceElt<C> scale(const C& c, const SliceElt<C>& a) {
    SliceElt<C> r(a.ctx);
    if (c == 0)
        return r;
    for (const auto& [k, v] : a.coeffs)
        r.add(k, c * v);
    return r;
}

template <class C>
SliceElt<C> multiply(const SliceElt<C>& a, const SliceElt<C>& b) {
    require_same_ctx(a.ctx.get(), b.ctx.get());
    const SliceClassTable& tab = *a.ctx;
    const SubgroupLattice& lat = *tab.lattice;
    SliceElt<C> r(a.ctx);
    for (const auto& [i, ci] : a.coeffs)
        for (const auto& [j, cj] : b.coeffs) {
            const Slice& s = tab.classes[i];
            const Slice& t = tab.classes[j];
            C c = ci * cj;
            for (uint16_t g : double_coset_reps(lat, s[0], t[0])) {
                Slice inter(s.size());
                for (size_t k = 0; k < s.size(); ++k)
                    inter[k] = intersect_subgroups(lat, s[k], lat.conj_sub(t[k], g));
                r.add(tab.class_of(inter), c);
            }
        }
    return r;
}

template <class C>
GhostVec<C> ghost(const SliceElt<C>& x) {
    const SliceClassTable& tab = *x.ctx;
    GhostVec<C> v(tab.class_count(), C(0));
    for (const auto& [j, c] : x.coeffs)
        for (size_t i = 0; i < tab.class_count(); ++i)
            if (tab.marks[i][j] != 0)
                v[i] += c * C(tab.marks[i][j]);
    return v;
}

namespace {

QBurnsideElt solve_impl(const TablePtr& t, const std::vector<Rat>& v, bool* integral) {
    const SliceClassTable& tab = *t;
    size_t m = tab.class_count();
    if (v.size() != m)
        throw input_error("ghost vector has wrong length");
    // marks is upper triangular in the linear extension with nonzero
    // diagonal (the Weyl orders); back-substitute from the top class down.
    std::vector<Rat> x(m, Rat(0));
    for (size_t ii = m; ii-- > 0;) {
        Rat acc = v[ii];
        for (size_t j = ii + 1; j < m; ++j)
            if (tab.marks[ii][j] != 0 && x[j] != 0)
                acc -= Rat(tab.marks[ii][j]) * x[j];
        x[ii] = acc / Rat(tab.marks[ii][ii]);
    }
    QBurnsideElt out(t);
    bool is_int = true;
    for (size_t i = 0; i < m; ++i) {
        if (x[i] == 0)
            continue;
        out.add(static_cast<int>(i), x[i]);
        if (boost::multiprecision::denominator(x[i]) != 1)
            is_int = false;
    }
    if (integral)
        *integral = is_int;
    return out;
}

} // namespace

QBurnsideElt ghost_solve(const TablePtr& t, const GhostVec<Int>& v, bool* integral) {
    std::vector<Rat> rv(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        rv[i] = Rat(v[i]);
    return solve_impl(t, rv, integral);
}

QBurnsideElt ghost_solve_rat(const TablePtr& t, const GhostVec<Rat>& v, bool* integral) {
    return solve_impl(t, v, integral);
}

BurnsideElt to_integral(const QBurnsideElt& x) {
    BurnsideElt r(x.ctx);
    for (const auto& [k, v] : x.coeffs) {
        if (boost::multiprecision::denominator(v) != 1)
            throw input_error("element is not integral");
        r.add(k, boost::multiprecision::numerator(v));
    }
    return r;
}

QBurnsideElt to_rational(const BurnsideElt& x) {
    QBurnsideElt r(x.ctx);
    for (const auto& [k, v] : x.coeffs)
        r.add(k, Rat(v));
    return r;
}

Int mark_table_det(const SliceClassTable& t) {
    Int det = 1;
    for (size_t i = 0; i < t.class_count(); ++i)
        det *= t.marks[i][i];
    return det;
}

template <class C>
SliceElt<C> face(const SliceElt<C>& x, int j, const TablePtr& target) {
    const SliceClassTable& src = *x.ctx;
    if (j < 1 || j > src.n)
        throw input_error("face index must be in 1.." + std::to_string(src.n));
    if (target->n != src.n - 1 || target->lattice != src.lattice)
        throw input_error("face: target table mismatch");
    SliceElt<C> r(target);
    for (const auto& [cls, c] : x.coeffs) {
        Slice s = src.classes[cls];
        s.erase(s.begin() + j);
        r.add(target->class_of(s), c);
    }
    return r;
}

template <class C>
SliceElt<C> degeneracy(const SliceElt<C>& x, int i, const TablePtr& target) {
    const SliceClassTable& src = *x.ctx;
    if (i < 0 || i > src.n)
        throw input_error("degeneracy index must be in 0.." + std::to_string(src.n));
    if (target->n != src.n + 1 || target->lattice != src.lattice)
        throw input_error("degeneracy: target table mismatch");
    SliceElt<C> r(target);
    for (const auto& [cls, c] : x.coeffs) {
        Slice s = src.classes[cls];
        s.insert(s.begin() + i, s[i]);
        r.add(target->class_of(s), c);
    }
    return r;
}

template <class C>
SliceElt<C> simplicial_map(const MonotoneMap& f, const SliceElt<C>& x,
                           const std::function<TablePtr(int)>& table_at) {
    int a = static_cast<int>(f.image.size()) - 1;
    int b = f.target;
    if (a < 0)
        throw input_error("monotone map has empty domain");
    for (int i = 0; i <= a; ++i) {
        if (f.image[i] < 0 || f.image[i] > b)
            throw input_error("monotone map value out of range");
        if (i > 0 && f.image[i] < f.image[i - 1])
            throw input_error("map is not monotone");
    }
    if (x.ctx->n != b)
        throw input_error("simplicial_map: element degree must equal the map target");

    std::vector<char> in_image(b + 1, 0);
    for (int v : f.image)
        in_image[v] = 1;
    std::vector<int> missed;
    for (int v = 0; v <= b; ++v)
        if (!in_image[v]) {
            if (v == 0)
                throw input_error("composite requires d_0, which is undefined");
            missed.push_back(v);
        }
    std::vector<int> repeats;
    for (int i = 0; i < a; ++i)
        if (f.image[i] == f.image[i + 1])
            repeats.push_back(i);

    SliceElt<C> cur = x;
    int deg = b;
    for (auto it = missed.rbegin(); it != missed.rend(); ++it) {
        cur = face(cur, *it, table_at(deg - 1));
        --deg;
    }
    for (int j : repeats) {
        cur = degeneracy(cur, j, table_at(deg + 1));
        ++deg;
    }
    if (deg != a)
        throw internal_error("simplicial_map: degree bookkeeping failed");
    return cur;
}

template struct SliceElt<Int>;
template struct SliceElt<Rat>;

template SliceElt<Int> operator+(const SliceElt<Int>&, const SliceElt<Int>&);
template SliceElt<Rat> operator+(const SliceElt<Rat>&, const SliceElt<Rat>&);
template SliceElt<Int> operator-(const SliceElt<Int>&, const SliceElt<Int>&);
template SliceElt<Rat> operator-(const SliceElt<Rat>&, const SliceElt<Rat>&);
template SliceElt<Int> scale(const Int&, const SliceElt<Int>&);
template SliceElt<Rat> scale(const Rat&, const SliceElt<Rat>&);
template SliceElt<Int> multiply(const SliceElt<Int>&, const SliceElt<Int>&);
template SliceElt<Rat> multiply(const SliceElt<Rat>&, const SliceElt<Rat>&);
template GhostVec<Int> ghost(const SliceElt<Int>&);
template GhostVec<Rat> ghost(const SliceElt<Rat>&);
template SliceElt<Int> face(const SliceElt<Int>&, int, const TablePtr&);
template SliceElt<Rat> face(const SliceElt<Rat>&, int, const TablePtr&);
template SliceElt<Int> degeneracy(const SliceElt<Int>&, int, const TablePtr&);
template SliceElt<Rat> degeneracy(const SliceElt<Rat>&, int, const TablePtr&);
template SliceElt<Int> simplicial_map(const MonotoneMap&, const SliceElt<Int>&,
                                      const std::function<TablePtr(int)>&);
template SliceElt<Rat> simplicial_map(const MonotoneMap&, const SliceElt<Rat>&,
                                      const std::function<TablePtr(int)>&);

} // namespace burnside
