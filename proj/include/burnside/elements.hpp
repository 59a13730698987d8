#pragma once

#include <map>
#include <memory>
#include <vector>

#include "burnside/slices.hpp"

namespace burnside {

// Sparse element of B_n(G) (or QB_n(G)) over the slice-class basis.
template <class C>
struct SliceElt {
    TablePtr ctx;
    std::map<int, C> coeffs; // class index -> coefficient, zeros absent

    SliceElt() = default;
    explicit SliceElt(TablePtr t) : ctx(std::move(t)) {}

    void add(int cls, const C& c) {
        if (cls < 0 || static_cast<size_t>(cls) >= ctx->class_count())
            throw input_error("coefficient index outside the slice table");
        if (c == 0)
            return;
        auto [it, fresh] = coeffs.try_emplace(cls, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                coeffs.erase(it);
        }
    }

    bool operator==(const SliceElt& o) const { return coeffs == o.coeffs; }
    bool is_zero() const { return coeffs.empty(); }
};

using BurnsideElt = SliceElt<Int>;
using QBurnsideElt = SliceElt<Rat>;

template <class C>
using GhostVec = std::vector<C>;

template <class C>
SliceElt<C> basis_elt(const TablePtr& t, int cls) {
    SliceElt<C> x(t);
    x.add(cls, C(1));
    return x;
}

inline BurnsideElt basis(const TablePtr& t, int cls) { return basis_elt<Int>(t, cls); }
inline BurnsideElt unit(const TablePtr& t) { return basis(t, t->unit_class()); }

template <class C>
SliceElt<C> operator+(const SliceElt<C>& a, const SliceElt<C>& b);
template <class C>
SliceElt<C> operator-(const SliceElt<C>& a, const SliceElt<C>& b);
template <class C>
SliceElt<C> scale(const C& c, const SliceElt<C>& a);

// Double-coset multiplication: <S>.<T> = sum over [S_0\G/T_0] of the
// componentwise intersections <S cap gTg^{-1}>.
template <class C>
SliceElt<C> multiply(const SliceElt<C>& a, const SliceElt<C>& b);

template <class C>
GhostVec<C> ghost(const SliceElt<C>& x);

// Solves marks * x = v exactly; integral reports whether x is in B_n(G).
QBurnsideElt ghost_solve(const TablePtr& t, const GhostVec<Int>& v, bool* integral = nullptr);
QBurnsideElt ghost_solve_rat(const TablePtr& t, const GhostVec<Rat>& v, bool* integral = nullptr);

BurnsideElt to_integral(const QBurnsideElt& x); // throws if not integral
QBurnsideElt to_rational(const BurnsideElt& x);

Int mark_table_det(const SliceClassTable& t);

// Face d_j (j in 1..n) deletes component j; d_0 is not a ring map and is
// rejected. Degeneracy s_i (i in 0..n) duplicates component i.
template <class C>
SliceElt<C> face(const SliceElt<C>& x, int j, const TablePtr& target);
template <class C>
SliceElt<C> degeneracy(const SliceElt<C>& x, int i, const TablePtr& target);

// The simplicial action of a monotone map f: [a] -> [b] on degrees: x must
// live in degree b, the result lives in degree a (chains pull back along f).
// Factorizes f through faces for the elements of [b] missed by f (all must
// be >= 1) and degeneracies where f repeats.
struct MonotoneMap {
    std::vector<int> image; // image[i] = f(i), size a+1
    int target;             // b
};

template <class C>
SliceElt<C> simplicial_map(const MonotoneMap& f, const SliceElt<C>& x,
                           const std::function<TablePtr(int)>& table_at);

extern template struct SliceElt<Int>;
extern template struct SliceElt<Rat>;

} // namespace burnside
