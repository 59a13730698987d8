#pragma once

#include "burnside/context.hpp"
#include "burnside/elements.hpp"
#include "burnside/simplex.hpp"

namespace burnside {

// A subgroup H <= G materialized with its own context plus the id
// translation in both directions.
struct SubgroupCtx {
    GroupCtx ctx;
    SubgroupGroup emb;
    LatticePtr parent_lattice;
    int parent_subgroup_id = -1;

    int lift(int h_sub) const; // H-lattice id -> parent lattice id
    int cut(int g_sub) const;  // parent lattice id -> (H cap S) as H-lattice id
};

SubgroupCtx make_subgroup_ctx(const GroupCtx& parent, int subgroup_id);

// G/N materialized with its own context plus image/preimage on subgroups.
struct QuotientCtx {
    GroupCtx ctx;
    QuotientGroup quo;
    LatticePtr parent_lattice;
    int kernel_id = -1;

    int image_subgroup(int g_sub) const;    // SN/N
    int preimage_subgroup(int q_sub) const; // full preimage
};

QuotientCtx make_quotient_ctx(const GroupCtx& parent, int normal_id);

// A finite (H,G)-biset: commuting left H-action and right G-action.
struct Biset {
    GroupPtr left;  // H
    GroupPtr right; // G
    int size = 0;
    std::vector<std::vector<int>> lact; // [h][u]
    std::vector<std::vector<int>> ract; // [u][g]

    void validate() const;
};

// Elementary bisets.
Biset res_biset(const GroupCtx& parent, const SubgroupCtx& h); // G as (H,G)-biset
Biset ind_biset(const GroupCtx& parent, const SubgroupCtx& h); // G as (G,H)-biset
Biset inf_biset(const GroupCtx& parent, const QuotientCtx& q); // G/N as (G,G/N)-biset
Biset def_biset(const GroupCtx& parent, const QuotientCtx& q); // G/N as (G/N,G)-biset
Biset iso_biset(const GroupIso& f);                            // dst as (dst,src)-biset

// (H x G)/L with a (a,b)-action a.(h,g)L.b = (ah, b^{-1}g)L.
Biset coset_biset(const ProductGroup& hg, const Bits& l);

// V x_H U: composition of a (K,H)-biset with an (H,G)-biset.
Biset compose_bisets(const Biset& v, const Biset& u);

Biset disjoint_union_bisets(const Biset& a, const Biset& b);

// U x_G X as an H-set, with the orbit map on pairs.
GSet biset_tensor(const Biset& u, const GSet& x, std::vector<int>* pair_class = nullptr);

// The generic operation B_n(U): tensor the chain of each basis slice and
// linearize over H.
BurnsideElt biset_apply(const Biset& u, const GroupCtx& hctx, const BurnsideElt& x);

// Closed formulas for the elementary operations.
BurnsideElt restriction(const GroupCtx& parent, const SubgroupCtx& h, const BurnsideElt& x);
BurnsideElt induction(const GroupCtx& parent, const SubgroupCtx& h, const BurnsideElt& x);
BurnsideElt inflation(const GroupCtx& parent, const QuotientCtx& q, const BurnsideElt& x);
BurnsideElt deflation(const GroupCtx& parent, const QuotientCtx& q, const BurnsideElt& x);
BurnsideElt transport(const GroupIso& f, const GroupCtx& src, const GroupCtx& dst,
                      const BurnsideElt& x);

// x in B_n(G), y in B_n(H) -> <(S_i x T_i)> in B_n(G x H), bilinearly.
BurnsideElt external_product(const ProductGroup& gh, const GroupCtx& gctx,
                             const GroupCtx& hctx, const GroupCtx& ghctx,
                             const BurnsideElt& x, const BurnsideElt& y);

// Goursat data of L <= H x G: [HxG/L] = Ind Inf Iso Def Res.
struct BisetFactorization {
    int d = -1, c = -1; // subgroups of H
    int b = -1, a = -1; // subgroups of G
};

BisetFactorization goursat(const GroupCtx& hctx, const GroupCtx& gctx,
                           const ProductGroup& hg, const Bits& l);

// Applies the five-step factorization of [HxG/L]; must agree with
// biset_apply(coset_biset(hg, l), ...).
BurnsideElt biset_apply_factorized(const GroupCtx& hctx, const GroupCtx& gctx,
                                   const ProductGroup& hg, const Bits& l,
                                   const BurnsideElt& x);

} // namespace burnside
