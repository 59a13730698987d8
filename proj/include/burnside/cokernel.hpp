#pragma once

#include <optional>
#include <string>

#include "burnside/elements.hpp"

namespace burnside {

// Residues of a ghost vector in Obs(G) = directsum Z/|W_G(Sbar)| (global)
// or its p-part (p-local). A modulus of 1 forces a zero residue.
struct ObsVector {
    TablePtr ctx;
    std::vector<Int> residues;
    std::vector<Int> moduli;

    bool is_zero() const {
        for (const Int& r : residues)
            if (r != 0)
                return false;
        return true;
    }
    bool operator==(const ObsVector& o) const {
        return residues == o.residues && moduli == o.moduli;
    }
};

// Per class: |W_G(Sbar)| when p is absent, otherwise its p-part.
std::vector<Int> obs_moduli(const TablePtr& table, std::optional<unsigned> p);

// Psi_p: sum the ghost coordinates over the slices <g>Tbar for gT_0 in the
// canonical Sylow p-subgroup of W_G(Tbar), reduced mod the p-part modulus.
ObsVector psi_p(const TablePtr& table, const GhostVec<Int>& v, unsigned p);

// |coker Phi| = |det marks| = prod of Weyl orders.
Int cokernel_order(const SliceClassTable& table);

// Columns phi_T(<S>)/phi_S(<S>): integral and unitriangular.
std::vector<std::vector<Rat>> jprime_matrix(const SliceClassTable& table);

struct SequenceCheck {
    std::string check;
    bool pass;
    std::string detail;
};

struct SequenceReport {
    std::vector<SequenceCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

// (a) Psi_p o Phi_p = 0 on basis elements, (b) Psi_p surjective,
// (c) p-part of |coker| equals the product of p-part moduli.
SequenceReport verify_exact_sequence(const TablePtr& table, unsigned p);

} // namespace burnside
