#pragma once

#include "burnside/elements.hpp"

namespace burnside {

// e_S = (1/|N_G(S)|) sum over interleaved chains T_0 <= S_0 <= T_1 <= ...
// of |T_0| mu(T_0,S_0)...mu(T_n,S_n) <T>. Its ghost vector is the 0/1
// indicator of the class of S.
QBurnsideElt idempotent(const TablePtr& table, int cls);

// One idempotent per class; verifies e^2 = e, orthogonality and sum = e_n
// before returning.
std::vector<QBurnsideElt> all_idempotents(const TablePtr& table);

// x . e_S = phi_S(x) . e_S.
bool characterization_check(const TablePtr& table, int cls, const QBurnsideElt& x);

// Converse direction: y with x.y = phi_S(x).y for all basis x is a rational
// multiple of e_S (equivalently, ghost(y) is supported only at S).
bool is_multiple_of_idempotent(const TablePtr& table, int cls, const QBurnsideElt& y);

} // namespace burnside
