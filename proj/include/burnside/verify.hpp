#pragma once

#include <string>
#include <vector>

#include "burnside/context.hpp"

namespace burnside {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Each check returns on the first counterexample with a description.
CheckResult check_mobius_equivalence(const GroupCtx& ctx, int n);
CheckResult check_mark_table(const GroupCtx& ctx, int n);
CheckResult check_ring_laws(const GroupCtx& ctx, int n, unsigned seed = 1,
                            size_t assoc_budget = 2000);
CheckResult check_congruences(const GroupCtx& ctx, int n);
CheckResult check_idempotents(const GroupCtx& ctx, int n);
CheckResult check_exact_sequence(const GroupCtx& ctx, int n);
CheckResult check_oracle_equivalence(const GroupCtx& ctx, int n, unsigned seed,
                                     int instances);
CheckResult check_simplicial_identities(const GroupCtx& ctx, int max_degree);
CheckResult check_face_degeneracy_homs(const GroupCtx& ctx, int n);
CheckResult check_spectrum(const GroupCtx& ctx, int n);
CheckResult check_p_local_idempotents(const GroupCtx& ctx, int n);

std::vector<CheckResult> verify_all(const GroupCtx& ctx, int n, unsigned seed = 1,
                                    int instances = 25);

} // namespace burnside
