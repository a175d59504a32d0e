#pragma once

#include "naef/cnf.hpp"

namespace naef {

// Rewrites a NAE formula as a plain SAT formula over the same variables:
// each clause is followed by its all-complemented penalty twin, which
// rules out the all-true assignments to the original clause. The SAT
// solutions of the output are exactly the NAE solutions of the input.
// Requires uniform width >= 2; throws std::invalid_argument otherwise.
// Applying the transform twice is a contract violation (asserted in
// debug builds via is_penalty_paired at the call sites that care).
Cnf to_sat_cnf(const Cnf& f);

// True iff clauses come in adjacent (c, complement(c)) pairs.
bool is_penalty_paired(const Cnf& f);

}  // namespace naef
