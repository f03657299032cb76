#pragma once

#include <string>
#include <vector>

#include <slabcy/fan.hpp>
#include <slabcy/series.hpp>

namespace slabcy {

// Outcome of one executable check.  On failure, `where` names the first
// failing coefficient (or set element) and expected/actual carry both values.
struct CheckReport {
  std::string name;
  bool passed = false;
  std::string where;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::vector<CheckReport> checks;

  bool all_passed() const;
};

// Route equivalence: the normalization solver's A_i equals the open-GW
// generating series exp g_i(qcheck(q)) for every i, coefficientwise.
CheckReport theorem_main(const FanData& fan, std::int64_t order, const Grading& grading);

// Brute-force box enumeration of classes with D_j.d < 0, D_p.d >= 0 (p != j)
// against the parametrized balanced-tuple enumeration, compared as sets.
CheckReport lemma_c_oracle(const FanData& fan, int j, std::int64_t box, const Grading& grading);

// The z-free part of log(1 + sum_{l != j} q^{C_l-C_j} z^{v_l-v_j}) equals
// -g_j, validating the multinomial count against the direct power expansion.
CheckReport prop_key_identity(const FanData& fan, int j, std::int64_t order,
                              const Grading& grading);

// The change of coordinates turning f_j into
// exp(g_j) * sum_l qcheck^{C_l-C_j} ztilde^{v_l-v_j}, checked block by block.
CheckReport lemma_change_check(const FanData& fan, int j, std::int64_t order,
                               const Grading& grading);

// Everything above (per-j checks for all j), plus the mirror-map round trip
// and the slab two-point relation for all pairs.
VerifyReport run_all_checks(const FanData& fan, std::int64_t order, std::int64_t box,
                            const Grading& grading);

}  // namespace slabcy
