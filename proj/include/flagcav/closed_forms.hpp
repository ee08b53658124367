#pragma once

/**
 * @file closed_forms.hpp
 * @brief Closed-form cycle index per case, and the engine cross-checker.
 *
 * Every supported real form admits a closed-form expression for the cycle
 * index in terms of the hook statistics of its subset (or a constant /
 * elementary expression where no subset is involved).  A hook branch enters
 * the minimum only when its defining pair set is nonempty; at the two corner
 * subsets exactly one branch survives, and at least one always does.
 */

#include "engine.hpp"
#include "hooks.hpp"

namespace flagcav {

namespace detail {

/// min over the present hook branches of (plus offset + …, minus offset + …).
inline long long present_branch_min(const HookData& h, long long plus_value,
                                    long long minus_value) {
    check_internal(h.plus_present || h.minus_present,
                   "closed_form_index: both hook branches absent");
    if (!h.minus_present) return plus_value;
    if (!h.plus_present) return minus_value;
    return std::min(plus_value, minus_value);
}

}  // namespace detail

/**
 * @brief Closed-form index of one cycle.
 *
 * Orientation flags do not enter: plain and primed partners share one value
 * (verify_case checks this against the engine).  Dispatch:
 *   sl(m,R)                ⌊(m−1)/2⌋
 *   sl(m,H)                m
 *   sp(r,R)                min{|𝐣|, r−|𝐣|}
 *   su(p,q)                min over present branches of {h⁺−1, (p+q)−h⁻−1}
 *   so odd-odd / sp(p,q)   q if p=0 (resp. p if q=0), else
 *                          min over present branches of {I⁺, I⁻}
 *   so even-odd            p−1 if q=0, else min over present of {I⁺−1, I⁻}
 *   so even-even           min over present of {I⁺−1, I⁻−1}
 */
inline long long closed_form_index(const CaseModel& md, const CycleParam& cycle) {
    validate_cycle(md, cycle);
    const GroupCase& g = md.group;
    switch (g.kind) {
        case CaseKind::sl_real:
            return (g.m - 1) / 2;
        case CaseKind::sl_quat:
            return g.m;
        case CaseKind::sp_real: {
            const long long k = static_cast<long long>(cycle.subset.size());
            return std::min(k, static_cast<long long>(g.r) - k);
        }
        case CaseKind::su: {
            const HookData h = hook_data(cycle.subset, g.p, g.q);
            return detail::present_branch_min(h, h.h_plus - 1,
                                              static_cast<long long>(g.p + g.q) - h.h_minus - 1);
        }
        case CaseKind::so_odd_odd:
        case CaseKind::sp_quat: {
            if (g.p == 0) return g.q;
            if (g.q == 0) return g.p;
            const HookData h = hook_data(cycle.subset, g.p, g.q);
            return detail::present_branch_min(h, h.i_plus, h.i_minus);
        }
        case CaseKind::so_even_odd: {
            if (g.q == 0) return g.p - 1;
            const HookData h = hook_data(cycle.subset, g.p, g.q);
            return detail::present_branch_min(h, h.i_plus - 1, h.i_minus);
        }
        case CaseKind::so_even_even: {
            const HookData h = hook_data(cycle.subset, g.p, g.q);
            return detail::present_branch_min(h, h.i_plus - 1, h.i_minus - 1);
        }
    }
    throw internal_error("closed_form_index: bad kind");
}

// ============================================================================
// Verification sweeps
// ============================================================================

/// One engine/closed-form disagreement found by verify_case.
struct IndexMismatch {
    CycleParam cycle;
    long long engine_ind = 0;
    long long closed_ind = 0;
};

/// Outcome of cross-checking one case.
struct VerifyResult {
    GroupCase group;
    std::size_t cycles_checked = 0;
    std::vector<IndexMismatch> mismatches;       ///< engine vs closed form
    std::vector<CycleParam> orientation_breaks;  ///< plain vs primed engine value

    [[nodiscard]] bool clean() const { return mismatches.empty() && orientation_breaks.empty(); }
};

/**
 * @brief Cross-check the orbit engine against the closed forms on every
 * cycle of a case, and check plain/primed engine agreement where the case
 * has two cycle components.
 */
inline VerifyResult verify_case(const CaseModel& md, unsigned threads = 1) {
    VerifyResult vr;
    vr.group = md.group;
    const std::vector<CycleParam> cycles = enumerate_cycles(md);
    const std::vector<AmplenessReport> reports = sweep_case(md, threads);
    vr.cycles_checked = cycles.size();

    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const long long closed = closed_form_index(md, cycles[i]);
        if (closed != reports[i].ind)
            vr.mismatches.push_back({cycles[i], reports[i].ind, closed});
    }
    if (has_primed_variant(md.group)) {
        // Enumeration emits primed immediately after its plain partner.
        for (std::size_t i = 0; i + 1 < cycles.size(); i += 2) {
            check_internal(cycles[i].subset == cycles[i + 1].subset && cycles[i + 1].primed,
                           "verify_case: unexpected enumeration order");
            if (reports[i].ind != reports[i + 1].ind) vr.orientation_breaks.push_back(cycles[i]);
        }
    }
    return vr;
}

}  // namespace flagcav
