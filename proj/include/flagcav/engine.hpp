#pragma once

/**
 * @file engine.hpp
 * @brief Weyl-orbit engine: extremal weights, index minimization, reports.
 *
 * For a base cycle with signed permutation w, the extremal weights are the
 * orbit elements μ of the isotropy lowest weight(s) whose pullback w⁻¹μ is
 * positive in the restricted lexicographic order.  The cycle's index is the
 * minimum of weight_index(−μ) over all extremal μ; from it the normal-bundle
 * ampleness and the concavity degree follow by exact arithmetic.
 */

#include <future>
#include <thread>

#include "cases.hpp"

namespace flagcav {

// ============================================================================
// Extremal weights
// ============================================================================

/// Orbit elements of one lowest-weight branch that restrict positively.
struct ExtremalBranch {
    Weight lambda;                 ///< branch lowest weight
    std::vector<Weight> members;   ///< extremal orbit elements, sorted
    std::size_t orbit_size = 0;
};

struct ExtremalSet {
    std::vector<ExtremalBranch> branches;
    long long total = 0;
};

/**
 * @brief Compute the extremal weights of a cycle, branch by branch.
 *
 * Consistency checks (violations are internal errors, never user errors): the
 * branch orbits are pairwise disjoint, their union is closed under negation,
 * and — since the pullback of an orbit element is never zero — the extremal
 * weights are exactly half of the union.  In particular a non-Hermitian orbit
 * is negation-symmetric and contributes half of its own elements, and a
 * Hermitian ± pair contributes one element per mirrored pair.
 */
inline ExtremalSet extremal_weights(const CaseModel& md, const CycleParam& cycle) {
    const SignedPermutation w = cycle_weyl(md, cycle);

    ExtremalSet ext;
    std::vector<Weight> pool;  // union of the branch orbits
    for (const Weight& lam : md.lambdas) {
        ExtremalBranch br;
        br.lambda = lam;
        std::vector<Weight> orbit = weyl_orbit(lam, md.k_roots);  // sorted
        br.orbit_size = orbit.size();
        for (Weight& mu : orbit) {
            if (has_positive_leading(w.apply_inverse(mu))) br.members.push_back(mu);
            pool.push_back(std::move(mu));
        }
        ext.total += static_cast<long long>(br.members.size());
        ext.branches.push_back(std::move(br));
    }

    std::sort(pool.begin(), pool.end());
    check_internal(std::adjacent_find(pool.begin(), pool.end()) == pool.end(),
                   "extremal_weights: branch orbits overlap");
    for (const Weight& mu : pool)
        check_internal(std::binary_search(pool.begin(), pool.end(), negated(mu)),
                       "extremal_weights: orbit union is not negation-symmetric");
    check_internal(2 * static_cast<std::size_t>(ext.total) == pool.size(),
                   "extremal_weights: extremal set is not half the orbit union");
    check_internal(ext.total >= 1, "extremal_weights: no extremal weight on any branch");
    return ext;
}

// ============================================================================
// Reports
// ============================================================================

/**
 * @brief Exact invariants of one base cycle.
 *
 * ampleness = dim_cycle − ind and concavity_degree = codim + ampleness + 1,
 * with codim the ambient positive-root count minus dim_cycle.
 */
struct AmplenessReport {
    GroupCase group;
    CycleParam cycle;
    long long ind = 0;
    long long dim_cycle = 0;
    long long codim = 0;
    long long ampleness = 0;
    long long concavity_degree = 0;
    long long extremal_count = 0;
    Weight witness;  ///< extremal weight attaining the index minimum
};

/**
 * @brief Minimize weight_index(−μ) over the extremal weights.
 *
 * Deterministic: branches in fixed order, members in sorted order, strict
 * improvement only — so the witness is reproducible.
 */
inline std::pair<long long, Weight> index_of_extremal(const CaseModel& md,
                                                      const ExtremalSet& ext) {
    long long best = -1;
    Weight witness;
    for (const ExtremalBranch& br : ext.branches)
        for (const Weight& mu : br.members) {
            const long long ind = weight_index(negated(mu), md.k_roots);
            if (best < 0 || ind < best) {
                best = ind;
                witness = mu;
            }
        }
    check_internal(best >= 0, "index_of_extremal: empty extremal set");
    return {best, witness};
}

/// Full exact report for one cycle of one case.
inline AmplenessReport ampleness_report(const CaseModel& md, const CycleParam& cycle) {
    const ExtremalSet ext = extremal_weights(md, cycle);
    const auto [ind, witness] = index_of_extremal(md, ext);

    AmplenessReport rep;
    rep.group = md.group;
    rep.cycle = cycle;
    rep.ind = ind;
    rep.dim_cycle = md.dim_cycle;
    rep.codim = md.ambient_positive - md.dim_cycle;
    rep.ampleness = rep.dim_cycle - rep.ind;
    rep.concavity_degree = rep.codim + rep.ampleness + 1;
    rep.extremal_count = ext.total;
    rep.witness = witness;

    check_internal(rep.ind >= 0 && rep.ind <= rep.dim_cycle,
                   "ampleness_report: index outside [0, dim_cycle]");
    check_internal(rep.ampleness >= 0, "ampleness_report: negative ampleness");
    check_internal(rep.codim >= 0, "ampleness_report: negative codimension");
    return rep;
}

// ============================================================================
// Sweeps
// ============================================================================

/**
 * @brief Reports for every cycle of a case, in enumeration order.
 *
 * `threads` <= 1 runs serially; otherwise cycles are partitioned over a fixed
 * thread count.  Results are written by cycle position, so output is
 * identical for every thread count.
 */
inline std::vector<AmplenessReport> sweep_case(const CaseModel& md, unsigned threads = 1) {
    const std::vector<CycleParam> cycles = enumerate_cycles(md);
    std::vector<AmplenessReport> out(cycles.size());
    if (threads <= 1 || cycles.size() <= 1) {
        for (std::size_t i = 0; i < cycles.size(); ++i) out[i] = ampleness_report(md, cycles[i]);
        return out;
    }
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(cycles.size()));
    std::vector<std::future<void>> work;
    work.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        work.push_back(std::async(std::launch::async, [&, t]() {
            for (std::size_t i = t; i < cycles.size(); i += n)
                out[i] = ampleness_report(md, cycles[i]);
        }));
    for (auto& f : work) f.get();
    return out;
}

/// Hardware thread count with a serial fallback.
inline unsigned max_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace flagcav
