#pragma once

/**
 * @file period.hpp
 * @brief Period domains of polarized Hodge structures, reduced to case models.
 *
 * A weight-n Hodge structure with numbers h^{n,0},…,h^{0,n} determines a
 * period domain; its base cycle is a cycle of one of the classical case
 * models, derived here exactly:
 *
 *   n = 2k+1:  sp(m,R) with m = f^{k+1},
 *   n = 2k:    so(2p, ℓ) with 2p the total dimension in the parity class
 *              opposite k and ℓ the one containing k (even-odd or even-even
 *              by the parity of ℓ, q = ⌊ℓ/2⌋),
 *
 * where f^r = h^{n,0}+…+h^{r,n−r}.  The cycle subset collects the coordinate
 * positions of the Hodge blocks of parity opposite to k in the upper half of
 * the flag, and the isotropy parabolic is marked at the distinct nonzero
 * flag dimensions f^n,…,f^{k+1}.
 */

#include "closed_forms.hpp"

namespace flagcav {

// ============================================================================
// Hodge numbers
// ============================================================================

/// Weight n plus the full symmetric vector h^{n,0},…,h^{0,n}.
struct HodgeNumbers {
    int n = 0;
    std::vector<long long> full;

    [[nodiscard]] long long at(int r) const {  // h^{r, n−r}
        return full[static_cast<std::size_t>(n - r)];
    }
};

/**
 * @brief Build Hodge numbers from the upper half h^{n,0},…,h^{⌈n/2⌉,⌊n/2⌋}.
 *
 * Validates: n >= 1, correct half length, non-negative entries, and at least
 * two nonzero entries in the full vector (one-block structures have no
 * moduli and no domain).
 */
inline HodgeNumbers hodge_from_half(int n, const std::vector<long long>& half) {
    if (n < 1) throw std::invalid_argument("hodge: weight must be >= 1");
    const std::size_t want = static_cast<std::size_t>((n + 2) / 2);
    if (half.size() != want)
        throw std::invalid_argument("hodge: weight " + std::to_string(n) + " needs exactly " +
                                    std::to_string(want) + " numbers h^{n,0}..h^{ceil,floor}");
    for (long long v : half)
        if (v < 0) throw std::invalid_argument("hodge: numbers must be non-negative");

    HodgeNumbers h;
    h.n = n;
    h.full.resize(static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < half.size(); ++i) {
        h.full[i] = half[i];
        h.full[static_cast<std::size_t>(n) - i] = half[i];
    }
    int nonzero = 0;
    for (long long v : h.full)
        if (v > 0) ++nonzero;
    if (nonzero < 2)
        throw std::invalid_argument("hodge: needs at least two nonzero Hodge numbers");
    return h;
}

// ============================================================================
// Derived models
// ============================================================================

/// A period domain reduced to a case model plus one cycle.
struct PeriodModel {
    HodgeNumbers hodge;
    GroupCase derived;          ///< sp_real, so_even_odd, or so_even_even
    std::vector<int> j_impl;    ///< cycle subset in the derived model
    std::vector<int> marked;    ///< marked simple roots (1-based, ascending)
    Family family = Family::C;  ///< ambient family of the derived model
    int family_rank = 0;        ///< = derived model rank
};

/**
 * @brief Derive the case model of a period domain.
 *
 * Throws invalid_argument when the structure is definite (no noncompact
 * factor) or too large to model.
 */
inline PeriodModel derive_period_model(const HodgeNumbers& hodge) {
    const int n = hodge.n;
    const int k = n / 2;  // n = 2k or 2k+1

    // Flag dimensions f^r = h^{n,0}+…+h^{r,n−r}, r descending from n.
    std::vector<long long> f(static_cast<std::size_t>(n + 2), 0);  // f[r], f[n+1] = 0
    for (int r = n; r >= 0; --r) f[static_cast<std::size_t>(r)] = f[static_cast<std::size_t>(r + 1)] + hodge.at(r);

    long long m = 0;
    PeriodModel pm;
    pm.hodge = hodge;
    if (n % 2 == 1) {
        m = f[static_cast<std::size_t>(k + 1)];
        check_internal(m >= 1, "derive_period_model: empty isotropic flag");
        if (m > 512)
            throw std::invalid_argument("hodge: derived rank " + std::to_string(m) +
                                        " exceeds the supported limit 512");
        pm.derived = make_case_r(static_cast<int>(m));
        pm.family = Family::C;
    } else {
        long long m_even = 0, m_odd = 0;
        for (int r = 0; r <= n; ++r) (r % 2 == 0 ? m_even : m_odd) += hodge.at(r);
        if (m_even < 1 || m_odd < 1)
            throw std::invalid_argument(
                "hodge: definite structure (one parity class is empty), no period domain");
        // p doubles over the parity class opposite k; ℓ is the class of k.
        const long long two_p = (k % 2 == 0) ? m_odd : m_even;
        const long long ell = (k % 2 == 0) ? m_even : m_odd;
        check_internal(two_p % 2 == 0, "derive_period_model: odd opposite-parity total");
        const long long p = two_p / 2;
        const long long q = ell / 2;  // floor
        m = p + q;
        check_internal(m == f[static_cast<std::size_t>(k + 1)] + hodge.at(k) / 2,
                       "derive_period_model: rank mismatch");
        if (m > 512)
            throw std::invalid_argument("hodge: derived rank " + std::to_string(m) +
                                        " exceeds the supported limit 512");
        if (ell % 2 == 1) {
            pm.derived = make_case_pq(CaseKind::so_even_odd, static_cast<int>(p),
                                      static_cast<int>(q));
            pm.family = Family::B;
        } else {
            pm.derived = make_case_pq(CaseKind::so_even_even, static_cast<int>(p),
                                      static_cast<int>(q));
            pm.family = Family::D;
        }
    }
    pm.family_rank = static_cast<int>(m);

    // Cycle subset: positions of the upper-half blocks of parity opposite k.
    for (int r = n; r >= k + 1; --r)
        if ((r - k) % 2 == 1)
            for (long long pos = f[static_cast<std::size_t>(r + 1)] + 1;
                 pos <= f[static_cast<std::size_t>(r)]; ++pos)
                pm.j_impl.push_back(static_cast<int>(pos));
    std::sort(pm.j_impl.begin(), pm.j_impl.end());

    // Marked simple roots: distinct nonzero flag dimensions of the upper half.
    for (int r = n; r >= k + 1; --r) {
        const long long d = f[static_cast<std::size_t>(r)];
        if (d >= 1 && (pm.marked.empty() || pm.marked.back() != static_cast<int>(d)))
            pm.marked.push_back(static_cast<int>(d));
    }
    return pm;
}

// ============================================================================
// Evaluation
// ============================================================================

/// Closed-form index of the period-domain base cycle.
inline long long period_index_formula(const PeriodModel& pm) {
    const CaseModel md = build_model(pm.derived);
    return closed_form_index(md, {pm.j_impl, false});
}

/**
 * @brief Dimension of the base cycle inside the ambient flag variety: the
 * number of compact-factor roots (both signs) whose pullback leaves the
 * marked parabolic.
 */
inline long long base_cycle_dimension(const PeriodModel& pm) {
    const CaseModel md = build_model(pm.derived);
    check_internal(md.rank == pm.family_rank, "base_cycle_dimension: rank mismatch");
    const SignedPermutation w = cycle_weyl(md, {pm.j_impl, false});
    long long count = 0;
    for (const SparseRoot& beta : md.k_roots.positive)
        for (int sgn : {1, -1}) {
            Weight alpha = beta.dense(md.rank);
            if (sgn < 0) alpha = negated(std::move(alpha));
            const std::vector<int> coords =
                simple_root_coordinates(pm.family, pm.family_rank, w.apply_inverse(alpha));
            long long s = 0;
            for (int d : pm.marked) s += coords[static_cast<std::size_t>(d - 1)];
            if (s < 0) ++count;
        }
    return count;
}

/// Engine report plus formula value for one period domain.
struct PeriodReport {
    PeriodModel model;
    AmplenessReport report;   ///< orbit-engine values on the plain cycle
    long long closed_ind = 0; ///< closed-form value (cross-check)
};

/**
 * @brief Full period-domain report.
 *
 * Runs the orbit engine on the plain cycle; when the derived model has two
 * cycle components, the primed partner is computed too and must agree
 * (internal error otherwise).  The closed form is reported alongside for the
 * caller to compare.
 */
inline PeriodReport period_report(const HodgeNumbers& hodge) {
    PeriodModel pm = derive_period_model(hodge);
    const CaseModel md = build_model(pm.derived);
    const CycleParam plain{pm.j_impl, false};
    AmplenessReport rep = ampleness_report(md, plain);
    if (has_primed_variant(pm.derived)) {
        const AmplenessReport primed = ampleness_report(md, {pm.j_impl, true});
        check_internal(primed.ind == rep.ind, "period_report: orientation components disagree");
    }
    PeriodReport out;
    out.closed_ind = closed_form_index(md, plain);
    out.model = std::move(pm);
    out.report = std::move(rep);
    return out;
}

}  // namespace flagcav
