#pragma once

/**
 * @file cases.hpp
 * @brief Case models for the classical real forms and their base cycles.
 *
 * Each supported real form determines: the compact factor's root system on a
 * coordinate space of some rank N, the lowest weight(s) of the isotropy
 * representation on the tangent complement (one weight in the non-Hermitian
 * cases, a ± pair in the Hermitian ones), the ambient positive-root count,
 * and a finite family of base cycles.  A cycle is indexed by a subset
 * 𝐣 ⊆ {1..N} (plus an orientation flag where the orthogonal even families
 * have two components); it acts through an explicit signed permutation.
 */

#include <optional>
#include <sstream>

#include "weights.hpp"

namespace flagcav {

// ============================================================================
// Group cases
// ============================================================================

/// Supported families of classical real forms.
enum class CaseKind {
    sl_real,       ///< sl(m,R)
    su,            ///< su(p,q)
    sp_real,       ///< sp(r,R)
    so_odd_odd,    ///< so(2p+1, 2q+1)
    so_even_odd,   ///< so(2p, 2q+1)
    so_even_even,  ///< so(2p, 2q)
    sp_quat,       ///< sp(p,q)
    sl_quat        ///< sl(m,H)
};

/// CLI/JSON token for each case kind.
inline std::string case_token(CaseKind k) {
    switch (k) {
        case CaseKind::sl_real: return "sl-real";
        case CaseKind::su: return "su";
        case CaseKind::sp_real: return "sp-real";
        case CaseKind::so_odd_odd: return "so-odd-odd";
        case CaseKind::so_even_odd: return "so-even-odd";
        case CaseKind::so_even_even: return "so-even-even";
        case CaseKind::sp_quat: return "sp-quat";
        case CaseKind::sl_quat: return "sl-quat";
    }
    throw internal_error("case_token: bad kind");
}

inline std::optional<CaseKind> parse_case_token(const std::string& s) {
    for (CaseKind k : {CaseKind::sl_real, CaseKind::su, CaseKind::sp_real, CaseKind::so_odd_odd,
                       CaseKind::so_even_odd, CaseKind::so_even_even, CaseKind::sp_quat,
                       CaseKind::sl_quat})
        if (case_token(k) == s) return k;
    return std::nullopt;
}

/**
 * @brief One concrete real form: a kind plus its integer parameters.
 *
 * (p,q) parameterize su/so/sp-quat kinds, m the sl kinds, r = sp_real's rank.
 * Construct through make_case, which validates the parameter ranges.
 */
struct GroupCase {
    CaseKind kind;
    int p = 0;
    int q = 0;
    int m = 0;
    int r = 0;
};

/// Validated constructor for (p,q)-parameterized kinds.
inline GroupCase make_case_pq(CaseKind kind, int p, int q) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument(case_token(kind) + ": " + why);
    };
    switch (kind) {
        case CaseKind::su:
        case CaseKind::sp_quat:
            if (p < 1 || q < 1) throw bad("requires p >= 1 and q >= 1");
            break;
        case CaseKind::so_odd_odd:
            if (p < 0 || q < 0) throw bad("requires p >= 0 and q >= 0");
            if (p + q < 1) throw bad("so(1,1) is not semisimple; requires p + q >= 1");
            break;
        case CaseKind::so_even_odd:
            if (p < 1 || q < 0) throw bad("requires p >= 1 and q >= 0");
            break;
        case CaseKind::so_even_even:
            if (p < 1 || q < 1) throw bad("requires p >= 1 and q >= 1");
            break;
        default:
            throw bad("not a (p,q)-parameterized case");
    }
    GroupCase g;
    g.kind = kind;
    g.p = p;
    g.q = q;
    return g;
}

/// Validated constructor for the m-parameterized kinds (sl over R or H).
inline GroupCase make_case_m(CaseKind kind, int m) {
    if (kind != CaseKind::sl_real && kind != CaseKind::sl_quat)
        throw std::invalid_argument(case_token(kind) + ": not an m-parameterized case");
    if (m < 2) throw std::invalid_argument(case_token(kind) + ": requires m >= 2");
    GroupCase g;
    g.kind = kind;
    g.m = m;
    return g;
}

/// Validated constructor for sp(r,R).
inline GroupCase make_case_r(int r) {
    if (r < 1) throw std::invalid_argument("sp-real: requires r >= 1");
    GroupCase g;
    g.kind = CaseKind::sp_real;
    g.r = r;
    return g;
}

/// Human-readable parameter string, e.g. "p=3,q=4".
inline std::string params_string(const GroupCase& g) {
    std::ostringstream os;
    switch (g.kind) {
        case CaseKind::sl_real:
        case CaseKind::sl_quat: os << "m=" << g.m; break;
        case CaseKind::sp_real: os << "r=" << g.r; break;
        default: os << "p=" << g.p << ",q=" << g.q; break;
    }
    return os.str();
}

// ============================================================================
// Case models
// ============================================================================

/**
 * @brief Everything the orbit engine needs about one real form.
 *
 * `rank` is the dimension N of the coordinate space the compact factor acts
 * on.  Hermitian cases carry a ± pair of lowest weights whose orbits are
 * negatives of each other; non-Hermitian cases carry a single weight with a
 * negation-symmetric orbit.
 */
struct CaseModel {
    GroupCase group;
    int rank = 0;
    RootSystem k_roots;
    bool hermitian = false;
    Weight lambda_plus;
    Weight lambda_minus;  ///< empty unless hermitian
    /// Lowest weights of the irreducible summands of the tangent
    /// representation — the orbit branches the engine minimizes over.
    /// Usually {λ₊} or {λ₊, λ₋}; so(2,2) splits into four characters.
    std::vector<Weight> lambdas;
    Family ambient_family = Family::A;
    int ambient_rank = 0;
    long long ambient_positive = 0;
    long long dim_cycle = 0;  ///< = |Δ⁺(k)|
};

namespace detail {

inline Weight unit(int n, int at, int value = 1) {
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(at)] = value;
    return w;
}

inline Weight two_units(int n, int a, int va, int b, int vb) {
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(a)] = va;
    w[static_cast<std::size_t>(b)] = vb;
    return w;
}

}  // namespace detail

/// Build the full model for a validated case.
inline CaseModel build_model(const GroupCase& g) {
    CaseModel md;
    md.group = g;
    switch (g.kind) {
        case CaseKind::sl_real: {
            const int m = g.m;
            const int rk = m / 2;
            md.rank = rk;
            if (m % 2 == 1) {
                md.k_roots = make_root_system(rk, {{Family::B, 0, rk}});
                md.lambda_plus = detail::unit(rk, 0, 2);
            } else if (m == 2) {
                // so(2)-isotropy: the disc; the weight pair is ±2ε₁.
                md.k_roots = make_root_system(1, {{Family::D, 0, 1}});
                md.hermitian = true;
                md.lambda_plus = detail::unit(1, 0, 2);
                md.lambda_minus = detail::unit(1, 0, -2);
            } else {
                md.k_roots = make_root_system(rk, {{Family::D, 0, rk}});
                md.lambda_plus = detail::unit(rk, 0, 2);
            }
            md.ambient_family = Family::A;
            md.ambient_rank = m - 1;
            break;
        }
        case CaseKind::su: {
            const int n = g.p + g.q;
            md.rank = n;
            md.k_roots = make_root_system(n, {{Family::A, 0, g.p}, {Family::A, g.p, g.q}});
            md.hermitian = true;
            md.lambda_plus = detail::two_units(n, 0, 1, n - 1, -1);       // ε₁ − ε_n
            md.lambda_minus = detail::two_units(n, g.p, 1, g.p - 1, -1);  // ε_{p+1} − ε_p
            md.ambient_family = Family::A;
            md.ambient_rank = n - 1;
            break;
        }
        case CaseKind::sp_real: {
            const int r = g.r;
            md.rank = r;
            md.k_roots = make_root_system(r, {{Family::A, 0, r}});
            md.hermitian = true;
            md.lambda_plus = detail::unit(r, 0, 2);        // 2ε₁
            md.lambda_minus = detail::unit(r, r - 1, -2);  // −2ε_r
            md.ambient_family = Family::C;
            md.ambient_rank = r;
            break;
        }
        case CaseKind::so_odd_odd: {
            const int n = g.p + g.q;
            md.rank = n;
            std::vector<Block> blocks;
            if (g.p >= 1) blocks.push_back({Family::B, 0, g.p});
            if (g.q >= 1) blocks.push_back({Family::B, g.p, g.q});
            md.k_roots = make_root_system(n, blocks);
            md.lambda_plus = (g.p >= 1 && g.q >= 1) ? detail::two_units(n, 0, 1, g.p, 1)
                                                    : detail::unit(n, 0, 1);
            md.ambient_family = Family::D;
            md.ambient_rank = n + 1;
            break;
        }
        case CaseKind::so_even_odd: {
            const int n = g.p + g.q;
            md.rank = n;
            std::vector<Block> blocks{{Family::D, 0, g.p}};
            if (g.q >= 1) blocks.push_back({Family::B, g.p, g.q});
            md.k_roots = make_root_system(n, blocks);
            if (g.p == 1) {
                // so(2, 2q+1) is Hermitian: the rotation factor splits the
                // isotropy representation into a ± pair.
                md.hermitian = true;
                if (g.q >= 1) {
                    md.lambda_plus = detail::two_units(n, 0, 1, 1, 1);    // ε₁ + ε₂
                    md.lambda_minus = detail::two_units(n, 0, -1, 1, 1);  // ε₂ − ε₁
                } else {
                    md.lambda_plus = detail::unit(1, 0, 1);    // ε₁
                    md.lambda_minus = detail::unit(1, 0, -1);  // −ε₁
                }
            } else {
                md.lambda_plus = (g.q >= 1) ? detail::two_units(n, 0, 1, g.p, 1)
                                            : detail::unit(n, 0, 1);
            }
            md.ambient_family = Family::B;
            md.ambient_rank = n;
            break;
        }
        case CaseKind::so_even_even: {
            const int n = g.p + g.q;
            md.rank = n;
            md.k_roots = make_root_system(n, {{Family::D, 0, g.p}, {Family::D, g.p, g.q}});
            if (g.p == 1) {
                md.hermitian = true;
                md.lambda_plus = detail::two_units(n, 0, 1, 1, 1);    // ε₁ + ε₂
                md.lambda_minus = detail::two_units(n, 0, -1, 1, 1);  // ε₂ − ε₁
            } else if (g.q == 1) {
                // so(2p, 2): Hermitian; the second rotation factor is fixed,
                // so the single-orbit convention would not be negation-closed.
                md.hermitian = true;
                md.lambda_plus = detail::two_units(n, 0, 1, g.p, 1);    // ε₁ + ε_{p+1}
                md.lambda_minus = detail::two_units(n, 0, 1, g.p, -1);  // ε₁ − ε_{p+1}
            } else {
                md.lambda_plus = detail::two_units(n, 0, 1, g.p, 1);
            }
            md.ambient_family = Family::D;
            md.ambient_rank = n;
            break;
        }
        case CaseKind::sp_quat: {
            const int n = g.p + g.q;
            md.rank = n;
            md.k_roots = make_root_system(n, {{Family::C, 0, g.p}, {Family::C, g.p, g.q}});
            md.lambda_plus = detail::two_units(n, 0, 1, g.p, 1);
            md.ambient_family = Family::C;
            md.ambient_rank = n;
            break;
        }
        case CaseKind::sl_quat: {
            const int m = g.m;
            md.rank = m;
            md.k_roots = make_root_system(m, {{Family::C, 0, m}});
            md.lambda_plus = detail::unit(m, 0, 2);
            md.ambient_family = Family::A;
            md.ambient_rank = 2 * m - 1;
            break;
        }
    }
    md.ambient_positive = positive_root_count(md.ambient_family, md.ambient_rank);
    md.dim_cycle = static_cast<long long>(md.k_roots.positive.size());
    check_internal(md.ambient_positive >= md.dim_cycle,
                   "build_model: ambient smaller than compact part");

    md.lambdas.push_back(md.lambda_plus);
    if (md.hermitian) md.lambdas.push_back(md.lambda_minus);
    if (g.kind == CaseKind::so_even_even && g.p == 1 && g.q == 1) {
        // so(2,2): both compact factors are toral, so the tangent space is a
        // sum of four characters ±ε₁±ε₂ rather than a ± pair of irreducibles.
        md.lambdas.push_back(negated(md.lambda_plus));
        md.lambdas.push_back(negated(md.lambda_minus));
    }
    return md;
}

// ============================================================================
// Cycles
// ============================================================================

/**
 * @brief One base cycle: a subset 𝐣 of {1..N} plus an orientation flag.
 *
 * The subset is kept sorted ascending with 1-based entries.  `primed` selects
 * the second component where one exists (orthogonal even families, and the
 * orientation flip of sl(m,R) for even m); it must be false elsewhere.
 */
struct CycleParam {
    std::vector<int> subset;
    bool primed = false;
};

/// Render a cycle subset as e.g. "{2,5,6}" ("{}" when empty).
inline std::string subset_string(const CycleParam& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.subset.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.subset[i]);
    }
    s += '}';
    if (c.primed) s += '\'';
    return s;
}

namespace detail {

/// All size-k subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < k; ++t)
            cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

}  // namespace detail

/// Whether this case's cycles take a subset parameter (and of what size).
inline std::optional<int> required_subset_size(const GroupCase& g, int rank) {
    switch (g.kind) {
        case CaseKind::su:
        case CaseKind::so_odd_odd:
        case CaseKind::so_even_odd:
        case CaseKind::so_even_even: return g.p;
        case CaseKind::sp_quat: return g.p;
        case CaseKind::sp_real: return -1;  // any size; caller checks range only
        case CaseKind::sl_real:
        case CaseKind::sl_quat: return std::nullopt;
    }
    (void)rank;
    throw internal_error("required_subset_size: bad kind");
}

/// True when the case has a two-component cycle family toggled by `primed`.
inline bool has_primed_variant(const GroupCase& g) {
    return g.kind == CaseKind::so_even_odd || g.kind == CaseKind::so_even_even ||
           (g.kind == CaseKind::sl_real && g.m % 2 == 0);
}

/// Validate a user-supplied cycle against a model; throws invalid_argument.
inline void validate_cycle(const CaseModel& md, const CycleParam& c) {
    const auto& g = md.group;
    const auto sz = required_subset_size(g, md.rank);
    if (!sz.has_value()) {
        if (!c.subset.empty())
            throw std::invalid_argument(case_token(g.kind) + ": cycles take no subset");
    } else {
        if (*sz >= 0 && static_cast<int>(c.subset.size()) != *sz)
            throw std::invalid_argument(case_token(g.kind) + ": cycle subset must have size " +
                                        std::to_string(*sz));
        int prev = 0;
        for (int v : c.subset) {
            if (v <= prev || v > md.rank)
                throw std::invalid_argument(
                    "cycle subset must be strictly increasing within 1.." +
                    std::to_string(md.rank));
            prev = v;
        }
    }
    if (c.primed && !has_primed_variant(g))
        throw std::invalid_argument(case_token(g.kind) + ": no primed cycle variant");
}

/**
 * @brief Deterministic enumeration of every base cycle of a case.
 *
 * Fixed-size subset families are listed lexicographically (primed variant, if
 * any, immediately after its plain partner); sp(r,R) lists all 2^r subsets in
 * size-major then lexicographic order.
 */
inline std::vector<CycleParam> enumerate_cycles(const CaseModel& md) {
    const auto& g = md.group;
    std::vector<CycleParam> out;
    switch (g.kind) {
        case CaseKind::sl_real:
            out.push_back({{}, false});
            if (g.m % 2 == 0) out.push_back({{}, true});
            break;
        case CaseKind::sl_quat:
            out.push_back({{}, false});
            break;
        case CaseKind::sp_real:
            for (int k = 0; k <= md.rank; ++k)
                for (auto& s : detail::subsets_of_size(md.rank, k)) out.push_back({s, false});
            break;
        case CaseKind::su:
        case CaseKind::so_odd_odd:
        case CaseKind::sp_quat:
            for (auto& s : detail::subsets_of_size(md.rank, g.p)) out.push_back({s, false});
            break;
        case CaseKind::so_even_odd:
        case CaseKind::so_even_even:
            for (auto& s : detail::subsets_of_size(md.rank, g.p)) {
                out.push_back({s, false});
                out.push_back({s, true});
            }
            break;
    }
    return out;
}

/**
 * @brief The signed permutation realizing a cycle.
 *
 * For subset cycles 𝐣 = {j₁<…<j_p} with sorted complement {c₁<…<c_q}, the
 * inverse action sends ε_i to ε at position (j-list followed by c-list).
 * sp(r,R) instead reverses and negates the tail block; the primed variants
 * flip one sign (two for the even-even family), and sl(2r,R)'s second cycle
 * flips the last coordinate.
 */
inline SignedPermutation cycle_weyl(const CaseModel& md, const CycleParam& c) {
    validate_cycle(md, c);
    const auto& g = md.group;
    const int n = md.rank;
    SignedPermutation w = SignedPermutation::identity(n);

    if (g.kind == CaseKind::sl_real || g.kind == CaseKind::sl_quat) {
        if (c.primed) w.sign[static_cast<std::size_t>(n - 1)] = -1;
        return w;
    }

    // Subset order: the j-entries first, then the complement, both ascending.
    const int p = static_cast<int>(c.subset.size());
    std::vector<int> order(c.subset);
    {
        std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
        for (int v : c.subset) in[static_cast<std::size_t>(v)] = true;
        for (int v = 1; v <= n; ++v)
            if (!in[static_cast<std::size_t>(v)]) order.push_back(v);
    }

    if (g.kind == CaseKind::sp_real) {
        // w⁻¹(ε_i) = ε_{j_i} for i ≤ p and −ε_{j_{r+p+1−i}} for i > p.
        for (int i = 0; i < n; ++i) {
            if (i < p) {
                w.target[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i)] - 1;
            } else {
                w.target[static_cast<std::size_t>(i)] =
                    order[static_cast<std::size_t>(n + p - 1 - i)] - 1;
                w.sign[static_cast<std::size_t>(i)] = -1;
            }
        }
        return w;
    }

    for (int i = 0; i < n; ++i)
        w.target[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i)] - 1;
    if (c.primed) {
        w.sign[static_cast<std::size_t>(g.p - 1)] = -1;
        if (g.kind == CaseKind::so_even_even) w.sign[static_cast<std::size_t>(n - 1)] *= -1;
    }
    return w;
}

}  // namespace flagcav
