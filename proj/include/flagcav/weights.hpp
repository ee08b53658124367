#pragma once

/**
 * @file weights.hpp
 * @brief Exact integer weight arithmetic for classical root systems.
 *
 * Weights live in the standard ε-basis of a Euclidean coordinate space and are
 * stored as dense integer vectors.  Roots of the classical families A/B/C/D
 * have at most two nonzero ε-coordinates, so they are kept sparse; reflections
 * and pairings then cost O(1) per root.  Everything here is exact — no
 * floating point anywhere.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagcav {

/// Dense ε-basis coordinate vector; index 0 holds the ε₁ coordinate.
using Weight = std::vector<int>;

/// Thrown when an internal consistency check fails (a bug, never bad input).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

// ============================================================================
// Sparse roots
// ============================================================================

/**
 * @brief A root with at most two nonzero ε-coordinates.
 *
 * Covers every root of the classical families: ε_i−ε_j, ε_i+ε_j, ε_i, 2ε_i.
 * `j < 0` marks a single-coordinate root.
 */
struct SparseRoot {
    int i = -1;
    int ci = 0;
    int j = -1;
    int cj = 0;

    [[nodiscard]] int norm2() const { return ci * ci + cj * cj; }

    [[nodiscard]] int pair(const Weight& w) const {
        int s = ci * w[static_cast<std::size_t>(i)];
        if (j >= 0) s += cj * w[static_cast<std::size_t>(j)];
        return s;
    }

    [[nodiscard]] Weight dense(int dimension) const {
        Weight w(static_cast<std::size_t>(dimension), 0);
        w[static_cast<std::size_t>(i)] = ci;
        if (j >= 0) w[static_cast<std::size_t>(j)] = cj;
        return w;
    }
};

/// Classical family tag for a block of coordinates.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

/// Number of positive roots of the given family at the given rank.
inline long long positive_root_count(Family f, long long rank) {
    switch (f) {
        case Family::A: return rank * (rank + 1) / 2;        // A_n on n+1 coordinates
        case Family::B:
        case Family::C: return rank * rank;
        case Family::D: return rank * (rank - 1);
    }
    throw internal_error("positive_root_count: bad family");
}

/**
 * @brief A block of consecutive coordinates carrying one classical factor.
 *
 * The block occupies coordinates [offset, offset+size).  For family A the
 * factor is A_{size-1}; for B/C/D it is B_size/C_size/D_size (D with
 * size < 2 contributes no roots).
 */
struct Block {
    Family family;
    int offset;
    int size;
};

// ============================================================================
// Root systems (compact factor)
// ============================================================================

/**
 * @brief The root datum of a product of classical factors on N coordinates.
 *
 * Holds materialized positive and simple roots of every block.  Blocks must
 * be disjoint; coordinates not covered by any block are inert (fixed by the
 * whole Weyl group).
 */
struct RootSystem {
    int dimension = 0;
    std::vector<Block> blocks;
    std::vector<SparseRoot> positive;
    std::vector<SparseRoot> simple;
};

namespace detail {

inline void append_block_roots(const Block& b, std::vector<SparseRoot>& positive,
                               std::vector<SparseRoot>& simple) {
    const int off = b.offset;
    const int n = b.size;
    auto two = [](int a, int ca, int bb, int cb) { return SparseRoot{a, ca, bb, cb}; };
    auto one = [](int a, int ca) { return SparseRoot{a, ca, -1, 0}; };

    switch (b.family) {
        case Family::A:
            for (int a = 0; a < n; ++a)
                for (int c = a + 1; c < n; ++c) positive.push_back(two(off + a, 1, off + c, -1));
            for (int a = 0; a + 1 < n; ++a) simple.push_back(two(off + a, 1, off + a + 1, -1));
            break;
        case Family::B:
            for (int a = 0; a < n; ++a)
                for (int c = a + 1; c < n; ++c) {
                    positive.push_back(two(off + a, 1, off + c, -1));
                    positive.push_back(two(off + a, 1, off + c, 1));
                }
            for (int a = 0; a < n; ++a) positive.push_back(one(off + a, 1));
            for (int a = 0; a + 1 < n; ++a) simple.push_back(two(off + a, 1, off + a + 1, -1));
            if (n >= 1) simple.push_back(one(off + n - 1, 1));
            break;
        case Family::C:
            for (int a = 0; a < n; ++a)
                for (int c = a + 1; c < n; ++c) {
                    positive.push_back(two(off + a, 1, off + c, -1));
                    positive.push_back(two(off + a, 1, off + c, 1));
                }
            for (int a = 0; a < n; ++a) positive.push_back(one(off + a, 2));
            for (int a = 0; a + 1 < n; ++a) simple.push_back(two(off + a, 1, off + a + 1, -1));
            if (n >= 1) simple.push_back(one(off + n - 1, 2));
            break;
        case Family::D:
            for (int a = 0; a < n; ++a)
                for (int c = a + 1; c < n; ++c) {
                    positive.push_back(two(off + a, 1, off + c, -1));
                    positive.push_back(two(off + a, 1, off + c, 1));
                }
            for (int a = 0; a + 1 < n; ++a) simple.push_back(two(off + a, 1, off + a + 1, -1));
            if (n >= 2) simple.push_back(two(off + n - 2, 1, off + n - 1, 1));
            break;
    }
}

}  // namespace detail

/// Build a root system from disjoint blocks inside an N-dimensional space.
inline RootSystem make_root_system(int dimension, std::vector<Block> blocks) {
    RootSystem rs;
    rs.dimension = dimension;
    std::vector<bool> used(static_cast<std::size_t>(dimension), false);
    for (const Block& b : blocks) {
        if (b.size < 0 || b.offset < 0 || b.offset + b.size > dimension)
            throw std::invalid_argument("make_root_system: block out of range");
        for (int c = b.offset; c < b.offset + b.size; ++c) {
            if (used[static_cast<std::size_t>(c)])
                throw std::invalid_argument("make_root_system: overlapping blocks");
            used[static_cast<std::size_t>(c)] = true;
        }
        detail::append_block_roots(b, rs.positive, rs.simple);
    }
    rs.blocks = std::move(blocks);
    return rs;
}

// ============================================================================
// Pairing, reflection, dominance
// ============================================================================

/// Euclidean pairing (w, β) against a sparse root.
inline int pairing(const Weight& w, const SparseRoot& beta) { return beta.pair(w); }

/**
 * @brief Reflect a weight in the hyperplane of a root: w ↦ w − 2(w,β)/(β,β)·β.
 *
 * Exact on the weight lattices used here; throws internal_error if the
 * Cartan coefficient is not an integer.
 */
inline Weight reflected(Weight w, const SparseRoot& beta) {
    const int p = beta.pair(w);
    const int n2 = beta.norm2();
    check_internal((2 * p) % n2 == 0, "reflected: non-integral Cartan coefficient");
    const int t = 2 * p / n2;
    w[static_cast<std::size_t>(beta.i)] -= t * beta.ci;
    if (beta.j >= 0) w[static_cast<std::size_t>(beta.j)] -= t * beta.cj;
    return w;
}

/// True when the weight pairs non-negatively with every simple root.
inline bool is_dominant(const Weight& w, const RootSystem& rs) {
    return std::all_of(rs.simple.begin(), rs.simple.end(),
                       [&](const SparseRoot& a) { return a.pair(w) >= 0; });
}

/**
 * @brief Index of a weight: the number of positive roots it pairs negatively with.
 *
 * Equals the minimal number of simple reflections carrying the weight to the
 * dominant chamber; zero exactly on dominant weights.
 */
inline long long weight_index(const Weight& w, const RootSystem& rs) {
    long long n = 0;
    for (const SparseRoot& beta : rs.positive)
        if (beta.pair(w) < 0) ++n;
    return n;
}

/**
 * @brief Index computed by walking to the dominant chamber, one simple
 * reflection at a time.
 *
 * Independent realization of weight_index used as a test oracle: each step
 * reflects in the first simple root pairing negatively and the walk length is
 * returned.  Throws internal_error if the walk fails to terminate within the
 * theoretical bound.
 */
inline long long weight_index_steps(Weight w, const RootSystem& rs) {
    const long long bound = static_cast<long long>(rs.positive.size());
    long long steps = 0;
    while (true) {
        const SparseRoot* neg = nullptr;
        for (const SparseRoot& a : rs.simple)
            if (a.pair(w) < 0) {
                neg = &a;
                break;
            }
        if (neg == nullptr) return steps;
        w = reflected(std::move(w), *neg);
        ++steps;
        check_internal(steps <= bound, "weight_index_steps: walk exceeded root count");
    }
}

// ============================================================================
// Weyl orbits
// ============================================================================

/**
 * @brief Full Weyl-group orbit of a weight, sorted lexicographically.
 *
 * Breadth-first closure under the simple reflections of every block.
 */
inline std::vector<Weight> weyl_orbit(const Weight& start, const RootSystem& rs) {
    std::set<Weight> seen{start};
    std::vector<Weight> frontier{start};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& w : frontier)
            for (const SparseRoot& a : rs.simple) {
                Weight r = reflected(w, a);
                if (seen.insert(r).second) next.push_back(std::move(r));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

/// Negation of a weight.
inline Weight negated(Weight w) {
    for (int& c : w) c = -c;
    return w;
}

/**
 * @brief Positivity in the restricted lexicographic order: the first nonzero
 * coordinate is positive.
 *
 * The zero weight is neither positive nor negative; callers only ever pass
 * nonzero weights, so zero raises internal_error.
 */
inline bool has_positive_leading(const Weight& w) {
    for (int c : w) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    throw internal_error("has_positive_leading: zero weight");
}

// ============================================================================
// Signed permutations
// ============================================================================

/**
 * @brief A signed permutation w of the coordinate space, stored by its
 * inverse action on the ε-basis: w⁻¹(ε_i) = sign[i]·ε_{target[i]}.
 */
struct SignedPermutation {
    std::vector<int> target;  ///< 0-based images under w⁻¹
    std::vector<int> sign;    ///< entries ±1

    static SignedPermutation identity(int n) {
        SignedPermutation s;
        s.target.resize(static_cast<std::size_t>(n));
        std::iota(s.target.begin(), s.target.end(), 0);
        s.sign.assign(static_cast<std::size_t>(n), 1);
        return s;
    }

    [[nodiscard]] std::size_t size() const { return target.size(); }

    /// Apply w⁻¹ to a dense weight.
    [[nodiscard]] Weight apply_inverse(const Weight& w) const {
        check_internal(w.size() == target.size(), "apply_inverse: dimension mismatch");
        Weight out(w.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i)
            out[static_cast<std::size_t>(target[i])] += sign[i] * w[i];
        return out;
    }
};

// ============================================================================
// Simple-root coordinates
// ============================================================================

/**
 * @brief Coordinates of a root-lattice weight in the simple-root basis of one
 * irreducible system of rank m (families B, C, D).
 *
 * With partial sums c_1+…+c_d of the ε-coordinates:
 *   shared:  n_d = c_1+…+c_d                    for d < m (d < m−1 for D),
 *   B:       n_m = c_1+…+c_m,
 *   C:       n_m = (c_1+…+c_m)/2,
 *   D:       n_{m−1} = (c_1+…+c_{m−1} − c_m)/2,
 *            n_m     = (c_1+…+c_{m−1} + c_m)/2.
 * Throws internal_error if the weight is not in the root lattice.
 */
inline std::vector<int> simple_root_coordinates(Family fam, int m, const Weight& w) {
    check_internal(static_cast<int>(w.size()) == m, "simple_root_coordinates: dimension mismatch");
    std::vector<int> n(static_cast<std::size_t>(m), 0);
    int run = 0;
    for (int d = 1; d <= m; ++d) {
        run += w[static_cast<std::size_t>(d - 1)];
        if (d < m) n[static_cast<std::size_t>(d - 1)] = run;
    }
    const int total = run;  // c_1+…+c_m
    switch (fam) {
        case Family::B:
            n[static_cast<std::size_t>(m - 1)] = total;
            break;
        case Family::C:
            check_internal(total % 2 == 0, "simple_root_coordinates: C-lattice parity");
            n[static_cast<std::size_t>(m - 1)] = total / 2;
            break;
        case Family::D: {
            check_internal(m >= 2, "simple_root_coordinates: D rank >= 2 required");
            const int head = total - w[static_cast<std::size_t>(m - 1)];  // c_1+…+c_{m−1}
            const int last = w[static_cast<std::size_t>(m - 1)];
            check_internal((head - last) % 2 == 0, "simple_root_coordinates: D-lattice parity");
            n[static_cast<std::size_t>(m - 2)] = (head - last) / 2;
            n[static_cast<std::size_t>(m - 1)] = (head + last) / 2;
            break;
        }
        case Family::A:
            throw internal_error("simple_root_coordinates: family A not supported");
    }
    return n;
}

/// Render a weight as e.g. "(1,0,-1)".
inline std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    s += ')';
    return s;
}

}  // namespace flagcav
