#pragma once

/**
 * @file hooks.hpp
 * @brief Hook statistics of a subset 𝐣 ⊆ {1..p+q} of size p.
 *
 * With 𝐣 = {j₁<…<j_p} and sorted complement {j_{p+1}<…<j_{p+q}}, a pair
 * (a,b) with a ≤ p < b compares one chosen position against one omitted one:
 *
 *   h⁺ = min{ b−a : j_a < j_b },   h⁻ = max{ b−a : j_a > j_b },
 *
 * with the convention h⁺ = 0 when no increasing pair exists (𝐣 is the top
 * corner {q+1..p+q}) and h⁻ = 0 when no decreasing pair exists (𝐣 = {1..p}).
 * The derived quantities are I⁺ = h⁺ − 1 + p and I⁻ = (p+q) − h⁻ − 1 + q.
 *
 * A second, independent realization lays the same data out on a p×q grid
 * (columns labeled by 𝐣 left to right, rows by the complement bottom to top;
 * the cell of column a and bottom-up row t holds hook length (p+t) − a and is
 * colored when its column label is smaller than its row label).  h⁺ is then
 * the smallest colored hook and h⁻ the largest uncolored one.
 */

#include <stdexcept>
#include <vector>

#include "weights.hpp"

namespace flagcav {

/// Hook statistics of one subset; absent branches keep the 0 convention.
struct HookData {
    int h_plus = 0;
    int h_minus = 0;
    long long i_plus = 0;
    long long i_minus = 0;
    bool plus_present = false;   ///< some increasing pair exists (𝐣 ≠ top corner)
    bool minus_present = false;  ///< some decreasing pair exists (𝐣 ≠ bottom corner)
};

namespace detail {

inline std::vector<int> subset_complement(const std::vector<int>& j, int n) {
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    for (int v : j) {
        if (v < 1 || v > n || in[static_cast<std::size_t>(v)])
            throw std::invalid_argument("hook subset entries must be distinct within 1..n");
        in[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> c;
    for (int v = 1; v <= n; ++v)
        if (!in[static_cast<std::size_t>(v)]) c.push_back(v);
    return c;
}

inline void finish_hook_data(HookData& h, int p, int q) {
    h.i_plus = static_cast<long long>(h.h_plus) - 1 + p;
    h.i_minus = static_cast<long long>(p + q) - h.h_minus - 1 + q;
}

}  // namespace detail

/**
 * @brief Hook statistics by direct pair scan.
 *
 * `j` must be a sorted size-p subset of {1..p+q}; p,q >= 1.
 */
inline HookData hook_data(const std::vector<int>& j, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("hook_data: requires p >= 1 and q >= 1");
    if (static_cast<int>(j.size()) != p)
        throw std::invalid_argument("hook_data: subset must have size p");
    std::vector<int> sorted(j);
    std::sort(sorted.begin(), sorted.end());
    const std::vector<int> comp = detail::subset_complement(sorted, p + q);

    HookData h;
    for (int a = 1; a <= p; ++a)
        for (int b = p + 1; b <= p + q; ++b) {
            const int ja = sorted[static_cast<std::size_t>(a - 1)];
            const int jb = comp[static_cast<std::size_t>(b - p - 1)];
            const int len = b - a;
            if (ja < jb) {
                if (!h.plus_present || len < h.h_plus) h.h_plus = len;
                h.plus_present = true;
            } else {
                if (!h.minus_present || len > h.h_minus) h.h_minus = len;
                h.minus_present = true;
            }
        }
    detail::finish_hook_data(h, p, q);
    return h;
}

/**
 * @brief Hook statistics via the p×q grid realization (test oracle).
 *
 * Builds the full grid of hook lengths and colors, then takes the minimum
 * colored and maximum uncolored entries.
 */
inline HookData hook_data_grid(const std::vector<int>& j, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("hook_data_grid: requires p >= 1 and q >= 1");
    if (static_cast<int>(j.size()) != p)
        throw std::invalid_argument("hook_data_grid: subset must have size p");
    std::vector<int> cols(j);
    std::sort(cols.begin(), cols.end());
    const std::vector<int> rows = detail::subset_complement(cols, p + q);  // bottom to top

    HookData h;
    for (int a = 1; a <= p; ++a)
        for (int t = 1; t <= q; ++t) {
            const int hook = (p + t) - a;
            const bool colored =
                cols[static_cast<std::size_t>(a - 1)] < rows[static_cast<std::size_t>(t - 1)];
            if (colored) {
                if (!h.plus_present || hook < h.h_plus) h.h_plus = hook;
                h.plus_present = true;
            } else {
                if (!h.minus_present || hook > h.h_minus) h.h_minus = hook;
                h.minus_present = true;
            }
        }
    detail::finish_hook_data(h, p, q);
    return h;
}

}  // namespace flagcav
