#include <catch2/catch_amalgamated.hpp>

#include <flagcav/cases.hpp>

using namespace flagcav;

namespace {

Weight w(std::initializer_list<int> c) { return Weight(c); }

std::vector<std::vector<int>> subsets(const CaseModel& md) {
    std::vector<std::vector<int>> out;
    for (const CycleParam& c : enumerate_cycles(md)) out.push_back(c.subset);
    return out;
}

}  // namespace

TEST_CASE("case token round trip", "[cases]") {
    for (CaseKind k : {CaseKind::sl_real, CaseKind::su, CaseKind::sp_real, CaseKind::so_odd_odd,
                       CaseKind::so_even_odd, CaseKind::so_even_even, CaseKind::sp_quat,
                       CaseKind::sl_quat})
        CHECK(parse_case_token(case_token(k)) == k);
    CHECK(!parse_case_token("so-odd").has_value());
}

TEST_CASE("parameter validation", "[cases]") {
    CHECK_THROWS_AS(make_case_pq(CaseKind::su, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_case_pq(CaseKind::sp_quat, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_case_pq(CaseKind::so_odd_odd, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_case_pq(CaseKind::so_even_odd, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_case_pq(CaseKind::so_even_even, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_case_m(CaseKind::sl_real, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_case_m(CaseKind::sl_quat, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_case_r(0), std::invalid_argument);
    CHECK_THROWS_AS(make_case_m(CaseKind::su, 4), std::invalid_argument);

    // Boundary admissions.
    CHECK_NOTHROW(make_case_pq(CaseKind::so_odd_odd, 0, 5));
    CHECK_NOTHROW(make_case_pq(CaseKind::so_odd_odd, 5, 0));
    CHECK_NOTHROW(make_case_pq(CaseKind::so_even_odd, 1, 0));
    CHECK_NOTHROW(make_case_pq(CaseKind::so_even_even, 1, 1));
    CHECK_NOTHROW(make_case_pq(CaseKind::so_even_even, 3, 1));
    CHECK_NOTHROW(make_case_m(CaseKind::sl_real, 2));
}

TEST_CASE("su model data", "[cases]") {
    const CaseModel md = build_model(make_case_pq(CaseKind::su, 3, 4));
    CHECK(md.rank == 7);
    CHECK(md.hermitian);
    CHECK(md.lambda_plus == w({1, 0, 0, 0, 0, 0, -1}));
    CHECK(md.lambda_minus == w({0, 0, -1, 1, 0, 0, 0}));
    CHECK(md.dim_cycle == 3 + 6);
    CHECK(md.ambient_positive == 21);
    CHECK(md.ambient_family == Family::A);
}

TEST_CASE("sl-real model data", "[cases]") {
    const CaseModel odd = build_model(make_case_m(CaseKind::sl_real, 7));
    CHECK(odd.rank == 3);
    CHECK(!odd.hermitian);
    CHECK(odd.k_roots.positive.size() == 9);  // B₃
    CHECK(odd.lambda_plus == w({2, 0, 0}));
    CHECK(odd.ambient_positive == 21);

    const CaseModel even = build_model(make_case_m(CaseKind::sl_real, 8));
    CHECK(even.rank == 4);
    CHECK(even.k_roots.positive.size() == 12);  // D₄
    CHECK(even.ambient_positive == 28);

    const CaseModel disc = build_model(make_case_m(CaseKind::sl_real, 2));
    CHECK(disc.hermitian);
    CHECK(disc.dim_cycle == 0);
    CHECK(disc.lambda_plus == w({2}));
    CHECK(disc.lambda_minus == w({-2}));
}

TEST_CASE("orthogonal and symplectic model data", "[cases]") {
    const CaseModel so34 = build_model(make_case_pq(CaseKind::so_odd_odd, 3, 4));
    CHECK(so34.rank == 7);
    CHECK(!so34.hermitian);
    CHECK(so34.dim_cycle == 9 + 16);
    CHECK(so34.ambient_positive == 56);  // D₈
    CHECK(so34.lambda_plus == w({1, 0, 0, 1, 0, 0, 0}));

    const CaseModel so03 = build_model(make_case_pq(CaseKind::so_odd_odd, 0, 3));
    CHECK(so03.rank == 3);
    CHECK(so03.lambda_plus == w({1, 0, 0}));
    CHECK(so03.dim_cycle == 9);
    CHECK(so03.ambient_positive == 12);  // D₄

    const CaseModel spq = build_model(make_case_pq(CaseKind::sp_quat, 1, 2));
    CHECK(spq.dim_cycle == 1 + 4);
    CHECK(spq.ambient_positive == 9);  // C₃
    CHECK(spq.lambda_plus == w({1, 1, 0}));

    const CaseModel spr = build_model(make_case_r(3));
    CHECK(spr.hermitian);
    CHECK(spr.dim_cycle == 3);  // A₂
    CHECK(spr.ambient_positive == 9);
    CHECK(spr.lambda_plus == w({2, 0, 0}));
    CHECK(spr.lambda_minus == w({0, 0, -2}));

    const CaseModel slq = build_model(make_case_m(CaseKind::sl_quat, 3));
    CHECK(slq.dim_cycle == 9);  // C₃
    CHECK(slq.ambient_positive == 15);  // A₅
}

TEST_CASE("Hermitian split of the rank-one rotation factors", "[cases]") {
    const CaseModel so2_5 = build_model(make_case_pq(CaseKind::so_even_odd, 1, 2));
    CHECK(so2_5.hermitian);
    CHECK(so2_5.lambda_plus == w({1, 1, 0}));
    CHECK(so2_5.lambda_minus == w({-1, 1, 0}));

    const CaseModel so2_1 = build_model(make_case_pq(CaseKind::so_even_odd, 1, 0));
    CHECK(so2_1.hermitian);
    CHECK(so2_1.lambda_plus == w({1}));
    CHECK(so2_1.lambda_minus == w({-1}));
    CHECK(so2_1.dim_cycle == 0);

    const CaseModel so2_4 = build_model(make_case_pq(CaseKind::so_even_even, 1, 2));
    CHECK(so2_4.hermitian);
    CHECK(so2_4.lambda_plus == w({1, 1, 0}));
    CHECK(so2_4.lambda_minus == w({-1, 1, 0}));

    const CaseModel so6_2 = build_model(make_case_pq(CaseKind::so_even_even, 3, 1));
    CHECK(so6_2.hermitian);
    CHECK(so6_2.lambda_plus == w({1, 0, 0, 1}));
    CHECK(so6_2.lambda_minus == w({1, 0, 0, -1}));

    const CaseModel so4_5 = build_model(make_case_pq(CaseKind::so_even_odd, 2, 2));
    CHECK(!so4_5.hermitian);
    CHECK(so4_5.lambda_plus == w({1, 0, 1, 0}));
    CHECK(so4_5.dim_cycle == 2 + 4);
    CHECK(so4_5.ambient_positive == 16);  // B₄
}

TEST_CASE("so(2,2) tangent space splits into four characters", "[cases]") {
    const CaseModel so22 = build_model(make_case_pq(CaseKind::so_even_even, 1, 1));
    CHECK(so22.hermitian);
    CHECK(so22.dim_cycle == 0);          // D₁⊕D₁ has no roots
    CHECK(so22.ambient_positive == 2);   // D₂
    REQUIRE(so22.lambdas.size() == 4);
    CHECK(so22.lambdas[0] == w({1, 1}));
    CHECK(so22.lambdas[1] == w({-1, 1}));
    CHECK(so22.lambdas[2] == w({-1, -1}));
    CHECK(so22.lambdas[3] == w({1, -1}));

    // Every other model carries the plain one- or two-branch list.
    CHECK(build_model(make_case_pq(CaseKind::so_even_even, 1, 2)).lambdas.size() == 2);
    CHECK(build_model(make_case_pq(CaseKind::so_even_even, 2, 1)).lambdas.size() == 2);
    CHECK(build_model(make_case_pq(CaseKind::so_odd_odd, 1, 1)).lambdas.size() == 1);
    CHECK(build_model(make_case_pq(CaseKind::su, 1, 1)).lambdas.size() == 2);
}

TEST_CASE("cycle enumeration order", "[cases]") {
    using VV = std::vector<std::vector<int>>;

    const CaseModel su22 = build_model(make_case_pq(CaseKind::su, 2, 2));
    CHECK(subsets(su22) == VV{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

    const CaseModel spr3 = build_model(make_case_r(3));
    CHECK(subsets(spr3) == VV{{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});

    const CaseModel so_eo = build_model(make_case_pq(CaseKind::so_even_odd, 1, 2));
    const auto cycles = enumerate_cycles(so_eo);
    REQUIRE(cycles.size() == 6);
    CHECK(cycles[0].subset == std::vector<int>{1});
    CHECK(!cycles[0].primed);
    CHECK(cycles[1].subset == std::vector<int>{1});
    CHECK(cycles[1].primed);
    CHECK(cycles[4].subset == std::vector<int>{3});

    CHECK(enumerate_cycles(build_model(make_case_m(CaseKind::sl_real, 7))).size() == 1);
    CHECK(enumerate_cycles(build_model(make_case_m(CaseKind::sl_real, 8))).size() == 2);
    CHECK(enumerate_cycles(build_model(make_case_m(CaseKind::sl_quat, 4))).size() == 1);
    CHECK(enumerate_cycles(build_model(make_case_pq(CaseKind::so_odd_odd, 0, 3))).size() == 1);
}

TEST_CASE("cycle validation", "[cases]") {
    const CaseModel su34 = build_model(make_case_pq(CaseKind::su, 3, 4));
    CHECK_THROWS_AS(validate_cycle(su34, {{1, 2}, false}), std::invalid_argument);
    CHECK_THROWS_AS(validate_cycle(su34, {{1, 2, 8}, false}), std::invalid_argument);
    CHECK_THROWS_AS(validate_cycle(su34, {{2, 2, 3}, false}), std::invalid_argument);
    CHECK_THROWS_AS(validate_cycle(su34, {{1, 2, 3}, true}), std::invalid_argument);
    CHECK_NOTHROW(validate_cycle(su34, {{2, 3, 5}, false}));

    const CaseModel sl7 = build_model(make_case_m(CaseKind::sl_real, 7));
    CHECK_THROWS_AS(validate_cycle(sl7, {{1}, false}), std::invalid_argument);
    CHECK_THROWS_AS(validate_cycle(sl7, {{}, true}), std::invalid_argument);

    const CaseModel sl8 = build_model(make_case_m(CaseKind::sl_real, 8));
    CHECK_NOTHROW(validate_cycle(sl8, {{}, true}));

    const CaseModel spr4 = build_model(make_case_r(4));
    CHECK_NOTHROW(validate_cycle(spr4, {{}, false}));
    CHECK_NOTHROW(validate_cycle(spr4, {{1, 4}, false}));
    CHECK_THROWS_AS(validate_cycle(spr4, {{1, 4}, true}), std::invalid_argument);
}

TEST_CASE("cycle signed permutations", "[cases]") {
    // su(3,4), subset {2,3,5}: coordinate order (2,3,5 | 1,4,6,7).
    const CaseModel su34 = build_model(make_case_pq(CaseKind::su, 3, 4));
    const SignedPermutation ws = cycle_weyl(su34, {{2, 3, 5}, false});
    CHECK(ws.target == std::vector<int>{1, 2, 4, 0, 3, 5, 6});
    CHECK(ws.sign == std::vector<int>(7, 1));

    // sp(4,R), subset {1,3}: tail reversed and negated.
    const CaseModel spr4 = build_model(make_case_r(4));
    const SignedPermutation wr = cycle_weyl(spr4, {{1, 3}, false});
    CHECK(wr.target == std::vector<int>{0, 2, 3, 1});
    CHECK(wr.sign == std::vector<int>{1, 1, -1, -1});

    // so-even-odd primed flips the p-th preimage sign.
    const CaseModel so_eo = build_model(make_case_pq(CaseKind::so_even_odd, 2, 3));
    const SignedPermutation wp = cycle_weyl(so_eo, {{2, 4}, true});
    CHECK(wp.target == std::vector<int>{1, 3, 0, 2, 4});
    CHECK(wp.sign == std::vector<int>{1, -1, 1, 1, 1});

    // so-even-even primed flips the p-th and last preimage signs.
    const CaseModel so_ee = build_model(make_case_pq(CaseKind::so_even_even, 2, 2));
    const SignedPermutation we = cycle_weyl(so_ee, {{1, 3}, true});
    CHECK(we.target == std::vector<int>{0, 2, 1, 3});
    CHECK(we.sign == std::vector<int>{1, -1, 1, -1});

    // sl(2r,R) orientation flip negates the last coordinate.
    const CaseModel sl8 = build_model(make_case_m(CaseKind::sl_real, 8));
    const SignedPermutation wf = cycle_weyl(sl8, {{}, true});
    CHECK(wf.target == std::vector<int>{0, 1, 2, 3});
    CHECK(wf.sign == std::vector<int>{1, 1, 1, -1});
}
