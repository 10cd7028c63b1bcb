#include <doctest.h>

#include "fixtures.hpp"
#include "polarmult/hilbert.hpp"

using namespace polarmult;
using namespace fixtures;

TEST_CASE("algebra pieces") {
    RationalField f;

    SUBCASE("polynomial ring piece is free") {
        auto b = algebra(f, {"u"}, {"x", "y"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        CHECK(mp.piece(2).rank == 3);
        CHECK(mp.piece(2).relations.empty());
        CHECK(mp.cell(2, 0) == 3);
        CHECK(mp.cell(2, 4) == 15); // 3*(n+1)
    }
    SUBCASE("monomial relation drops the effective rank") {
        auto b = algebra(f, {"u"}, {"x", "y"}, {"x*y"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        CHECK(mp.piece(2).rank == 3);
        CHECK(mp.cell(2, 0) == 2);
        CHECK(mp.cell(2, 3) == 8); // 2*(n+1)
    }
    SUBCASE("field base, truncated dimension ignores n") {
        auto b = algebra(f, {}, {"x", "y"}, {"x^2"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        CHECK(mp.cell(3, 0) == 2); // y^3, x y^2
        CHECK(mp.cell(3, 9) == 2);
    }
    SUBCASE("mixed-coefficient relation") {
        // x^2 = u y^2 makes B_2 free of rank 2
        auto b = algebra(f, {"u"}, {"x", "y"}, {"x^2 - u*y^2"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        CHECK(mp.cell(2, 0) == 2);
        CHECK(mp.cell(2, 1) == 4);
        CHECK(mp.cell(2, 5) == 12);
    }
}

TEST_CASE("module pieces") {
    RationalField f;
    auto bx = algebra(f, {"u"}, {"x"});

    SUBCASE("free rank one equals the algebra piece") {
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(bx));
        CHECK(mp.piece(3).rank == 1);
        CHECK(mp.cell(3, 2) == 3);
    }
    SUBCASE("shift bookkeeping: B(-1) + B") {
        auto m = module_over(f, bx, {1, 0});
        ModulePieces<RationalField> mp(f, m);
        REQUIRE(mp.frame(1).size() == 2); // gen0*1 and gen1*x
        CHECK(mp.frame(1)[0].gen == 0);
        CHECK(mp.frame(1)[0].xmono.is_one());
        CHECK(mp.cell(1, 0) == 2);
    }
    SUBCASE("B/uB has one-dimensional pieces") {
        auto m = module_over(f, bx, {0}, {{"u"}});
        ModulePieces<RationalField> mp(f, m);
        CHECK(mp.cell(2, 0) == 1);
        CHECK(mp.cell(2, 6) == 1);
    }
    SUBCASE("empty pieces are legal") {
        auto m = module_over(f, bx, {2});
        ModulePieces<RationalField> mp(f, m);
        CHECK(mp.piece(1).rank == 0);
        CHECK(mp.cell(1, 3) == 0);
    }
}

TEST_CASE("power pieces of a subalgebra filtration") {
    RationalField f;

    SUBCASE("principal times the degree-1 frame") {
        auto b = algebra(f, {"u"}, {"x", "y"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        Filtration<RationalField> filt(mp, xps(f, b, {"x"}));
        auto w_x2 = vec_from_columns(f, *mp.expand_in_frame(0, xp(f, b, "x^2"), Mono(2), 2), ModOrder{});
        auto w_xy = vec_from_columns(f, *mp.expand_in_frame(0, xp(f, b, "x*y"), Mono(2), 2), ModOrder{});
        auto w_y2 = vec_from_columns(f, *mp.expand_in_frame(0, xp(f, b, "y^2"), Mono(2), 2), ModOrder{});
        CHECK(filt.member(w_x2, 1, 2));
        CHECK(filt.member(w_xy, 1, 2));
        CHECK(!filt.member(w_y2, 1, 2));
    }
    SUBCASE("single product with u-content") {
        auto b = algebra(f, {"u"}, {"x"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        Filtration<RationalField> filt(mp, xps(f, b, {"u*x"}));
        const auto& gens = filt.power_gens(2, 3);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0].terms.size() == 1);
        CHECK(gens[0].terms[0].mono.deg() == 2); // u^2 x^3
    }
    SUBCASE("A spanning B_1 gives the whole piece at every level") {
        auto b = algebra(f, {"u"}, {"x", "y"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        Filtration<RationalField> filt(mp, xps(f, b, {"x", "y"}));
        for (int k = 0; k <= 2; ++k)
            for (int i = 0; i < mp.piece(2).rank; ++i) {
                VecPoly<RationalField> e;
                e.terms.push_back(ModTerm<RationalField>{Mono(1), i, f.one()});
                CHECK(filt.member(e, k, 2));
            }
    }
    SUBCASE("filtration is descending") {
        auto b = algebra(f, {"u"}, {"x", "y"}, {"x*y - u*y^2"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        Filtration<RationalField> filt(mp, xps(f, b, {"x"}));
        for (int v = 1; v <= 4; ++v)
            for (int k = 1; k <= v; ++k)
                for (const auto& g : filt.power_gens(k, v))
                    CHECK(filt.member(g, k - 1, v));
    }
}

TEST_CASE("quotient pieces") {
    RationalField f;
    auto b = algebra(f, {"u"}, {"x"});
    ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));

    SUBCASE("principal over principal") {
        auto top = vec_from_columns(f, *mp.expand_in_frame(0, xp(f, b, "u^2*x^3"), Mono(1), 3), ModOrder{});
        auto bottom = vec_from_columns(f, *mp.expand_in_frame(0, xp(f, b, "u^3*x^3"), Mono(1), 3), ModOrder{});
        auto q = quotient_piece<RationalField>(f, {top}, {bottom}, mp.piece(3), nullptr, true);
        CHECK(q.rank == 1);
        CHECK(truncated_dimension(f, q, 5) == 1); // kappa[u]/(u)
    }
    SUBCASE("containment is verified") {
        auto top = vec_from_columns(f, *mp.expand_in_frame(0, xp(f, b, "u^2*x^3"), Mono(1), 3), ModOrder{});
        auto outside = vec_from_columns(f, *mp.expand_in_frame(0, xp(f, b, "u*x^3"), Mono(1), 3), ModOrder{});
        CHECK_THROWS_AS((void)quotient_piece<RationalField>(f, {top}, {outside}, mp.piece(3), nullptr, true),
                        NotContained);
    }
    SUBCASE("free summand of a frame") {
        auto byx = algebra(f, {"u"}, {"x", "y"});
        ModulePieces<RationalField> mp2(f, TypedModule<RationalField>::free_rank_one(byx));
        auto t1 = vec_from_columns(f, *mp2.expand_in_frame(0, xp(f, byx, "x^2"), Mono(2), 2), ModOrder{});
        auto t2 = vec_from_columns(f, *mp2.expand_in_frame(0, xp(f, byx, "x*y"), Mono(2), 2), ModOrder{});
        auto q = quotient_piece<RationalField>(f, {t1, t2}, {t1}, mp2.piece(2), nullptr, true);
        // free of rank 1 on the image of x y
        CHECK(truncated_dimension(f, q, 0) == 1);
        CHECK(truncated_dimension(f, q, 4) == 5);
    }
}

TEST_CASE("quotient by an element") {
    RationalField f;
    auto bx = algebra(f, {"u"}, {"x"});

    SUBCASE("M/x^2 M vanishes in high degrees") {
        auto m = TypedModule<RationalField>::free_rank_one(bx);
        auto q = quotient_by_element(m, xp(f, bx, "x^2"));
        ModulePieces<RationalField> mp(f, q);
        CHECK(mp.cell(0, 2) == 3);
        CHECK(mp.cell(1, 2) == 3);
        CHECK(mp.cell(2, 5) == 0);
        CHECK(mp.cell(7, 5) == 0);
    }
    SUBCASE("M/uM has kappa pieces") {
        auto m = TypedModule<RationalField>::free_rank_one(bx);
        auto q = quotient_by_element(m, xp(f, bx, "u"));
        ModulePieces<RationalField> mp(f, q);
        for (int v = 0; v < 4; ++v)
            CHECK(mp.cell(v, 6) == 1);
    }
}

TEST_CASE("colon and torsion pieces") {
    RationalField f;
    auto bx = algebra(f, {"u"}, {"x"});

    SUBCASE("colon by x on a free module is zero") {
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(bx));
        auto piece = colon_element_piece(mp, xp(f, bx, "x"), 2);
        CHECK(truncated_dimension(f, piece, 6) == 0);
    }
    SUBCASE("colon by u on B/(u x) catches the x-line") {
        auto b = algebra(f, {"u"}, {"x"}, {"u*x"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        auto piece = colon_element_piece(mp, xp(f, b, "u"), 1);
        CHECK(truncated_dimension(f, piece, 6) == 1);
    }
    SUBCASE("colon distributes over direct sums") {
        // M = B + B/xB and b = x: the colon at v = 0 is the second summand's
        // degree-0 piece, a free rank-1 kappa[u]-module
        auto m = module_over(f, bx, {0, 0}, {{"0", "x"}});
        ModulePieces<RationalField> mp(f, m);
        auto piece = colon_element_piece(mp, xp(f, bx, "x"), 0);
        CHECK(truncated_dimension(f, piece, 0) == 1);
        CHECK(truncated_dimension(f, piece, 8) == 9);
    }
    SUBCASE("torsion of a free module vanishes") {
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(bx));
        for (int v = 0; v < 3; ++v)
            CHECK(truncated_dimension(f, torsion_piece(mp, v), 4) == 0);
    }
    SUBCASE("torsion of B/uB is everything") {
        auto m = module_over(f, bx, {0}, {{"u"}});
        ModulePieces<RationalField> mp(f, m);
        for (int v = 0; v < 3; ++v)
            CHECK(torsion_total_dimension(f, torsion_piece(mp, v)) == 1);
    }
    SUBCASE("multiplication sequence is dimensionally exact (s = 0)") {
        // 0 -> (0:b)_{v-a} -> M_{v-a} -> (bM)_v -> 0 over a field base
        auto b = algebra(f, {}, {"x", "y"}, {"x^2"});
        ModulePieces<RationalField> mp(f, TypedModule<RationalField>::free_rank_one(b));
        auto bel = xp(f, b, "x");
        const int v = 3, alpha = 1;
        auto colon = colon_element_piece(mp, bel, v - alpha);
        auto cols = mp.multiplication_matrix(bel, v - alpha);
        std::vector<VecPoly<RationalField>> img;
        for (const auto& c : cols) {
            auto w = vec_from_columns(f, c, ModOrder{});
            if (!w.is_zero())
                img.push_back(w);
        }
        auto image_piece = quotient_piece<RationalField>(f, img, {}, mp.piece(v));
        long long dim_m = mp.cell(v - alpha, 0);
        long long dim_k = truncated_dimension(f, colon, 0);
        long long dim_i = truncated_dimension(f, image_piece, 0);
        CHECK(dim_m == dim_k + dim_i);
    }
}

TEST_CASE("piece dimensions are additive over direct sums") {
    RationalField f;
    auto b = algebra(f, {"u"}, {"x", "y"}, {"x*y"});
    auto m1 = module_over(f, b, {0}, {{"x"}});
    auto m2 = module_over(f, b, {1});
    auto sum = module_over(f, b, {0, 1}, {{"x", "0"}});
    ModulePieces<RationalField> p1(f, m1), p2(f, m2), ps(f, sum);
    for (int v = 0; v <= 4; ++v)
        for (int n = 0; n <= 4; ++n)
            CHECK(ps.cell(v, n) == p1.cell(v, n) + p2.cell(v, n));
}
