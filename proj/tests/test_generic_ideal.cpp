#include <doctest.h>

#include "cm2/fuzz.hpp"
#include "cm2/generic_ideal.hpp"
#include "cm2/oracle.hpp"
#include "cm2/syzygy.hpp"
#include "fixtures.hpp"

using namespace cm2;
using cm2::testing::mono;
using cm2::testing::tree;

namespace {

/// The running example's path tree with its Taylor labels.
LabeledTree labeled_gamma1() {
    VarSet v = standard_variables(6);
    return LabeledTree(4, cm2::testing::gamma1(),
                       {{mono(v, "x1"), mono(v, "x4")},
                        {mono(v, "x2"), mono(v, "x5")},
                        {mono(v, "x3*x5"), mono(v, "x6")}});
}

}  // namespace

TEST_SUITE_BEGIN("generic_ideal");

TEST_CASE("generic matrix entries and signs") {
    SUBCASE("star tree") {
        GenericMatrix m = generic_matrix(tree(4, {{1, 2}, {2, 3}, {2, 4}}));
        REQUIRE(m.rows().size() == 3);
        const VarSet& v = m.variables().vars;
        CHECK(m.rows()[0].edge == Edge(1, 2));
        CHECK(m.rows()[0].neg_entry == mono(v, "x1_2"));
        CHECK(m.rows()[0].pos_entry == mono(v, "x2_1"));
        CHECK(m.rows()[1].neg_entry == mono(v, "x2_3"));
        CHECK(m.rows()[1].pos_entry == mono(v, "x3_2"));
        CHECK(m.rows()[2].neg_entry == mono(v, "x2_4"));
        CHECK(m.rows()[2].pos_entry == mono(v, "x4_2"));
    }
    SUBCASE("single edge") {
        GenericMatrix m = generic_matrix(tree(2, {{1, 2}}));
        const VarSet& v = m.variables().vars;
        CHECK(v->size() == 2);
        CHECK(m.rows()[0].neg_entry == mono(v, "x1_2"));
        CHECK(m.rows()[0].pos_entry == mono(v, "x2_1"));
    }
    SUBCASE("path tree") {
        GenericMatrix m = generic_matrix(tree(3, {{1, 2}, {2, 3}}));
        const VarSet& v = m.variables().vars;
        CHECK(m.rows()[0].neg_entry == mono(v, "x1_2"));
        CHECK(m.rows()[1].neg_entry == mono(v, "x2_3"));
        CHECK(m.rows()[1].pos_entry == mono(v, "x3_2"));
    }
}

TEST_CASE("minor_product worked instances") {
    SUBCASE("single edge") {
        LabeledTree k2 = tree(2, {{1, 2}});
        VarSet v = generic_variables(k2).vars;
        CHECK(minor_product(k2, 1) == mono(v, "x2_1"));
        CHECK(minor_product(k2, 2) == mono(v, "x1_2"));
    }
    SUBCASE("star tree") {
        LabeledTree star = tree(4, {{1, 2}, {2, 3}, {2, 4}});
        VarSet v = generic_variables(star).vars;
        CHECK(minor_product(star, 1) == mono(v, "x2_1*x3_2*x4_2"));
        CHECK(minor_product(star, 3) == mono(v, "x1_2*x2_3*x4_2"));
    }
    SUBCASE("path tree") {
        LabeledTree p3 = tree(3, {{1, 2}, {2, 3}});
        VarSet v = generic_variables(p3).vars;
        CHECK(minor_product(p3, 1) == mono(v, "x2_1*x3_2"));
        CHECK(minor_product(p3, 2) == mono(v, "x1_2*x3_2"));
        CHECK(minor_product(p3, 3) == mono(v, "x1_2*x2_3"));
    }
    CHECK_THROWS_AS(minor_product(tree(2, {{1, 2}}), 3), UsageError);
}

TEST_CASE("minor_product equals the cofactor determinant, all trees up to 5 vertices") {
    for (int n = 2; n <= 5; ++n)
        oracle::for_each_labeled_tree(n, [&](const LabeledTree& t) {
            VarSet vars = generic_variables(t).vars;
            oracle::SignedMonomialMatrix m = oracle::generic_sign_matrix(t, vars);
            for (int j = 1; j <= n; ++j) {
                auto det = oracle::det_cofactor(m.omit_column(j - 1));
                REQUIRE(det.has_value());
                CHECK(det->mono == minor_product(t, j));
            }
            return true;
        });
}

TEST_CASE("generic ideal generators") {
    SUBCASE("single edge") {
        LabeledTree k2 = tree(2, {{1, 2}});
        VarSet v = generic_variables(k2).vars;
        CHECK(generic_ideal(k2) == std::vector<Monomial>{mono(v, "x2_1"), mono(v, "x1_2")});
    }
    SUBCASE("path tree") {
        LabeledTree p3 = tree(3, {{1, 2}, {2, 3}});
        VarSet v = generic_variables(p3).vars;
        CHECK(generic_ideal(p3) == std::vector<Monomial>{mono(v, "x2_1*x3_2"),
                                                         mono(v, "x1_2*x3_2"),
                                                         mono(v, "x1_2*x2_3")});
    }
    SUBCASE("star tree, fourth generator from the product formula") {
        LabeledTree star = tree(4, {{1, 2}, {2, 3}, {2, 4}});
        VarSet v = generic_variables(star).vars;
        CHECK(generic_ideal(star) ==
              std::vector<Monomial>{mono(v, "x2_1*x3_2*x4_2"), mono(v, "x1_2*x3_2*x4_2"),
                                    mono(v, "x1_2*x2_3*x4_2"), mono(v, "x1_2*x2_4*x3_2")});
    }
    SUBCASE("unit gcd, exhaustively on small trees") {
        for (int n = 2; n <= 6; ++n)
            oracle::for_each_labeled_tree(n, [&](const LabeledTree& t) {
                std::vector<Monomial> gens = generic_ideal(t);
                Monomial g = gens.front();
                for (const Monomial& m : gens)
                    g = gcd(g, m);
                CHECK(g.is_one());
                return n <= 5;
            });
    }
}

TEST_CASE("primary decomposition of generic ideals") {
    SUBCASE("single edge") {
        LabeledTree k2 = tree(2, {{1, 2}});
        VarSet v = generic_variables(k2).vars;
        auto comps = primary_decomposition_generic(k2);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0] == PrimeComponent(mono(v, "x1_2"), mono(v, "x2_1")));
    }
    SUBCASE("path tree") {
        LabeledTree p3 = tree(3, {{1, 2}, {2, 3}});
        VarSet v = generic_variables(p3).vars;
        std::vector<PrimeComponent> expected{
            PrimeComponent(mono(v, "x1_2"), mono(v, "x2_1")),
            PrimeComponent(mono(v, "x1_2"), mono(v, "x3_2")),
            PrimeComponent(mono(v, "x2_3"), mono(v, "x3_2")),
        };
        std::sort(expected.begin(), expected.end());
        CHECK(primary_decomposition_generic(p3) == expected);
    }
    SUBCASE("star tree: the pair {3,4} meets at the center") {
        LabeledTree star = tree(4, {{1, 2}, {2, 3}, {2, 4}});
        VarSet v = generic_variables(star).vars;
        std::vector<PrimeComponent> expected{
            PrimeComponent(mono(v, "x1_2"), mono(v, "x2_1")),
            PrimeComponent(mono(v, "x1_2"), mono(v, "x3_2")),
            PrimeComponent(mono(v, "x1_2"), mono(v, "x4_2")),
            PrimeComponent(mono(v, "x2_3"), mono(v, "x3_2")),
            PrimeComponent(mono(v, "x2_4"), mono(v, "x4_2")),
            PrimeComponent(mono(v, "x3_2"), mono(v, "x4_2")),
        };
        std::sort(expected.begin(), expected.end());
        CHECK(primary_decomposition_generic(star) == expected);
    }
    SUBCASE("intersection of the components is the ideal, all trees up to 5 vertices") {
        for (int n = 2; n <= 5; ++n)
            oracle::for_each_labeled_tree(n, [&](const LabeledTree& t) {
                std::vector<std::vector<Monomial>> lists;
                for (const PrimeComponent& c : primary_decomposition_generic(t))
                    lists.push_back({c.first, c.second});
                CHECK(oracle::ideals_equal(generic_ideal(t), oracle::intersect_ideals(lists)));
                return true;
            });
    }
}

TEST_CASE("verify_label_condition") {
    SUBCASE("running example's path tree") {
        CHECK(verify_label_condition(labeled_gamma1()).ok);
    }
    SUBCASE("equal labels on a single edge fail at the only pair") {
        VarSet v = standard_variables(1);
        LabeledTree bad(2, cm2::testing::edges({{1, 2}}),
                        {{Monomial::var(v, 0), Monomial::var(v, 0)}});
        auto res = verify_label_condition(bad);
        CHECK_FALSE(res.ok);
        CHECK(res.violating_pair == std::make_pair(1, 2));
    }
    SUBCASE("generic labels always pass") {
        for (int n = 2; n <= 5; ++n)
            oracle::for_each_labeled_tree(n, [&](const LabeledTree& t) {
                GenericVariables gv = generic_variables(t);
                std::vector<EdgeLabels> labels;
                for (const Edge& e : t.edges())
                    labels.push_back({gv.var(e.lo, e.hi), gv.var(e.hi, e.lo)});
                LabeledTree labeled(t.vertex_count(),
                                    {t.edges().begin(), t.edges().end()}, labels);
                CHECK(verify_label_condition(labeled).ok);
                return n <= 4;
            });
    }
    CHECK_THROWS_AS(verify_label_condition(tree(2, {{1, 2}})), UsageError);
}

TEST_CASE("build_cm_ideal") {
    SUBCASE("running example") {
        VarSet v = standard_variables(6);
        CHECK(build_cm_ideal(labeled_gamma1()) ==
              std::vector<Monomial>{mono(v, "x4*x5*x6"), mono(v, "x1*x5*x6"),
                                    mono(v, "x1*x2*x6"), mono(v, "x1*x2*x3*x5")});
    }
    SUBCASE("generic labels reproduce the generic ideal") {
        for (int n = 2; n <= 5; ++n)
            oracle::for_each_labeled_tree(n, [&](const LabeledTree& t) {
                GenericVariables gv = generic_variables(t);
                std::vector<EdgeLabels> labels;
                for (const Edge& e : t.edges())
                    labels.push_back({gv.var(e.lo, e.hi), gv.var(e.hi, e.lo)});
                LabeledTree labeled(t.vertex_count(),
                                    {t.edges().begin(), t.edges().end()}, labels);
                CHECK(build_cm_ideal(labeled) == generic_ideal(t));
                return n <= 4;
            });
    }
    SUBCASE("single edge with nontrivial exponents") {
        VarSet v = standard_variables(2);
        LabeledTree k2(2, cm2::testing::edges({{1, 2}}),
                       {{mono(v, "x2^2"), mono(v, "x1^3")}});
        CHECK(build_cm_ideal(k2) == std::vector<Monomial>{mono(v, "x1^3"), mono(v, "x2^2")});
    }
    SUBCASE("condition violation is a domain error") {
        VarSet v = standard_variables(1);
        LabeledTree bad(2, cm2::testing::edges({{1, 2}}),
                        {{Monomial::var(v, 0), Monomial::var(v, 0)}});
        CHECK_THROWS_AS(build_cm_ideal(bad), DomainError);
    }
}

TEST_CASE("fuzzed labeled trees give CM ideals accepted with their own tree") {
    fuzz::Rng rng(99);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);
        LabeledTree t = fuzz::random_labeled_cm_tree(rng, n);
        std::vector<Monomial> gens = build_cm_ideal(t);

        Monomial g = gens.front();
        for (const Monomial& m : gens)
            g = gcd(g, m);
        CHECK(g.is_one());

        MonomialIdeal ideal(t.labels(0).from_lo.variables(), gens);
        REQUIRE(ideal.generator_count() == static_cast<std::size_t>(n));
        CHECK(is_cm_codim2(ideal).accepted);
        // the constructing tree itself is a valid relation tree
        CHECK(tree_generates(ideal, t));
        CHECK_NOTHROW(hilbert_burch_matrix(ideal, t));
    }
}

TEST_SUITE_END();
