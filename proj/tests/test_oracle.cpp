#include <doctest.h>

#include <set>

#include "cm2/generic_ideal.hpp"
#include "cm2/oracle.hpp"
#include "cm2/syzygy.hpp"
#include "fixtures.hpp"

using namespace cm2;
using namespace cm2::oracle;
using cm2::testing::example_ideal;
using cm2::testing::mono;
using cm2::testing::tree;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("det_cofactor basics") {
    VarSet v = make_variables({"a", "b", "c", "d"});

    SUBCASE("1x1") {
        SignedMonomialMatrix m(1, 1);
        m.set(0, 0, -1, mono(v, "a"));
        auto det = det_cofactor(m);
        REQUIRE(det.has_value());
        CHECK(det->sign == -1);
        CHECK(det->mono == mono(v, "a"));
    }
    SUBCASE("zero column gives zero") {
        SignedMonomialMatrix m(2, 2);
        m.set(0, 0, -1, mono(v, "a"));
        m.set(1, 0, 1, mono(v, "b"));
        CHECK_FALSE(det_cofactor(m).has_value());
    }
    SUBCASE("non-square is a usage error") {
        SignedMonomialMatrix m(1, 2);
        m.set(0, 0, 1, mono(v, "a"));
        CHECK_THROWS_AS(det_cofactor(m), UsageError);
    }
    SUBCASE("three nonzero entries in a row are rejected") {
        SignedMonomialMatrix m(3, 3);
        for (int c = 0; c < 3; ++c)
            m.set(0, c, 1, mono(v, "a"));
        for (int r = 1; r < 3; ++r)
            m.set(r, r, 1, mono(v, "b"));
        CHECK_THROWS_AS(det_cofactor(m), UsageError);
    }
}

TEST_CASE("det_cofactor on the star tree's generic matrix") {
    LabeledTree star = tree(4, {{1, 2}, {2, 3}, {2, 4}});
    GenericVariables gv = generic_variables(star);
    SignedMonomialMatrix m = generic_sign_matrix(star, gv.vars);

    auto v1 = det_cofactor(m.omit_column(0));
    REQUIRE(v1.has_value());
    CHECK(v1->mono == mono(gv.vars, "x2_1*x3_2*x4_2"));

    auto v4 = det_cofactor(m.omit_column(3));
    REQUIRE(v4.has_value());
    CHECK(v4->mono == mono(gv.vars, "x1_2*x2_4*x3_2"));
}

TEST_CASE("intersect_ideals") {
    VarSet v = standard_variables(3);
    SUBCASE("principal ideals") {
        std::vector<std::vector<Monomial>> ideals{{mono(v, "x1")}, {mono(v, "x2")}};
        CHECK(intersect_ideals(ideals) == std::vector<Monomial>{mono(v, "x1*x2")});
    }
    SUBCASE("path tree components") {
        VarSet w = make_variables({"x1_2", "x2_1", "x2_3", "x3_2"});
        std::vector<std::vector<Monomial>> ideals{
            {mono(w, "x1_2"), mono(w, "x2_1")},
            {mono(w, "x1_2"), mono(w, "x3_2")},
            {mono(w, "x2_3"), mono(w, "x3_2")},
        };
        std::vector<Monomial> expected{mono(w, "x1_2*x2_3"), mono(w, "x1_2*x3_2"),
                                       mono(w, "x2_1*x3_2")};
        CHECK(ideals_equal(intersect_ideals(ideals), expected));
    }
    SUBCASE("idempotence") {
        std::vector<Monomial> gens{mono(v, "x1*x2"), mono(v, "x2*x3"), mono(v, "x1*x3")};
        std::vector<std::vector<Monomial>> twice{gens, gens};
        CHECK(ideals_equal(intersect_ideals(twice), gens));
    }
    SUBCASE("commutative and associative on samples") {
        std::vector<Monomial> a{mono(v, "x1"), mono(v, "x2^2")};
        std::vector<Monomial> b{mono(v, "x2"), mono(v, "x3")};
        std::vector<Monomial> c{mono(v, "x1*x3")};
        std::vector<std::vector<Monomial>> abc{a, b, c};
        std::vector<std::vector<Monomial>> cba{c, b, a};
        CHECK(ideals_equal(intersect_ideals(abc), intersect_ideals(cba)));
    }
    SUBCASE("empty list is a usage error") {
        std::vector<std::vector<Monomial>> none;
        CHECK_THROWS_AS(intersect_ideals(none), UsageError);
    }
}

TEST_CASE("ideals_equal") {
    VarSet v = standard_variables(2);
    CHECK(ideals_equal({mono(v, "x1"), mono(v, "x1*x2")}, {mono(v, "x1")}));
    CHECK_FALSE(ideals_equal({mono(v, "x1*x2")}, {mono(v, "x1")}));
}

TEST_CASE("relation_in_span") {
    MonomialIdeal ideal = example_ideal();

    SUBCASE("a basis row is in the span") {
        std::vector<TaylorRelation> basis{taylor_relation(ideal, 1, 2),
                                          taylor_relation(ideal, 2, 3)};
        CHECK(relation_in_span(basis[0], basis) == SpanVerdict::InSpan);
    }
    SUBCASE("pair {2,4} against the path tree's rows") {
        std::vector<TaylorRelation> basis{taylor_relation(ideal, 1, 2),
                                          taylor_relation(ideal, 2, 3),
                                          taylor_relation(ideal, 3, 4)};
        CHECK(relation_in_span(taylor_relation(ideal, 2, 4), basis) == SpanVerdict::InSpan);
        CHECK(relation_in_span(taylor_relation(ideal, 1, 3), basis) == SpanVerdict::InSpan);
        CHECK(relation_in_span(taylor_relation(ideal, 1, 4), basis) == SpanVerdict::InSpan);
    }
    SUBCASE("the non-generating tree fails on pair {2,3}") {
        // rows of the spanning tree {1,2},{2,4},{3,4}, which is not a relation tree
        std::vector<TaylorRelation> basis{taylor_relation(ideal, 1, 2),
                                          taylor_relation(ideal, 2, 4),
                                          taylor_relation(ideal, 3, 4)};
        CHECK(relation_in_span(taylor_relation(ideal, 2, 3), basis) == SpanVerdict::NotInSpan);
        CHECK(relation_in_span(taylor_relation(ideal, 3, 4), basis) == SpanVerdict::InSpan);
    }
    SUBCASE("tiny state bound reports indeterminate") {
        std::vector<TaylorRelation> basis{taylor_relation(ideal, 1, 2),
                                          taylor_relation(ideal, 2, 3),
                                          taylor_relation(ideal, 3, 4)};
        CHECK(relation_in_span(taylor_relation(ideal, 1, 4), basis, 1) ==
              SpanVerdict::Indeterminate);
    }
}

TEST_CASE("labeled tree enumeration") {
    CHECK(all_labeled_trees(2).size() == 1);
    CHECK(all_labeled_trees(3).size() == 3);
    CHECK(all_labeled_trees(4).size() == 16);
    CHECK_THROWS_AS(all_labeled_trees(1), UsageError);
    CHECK_THROWS_AS(all_labeled_trees(10), UsageError);

    SUBCASE("trees are pairwise distinct") {
        std::set<std::string> keys;
        for (const LabeledTree& t : all_labeled_trees(5))
            keys.insert(edge_set_key(t.sorted_edges()));
        CHECK(keys.size() == 125);
    }
    SUBCASE("pruefer decode") {
        std::vector<int> seq{2, 3};
        LabeledTree t = tree_from_pruefer(4, seq);
        CHECK(t.sorted_edges() == cm2::testing::gamma1());
    }
}

TEST_SUITE_END();
