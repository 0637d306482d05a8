#include "doctest.h"
#include "dgw/colax_samples.hpp"

#include <random>

using namespace dgw;
using namespace dgw::samples;

namespace {

IndexPtr ptr(IndexCategory c) { return std::make_shared<const IndexCategory>(std::move(c)); }

IndexPtr arrow_1_2() {
    GradedQuiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    return ptr(free_category(q));
}

CategoryPtr cat(DgCategory c) { return std::make_shared<const DgCategory>(std::move(c)); }

}  // namespace

TEST_CASE("index categories") {
    auto z3 = cyclic_group_category(3);
    CHECK(check_index_category(z3).ok);
    CHECK(z3.morphism_count() == 3);
    CHECK(z3.compose(1, 2) == 0);

    GradedQuiver q;
    for (auto v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    auto f = free_category(q);
    CHECK(check_index_category(f).ok);
    CHECK(f.morphism_count() == 6);
    CHECK(f.compose(f.morphism_index("b"), f.morphism_index("a")) == f.morphism_index("b a"));

    for (const auto& s : small_index_shapes()) CHECK_MESSAGE(check_index_category(*s.index).ok, s.name);

    auto bad = z3;
    bad.comp[1][1] = 1;
    CHECK_FALSE(check_index_category(bad).ok);
}

TEST_CASE("strict and diagonal colax functors pass") {
    for (const auto& shape : small_index_shapes())
        for (const auto& alg : all_algebras()) {
            auto x = build_colax(strict_sample(shape.index, alg, 2));
            auto r = check_colax(*x);
            CHECK_MESSAGE(r.ok, (shape.name + " / " + alg.name + ": " + r.message));
            CHECK_FALSE(has_nontrivial_cocomposition(*x));
            CHECK(check_colax(*diagonal(shape.index, cat(alg.a))).ok);
        }
}

TEST_CASE("sign-flipped cocomposition breaks axiom (b)") {
    auto x = build_colax(strict_sample(chain4(), even_dual_numbers(), 1));
    REQUIRE(check_colax(*x).ok);
    auto bad = flip_cocomposition(*x, "2<3", "1<2");
    auto r = check_colax(*bad);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("axiom (b)") != std::string::npos);
}

TEST_CASE("Grothendieck construction of the diagonal on 1 -> 2 is triangular") {
    auto k = cat(ground_field().a);
    auto gr = grothendieck(*diagonal(arrow_1_2(), k));
    REQUIRE(gr.object_count() == 2);
    CHECK(gr.hom(0, 0).size() == 1);
    CHECK(gr.hom(0, 1).size() == 1);
    CHECK(gr.hom(1, 0).size() == 0);
    CHECK(gr.hom(1, 1).size() == 1);
    CHECK(check_dg_category(gr).ok);
}

TEST_CASE("twisted composition over the ground field") {
    // oracle: e_b ∘ e_a = θ(b)θ(a)θ(ba)^{-1} e_{ba}, computed by hand here
    std::mt19937 rng(5);
    auto idx = ptr(cyclic_group_category(3));
    auto s = random_twist(rng, strict_sample(idx, ground_field(), 1));
    auto x = build_colax(s);
    REQUIRE(check_colax(*x).ok);
    auto gr = grothendieck(*x);
    auto val = [&](int a) { return s.twist[a].at(0); };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const int ba = (a + b) % 3;
            SparseVec expect{{ba, val(b) * val(a) / val(ba)}};
            CHECK(gr.compose_basis(0, 0, 0, b, a) == expect);
        }
    // identity is θ(e)^{-1} on the e block
    CHECK(gr.units[0] == SparseVec{{0, Scalar(1) / val(0)}});
    CHECK(check_dg_category(gr).ok);
}

TEST_CASE("randomized colax corpus") {
    std::mt19937 rng(2024);
    int nontrivial = 0;
    for (int n = 0; n < 60; ++n) {
        auto s = random_sample(rng);
        auto x = build_colax(s);
        auto r = check_colax(*x);
        REQUIRE_MESSAGE(r.ok, r.message);
        nontrivial += has_nontrivial_cocomposition(*x);
        auto gr = cat(grothendieck(*x));
        auto g = check_dg_category(*gr);
        CHECK_MESSAGE(g.ok, g.message);
        auto can = canonical_morphism(x, gr);
        CHECK(check_one_morphism(can).ok);
        const auto& I = *s.index;
        for (int i = 0; i < I.object_count(); ++i)
            for (int j = 0; j < I.object_count(); ++j)
                for (int o = 0; o < s.m; ++o)
                    for (int p = 0; p < s.m; ++p) CHECK(precovering_map(can, i, j, o, p).is_identity());
        CHECK(check_I_covering(can).ok);
    }
    CHECK(nontrivial >= 50);
}

TEST_CASE("empty I(i, j) gives the zero map") {
    auto x = build_colax(strict_sample(arrow_1_2(), ground_field(), 1));
    auto gr = cat(grothendieck(*x));
    auto m = precovering_map(canonical_morphism(x, gr), 1, 0, 0, 0);
    CHECK(m.source.size() == 0);
    CHECK(m.target.size() == 0);
    CHECK(m.is_identity());
}

TEST_CASE("Gr on 1-morphisms") {
    std::mt19937 rng(77);
    for (int n = 0; n < 20; ++n) {
        auto s0 = random_sample(rng);
        auto s1 = random_twist(rng, s0);
        auto s2 = random_twist(rng, s0);
        auto x0 = build_colax(s0), x1 = build_colax(s1), x2 = build_colax(s2);
        auto f = twist_morphism(s0, x0, s1, x1, Scalar(2));
        auto g = twist_morphism(s1, x1, s2, x2, Scalar(-3));
        REQUIRE(check_one_morphism(f).ok);
        REQUIRE(check_one_morphism(g).ok);
        auto gf = compose_one_morphisms(g, f);
        CHECK(check_one_morphism(gf).ok);
        auto G0 = cat(grothendieck(*x0)), G1 = cat(grothendieck(*x1)), G2 = cat(grothendieck(*x2));
        auto Gf = grothendieck_on_1(f, G0, G1);
        auto Gg = grothendieck_on_1(g, G1, G2);
        CHECK(check_dg_functor(Gf).ok);
        CHECK(functors_equal(grothendieck_on_1(gf, G0, G2), compose_functors(Gg, Gf)));
        CHECK(functors_equal(grothendieck_on_1(identity_one_morphism(x0), G0, G0), identity_functor(G0)));
    }
}

TEST_CASE("Gr of a diagonal functor acts componentwise") {
    auto idx = ptr(poset_category({"1", "2"}, {{true, true}, {false, true}}));
    auto A = cat(even_dual_numbers().a);
    auto x = build_colax(strict_sample(idx, even_dual_numbers(), 1));
    // E = scaling x by 3, an automorphism of A
    auto alg = even_dual_numbers();
    DgFunctor E{A, A, {0}, [](int, int, int b) { return SparseVec{{b, Scalar(b == 1 ? 3 : 1)}}; }};
    REQUIRE(check_dg_functor(E).ok);
    auto dE = diagonal_on_1(idx, E);
    REQUIRE(check_one_morphism(dE).ok);
    auto G = cat(grothendieck(*dE.source));
    auto GE = grothendieck_on_1(dE, G, G);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
            for (int b = 0; b < G->hom(u, v).size(); ++b) CHECK(GE.map_basis(u, v, b) == E.map_basis(0, 0, b % 2));
}

TEST_CASE("Gr on 2-morphisms") {
    std::mt19937 rng(31);
    auto s0 = random_sample(rng);
    auto s1 = random_twist(rng, s0);
    auto x0 = build_colax(s0), x1 = build_colax(s1);
    auto f = twist_morphism(s0, x0, s1, x1, Scalar(1));
    auto G0 = cat(grothendieck(*x0)), G1 = cat(grothendieck(*x1));
    auto Gf = grothendieck_on_1(f, G0, G1);

    auto one = scalar_two_morphism(f, Scalar(1));
    REQUIRE(check_two_morphism(one).ok);
    auto G1z = grothendieck_on_2(one, Gf, Gf);
    CHECK(check_nat_trans(G1z).ok);
    for (int u = 0; u < G0->object_count(); ++u) CHECK(G1z.components[u] == G1->units[Gf.object_map[u]]);

    auto z2 = scalar_two_morphism(f, Scalar(2)), z5 = scalar_two_morphism(f, Scalar(-5));
    auto lhs = grothendieck_on_2(vertical_compose(z5, z2), Gf, Gf);
    auto a = grothendieck_on_2(z2, Gf, Gf), b = grothendieck_on_2(z5, Gf, Gf);
    for (int u = 0; u < G0->object_count(); ++u) {
        const int v = Gf.object_map[u];
        CHECK(lhs.components[u] == G1->compose(v, v, v, b.components[u], a.components[u]));
    }
}

TEST_CASE("diagonal of a natural transformation") {
    auto idx = ptr(cyclic_group_category(2));
    auto A = cat(acyclic_resolution().a);
    auto id = identity_functor(A);
    DgNatTrans alpha{id, id, 0, {SparseVec{{0, Scalar(1)}, {1, Scalar(4)}}}};
    REQUIRE(check_nat_trans(alpha).ok);
    auto z = diagonal_on_2(idx, alpha);
    REQUIRE(check_two_morphism(z).ok);
    auto G = cat(grothendieck(*z.from.source));
    auto GF = grothendieck_on_1(z.from, G, G);
    auto t = grothendieck_on_2(z, GF, GF);
    CHECK(check_nat_trans(t).ok);
    CHECK(t.components[0] == alpha.components[0]);  // the e block comes first
}

TEST_CASE("precovering map through the counit") {
    auto idx = ptr(poset_category({"1", "2"}, {{true, true}, {false, true}}));
    auto A = cat(odd_dual_numbers().a);
    auto dA = diagonal(idx, A);
    auto G = cat(grothendieck(*dA));
    auto can = canonical_morphism(dA, G);
    auto Q = counit_functor(idx, A, G);
    auto composite = compose_one_morphisms(diagonal_on_1(idx, Q), can);
    REQUIRE(check_one_morphism(composite).ok);
    auto m = precovering_map(composite, 0, 1, 0, 0);
    for (int k = 0; k < m.source.size(); ++k) CHECK(m.images[k] == Q.map_basis(0, 1, k));
}

TEST_CASE("I-coverings") {
    std::mt19937 rng(8);
    auto s0 = random_sample(rng);
    auto s1 = random_twist(rng, s0);
    auto x0 = build_colax(s0), x1 = build_colax(s1);
    auto G0 = cat(grothendieck(*x0)), G1 = cat(grothendieck(*x1));
    auto can = canonical_morphism(x0, G0);
    CHECK(check_I_covering(can).ok);
    // H = Gr of an invertible 1-morphism is an isomorphism
    auto H = grothendieck_on_1(twist_morphism(s0, x0, s1, x1, Scalar(2)), G0, G1);
    auto via_h = compose_one_morphisms(diagonal_on_1(s0.index, H), can);
    via_h.source = x0;
    auto r = check_I_covering(via_h);
    CHECK_MESSAGE(r.ok, r.message);

    // non-dense: the triangular algebra inside a category with an extra object
    auto idx = arrow_1_2();
    auto k = cat(ground_field().a);
    auto dk = diagonal(idx, k);
    auto T = cat(grothendieck(*dk));
    TableCategory big({"1:*", "2:*", "z"});
    big.add_basis(0, 0, "id1", 0);
    big.add_basis(1, 1, "id2", 0);
    big.add_basis(0, 1, "a", 0);
    big.add_basis(2, 2, "idz", 0);
    big.units = {SparseVec{{0, Scalar(1)}}, SparseVec{{0, Scalar(1)}}, SparseVec{{0, Scalar(1)}}};
    for (int x = 0; x < 3; ++x) big.compose[{x, x, x, 0, 0}] = SparseVec{{0, Scalar(1)}};
    big.compose[{0, 1, 1, 0, 0}] = SparseVec{{0, Scalar(1)}};
    big.compose[{0, 0, 1, 0, 0}] = SparseVec{{0, Scalar(1)}};
    auto B = cat(big.build());
    REQUIRE(check_dg_category(*B).ok);
    DgFunctor inc{T, B, {0, 1}, [](int, int, int b) { return unit_vector(b); }};
    REQUIRE(check_dg_functor(inc).ok);
    auto emb = compose_one_morphisms(diagonal_on_1(idx, inc), canonical_morphism(dk, T));
    auto bad = check_I_covering(emb);
    CHECK_FALSE(bad.ok);
    CHECK(bad.message.find("z") != std::string::npos);
}

TEST_CASE("adjunction triangle identities") {
    auto k = cat(ground_field().a);
    auto idx = arrow_1_2();
    auto r = check_adjunction_identities(diagonal(idx, k), k);
    CHECK_MESSAGE(r.ok, r.message);

    auto A = cat(odd_dual_numbers().a);
    auto r2 = check_adjunction_identities(diagonal(idx, A), A);
    CHECK_MESSAGE(r2.ok, r2.message);

    std::mt19937 rng(3);
    auto chain = ptr(poset_category({"1", "2", "3"}, {{true, true, true}, {false, true, true}, {false, false, true}}));
    for (int n = 0; n < 5; ++n) {
        auto algs = all_algebras();
        auto s = strict_sample(chain, algs[rng() % algs.size()], 1 + static_cast<int>(rng() % 2));
        auto r3 = check_adjunction_identities(build_colax(s), cat(chaotic(s.alg.a, 2)));
        CHECK_MESSAGE(r3.ok, r3.message);
    }
}

TEST_CASE("example builders are isomorphic to Gr of the diagonal") {
    for (const auto& alg : {ground_field(), odd_dual_numbers()}) {
        auto A = cat(alg.a);
        std::vector<std::vector<bool>> leq{{true, true}, {false, true}};
        auto AS = cat(build_AS(alg.a, {"1", "2"}, leq));
        CHECK(check_dg_category(*AS).ok);
        auto r = check_iso_to_grothendieck(AS, ptr(poset_category({"1", "2"}, leq)), A);
        CHECK_MESSAGE(r.ok, r.message);

        std::vector<std::vector<int>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        auto AG = cat(build_AG(alg.a, {"e", "g", "g^2"}, z3));
        CHECK(AG->hom(0, 0).size() == 3 * alg.a.hom(0, 0).size());
        auto r2 = check_iso_to_grothendieck(AG, ptr(cyclic_group_category(3)), A);
        CHECK_MESSAGE(r2.ok, r2.message);

        GradedQuiver q;
        for (auto v : {"1", "2", "3"}) q.add_vertex(v);
        q.add_arrow("a", "1", "2");
        q.add_arrow("b", "2", "3");
        auto AQ = cat(build_AQ(alg.a, q));
        int total = 0;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) total += AQ->hom(x, y).size();
        CHECK(total == 6 * alg.a.hom(0, 0).size());
        auto r3 = check_iso_to_grothendieck(AQ, ptr(free_category(q)), A);
        CHECK_MESSAGE(r3.ok, r3.message);
    }
}

TEST_CASE("a wrong explicit map is rejected") {
    // AG for Z/3 against Gr over the idempotent monoid shape with 3 elements fails
    std::vector<std::vector<int>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int>> other{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    auto A = cat(ground_field().a);
    auto AG = cat(build_AG(ground_field().a, {"e", "g", "g^2"}, z3));
    auto r = check_iso_to_grothendieck(AG, ptr(monoid_category({"e", "g", "g^2"}, other)), A);
    CHECK_FALSE(r.ok);
}
