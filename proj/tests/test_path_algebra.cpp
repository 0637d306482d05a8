#include "doctest.h"
#include "dgw/fixtures.hpp"
#include "dgw/potential.hpp"
#include "oracle.hpp"

#include <random>

using namespace dgw;

namespace {

QuiverPtr chain3() {
    auto q = std::make_shared<GradedQuiver>();
    q->add_vertex("1");
    q->add_vertex("2");
    q->add_vertex("3");
    q->add_arrow("alpha", "1", "2");
    q->add_arrow("beta", "2", "3");
    q->add_arrow("gamma", "3", "1");
    return q;
}

Element random_element(std::mt19937& rng, const AlgebraPtr& alg, int max_len) {
    Element e(alg);
    const auto& q = alg->quiver();
    for (int v = 0; v < q.vertex_count(); ++v)
        for (const auto& p : alg->paths_from(v))
            if (p.length() <= max_len && rng() % 3 == 0)
                e.add_term(p, Scalar(static_cast<long>(rng() % 7) - 3));
    return e;
}

}  // namespace

TEST_CASE("quiver validation") {
    GradedQuiver q;
    q.add_vertex("x");
    CHECK_THROWS(q.add_vertex("x"));
    CHECK_THROWS(q.add_arrow("a", "x", "y"));
    q.add_arrow("a", "x", "x", -1);
    CHECK_THROWS(q.add_arrow("a", "x", "x"));
    CHECK(q.arrow(0).degree == -1);
}

TEST_CASE("path composition") {
    auto q = chain3();
    Path a = Path::of_arrow(0), b = Path::of_arrow(1), g = Path::of_arrow(2);
    auto ba = compose_paths(*q, b, a);
    REQUIRE(ba);
    CHECK(ba->arrows == std::vector<int>{1, 0});
    CHECK(ba->source(*q) == 0);
    CHECK(ba->target(*q) == 2);
    CHECK_FALSE(compose_paths(*q, a, b));
    auto gba = compose_paths(*q, g, *ba);
    REQUIRE(gba);
    CHECK(gba->length() == 3);
    CHECK(gba->source(*q) == gba->target(*q));
    CHECK(*compose_paths(*q, Path::trivial(1), a) == a);
    CHECK(*compose_paths(*q, a, Path::trivial(0)) == a);
}

TEST_CASE("triangle cycle in the square-of-triangles quiver") {
    auto qp = fixtures::triangles();
    const auto& q = qp.q();
    Path p = Path::of_arrows({q.arrow_index("gamma1"), q.arrow_index("beta1"), q.arrow_index("alpha1")});
    CHECK(p.well_formed(q));
    CHECK(p.source(q) == q.vertex_index("b1"));
    CHECK(p.target(q) == q.vertex_index("b1"));
}

TEST_CASE("multiplication and truncation") {
    auto q = chain3();
    auto alg = make_algebra(q, 8);
    auto e0 = Element::vertex(alg, 0), e1 = Element::vertex(alg, 1);
    CHECK(e0 * e0 == e0);
    CHECK((e0 * e1).is_zero());
    auto sum = Element::arrow(alg, "alpha") + Element::arrow(alg, "beta");
    CHECK((sum * Element::zero(alg)).is_zero());
    auto short_alg = make_algebra(q, 1);
    CHECK((Element::arrow(short_alg, "beta") * Element::arrow(short_alg, "alpha")).is_zero());
    CHECK((Element::arrow(alg, "beta") * Element::arrow(alg, "alpha")) ==
          Element::word(alg, {"beta", "alpha"}));
}

TEST_CASE("associativity and unit on random triples") {
    auto alg = make_algebra(chain3(), 5);
    std::mt19937 rng(7);
    auto one = Element::unit(alg);
    for (int t = 0; t < 50; ++t) {
        auto a = random_element(rng, alg, 3), b = random_element(rng, alg, 3), c = random_element(rng, alg, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(one * a == a);
        CHECK(a * one == a);
    }
}

TEST_CASE("path enumeration matches counting by length") {
    // the 3-cycle has exactly one path of each length from each vertex
    auto alg = make_algebra(chain3(), 6);
    CHECK(alg->paths_from(0).size() == 7);
    CHECK(alg->paths(0, 0).size() == 3);  // lengths 0, 3, 6
    // weights: alpha counts 2
    PathAlgebra w(chain3(), 4, {2, 1, 1});
    CHECK(w.paths(0, 0).size() == 2);  // e and gamma beta alpha (weight 4)
}

TEST_CASE("cyclic normal form") {
    auto q = chain3();
    const int a = 0, b = 1, g = 2;
    auto nf = cyclic_normal_form(*q, {g, b, a});
    CHECK(nf == Word{a, g, b});
    CHECK(cyclic_normal_form(*q, {b, a, g}) == nf);
    CHECK_THROWS(cyclic_normal_form(*q, {b, a}));
    CHECK_THROWS(cyclic_normal_form(*q, {}));

    auto qp = fixtures::triangles();
    const auto& tq = qp.q();
    std::vector<std::string> names{"delta4", "delta3", "delta2", "delta1"};
    Word w;
    for (auto& n : names) w.push_back(tq.arrow_index(n));
    auto got = cyclic_normal_form(tq, w);
    std::vector<std::string> got_names;
    for (int x : got) got_names.push_back(tq.arrow(x).name);
    CHECK(got_names == oracle::least_rotation(names));
}

TEST_CASE("cyclic derivatives") {
    auto q = chain3();
    Potential w(make_algebra(q, 8));
    w.add_named_word({"gamma", "beta", "alpha"}, Scalar(1));
    auto alg = w.algebra();
    CHECK(cyclic_derivative(w, q->arrow_index("alpha")) == Element::word(alg, {"gamma", "beta"}));
    CHECK(cyclic_derivative(w, q->arrow_index("beta")) == Element::word(alg, {"alpha", "gamma"}));

    auto hex = fixtures::hexagon();
    const auto& hq = hex.q();
    CHECK(cyclic_derivative(hex.potential, hq.arrow_index("a1")) ==
          Element::word(hex.potential.algebra(), {"a6", "a5", "a4", "a3", "a2"}));

    auto line = fixtures::line();
    CHECK(cyclic_derivative(line.potential, 0).is_zero());
}

TEST_CASE("cyclic derivative counts every occurrence") {
    auto q = std::make_shared<GradedQuiver>();
    q->add_vertex("v");
    q->add_arrow("x", "v", "v");
    Potential w(make_algebra(q, 8));
    w.add_named_word({"x", "x", "x"}, Scalar(1));
    Element expect(w.algebra());
    expect.add_term(Path::of_arrows({0, 0}), Scalar(3));
    CHECK(cyclic_derivative(w, 0) == expect);
}

TEST_CASE("derivative along a two-arrow word") {
    auto hex = fixtures::hexagon();
    const auto& q = hex.q();
    auto d = path_derivative(hex.potential, {q.arrow_index("a1"), q.arrow_index("a6")});
    CHECK(d == Element::word(hex.potential.algebra(), {"a5", "a4", "a3", "a2"}));
    // wrap-around pair: a6 is written last, a5 first
    auto d2 = path_derivative(hex.potential, {q.arrow_index("a6"), q.arrow_index("a5")});
    CHECK(d2 == Element::word(hex.potential.algebra(), {"a4", "a3", "a2", "a1"}));
}

TEST_CASE("derivatives are linear and rotation invariant") {
    auto qp = fixtures::triangles();
    const auto& q = qp.q();
    Potential w1(qp.potential.algebra()), w2(qp.potential.algebra());
    w1.add_named_word({"gamma2", "beta2", "alpha2"}, Scalar(2));
    w2.add_named_word({"alpha2", "gamma2", "beta2"}, Scalar(2));
    CHECK(potentials_equal_cyclic(w1, w2));
    for (int a = 0; a < q.arrow_count(); ++a) {
        CHECK(cyclic_derivative(w1, a) == cyclic_derivative(w2, a));
        Potential s = w1;
        s += qp.potential;
        CHECK(cyclic_derivative(s, a) == cyclic_derivative(w1, a) + cyclic_derivative(qp.potential, a));
    }
}

TEST_CASE("potential equality up to rotation") {
    auto qp = fixtures::triangles();
    Potential a(qp.potential.algebra()), b(qp.potential.algebra());
    a.add_named_word({"delta4", "delta3", "delta2", "delta1"}, Scalar(1));
    a.add_named_word({"gamma1", "beta1", "alpha1"}, Scalar(2));
    b.add_named_word({"delta1", "delta4", "delta3", "delta2"}, Scalar(1));
    b.add_named_word({"beta1", "alpha1", "gamma1"}, Scalar(3));
    CHECK_FALSE(potentials_equal_cyclic(a, b));
    b.add_named_word({"alpha1", "gamma1", "beta1"}, Scalar(-1));
    CHECK(potentials_equal_cyclic(a, b));
}

TEST_CASE("substitution") {
    auto q = std::make_shared<GradedQuiver>();
    for (auto v : {"a", "b", "c"}) q->add_vertex(v);
    q->add_arrow("gamma", "a", "b");
    q->add_arrow("x", "b", "a");  // stands for [beta alpha]
    q->add_arrow("astar", "c", "b");
    q->add_arrow("bstar", "a", "c");
    auto alg = make_algebra(q, 8);
    auto e = Element::word(alg, {"gamma", "x"});
    CHECK(apply_substitution(e, {}) == e);
    std::map<int, Element> images{
        {q->arrow_index("gamma"), Element::arrow(alg, "gamma") - Element::word(alg, {"astar", "bstar"})}};
    CHECK(apply_substitution(e, images) == e - Element::word(alg, {"astar", "bstar", "x"}));
    CHECK(apply_substitution(Element::zero(alg), images).is_zero());
    std::map<int, Element> bad{{q->arrow_index("gamma"), Element::arrow(alg, "x")}};
    CHECK_THROWS_AS(apply_substitution(e, bad), std::invalid_argument);
}

TEST_CASE("substitution is multiplicative and fixes vertices") {
    auto alg = make_algebra(chain3(), 7);
    const auto& q = alg->quiver();
    std::map<int, Element> phi{
        {0, Element::arrow(alg, 0) + Element::word(alg, {"alpha", "gamma", "beta", "alpha"}, Scalar(2))}};
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto a = random_element(rng, alg, 3), b = random_element(rng, alg, 3);
        CHECK(apply_substitution(a * b, phi) == apply_substitution(a, phi) * apply_substitution(b, phi));
    }
    for (int v = 0; v < q.vertex_count(); ++v)
        CHECK(apply_substitution(Element::vertex(alg, v), phi) == Element::vertex(alg, v));
}
