#include "doctest.h"
#include "dgw/fixtures.hpp"
#include "dgw/qp.hpp"

#include <array>
#include <map>

using namespace dgw;

namespace {

QuiverPtr quiver_of(const std::vector<std::string>& vertices,
                    const std::vector<std::array<std::string, 3>>& arrows) {
    auto q = std::make_shared<GradedQuiver>();
    for (const auto& v : vertices) q->add_vertex(v);
    for (const auto& a : arrows) q->add_arrow(a[0], a[1], a[2]);
    return q;
}

std::map<std::pair<std::string, std::string>, int> pair_counts(const GradedQuiver& q) {
    std::map<std::pair<std::string, std::string>, int> out;
    for (const auto& a : q.arrows()) ++out[{q.vertex(a.source), q.vertex(a.target)}];
    return out;
}

Potential potential_of(const QP& qp, const std::vector<std::pair<std::vector<std::string>, int>>& words) {
    Potential w(qp.potential.algebra());
    for (const auto& [names, c] : words) w.add_named_word(names, Scalar(c));
    return w;
}

}  // namespace

TEST_CASE("mutability conditions") {
    CHECK(check_mutable(fixtures::hexagon(), 0).ok);
    auto loop = make_qp(quiver_of({"i"}, {{"x", "i", "i"}}), 8);
    auto r = check_mutable(loop, 0);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == 1);
    auto two = make_qp(quiver_of({"i", "j"}, {{"x", "i", "j"}, {"y", "j", "i"}}), 8);
    CHECK(check_mutable(two, 0).condition == 2);
    CHECK_THROWS_AS(premutate(two, 0), MutationError);
}

TEST_CASE("premutation at c1 of the triangles example") {
    auto qp = fixtures::triangles();
    auto pm = premutate(qp, qp.q().vertex_index("c1"));
    const auto& q = pm.q();
    auto br = q.find_arrow("[beta1,alpha1]");
    REQUIRE(br);
    CHECK(q.vertex(q.arrow(*br).source) == "b1");
    CHECK(q.vertex(q.arrow(*br).target) == "a1");
    CHECK(q.vertex(q.arrow(q.arrow_index("alpha1*")).source) == "c1");
    CHECK(q.vertex(q.arrow(q.arrow_index("beta1*")).target) == "c1");
    CHECK(pm.potential.coeff({q.arrow_index("gamma1"), *br}) == Scalar(1));
    CHECK(pm.potential.coeff({*br, q.arrow_index("alpha1*"), q.arrow_index("beta1*")}) == Scalar(1));
    CHECK(pm.potential.terms().size() == 6);
}

TEST_CASE("premutation at an isolated vertex changes nothing") {
    auto qp = make_qp(quiver_of({"1", "2", "3"}, {{"a", "1", "2"}}), 8);
    auto pm = premutate(qp, 2);
    CHECK(same_quiver(pm.q(), qp.q()));
    CHECK(pm.potential.is_zero());
}

TEST_CASE("a lone 2-cycle splits off completely") {
    auto qp = make_qp(quiver_of({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), 8);
    qp.potential.add_named_word({"a", "b"}, Scalar(1));
    auto s = split_reduce(qp);
    CHECK(s.reduced.q().arrow_count() == 0);
    CHECK(s.reduced.potential.is_zero());
    REQUIRE(s.trivial_pairs.size() == 1);
    CHECK(s.applied.empty());
}

TEST_CASE("reduced input is left alone") {
    auto hex = fixtures::hexagon();
    auto s = split_reduce(hex);
    CHECK(s.trivial_pairs.empty());
    CHECK(same_quiver(s.reduced.q(), hex.q()));
    CHECK(potentials_equal_cyclic(s.reduced.potential, hex.potential));
}

TEST_CASE("right-equivalence carries the input to trivial plus reduced part") {
    auto qp = fixtures::triangles();
    auto pm = premutate(qp, qp.q().vertex_index("c1"));
    auto s = split_reduce(pm);
    auto moved = apply_substitution(pm.potential, s.applied);
    Potential expect(pm.potential.algebra());
    for (const auto& t : s.trivial_pairs) expect.add_named_word({t.first, t.second}, t.coeff);
    for (const auto& [names, c] : s.reduced.potential.named_terms()) expect.add_named_word(names, c);
    CHECK(potentials_equal_cyclic(moved, expect));
    for (const auto& [w, c] : s.reduced.potential.terms()) CHECK(w.size() >= 3);
}

TEST_CASE("reduction handles words meeting the 2-cycle twice") {
    auto q = quiver_of({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}, {"c", "1", "2"}, {"d", "2", "1"}});
    auto qp = make_qp(q, 10);
    qp.potential.add_named_word({"a", "b"}, Scalar(1));
    qp.potential.add_named_word({"a", "d", "c", "b"}, Scalar(1));
    qp.potential.add_named_word({"a", "d", "a", "d"}, Scalar(1));
    auto s = split_reduce(qp);
    CHECK(s.trivial_pairs.size() == 1);
    for (const auto& [w, c] : s.reduced.potential.terms()) CHECK(w.size() >= 3);
    auto moved = apply_substitution(qp.potential, s.applied);
    Potential expect(qp.potential.algebra());
    expect.add_named_word({"a", "b"}, Scalar(1));
    for (const auto& [names, c] : s.reduced.potential.named_terms()) expect.add_named_word(names, c);
    CHECK(potentials_equal_cyclic(moved, expect));
}

TEST_CASE("triangles example mutated at c1 then c3") {
    auto qp = fixtures::triangles();
    auto out = mutate_sequence(qp, {"c1", "c3"});
    auto expect_q = quiver_of(
        {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4"},
        {{"alpha2", "b2", "c2"}, {"beta2", "c2", "a2"}, {"gamma2", "a2", "b2"},
         {"alpha4", "b4", "c4"}, {"beta4", "c4", "a4"}, {"gamma4", "a4", "b4"},
         {"delta1", "a1", "a2"}, {"delta2", "a2", "a3"}, {"delta3", "a3", "a4"}, {"delta4", "a4", "a1"},
         {"alpha1*", "c1", "b1"}, {"beta1*", "a1", "c1"}, {"alpha3*", "c3", "b3"}, {"beta3*", "a3", "c3"}});
    CHECK(same_quiver(out.q(), *expect_q));
    auto w = potential_of(out, {{{"delta4", "delta3", "delta2", "delta1"}, 1},
                                {{"gamma2", "beta2", "alpha2"}, 1},
                                {{"gamma4", "beta4", "alpha4"}, 1}});
    CHECK(potentials_equal_cyclic(out.potential, w));
}

TEST_CASE("hexagon mutated at 1, 3, 5") {
    auto hex = fixtures::hexagon();
    auto out = mutate_sequence(hex, {"1", "3", "5"});
    auto expect_q = quiver_of({"1", "2", "3", "4", "5", "6"},
                              {{"a1*", "2", "1"}, {"a2*", "3", "2"}, {"a3*", "4", "3"},
                               {"a4*", "5", "4"}, {"a5*", "6", "5"}, {"a6*", "1", "6"},
                               {"[a1,a6]", "6", "2"}, {"[a3,a2]", "2", "4"}, {"[a5,a4]", "4", "6"}});
    CHECK(same_quiver(out.q(), *expect_q));
    CHECK(out.q().arrow_count() == 9);
    auto w = potential_of(out, {{{"[a1,a6]", "a6*", "a1*"}, 1},
                                {{"[a3,a2]", "a2*", "a3*"}, 1},
                                {{"[a5,a4]", "a4*", "a5*"}, 1},
                                {{"[a5,a4]", "[a3,a2]", "[a1,a6]"}, 1}});
    CHECK(potentials_equal_cyclic(out.potential, w));
}

TEST_CASE("mutating twice at a vertex restores the quiver") {
    auto hex = fixtures::hexagon();
    auto twice = mutate_sequence(hex, {"1", "1"});
    CHECK(pair_counts(twice.q()) == pair_counts(hex.q()));
    auto tri = fixtures::triangles();
    auto back = mutate_sequence(tri, {"c2", "c2"});
    CHECK(pair_counts(back.q()) == pair_counts(tri.q()));
}

TEST_CASE("mutation sequences") {
    auto hex = fixtures::hexagon();
    auto same = mutate_sequence(hex, {});
    CHECK(same_quiver(same.q(), hex.q()));
    CHECK_THROWS_AS(mutate_sequence(hex, {"1", "nope"}), MutationError);
    auto m1 = mutate(hex, 0);
    CHECK(check_mutable(m1, m1.q().vertex_index("2")).ok);
}
