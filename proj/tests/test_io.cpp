#include "doctest.h"
#include "dgw/colax_samples.hpp"
#include "dgw/fixtures.hpp"
#include "dgw/io.hpp"

using namespace dgw;
using io::json;

TEST_CASE("qp round trip is exact") {
    for (const QP& qp : {fixtures::triangles(6), fixtures::hexagon(7), fixtures::line(3)}) {
        const json j = io::qp_to_json(qp);
        const QP back = io::qp_from_json(j);
        CHECK(same_quiver(qp.q(), back.q()));
        CHECK(potentials_equal_cyclic(qp.potential, back.potential));
        CHECK(back.order() == qp.order());
        CHECK(io::qp_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("qp json layout") {
    const json j = io::qp_to_json(fixtures::hexagon(6));
    CHECK(j["truncation"] == 6);
    CHECK(j["quiver"]["vertices"].size() == 6);
    CHECK(j["quiver"]["arrows"][0]["name"] == "a1");
    CHECK(j["quiver"]["arrows"][0]["degree"] == 0);
    REQUIRE(j["potential"]["terms"].size() == 1);
    CHECK(j["potential"]["terms"][0]["coeff"] == "1");
    CHECK(j["potential"]["terms"][0]["cycle"].size() == 6);
}

TEST_CASE("rational coefficients survive") {
    QP qp = fixtures::hexagon(6);
    json j = io::qp_to_json(qp);
    j["potential"]["terms"][0]["coeff"] = "-7/3";
    const QP back = io::qp_from_json(j);
    CHECK(back.potential.terms().begin()->second == Scalar::parse("-7/3"));
    CHECK(io::qp_to_json(back)["potential"]["terms"][0]["coeff"] == "-7/3");
}

TEST_CASE("malformed qp input is rejected") {
    const json good = io::qp_to_json(fixtures::hexagon(6));
    json j = good;
    j["potential"]["terms"][0]["cycle"][0] = "zz";
    CHECK_THROWS_AS(io::qp_from_json(j), io::InputError);
    j = good;
    j["potential"]["terms"][0]["cycle"].erase(0);
    CHECK_THROWS_AS(io::qp_from_json(j), io::InputError);
    j = good;
    j.erase("truncation");
    CHECK_THROWS_AS(io::qp_from_json(j), io::InputError);
    j = good;
    j["quiver"]["arrows"][0]["target"] = "nowhere";
    CHECK_THROWS_AS(io::qp_from_json(j), io::InputError);
    j = good;
    j["potential"]["terms"][0]["coeff"] = "1/0";
    CHECK_THROWS_AS(io::qp_from_json(j), io::InputError);
}

TEST_CASE("dg category round trip") {
    const auto gp = build_ginzburg(fixtures::line(3));
    const DgCategory c = truncated_ginzburg_as_dgcat(gp);
    const json j = io::dgcat_to_json(c);
    const DgCategory back = io::dgcat_from_json(j);
    CHECK(check_dg_category(back).ok);
    CHECK(io::dgcat_to_json(back).dump() == j.dump());
    for (int x = 0; x < c.object_count(); ++x)
        for (int y = 0; y < c.object_count(); ++y) CHECK(back.hom(x, y).degrees == c.hom(x, y).degrees);
}

TEST_CASE("colax round trip") {
    std::mt19937 rng(7);
    for (int k = 0; k < 6; ++k) {
        auto x = samples::build_colax(samples::random_sample(rng));
        const json j = io::colax_to_json(*x);
        auto back = io::colax_from_json(j);
        CHECK(check_colax(*back).ok);
        CHECK(io::colax_to_json(*back).dump() == j.dump());
        const DgCategory g0 = grothendieck(*x), g1 = grothendieck(*back);
        REQUIRE(g0.object_count() == g1.object_count());
        for (int u = 0; u < g0.object_count(); ++u)
            for (int v = 0; v < g0.object_count(); ++v) CHECK(g0.hom(u, v).names == g1.hom(u, v).names);
    }
}

TEST_CASE("broken colax json is still readable and fails the check") {
    std::mt19937 rng(11);
    samples::TwistedSample s;
    samples::ColaxPtr x;
    do {
        s = samples::random_sample(rng);
        x = samples::build_colax(s);
    } while (x->cocomposition.empty() || !samples::has_nontrivial_cocomposition(*x));
    json j = io::colax_to_json(*x);
    auto& co = j["cocomposition"];
    auto it = co.begin();
    for (auto& [obj, vec] : it.value()["components"].items()) {
        (void)obj;
        for (auto& t : vec) t["coeff"] = io::scalar_str(-io::scalar_from(t["coeff"]));
    }
    auto back = io::colax_from_json(j);
    CHECK_FALSE(check_colax(*back).ok);
}

TEST_CASE("action round trip") {
    const QP qp = fixtures::hexagon(6);
    const GroupAction g = index_shift_action(qp.q(), 3, -2, 6);
    const json j = io::action_to_json(g, qp.q());
    const GroupAction back = io::action_from_json(j, qp.q());
    CHECK(back.on_vertices == g.on_vertices);
    CHECK(back.on_arrows == g.on_arrows);
    CHECK(check_action(back, qp).ok);
    CHECK(io::action_to_json(back, qp.q()).dump() == j.dump());

    json bad = j;
    bad["arrow_map"][g.group->morphisms[1].name]["a1"] = "a9";
    CHECK_THROWS_AS(io::action_from_json(bad, qp.q()), io::InputError);
}

TEST_CASE("dimension table json") {
    const QP qp = fixtures::line(2);
    DimTable t = jacobian_dimensions(qp);
    const json j = io::dim_table_to_json(qp.q(), t);
    CHECK(j["total"] == 3);
    CHECK(j["by_pair"]["1->2"] == 1);
}
