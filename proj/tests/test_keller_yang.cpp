#include "doctest.h"
#include "dgw/fixtures.hpp"
#include "dgw/keller_yang.hpp"

using namespace dgw;

namespace {

using Matrix = std::vector<SparseVec>;  // columns

SparseVec times(const Matrix& a, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v) add_scaled(out, c, a[k]);
    return out;
}

Matrix product(const Matrix& a, const Matrix& b) {
    Matrix out;
    for (const auto& col : b) out.push_back(times(a, col));
    return out;
}

Matrix combine(const Matrix& a, const Matrix& b, const Scalar& c) {
    Matrix out = a;
    for (std::size_t k = 0; k < b.size(); ++k) add_scaled(out[k], c, b[k]);
    return out;
}

bool is_zero(const Matrix& a) {
    for (const auto& col : a)
        if (!col.empty()) return false;
    return true;
}

// independent evaluation of f on an element of Γ', by matrix products
Matrix evaluate(const TruncatedModule& t, const ModuleBasis& b, const std::vector<Matrix>& m, const Element& e) {
    Matrix out(b.size());
    for (const auto& [p, c] : e.terms()) {
        Matrix term;
        if (p.is_trivial()) {
            term = map_matrix(t, b, block_identity(t, p.vertex));
        } else {
            term = m[p.arrows.back()];
            for (std::size_t k = p.arrows.size() - 1; k-- > 0;) term = product(m[p.arrows[k]], term);
        }
        out = combine(out, term, c);
    }
    return out;
}

TruncatedModule hexagon_T(int L) {
    auto hex = fixtures::hexagon(L);
    return build_T(hex, hex.q().vertex_index("1"), L);
}

}  // namespace

TEST_CASE("T for the hexagon at vertex 1") {
    auto t = hexagon_T(6);
    auto block = t.block_generators(0);
    REQUIRE(block.size() == 2);
    CHECK(t.generators[block[0]].name == "s_1");
    CHECK(t.generators[block[0]].degree == -1);
    CHECK(t.generators[block[1]].name == "e_2:a1");
    CHECK(t.generators[block[1]].degree == 0);
    CHECK(t.generators[block[1]].vertex == t.quiver().vertex_index("2"));
    CHECK(module_str(t, t.d_generator[block[0]]) == "e_2:a1|a1");
    for (int j = 1; j < 6; ++j) {
        auto g = t.block_generators(j);
        REQUIRE(g.size() == 1);
        CHECK(t.generators[g[0]].name == "e_" + t.quiver().vertex(j));
        CHECK(t.d_generator[g[0]].empty());
    }
}

TEST_CASE("d squared vanishes and d is a derivation for the right action") {
    for (int L : {4, 6}) {
        auto t = hexagon_T(L);
        auto b = module_basis(t);
        auto D = differential_matrix(t, b);
        CHECK(is_zero(product(D, D)));
        for (int k = 0; k < b.size(); ++k)
            for (const auto& [e, c] : D[k]) CHECK(b.degrees[e] == b.degrees[k] + 1);
        // d(m x) = d(m) x + (-1)^{|m|} m d(x) for every arrow x of Γ
        const auto& q = t.quiver();
        std::vector<Matrix> act;
        for (int x = 0; x < q.arrow_count(); ++x) act.push_back(action_matrix(t, b, x));
        for (int x = 0; x < q.arrow_count(); ++x) {
            const auto& A = act[x];
            Matrix rhs = product(A, D);
            const Element dx = differential(t.gamma, Path::of_arrow(x));
            for (int k = 0; k < b.size(); ++k) {
                SparseVec extra;
                for (const auto& [p, c] : dx.terms()) {
                    SparseVec v = unit_vector(k);
                    for (int a : p.arrows) v = times(act[a], v);
                    add_scaled(extra, b.degrees[k] % 2 == 0 ? c : -c, v);
                }
                add_scaled(rhs[k], Scalar(1), extra);
            }
            CHECK(product(D, A) == rhs);
        }
    }
}

TEST_CASE("generator map formulas") {
    auto t = hexagon_T(6);
    auto f = build_generator_map(t, 6);
    const auto& e2 = t.generator_index("e_2");
    // f_{a1*}: T_2 = P_2 -> T_1 is the embedding of the copy of P_2
    CHECK(module_str(t, f.at("a1*").images[e2]) == "e_2:a1|e_2");
    CHECK(f.at("a1*").degree == 0);
    CHECK(f.at("~a1*").degree == -1);
    CHECK(module_str(t, f.at("~a1*").images[t.generator_index("s_1")]) == "-1*e_2|a1 t_1");
    CHECK(module_str(t, f.at("~a1*").images[t.generator_index("e_2:a1")]) == "-1*e_2|a1 ~a1");
    CHECK(module_str(t, f.at("~a6*").images[t.generator_index("e_6")]) == "s_1|a6");
    CHECK(module_str(t, f.at("a6*").images[t.generator_index("s_1")]) == "-1*e_6|~a6");
    CHECK(module_str(t, f.at("a6*").images[t.generator_index("e_2:a1")]) == "-1*e_6|a5 a4 a3 a2");
    CHECK(module_str(t, f.at("[a1,a6]").images[t.generator_index("e_6")]) == "e_2|a1 a6");
    for (const auto& img : f.at("~[a1,a6]").images) CHECK(img.empty());
    CHECK(module_str(t, f.at("t_2").images[e2]) == "e_2|t_2");
    CHECK(module_str(t, f.at("a3").images[t.generator_index("e_3")]) == "e_4|a3");
    CHECK(module_str(t, f.at("~a3").images[t.generator_index("e_4")]) == "e_3|~a3");
    CHECK(module_str(t, f.at("t_1").images[t.generator_index("s_1")]) == "-1*s_1|t_1");
    CHECK(module_str(t, f.at("t_1").images[t.generator_index("e_2:a1")]) == "-1*s_1|~a1");

    // f(e_j) are orthogonal idempotents summing to the identity
    ModuleMap sum = zero_map(t, 0);
    for (int j = 0; j < 6; ++j) {
        auto ej = block_identity(t, j);
        CHECK(maps_equal(compose(t, ej, ej), ej));
        for (int k = 0; k < 6; ++k)
            if (k != j) CHECK(maps_equal(compose(t, block_identity(t, k), ej), zero_map(t, 0)));
        sum = add_maps(sum, ej);
    }
    CHECK(maps_equal(sum, identity_map(t)));
}

TEST_CASE("the generator map extends to a dg algebra map: hexagon at 1, L = 6") {
    auto t = hexagon_T(6);
    auto f = build_generator_map(t, 6);
    auto r = check_dg_hom(t, f);
    CHECK_MESSAGE(r.ok, r.str());
    CHECK(r.max_word_length == 6);
    CHECK(r.margin == 6 - 12);
}

TEST_CASE("matrix oracle for the dg algebra map") {
    auto t = hexagon_T(6);
    auto f = build_generator_map(t, 6);
    auto b = module_basis(t);
    auto D = differential_matrix(t, b);
    const auto& tp = *f.gamma_prime.tilde;
    std::vector<Matrix> m;
    for (int mu = 0; mu < tp.arrow_count(); ++mu) m.push_back(map_matrix(t, b, f.on_arrow[mu]));
    std::vector<Matrix> act;
    for (int x = 0; x < t.quiver().arrow_count(); ++x) act.push_back(action_matrix(t, b, x));
    for (int mu = 0; mu < tp.arrow_count(); ++mu) {
        const int deg = tp.arrow(mu).degree;
        // Γ-linear: commutes with the right action
        for (const auto& A : act) CHECK(product(m[mu], A) == product(A, m[mu]));
        // homogeneous of the generator's degree
        for (int k = 0; k < b.size(); ++k)
            for (const auto& [e, c] : m[mu][k]) CHECK(b.degrees[e] == b.degrees[k] + deg);
        Matrix lhs = combine(product(D, m[mu]), product(m[mu], D), deg % 2 == 0 ? Scalar(-1) : Scalar(1));
        Matrix rhs = evaluate(t, b, m, differential(f.gamma_prime, Path::of_arrow(mu)));
        CHECK_MESSAGE(lhs == rhs, tp.arrow(mu).name);
    }
}

TEST_CASE("negative controls name the perturbed generator") {
    auto t = hexagon_T(6);
    auto base = build_generator_map(t, 6);

    auto f1 = base;
    f1.at("t_1") = scaled(f1.at("t_1"), Scalar(-1));
    auto r1 = check_dg_hom(t, f1);
    CHECK_FALSE(r1.ok);
    REQUIRE(r1.failures.size() == 1);
    CHECK(r1.failures[0].generator == "t_1");
    CHECK(r1.failures[0].degree == -2);

    // only the t_1 term of f_{~a1*} flips sign
    auto f2 = base;
    auto& img = f2.at("~a1*").images[t.generator_index("s_1")];
    for (auto& [k, c] : img) c = -c;
    auto r2 = check_dg_hom(t, f2);
    CHECK_FALSE(r2.ok);
    CHECK(r2.failed_at("~a1*"));

    auto f3 = base;
    f3.at("~a6*") = f3.at("a3");
    auto r3 = check_dg_hom(t, f3);
    CHECK_FALSE(r3.ok);
    REQUIRE(!r3.failures.empty());
    CHECK(r3.failures[0].generator == "~a6*");
    CHECK(r3.failures[0].reason.find("degree") != std::string::npos);
    // the loops whose differential passes through ~a6* fail too, never on degree
    for (std::size_t k = 1; k < r3.failures.size(); ++k) {
        CHECK(r3.failures[k].generator.rfind("t_", 0) == 0);
        CHECK(r3.failures[k].reason.find("degree") == std::string::npos);
    }
}

TEST_CASE("other mutations") {
    auto tri = fixtures::triangles(6);
    for (const char* v : {"c1", "a1", "b2"}) {
        auto t = build_T(tri, tri.q().vertex_index(v), 6);
        auto r = check_dg_hom(t, build_generator_map(t, 6));
        CHECK_MESSAGE(r.ok, (std::string(v) + ": " + r.str()));
    }
    auto hex = fixtures::hexagon(6);
    auto t = build_T(hex, std::vector<int>{0, 2, 4}, 6);
    auto f = build_generator_map(t, 6);
    CHECK(check_dg_hom(t, f).ok);
    CHECK(same_quiver(f.mutated_qp.q(), mutate_sequence(hex, {"1", "3", "5"}).q()));
    CHECK_THROWS_AS(build_T(hex, std::vector<int>{0, 1}, 6), std::invalid_argument);
}

TEST_CASE("weights on the premutated quiver") {
    auto hex = fixtures::hexagon(6);
    WeightGrading w{std::vector<int>(6, 1), 6};
    auto mu = simultaneous_premutation(hex, {0, 2, 4});
    auto pw = premutation_weights(hex, {0, 2, 4}, w);
    const auto& q = mu.q();
    CHECK(pw.arrow[q.arrow_index("a1*")] == 0);
    CHECK(pw.arrow[q.arrow_index("a6*")] == 4);
    CHECK(pw.arrow[q.arrow_index("[a1,a6]")] == 2);
    auto g = build_ginzburg(mu, 6, pw);
    CHECK(g.algebra->arrow_weight(g.bar(q.arrow_index("a1*"))) == 6);
    CHECK(g.algebra->arrow_weight(g.loop(0)) == 6);
}

TEST_CASE("F' data of the hexagon under Z/3") {
    auto hex = fixtures::hexagon(6);
    WeightGrading w{std::vector<int>(6, 1), 6};
    auto d = build_F_prime_data(hex, {"1", "3", "5"}, w, 6, IndexShift{3, -2, 6});
    CHECK(d.t.generators[d.t.generator_index("s_1")].weight == 1);
    auto r = check_F_prime(d);
    CHECK_MESSAGE(r.dg_hom.ok, r.dg_hom.message);
    CHECK_MESSAGE(r.target_category.ok, r.target_category.message);
    CHECK_MESSAGE(r.one_morphism.ok, r.one_morphism.message);
    CHECK_MESSAGE(r.quasi_equivalence.ok, r.quasi_equivalence.message);
    CHECK_MESSAGE(r.two_quasi_iso.ok, r.two_quasi_iso.message);

    // image of a1*, where g: i -> i - 2
    const auto& src = *d.source;
    const int x2 = src.object_index("2"), x1 = src.object_index("1");
    int a1 = -1;
    for (int k = 0; k < src.hom(x2, x1).size(); ++k)
        if (src.hom(x2, x1).names[k] == "a1*") a1 = k;
    REQUIRE(a1 >= 0);
    auto img = d.functor.map_basis(x2, x1, a1);
    REQUIRE(img.size() == 1);
    const auto& tgt = *d.target;
    CHECK(tgt.hom(tgt.object_index("T2"), tgt.object_index("T1")).names[img.begin()->first] == "e_2>e_2:a1|e_2");

    // a broken generator map is no longer a dg functor
    auto bad = d;
    bad.f.at("a1*") = scaled(bad.f.at("a1*"), Scalar(0));
    bad.functor = generator_functor(bad.t, bad.f, bad.source, bad.target);
    CHECK_FALSE(check_quasi_equivalence(bad.functor).ok);
}
