#include "dgw/colax_samples.hpp"

#include <stdexcept>

namespace dgw::samples {

namespace {

SparseVec e(int i, long c = 1) { return SparseVec{{i, Scalar(c)}}; }

// unit 1 at index 0; products of two non-unit elements vanish
DgCategory square_zero(const std::vector<std::pair<std::string, int>>& basis, const std::map<int, SparseVec>& d) {
    TableCategory t({"*"});
    for (const auto& [n, deg] : basis) t.add_basis(0, 0, n, deg);
    const int n = static_cast<int>(basis.size());
    for (int b = 0; b < n; ++b) {
        t.compose[{0, 0, 0, 0, b}] = e(b);
        t.compose[{0, 0, 0, b, 0}] = e(b);
    }
    for (const auto& [f, v] : d) t.d[{0, 0, f}] = v;
    t.units[0] = e(0);
    return t.build();
}

}  // namespace

SmallAlgebra ground_field() { return {"k", square_zero({{"1", 0}}, {}), {0}, -1}; }

SmallAlgebra odd_dual_numbers() { return {"k[e]/e^2 (|e|=-1)", square_zero({{"1", 0}, {"e", -1}}, {}), {0, 1}, -1}; }

SmallAlgebra even_dual_numbers() { return {"k[x]/x^2", square_zero({{"1", 0}, {"x", 0}}, {}), {0, 1}, 1}; }

SmallAlgebra acyclic_resolution() {
    return {"<1,x,y | dy=x>", square_zero({{"1", 0}, {"x", 0}, {"y", -1}}, {{2, e(1)}}), {0, 1, 1}, 1};
}

std::vector<SmallAlgebra> all_algebras() {
    return {ground_field(), odd_dual_numbers(), even_dual_numbers(), acyclic_resolution()};
}

DgCategory chaotic(const DgCategory& a, int m) {
    auto A = std::make_shared<const DgCategory>(a);
    DgCategory c;
    for (int k = 0; k < m; ++k) c.objects.push_back("x" + std::to_string(k));
    c.homs.assign(m, std::vector<HomSpace>(m, a.hom(0, 0)));
    c.units.assign(m, a.units[0]);
    c.compose_basis = [A](int, int, int, int g, int f) { return A->compose_basis(0, 0, 0, g, f); };
    c.d_basis = [A](int, int, int f) { return A->d_basis(0, 0, f); };
    return c;
}

SparseVec multiply(const SmallAlgebra& alg, const SparseVec& u, const SparseVec& v) {
    return alg.a.compose(0, 0, 0, u, v);
}

SparseVec invert(const SmallAlgebra& alg, const SparseVec& u) {
    auto it = u.find(0);
    if (it == u.end()) throw std::invalid_argument("element is not invertible");
    const Scalar inv = Scalar(1) / it->second;
    SparseVec out{{0, inv}};
    for (const auto& [k, c] : u) {
        if (k == 0) continue;
        if (k != alg.nilpotent) throw std::invalid_argument("only λ + μn can be inverted");
        add_entry(out, k, -c * inv * inv);
    }
    return out;
}

SparseVec scale_weights(const SmallAlgebra& alg, const SparseVec& u, const Scalar& c) {
    SparseVec out;
    for (const auto& [k, x] : u) {
        Scalar f(1);
        for (int w = 0; w < alg.weight[k]; ++w) f = f * c;
        add_entry(out, k, x * f);
    }
    return out;
}

namespace {

DgFunctor scaling_functor(const SmallAlgebra& alg, const CategoryPtr& src, const CategoryPtr& dst, const Scalar& c) {
    DgFunctor f{src, dst, {}, {}};
    for (int o = 0; o < src->object_count(); ++o) f.object_map.push_back(o);
    auto w = alg.weight;
    f.map_basis = [w, c](int, int, int b) {
        Scalar s(1);
        for (int k = 0; k < w[b]; ++k) s = s * c;
        return SparseVec{{b, s}};
    };
    return f;
}

DgNatTrans constant_trans(const DgFunctor& from, const DgFunctor& to, const SparseVec& u) {
    return DgNatTrans{from, to, 0, std::vector<SparseVec>(from.object_map.size(), u)};
}

}  // namespace

ColaxPtr build_colax(const TwistedSample& s) {
    const auto& I = *s.index;
    auto cat = std::make_shared<const DgCategory>(chaotic(s.alg.a, s.m));
    auto x = std::make_shared<ColaxFunctor>();
    x->index = s.index;
    x->at_object.assign(I.object_count(), cat);
    std::vector<Scalar> c;
    for (const auto& m : I.morphisms) {
        c.push_back(s.height[m.target] / s.height[m.source]);
        x->at_morphism.push_back(scaling_functor(s.alg, cat, cat, c.back()));
    }
    const DgFunctor id = identity_functor(cat);
    for (int i = 0; i < I.object_count(); ++i) {
        const int e = I.identity[i];
        x->counit.push_back(constant_trans(x->at_morphism[e], id, invert(s.alg, s.twist[e])));
    }
    for (int b = 0; b < I.morphism_count(); ++b)
        for (int a = 0; a < I.morphism_count(); ++a) {
            const int ba = I.compose(b, a);
            if (ba < 0) continue;
            SparseVec u = multiply(s.alg, s.twist[b], scale_weights(s.alg, s.twist[a], c[b]));
            u = multiply(s.alg, u, invert(s.alg, s.twist[ba]));
            x->cocomposition.emplace(std::make_pair(b, a),
                                     constant_trans(x->at_morphism[ba],
                                                    compose_functors(x->at_morphism[b], x->at_morphism[a]), u));
        }
    return x;
}

TwistedSample strict_sample(const IndexPtr& index, const SmallAlgebra& alg, int m) {
    TwistedSample s{index, alg, m, std::vector<Scalar>(index->object_count(), Scalar(1)), {}};
    s.twist.assign(index->morphism_count(), SparseVec{{0, Scalar(1)}});
    return s;
}

ColaxOneMorphism twist_morphism(const TwistedSample& from, const ColaxPtr& x, const TwistedSample& to,
                                const ColaxPtr& y, const Scalar& s) {
    const auto& I = *from.index;
    ColaxOneMorphism f{x, y, {}, {}};
    for (int i = 0; i < I.object_count(); ++i)
        f.F.push_back(scaling_functor(from.alg, x->at_object[i], y->at_object[i], s));
    for (int a = 0; a < I.morphism_count(); ++a) {
        const auto& m = I.morphisms[a];
        SparseVec v = multiply(from.alg, scale_weights(from.alg, from.twist[a], s), invert(from.alg, to.twist[a]));
        f.psi.push_back(constant_trans(compose_functors(y->at_morphism[a], f.F[m.source]),
                                       compose_functors(f.F[m.target], x->at_morphism[a]), v));
    }
    return f;
}

ColaxTwoMorphism scalar_two_morphism(const ColaxOneMorphism& f, const Scalar& lambda) {
    ColaxTwoMorphism z{f, f, {}};
    for (const auto& F : f.F) z.zeta.push_back(constant_trans(F, F, SparseVec{{0, lambda}}));
    for (auto& t : z.zeta)
        for (auto& c : t.components)
            if (lambda == Scalar(0)) c.clear();
    return z;
}

std::vector<IndexShape> small_index_shapes() {
    std::vector<IndexShape> out;
    auto add = [&out](std::string n, IndexCategory c) {
        out.push_back({std::move(n), std::make_shared<const IndexCategory>(std::move(c))});
    };
    add("poset 1<2", poset_category({"1", "2"}, {{true, true}, {false, true}}));
    add("chain 1<2<3", poset_category({"1", "2", "3"}, {{true, true, true}, {false, true, true}, {false, false, true}}));
    add("poset 1<3>2", poset_category({"1", "2", "3"}, {{true, false, true}, {false, true, true}, {false, false, true}}));
    add("Z/2", cyclic_group_category(2));
    add("Z/3", cyclic_group_category(3));
    add("idempotent monoid", monoid_category({"e", "p"}, {{0, 1}, {1, 1}}));
    {
        GradedQuiver q;
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_vertex("3");
        q.add_arrow("a", "1", "2");
        q.add_arrow("b", "2", "3");
        q.add_arrow("c", "1", "3");
        add("free 1->2->3, 1->3", free_category(q));
    }
    {
        GradedQuiver q;
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_arrow("a", "1", "2");
        q.add_arrow("b", "1", "2");
        add("Kronecker", free_category(q));
    }
    return out;
}

namespace {

Scalar nonzero(std::mt19937& rng) {
    static const long vals[] = {1, -1, 2, -2, 3};
    return Scalar(vals[rng() % 5]);
}

}  // namespace

TwistedSample random_twist(std::mt19937& rng, TwistedSample s) {
    for (auto& u : s.twist) {
        u = SparseVec{{0, nonzero(rng)}};
        if (s.alg.nilpotent >= 0) add_entry(u, s.alg.nilpotent, Scalar(static_cast<long>(rng() % 5) - 2));
    }
    return s;
}

TwistedSample random_sample(std::mt19937& rng) {
    static const auto shapes = small_index_shapes();
    static const auto algebras = all_algebras();
    const auto& shape = shapes[rng() % shapes.size()];
    TwistedSample s = strict_sample(shape.index, algebras[rng() % algebras.size()], 1 + static_cast<int>(rng() % 2));
    for (auto& h : s.height) h = nonzero(rng);
    return random_twist(rng, std::move(s));
}

bool has_nontrivial_cocomposition(const ColaxFunctor& x) {
    for (const auto& [ba, t] : x.cocomposition) {
        const auto& C = *t.from.target;
        for (std::size_t o = 0; o < t.components.size(); ++o)
            if (!vec_equal(t.components[o], C.units[t.from.object_map[o]])) return true;
    }
    return false;
}

IndexPtr chain4() {
    std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) leq[i][j] = true;
    return std::make_shared<const IndexCategory>(poset_category({"1", "2", "3", "4"}, leq));
}

ColaxPtr flip_cocomposition(const ColaxFunctor& x, const std::string& b, const std::string& a) {
    auto y = std::make_shared<ColaxFunctor>(x);
    auto& t = y->cocomposition.at({x.index->morphism_index(b), x.index->morphism_index(a)});
    for (auto& c : t.components) c = scaled(c, Scalar(-1));
    return y;
}

}  // namespace dgw::samples
