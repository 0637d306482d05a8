#include "dgw/colax.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace dgw {

std::vector<int> IndexCategory::hom(int i, int j) const {
    std::vector<int> out;
    for (int a = 0; a < morphism_count(); ++a)
        if (morphisms[a].source == i && morphisms[a].target == j) out.push_back(a);
    return out;
}

int IndexCategory::morphism_index(const std::string& name) const {
    for (int a = 0; a < morphism_count(); ++a)
        if (morphisms[a].name == name) return a;
    throw std::out_of_range("no morphism named " + name);
}

CheckReport check_index_category(const IndexCategory& c) {
    CheckReport r;
    const int n = c.morphism_count();
    if (static_cast<int>(c.identity.size()) != c.object_count() || static_cast<int>(c.comp.size()) != n)
        return CheckReport::fail("table sizes do not match");
    for (int i = 0; i < c.object_count(); ++i) {
        const auto& e = c.morphisms.at(c.identity[i]);
        if (e.source != i || e.target != i) return CheckReport::fail("identity of " + c.objects[i] + " is not an endomorphism");
    }
    for (int b = 0; b < n; ++b) {
        if (static_cast<int>(c.comp[b].size()) != n) return CheckReport::fail("composition table is not square");
        for (int a = 0; a < n; ++a) {
            const auto& ma = c.morphisms[a];
            const auto& mb = c.morphisms[b];
            const int ba = c.comp[b][a];
            ++r.checks;
            if (ma.target != mb.source) {
                if (ba != -1) return CheckReport::fail("composite defined for non-composable " + mb.name + "," + ma.name);
                continue;
            }
            if (ba < 0 || ba >= n) return CheckReport::fail("table is not total at " + mb.name + "," + ma.name);
            if (c.morphisms[ba].source != ma.source || c.morphisms[ba].target != mb.target)
                return CheckReport::fail("composite " + mb.name + "," + ma.name + " has wrong ends");
        }
    }
    for (int a = 0; a < n; ++a) {
        const auto& m = c.morphisms[a];
        if (c.comp[a][c.identity[m.source]] != a || c.comp[c.identity[m.target]][a] != a)
            return CheckReport::fail("unit law fails at " + m.name);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (c.comp[b][a] < 0) continue;
            for (int cc = 0; cc < n; ++cc) {
                if (c.comp[cc][b] < 0) continue;
                ++r.checks;
                if (c.comp[cc][c.comp[b][a]] != c.comp[c.comp[cc][b]][a])
                    return CheckReport::fail("associativity fails at " + c.morphisms[cc].name + "," +
                                             c.morphisms[b].name + "," + c.morphisms[a].name);
            }
        }
    return r;
}

namespace {

void fill_table(IndexCategory& c, const std::function<int(int, int)>& product) {
    const int n = c.morphism_count();
    c.comp.assign(n, std::vector<int>(n, -1));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (c.morphisms[a].target == c.morphisms[b].source) c.comp[b][a] = product(b, a);
}

}  // namespace

IndexCategory poset_category(const std::vector<std::string>& objects, const std::vector<std::vector<bool>>& leq) {
    IndexCategory c;
    c.objects = objects;
    const int n = static_cast<int>(objects.size());
    std::map<std::pair<int, int>, int> idx;
    c.identity.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (!leq[i][i]) throw std::invalid_argument("poset relation is not reflexive");
        for (int j = 0; j < n; ++j) {
            if (!leq[i][j]) continue;
            if (i != j && leq[j][i]) throw std::invalid_argument("poset relation is not antisymmetric");
            idx[{i, j}] = c.morphism_count();
            c.morphisms.push_back({i == j ? "id_" + objects[i] : objects[i] + "<" + objects[j], i, j});
            if (i == j) c.identity[i] = idx[{i, j}];
        }
    }
    fill_table(c, [&](int b, int a) {
        auto it = idx.find({c.morphisms[a].source, c.morphisms[b].target});
        if (it == idx.end()) throw std::invalid_argument("poset relation is not transitive");
        return it->second;
    });
    return c;
}

IndexCategory monoid_category(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
    IndexCategory c;
    c.objects = {"*"};
    for (const auto& e : elements) c.morphisms.push_back({e, 0, 0});
    c.identity = {0};
    fill_table(c, [&](int b, int a) { return table.at(b).at(a); });
    return c;
}

IndexCategory cyclic_group_category(int n) {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int k = 0; k < n; ++k) {
        names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
        for (int l = 0; l < n; ++l) table[k][l] = (k + l) % n;
    }
    return monoid_category(names, table);
}

IndexCategory free_category(const GradedQuiver& q) {
    IndexCategory c;
    c.objects = q.vertices();
    std::map<std::vector<int>, int> idx;  // arrows in written order
    for (int v = 0; v < q.vertex_count(); ++v) {
        c.identity.push_back(c.morphism_count());
        c.morphisms.push_back({"id_" + q.vertex(v), v, v});
    }
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < q.arrow_count(); ++a) frontier.push_back({a});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            if (static_cast<int>(p.size()) > q.vertex_count()) throw std::invalid_argument("quiver has an oriented cycle");
            std::string name;
            for (int a : p) name += (name.empty() ? "" : " ") + q.arrow(a).name;
            idx[p] = c.morphism_count();
            c.morphisms.push_back({name, q.arrow(p.back()).source, q.arrow(p.front()).target});
            for (int b : q.arrows_from(q.arrow(p.front()).target)) {
                std::vector<int> longer{b};
                longer.insert(longer.end(), p.begin(), p.end());
                next.push_back(std::move(longer));
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> word(c.morphism_count());
    for (const auto& [p, i] : idx) word[i] = p;
    fill_table(c, [&](int b, int a) {
        if (c.is_identity(a)) return b;
        if (c.is_identity(b)) return a;
        std::vector<int> p = word[b];
        p.insert(p.end(), word[a].begin(), word[a].end());
        return idx.at(p);
    });
    return c;
}

// ---------------------------------------------------------------- checks

namespace {

std::string obj_name(const DgCategory& c, int x) { return c.objects.at(x); }

CheckReport check_trans_shape(const DgNatTrans& t, const DgFunctor& from, const DgFunctor& to, const std::string& what) {
    if (t.degree != 0) return CheckReport::fail(what + " has degree " + std::to_string(t.degree) + "; only dg natural transformations are supported");
    if (t.from.object_map != from.object_map || t.to.object_map != to.object_map)
        return CheckReport::fail(what + " has the wrong source or target functor");
    auto r = check_nat_trans(t);
    if (!r.ok) return CheckReport::fail(what + ": " + r.message);
    return r;
}

SparseVec unit_at(const DgCategory& c, int x) { return c.units.at(x); }

}  // namespace

CheckReport check_colax(const ColaxFunctor& x) {
    const auto& I = *x.index;
    CheckReport r = check_index_category(I);
    if (!r.ok) return CheckReport::fail("index category: " + r.message);
    if (static_cast<int>(x.at_object.size()) != I.object_count() ||
        static_cast<int>(x.at_morphism.size()) != I.morphism_count() ||
        static_cast<int>(x.counit.size()) != I.object_count())
        return CheckReport::fail("data sizes do not match the index category");
    auto add = [&r](const CheckReport& s) { r.checks += s.checks; };

    for (int i = 0; i < I.object_count(); ++i) {
        auto s = check_dg_category(*x.at_object[i]);
        if (!s.ok) return CheckReport::fail("X(" + I.objects[i] + "): " + s.message);
        add(s);
    }
    for (int a = 0; a < I.morphism_count(); ++a) {
        const auto& m = I.morphisms[a];
        const auto& F = x.at_morphism[a];
        if (F.source != x.at_object[m.source] || F.target != x.at_object[m.target])
            return CheckReport::fail("X(" + m.name + ") has the wrong source or target");
        auto s = check_dg_functor(F);
        if (!s.ok) return CheckReport::fail("X(" + m.name + "): " + s.message);
        add(s);
    }
    for (int i = 0; i < I.object_count(); ++i) {
        auto s = check_trans_shape(x.counit[i], x.at_morphism[I.identity[i]], identity_functor(x.at_object[i]),
                                   "X_" + I.objects[i]);
        if (!s.ok) return s;
        add(s);
    }
    for (int b = 0; b < I.morphism_count(); ++b)
        for (int a = 0; a < I.morphism_count(); ++a) {
            const int ba = I.compose(b, a);
            if (ba < 0) continue;
            auto it = x.cocomposition.find({b, a});
            const std::string what = "X_{" + I.morphisms[b].name + "," + I.morphisms[a].name + "}";
            if (it == x.cocomposition.end()) return CheckReport::fail(what + " is missing");
            auto s = check_trans_shape(it->second, x.at_morphism[ba],
                                       compose_functors(x.at_morphism[b], x.at_morphism[a]), what);
            if (!s.ok) return s;
            add(s);
        }

    // axiom (a)
    for (int a = 0; a < I.morphism_count(); ++a) {
        const auto& m = I.morphisms[a];
        const int i = m.source, j = m.target;
        const auto& Xi = *x.at_object[i];
        const auto& Xj = *x.at_object[j];
        const auto& Xa = x.at_morphism[a];
        const auto& Xid_i = x.at_morphism[I.identity[i]];
        const auto& Xid_j = x.at_morphism[I.identity[j]];
        for (int o = 0; o < Xi.object_count(); ++o) {
            const int ao = Xa.object_map[o];
            // X(a)X_i ∘ X_{a,id_i} = 1
            const int mid = Xa.object_map[Xid_i.object_map[o]];
            SparseVec lhs = Xj.compose(ao, mid, ao, Xa.map(Xid_i.object_map[o], o, x.counit[i].components[o]),
                                       x.co(a, I.identity[i]).components[o]);
            ++r.checks;
            if (!vec_equal(lhs, unit_at(Xj, ao)))
                return CheckReport::fail("axiom (a) fails for " + m.name + " and id_" + I.objects[i] + " at object " +
                                         obj_name(Xi, o));
            // X_j X(a) ∘ X_{id_j,a} = 1
            const int mid2 = Xid_j.object_map[ao];
            SparseVec lhs2 = Xj.compose(ao, mid2, ao, x.counit[j].components[ao], x.co(I.identity[j], a).components[o]);
            ++r.checks;
            if (!vec_equal(lhs2, unit_at(Xj, ao)))
                return CheckReport::fail("axiom (a) fails for id_" + I.objects[j] + " and " + m.name + " at object " +
                                         obj_name(Xi, o));
        }
    }
    // axiom (b)
    for (int a = 0; a < I.morphism_count(); ++a)
        for (int b = 0; b < I.morphism_count(); ++b) {
            const int ba = I.compose(b, a);
            if (ba < 0) continue;
            for (int c = 0; c < I.morphism_count(); ++c) {
                const int cb = I.compose(c, b);
                if (cb < 0) continue;
                const int cba = I.compose(c, ba);
                const auto& Xi = *x.at_object[I.morphisms[a].source];
                const auto& Xl = *x.at_object[I.morphisms[c].target];
                const auto& Xa = x.at_morphism[a];
                const auto& Xb = x.at_morphism[b];
                const auto& Xc = x.at_morphism[c];
                for (int o = 0; o < Xi.object_count(); ++o) {
                    const int src = x.at_morphism[cba].object_map[o];
                    const int end = Xc.object_map[Xb.object_map[Xa.object_map[o]]];
                    // X(c)X_{b,a} ∘ X_{c,ba}
                    const int m1 = Xc.object_map[x.at_morphism[ba].object_map[o]];
                    SparseVec lhs = Xl.compose(src, m1, end,
                                               Xc.map(x.at_morphism[ba].object_map[o], Xb.object_map[Xa.object_map[o]],
                                                      x.co(b, a).components[o]),
                                               x.co(c, ba).components[o]);
                    // X_{c,b}X(a) ∘ X_{cb,a}
                    const int m2 = x.at_morphism[cb].object_map[Xa.object_map[o]];
                    SparseVec rhs = Xl.compose(src, m2, end, x.co(c, b).components[Xa.object_map[o]],
                                               x.co(cb, a).components[o]);
                    ++r.checks;
                    if (!vec_equal(lhs, rhs))
                        return CheckReport::fail("axiom (b) fails for " + I.morphisms[c].name + "," + I.morphisms[b].name +
                                                 "," + I.morphisms[a].name + " at object " + obj_name(Xi, o));
                }
            }
        }
    return r;
}

CheckReport check_one_morphism(const ColaxOneMorphism& f) {
    const auto& X = *f.source;
    const auto& Y = *f.target;
    const auto& I = *X.index;
    CheckReport r;
    for (int i = 0; i < I.object_count(); ++i) {
        auto s = check_dg_functor(f.F[i]);
        if (!s.ok) return CheckReport::fail("F(" + I.objects[i] + "): " + s.message);
        r.checks += s.checks;
    }
    for (int a = 0; a < I.morphism_count(); ++a) {
        const auto& m = I.morphisms[a];
        auto s = check_trans_shape(f.psi[a], compose_functors(Y.at_morphism[a], f.F[m.source]),
                                   compose_functors(f.F[m.target], X.at_morphism[a]), "psi(" + m.name + ")");
        if (!s.ok) return s;
        r.checks += s.checks;
    }
    // (a): F(i)X_i ∘ ψ(id_i) = X'_i F(i)
    for (int i = 0; i < I.object_count(); ++i) {
        const int e = I.identity[i];
        const auto& Yi = *Y.at_object[i];
        for (int o = 0; o < X.at_object[i]->object_count(); ++o) {
            const int fo = f.F[i].object_map[o];
            const int src = Y.at_morphism[e].object_map[fo];
            const int mid = f.F[i].object_map[X.at_morphism[e].object_map[o]];
            SparseVec lhs = Yi.compose(src, mid, fo, f.F[i].map(X.at_morphism[e].object_map[o], o, X.counit[i].components[o]),
                                       f.psi[e].components[o]);
            ++r.checks;
            if (!vec_equal(lhs, Y.counit[i].components[fo]))
                return CheckReport::fail("1-morphism axiom (a) fails at " + I.objects[i] + ", object " +
                                         obj_name(*X.at_object[i], o));
        }
    }
    // (b): F(k)X_{b,a} ∘ ψ(ba) = ψ(b)X(a) ∘ X'(b)ψ(a) ∘ X'_{b,a}F(i)
    for (int a = 0; a < I.morphism_count(); ++a)
        for (int b = 0; b < I.morphism_count(); ++b) {
            const int ba = I.compose(b, a);
            if (ba < 0) continue;
            const int i = I.morphisms[a].source, j = I.morphisms[a].target, k = I.morphisms[b].target;
            const auto& Yk = *Y.at_object[k];
            const auto& Xa = X.at_morphism[a];
            const auto& Xb = X.at_morphism[b];
            const auto& Yb = Y.at_morphism[b];
            for (int o = 0; o < X.at_object[i]->object_count(); ++o) {
                const int fi_o = f.F[i].object_map[o];
                const int src = Y.at_morphism[ba].object_map[fi_o];
                const int end = f.F[k].object_map[Xb.object_map[Xa.object_map[o]]];
                const int m1 = f.F[k].object_map[X.at_morphism[ba].object_map[o]];
                SparseVec lhs = Yk.compose(src, m1, end,
                                           f.F[k].map(X.at_morphism[ba].object_map[o], Xb.object_map[Xa.object_map[o]],
                                                      X.co(b, a).components[o]),
                                           f.psi[ba].components[o]);
                const int yaf = Y.at_morphism[a].object_map[fi_o];
                const int p1 = Yb.object_map[yaf];                                   // X'(b)X'(a)F(i)x
                const int p2 = Yb.object_map[f.F[j].object_map[Xa.object_map[o]]];  // X'(b)F(j)X(a)x
                SparseVec step = Yk.compose(src, p1, p2,
                                            Yb.map(yaf, f.F[j].object_map[Xa.object_map[o]], f.psi[a].components[o]),
                                            Y.co(b, a).components[fi_o]);
                SparseVec rhs = Yk.compose(src, p2, end, f.psi[b].components[Xa.object_map[o]], step);
                ++r.checks;
                if (!vec_equal(lhs, rhs))
                    return CheckReport::fail("1-morphism axiom (b) fails at " + I.morphisms[b].name + "," +
                                             I.morphisms[a].name + ", object " + obj_name(*X.at_object[i], o));
            }
        }
    return r;
}

namespace {

DgNatTrans identity_trans(const DgFunctor& from, const DgFunctor& to) {
    DgNatTrans t{from, to, 0, {}};
    const auto& T = *from.target;
    for (int o : from.object_map) t.components.push_back(T.units.at(o));
    return t;
}

}  // namespace

ColaxOneMorphism identity_one_morphism(const std::shared_ptr<const ColaxFunctor>& x) {
    ColaxOneMorphism f{x, x, {}, {}};
    const auto& I = *x->index;
    for (int i = 0; i < I.object_count(); ++i) f.F.push_back(identity_functor(x->at_object[i]));
    for (int a = 0; a < I.morphism_count(); ++a) {
        const auto& m = I.morphisms[a];
        f.psi.push_back(identity_trans(compose_functors(x->at_morphism[a], f.F[m.source]),
                                       compose_functors(f.F[m.target], x->at_morphism[a])));
    }
    return f;
}

ColaxOneMorphism compose_one_morphisms(const ColaxOneMorphism& g, const ColaxOneMorphism& f) {
    const auto& X = *f.source;
    const auto& Z = *g.target;
    const auto& I = *X.index;
    ColaxOneMorphism out{f.source, g.target, {}, {}};
    for (int i = 0; i < I.object_count(); ++i) out.F.push_back(compose_functors(g.F[i], f.F[i]));
    for (int a = 0; a < I.morphism_count(); ++a) {
        const int i = I.morphisms[a].source, j = I.morphisms[a].target;
        DgNatTrans t{compose_functors(Z.at_morphism[a], out.F[i]), compose_functors(out.F[j], X.at_morphism[a]), 0, {}};
        const auto& Zj = *Z.at_object[j];
        for (int o = 0; o < X.at_object[i]->object_count(); ++o) {
            const int fo = f.F[i].object_map[o];
            const int src = Z.at_morphism[a].object_map[g.F[i].object_map[fo]];
            const int mid = g.F[j].object_map[f.target->at_morphism[a].object_map[fo]];
            const int end = g.F[j].object_map[f.F[j].object_map[X.at_morphism[a].object_map[o]]];
            // F'(j)ψ(a) ∘ ψ'(a)F(i)
            SparseVec first = g.psi[a].components[fo];
            SparseVec second = g.F[j].map(f.target->at_morphism[a].object_map[fo],
                                          f.F[j].object_map[X.at_morphism[a].object_map[o]], f.psi[a].components[o]);
            t.components.push_back(Zj.compose(src, mid, end, second, first));
        }
        out.psi.push_back(std::move(t));
    }
    return out;
}

CheckReport check_two_morphism(const ColaxTwoMorphism& z) {
    const auto& X = *z.from.source;
    const auto& Y = *z.from.target;
    const auto& I = *X.index;
    CheckReport r;
    for (int i = 0; i < I.object_count(); ++i) {
        auto s = check_trans_shape(z.zeta[i], z.from.F[i], z.to.F[i], "zeta(" + I.objects[i] + ")");
        if (!s.ok) return s;
        r.checks += s.checks;
    }
    for (int a = 0; a < I.morphism_count(); ++a) {
        const int i = I.morphisms[a].source, j = I.morphisms[a].target;
        const auto& Yj = *Y.at_object[j];
        const auto& Ya = Y.at_morphism[a];
        for (int o = 0; o < X.at_object[i]->object_count(); ++o) {
            const int ao = X.at_morphism[a].object_map[o];
            const int src = Ya.object_map[z.from.F[i].object_map[o]];
            const int end = z.to.F[j].object_map[ao];
            // ζ(j)X(a) ∘ ψ(a)
            SparseVec lhs = Yj.compose(src, z.from.F[j].object_map[ao], end, z.zeta[j].components[ao],
                                       z.from.psi[a].components[o]);
            // ψ'(a) ∘ X'(a)ζ(i)
            const int mid = Ya.object_map[z.to.F[i].object_map[o]];
            SparseVec rhs = Yj.compose(src, mid, end, z.to.psi[a].components[o],
                                       Ya.map(z.from.F[i].object_map[o], z.to.F[i].object_map[o], z.zeta[i].components[o]));
            ++r.checks;
            if (!vec_equal(lhs, rhs))
                return CheckReport::fail("2-morphism square fails at " + I.morphisms[a].name + ", object " +
                                         obj_name(*X.at_object[i], o));
        }
    }
    return r;
}

ColaxTwoMorphism vertical_compose(const ColaxTwoMorphism& later, const ColaxTwoMorphism& first) {
    ColaxTwoMorphism out{first.from, later.to, {}};
    const auto& X = *first.from.source;
    for (int i = 0; i < X.index->object_count(); ++i) {
        DgNatTrans t{first.from.F[i], later.to.F[i], 0, {}};
        const auto& C = *first.from.F[i].target;
        for (int o = 0; o < X.at_object[i]->object_count(); ++o)
            t.components.push_back(C.compose(first.from.F[i].object_map[o], first.to.F[i].object_map[o],
                                             later.to.F[i].object_map[o], later.zeta[i].components[o],
                                             first.zeta[i].components[o]));
        out.zeta.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------- Δ

std::shared_ptr<const ColaxFunctor> diagonal(const IndexPtr& index, const CategoryPtr& c) {
    auto x = std::make_shared<ColaxFunctor>();
    x->index = index;
    const auto& I = *index;
    const DgFunctor id = identity_functor(c);
    x->at_object.assign(I.object_count(), c);
    x->at_morphism.assign(I.morphism_count(), id);
    for (int i = 0; i < I.object_count(); ++i) x->counit.push_back(identity_trans(id, id));
    const DgFunctor idid = compose_functors(id, id);
    for (int b = 0; b < I.morphism_count(); ++b)
        for (int a = 0; a < I.morphism_count(); ++a)
            if (I.compose(b, a) >= 0) x->cocomposition.emplace(std::make_pair(b, a), identity_trans(id, idid));
    return x;
}

ColaxOneMorphism diagonal_on_1(const IndexPtr& index, const DgFunctor& h) {
    ColaxOneMorphism f{diagonal(index, h.source), diagonal(index, h.target), {}, {}};
    const auto& I = *index;
    f.F.assign(I.object_count(), h);
    const DgFunctor left = compose_functors(identity_functor(h.target), h);
    const DgFunctor right = compose_functors(h, identity_functor(h.source));
    for (int a = 0; a < I.morphism_count(); ++a) f.psi.push_back(identity_trans(left, right));
    return f;
}

ColaxTwoMorphism diagonal_on_2(const IndexPtr& index, const DgNatTrans& t) {
    ColaxTwoMorphism z{diagonal_on_1(index, t.from), diagonal_on_1(index, t.to), {}};
    z.to.source = z.from.source;
    z.to.target = z.from.target;
    z.zeta.assign(index->object_count(), t);
    return z;
}

// ---------------------------------------------------------------- Gr

int GrothendieckLayout::offset(int u, int v, int a) const {
    for (const auto& [b, off] : blocks[u][v])
        if (b == a) return off;
    return -1;
}

std::pair<int, int> GrothendieckLayout::locate(int u, int v, int f) const {
    const auto& bl = blocks[u][v];
    for (std::size_t k = bl.size(); k-- > 0;)
        if (f >= bl[k].second) return {bl[k].first, f - bl[k].second};
    throw std::out_of_range("basis index outside the hom space");
}

GrothendieckLayout grothendieck_layout(const ColaxFunctor& x) {
    GrothendieckLayout l;
    const auto& I = *x.index;
    for (int i = 0; i < I.object_count(); ++i)
        for (int o = 0; o < x.at_object[i]->object_count(); ++o) {
            l.index_of[{i, o}] = static_cast<int>(l.objects.size());
            l.objects.emplace_back(i, o);
        }
    const int n = static_cast<int>(l.objects.size());
    l.blocks.assign(n, std::vector<std::vector<std::pair<int, int>>>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const auto [i, o] = l.objects[u];
            const auto [j, p] = l.objects[v];
            int off = 0;
            for (int a : I.hom(i, j)) {
                l.blocks[u][v].emplace_back(a, off);
                off += x.at_object[j]->hom(x.at_morphism[a].object_map[o], p).size();
            }
        }
    return l;
}

namespace {

SparseVec shifted(const SparseVec& v, int off) {
    SparseVec out;
    for (const auto& [k, c] : v) out.emplace_hint(out.end(), k + off, c);
    return out;
}

}  // namespace

DgCategory grothendieck(const ColaxFunctor& x) {
    auto X = std::make_shared<const ColaxFunctor>(x);
    auto L = std::make_shared<const GrothendieckLayout>(grothendieck_layout(x));
    const auto& I = *x.index;
    DgCategory c;
    const int n = static_cast<int>(L->objects.size());
    for (const auto& [i, o] : L->objects) c.objects.push_back(I.objects[i] + ":" + x.at_object[i]->objects[o]);
    c.homs.assign(n, std::vector<HomSpace>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const int o = L->objects[u].second;
            const auto [j, p] = L->objects[v];
            auto& h = c.homs[u][v];
            for (const auto& [a, off] : L->blocks[u][v]) {
                const auto& src = x.at_object[j]->hom(x.at_morphism[a].object_map[o], p);
                for (int t = 0; t < src.size(); ++t) {
                    h.names.push_back(I.morphisms[a].name + ":" + src.names[t]);
                    h.degrees.push_back(src.degrees[t]);
                }
            }
        }
    for (int u = 0; u < n; ++u) {
        const auto [i, o] = L->objects[u];
        c.units.push_back(shifted(x.counit[i].components[o], L->offset(u, u, I.identity[i])));
    }
    c.d_basis = [X, L](int u, int v, int f) {
        const auto [a, t] = L->locate(u, v, f);
        const int o = L->objects[u].second;
        const auto [j, p] = L->objects[v];
        const auto& Xj = *X->at_object[j];
        return shifted(Xj.d_basis(X->at_morphism[a].object_map[o], p, t), L->offset(u, v, a));
    };
    c.compose_basis = [X, L](int u, int v, int w, int g, int f) {
        const auto& I = *X->index;
        const auto [a, ft] = L->locate(u, v, f);
        const auto [b, gt] = L->locate(v, w, g);
        const int o = L->objects[u].second;
        const auto [j, p] = L->objects[v];
        const auto [k, q] = L->objects[w];
        const int ba = I.compose(b, a);
        const auto& Xk = *X->at_object[k];
        const auto& Xa = X->at_morphism[a];
        const auto& Xb = X->at_morphism[b];
        const int xa = Xa.object_map[o];     // X(a)x
        const int xbxa = Xb.object_map[xa];  // X(b)X(a)x
        const int xby = Xb.object_map[p];    // X(b)y
        // X_{b,a}x ∗ (g_b ∘ X(b)f_a)
        SparseVec gxf = Xk.compose(xbxa, xby, q, unit_vector(gt), Xb.map_basis(xa, p, ft));
        SparseVec out = star(Xk, X->at_morphism[ba].object_map[o], xbxa, q, X->co(b, a).components[o], gxf);
        return shifted(out, L->offset(u, w, ba));
    };
    return c;
}

DgFunctor grothendieck_on_1(const ColaxOneMorphism& f, const CategoryPtr& gr_source, const CategoryPtr& gr_target) {
    auto Ls = std::make_shared<const GrothendieckLayout>(grothendieck_layout(*f.source));
    auto Lt = std::make_shared<const GrothendieckLayout>(grothendieck_layout(*f.target));
    auto F = std::make_shared<const ColaxOneMorphism>(f);
    DgFunctor out{gr_source, gr_target, {}, {}};
    for (const auto& [i, o] : Ls->objects) out.object_map.push_back(Lt->object(i, f.F[i].object_map[o]));
    out.map_basis = [F, Ls, Lt](int u, int v, int b) {
        const auto [a, t] = Ls->locate(u, v, b);
        const auto [i, o] = Ls->objects[u];
        const auto [j, p] = Ls->objects[v];
        const auto& Y = *F->target;
        const auto& Yj = *Y.at_object[j];
        const int xa = F->source->at_morphism[a].object_map[o];
        const int fxa = F->F[j].object_map[xa];
        const int fy = F->F[j].object_map[p];
        const int yafx = Y.at_morphism[a].object_map[F->F[i].object_map[o]];
        // ψ(a)_x ∗ F(j)(f_a)
        SparseVec img = star(Yj, yafx, fxa, fy, F->psi[a].components[o], F->F[j].map_basis(xa, p, t));
        const int tu = Lt->object(i, F->F[i].object_map[o]);
        const int tv = Lt->object(j, fy);
        return shifted(img, Lt->offset(tu, tv, a));
    };
    return out;
}

DgNatTrans grothendieck_on_2(const ColaxTwoMorphism& z, const DgFunctor& gr_from, const DgFunctor& gr_to) {
    const auto& X = *z.from.source;
    const auto& Y = *z.from.target;
    const auto& I = *X.index;
    auto Ls = grothendieck_layout(X);
    auto Lt = grothendieck_layout(Y);
    DgNatTrans t{gr_from, gr_to, 0, {}};
    for (const auto& [i, o] : Ls.objects) {
        const auto& Yi = *Y.at_object[i];
        const int fo = z.from.F[i].object_map[o];
        const int go = z.to.F[i].object_map[o];
        // ζ(i)_x ∘ X'_i(F(i)x), placed at a = id_i
        SparseVec c = Yi.compose(Y.at_morphism[I.identity[i]].object_map[fo], fo, go, z.zeta[i].components[o],
                                 Y.counit[i].components[fo]);
        t.components.push_back(shifted(c, Lt.offset(Lt.object(i, fo), Lt.object(i, go), I.identity[i])));
    }
    return t;
}

ColaxOneMorphism canonical_morphism(const std::shared_ptr<const ColaxFunctor>& x, const CategoryPtr& gr) {
    const auto& I = *x->index;
    auto L = std::make_shared<const GrothendieckLayout>(grothendieck_layout(*x));
    auto target = diagonal(x->index, gr);
    ColaxOneMorphism f{x, target, {}, {}};
    for (int i = 0; i < I.object_count(); ++i) {
        DgFunctor P{x->at_object[i], gr, {}, {}};
        for (int o = 0; o < x->at_object[i]->object_count(); ++o) P.object_map.push_back(L->object(i, o));
        P.map_basis = [x, L, i](int o, int p, int b) {
            const auto& Xi = *x->at_object[i];
            const int e = x->index->identity[i];
            // X_i x ∗ f in the id_i block
            SparseVec v = star(Xi, x->at_morphism[e].object_map[o], o, p, x->counit[i].components[o], unit_vector(b));
            const int u = L->object(i, o), w = L->object(i, p);
            return shifted(v, L->offset(u, w, e));
        };
        f.F.push_back(std::move(P));
    }
    for (int a = 0; a < I.morphism_count(); ++a) {
        const int i = I.morphisms[a].source, j = I.morphisms[a].target;
        DgNatTrans t{compose_functors(target->at_morphism[a], f.F[i]), compose_functors(f.F[j], x->at_morphism[a]), 0, {}};
        const auto& Xj = *x->at_object[j];
        for (int o = 0; o < x->at_object[i]->object_count(); ++o) {
            const int ao = x->at_morphism[a].object_map[o];
            const int u = L->object(i, o), w = L->object(j, ao);
            t.components.push_back(shifted(Xj.units[ao], L->offset(u, w, a)));
        }
        f.psi.push_back(std::move(t));
    }
    return f;
}

DgFunctor counit_functor(const IndexPtr& index, const CategoryPtr& c, const CategoryPtr& gr_delta) {
    auto L = std::make_shared<const GrothendieckLayout>(grothendieck_layout(*diagonal(index, c)));
    DgFunctor q{gr_delta, c, {}, {}};
    for (const auto& [i, o] : L->objects) q.object_map.push_back(o);
    q.map_basis = [L](int u, int v, int b) { return unit_vector(L->locate(u, v, b).second); };
    return q;
}

// ---------------------------------------------------------------- coverings

bool PrecoveringMap::is_identity() const {
    if (source.size() != target.size() || source.degrees != target.degrees) return false;
    for (int k = 0; k < source.size(); ++k)
        if (!vec_equal(images[k], unit_vector(k))) return false;
    return true;
}

PrecoveringMap precovering_map(const ColaxOneMorphism& f, int i, int j, int x, int y) {
    const auto& X = *f.source;
    const auto& I = *X.index;
    const auto& C = *f.target->at_object[j];
    const auto& Xj = *X.at_object[j];
    PrecoveringMap m;
    const int fy = f.F[j].object_map[y];
    const int fx = f.F[i].object_map[x];
    for (int a : I.hom(i, j)) {
        const int xa = X.at_morphism[a].object_map[x];
        const int off = m.source.size();
        auto h = hom_complex(Xj, xa, y);
        for (int t = 0; t < h.size(); ++t) {
            m.source.degrees.push_back(h.degrees[t]);
            m.source.d.push_back(shifted(h.d[t], off));
            const int src = f.psi[a].from.object_map[x];
            m.images.push_back(star(C, src, f.F[j].object_map[xa], fy, f.psi[a].components[x], f.F[j].map_basis(xa, y, t)));
        }
    }
    m.target = hom_complex(C, fx, fy);
    return m;
}

CheckReport check_I_covering(const ColaxOneMorphism& f, int density_attempts) {
    CheckReport r = check_one_morphism(f);
    if (!r.ok) return CheckReport::fail("not a 1-morphism: " + r.message);
    const auto& X = *f.source;
    const auto& I = *X.index;
    const auto& Cp = f.target->at_object.at(0);
    for (const auto& o : f.target->at_object)
        if (o != Cp) return CheckReport::fail("target is not a diagonal");
    const auto& C = *Cp;
    for (int i = 0; i < I.object_count(); ++i)
        for (int j = 0; j < I.object_count(); ++j)
            for (int x = 0; x < X.at_object[i]->object_count(); ++x)
                for (int y = 0; y < X.at_object[j]->object_count(); ++y) {
                    auto m = precovering_map(f, i, j, x, y);
                    std::ostringstream where;
                    where << " at (" << I.objects[i] << ":" << X.at_object[i]->objects[x] << ", " << I.objects[j] << ":"
                          << X.at_object[j]->objects[y] << ")";
                    ++r.checks;
                    if (m.source.size() != m.target.size())
                        return CheckReport::fail("precovering map is not bijective" + where.str());
                    for (int k = 0; k < m.source.size(); ++k) {
                        // degree 0 and a chain map
                        for (const auto& [t, c] : m.images[k])
                            if (m.target.degrees[t] != m.source.degrees[k])
                                return CheckReport::fail("precovering map does not preserve degree" + where.str());
                        SparseVec lhs;
                        for (const auto& [t, c] : m.images[k]) add_scaled(lhs, c, m.target.d[t]);
                        SparseVec rhs;
                        for (const auto& [t, c] : m.source.d[k]) add_scaled(rhs, c, m.images[t]);
                        if (!vec_equal(lhs, rhs)) return CheckReport::fail("precovering map does not commute with d" + where.str());
                    }
                    if (static_cast<int>(rank(SparseMatrix::from_columns(m.target.size(), m.images))) != m.source.size())
                        return CheckReport::fail("precovering map is not injective" + where.str());
                }
    for (int c = 0; c < C.object_count(); ++c) {
        bool hit = false;
        for (int i = 0; i < I.object_count() && !hit; ++i)
            for (int x = 0; x < X.at_object[i]->object_count() && !hit; ++x) {
                const int fx = f.F[i].object_map[x];
                hit = fx == c || z0_isomorphic(C, fx, c, density_attempts, static_cast<unsigned>(c));
            }
        ++r.checks;
        if (!hit) return CheckReport::fail("object " + C.objects[c] + " is not isomorphic to any F(i)x");
    }
    return r;
}

CheckReport check_adjunction_identities(const std::shared_ptr<const ColaxFunctor>& x, const CategoryPtr& c) {
    CheckReport r;
    const auto& I = x->index;
    // ε Gr ∘ Gr η = id on Gr(X)
    {
        auto gr = std::make_shared<const DgCategory>(grothendieck(*x));
        auto eta = canonical_morphism(x, gr);
        auto s = check_one_morphism(eta);
        if (!s.ok) return CheckReport::fail("canonical morphism: " + s.message);
        r.checks += s.checks;
        auto grd = std::make_shared<const DgCategory>(grothendieck(*eta.target));
        DgFunctor composite = compose_functors(counit_functor(I, gr, grd), grothendieck_on_1(eta, gr, grd));
        ++r.checks;
        if (!functors_equal(composite, identity_functor(gr)))
            return CheckReport::fail("triangle identity Q_Gr(X) ∘ Gr(P, phi) = id fails");
    }
    // Δε ∘ ηΔ = id on Δ(C)
    {
        auto dc = diagonal(I, c);
        auto grd = std::make_shared<const DgCategory>(grothendieck(*dc));
        auto eta = canonical_morphism(dc, grd);
        auto q = counit_functor(I, c, grd);
        auto dq = diagonal_on_1(I, q);
        dq.source = eta.target;
        auto composite = compose_one_morphisms(dq, eta);
        auto id = identity_one_morphism(dc);
        for (int i = 0; i < I->object_count(); ++i) {
            ++r.checks;
            if (!functors_equal(composite.F[i], id.F[i]))
                return CheckReport::fail("triangle identity Delta(Q_C) ∘ (P, phi) = id fails on F(" + I->objects[i] + ")");
        }
        for (int a = 0; a < I->morphism_count(); ++a) {
            ++r.checks;
            if (composite.psi[a].components != id.psi[a].components)
                return CheckReport::fail("triangle identity Delta(Q_C) ∘ (P, phi) = id fails on psi(" +
                                         I->morphisms[a].name + ")");
        }
    }
    return r;
}

// ---------------------------------------------------------------- examples

namespace {

// one-object category with hom(o, p) = ⊕ over labels of A, composition
// through a label product that returns -1 when the product is zero
DgCategory labelled_over(const DgCategory& a, const std::vector<std::string>& objects,
                         const std::vector<std::vector<std::vector<std::string>>>& labels,
                         std::function<int(int, int, int, int, int)> product, std::vector<int> unit_label) {
    if (a.object_count() != 1) throw std::invalid_argument("A must have a single object");
    auto A = std::make_shared<const DgCategory>(a);
    const int n = static_cast<int>(objects.size());
    const int da = a.hom(0, 0).size();
    DgCategory c;
    c.objects = objects;
    c.homs.assign(n, std::vector<HomSpace>(n));
    for (int o = 0; o < n; ++o)
        for (int p = 0; p < n; ++p)
            for (const auto& l : labels[o][p])
                for (int t = 0; t < da; ++t) {
                    c.homs[o][p].names.push_back(l + ":" + a.hom(0, 0).names[t]);
                    c.homs[o][p].degrees.push_back(a.hom(0, 0).degrees[t]);
                }
    for (int o = 0; o < n; ++o) c.units.push_back(shifted(a.units[0], unit_label[o] * da));
    c.d_basis = [A, da](int, int, int f) { return shifted(A->d_basis(0, 0, f % da), f / da * da); };
    c.compose_basis = [A, da, product](int o, int p, int q, int g, int f) {
        const int l = product(o, p, q, g / da, f / da);
        if (l < 0) return SparseVec{};
        return shifted(A->compose_basis(0, 0, 0, g % da, f % da), l * da);
    };
    return c;
}

}  // namespace

DgCategory build_AQ(const DgCategory& a, const GradedQuiver& q) {
    const int n = q.vertex_count();
    // paths as arrow lists in written order, grouped by ends
    std::vector<std::vector<std::vector<std::vector<int>>>> paths(n, std::vector<std::vector<std::vector<int>>>(n));
    std::function<void(int, std::vector<int>&)> walk = [&](int s, std::vector<int>& p) {
        if (static_cast<int>(p.size()) > n) throw std::invalid_argument("quiver has an oriented cycle");
        const int t = p.empty() ? s : q.arrow(p.front()).target;
        paths[s][t].push_back(p);
        for (int b : q.arrows_from(t)) {
            p.insert(p.begin(), b);
            walk(s, p);
            p.erase(p.begin());
        }
    };
    std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
    std::vector<int> unit_label(n, 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> p;
        walk(s, p);
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (const auto& p : paths[s][t]) {
                std::string name;
                for (int b : p) name += (name.empty() ? "" : " ") + q.arrow(b).name;
                labels[s][t].push_back(p.empty() ? "id_" + q.vertex(s) : name);
            }
    auto product = [paths](int o, int p, int r, int g, int f) {
        std::vector<int> w = paths[p][r][g];
        w.insert(w.end(), paths[o][p][f].begin(), paths[o][p][f].end());
        const auto& cand = paths[o][r];
        for (std::size_t k = 0; k < cand.size(); ++k)
            if (cand[k] == w) return static_cast<int>(k);
        return -1;
    };
    return labelled_over(a, q.vertices(), labels, product, unit_label);
}

DgCategory build_AS(const DgCategory& a, const std::vector<std::string>& objects,
                    const std::vector<std::vector<bool>>& leq) {
    const int n = static_cast<int>(objects.size());
    std::vector<std::vector<std::vector<std::string>>> labels(n, std::vector<std::vector<std::string>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[i][j]) labels[i][j].push_back(i == j ? "id_" + objects[i] : objects[i] + "<" + objects[j]);
    return labelled_over(a, objects, labels, [](int, int, int, int, int) { return 0; }, std::vector<int>(n, 0));
}

DgCategory build_AG(const DgCategory& a, const std::vector<std::string>& elements,
                    const std::vector<std::vector<int>>& table) {
    std::vector<std::vector<std::vector<std::string>>> labels{{elements}};
    auto product = [table](int, int, int, int g, int f) { return table[g][f]; };
    return labelled_over(a, {"*"}, labels, product, {0});
}

CheckReport check_iso_to_grothendieck(const CategoryPtr& direct, const IndexPtr& index, const CategoryPtr& a) {
    auto gr = std::make_shared<const DgCategory>(grothendieck(*diagonal(index, a)));
    const auto& D = *direct;
    const auto& G = *gr;
    const auto& I = *index;
    if (D.object_count() != G.object_count()) return CheckReport::fail("object counts differ");
    auto L = grothendieck_layout(*diagonal(index, a));
    DgFunctor phi{direct, gr, {}, {}};
    for (const auto& o : D.objects) {
        int i = -1;
        for (int k = 0; k < I.object_count(); ++k)
            if (I.objects[k] == o) i = k;
        if (i < 0) return CheckReport::fail("no index object named " + o);
        phi.object_map.push_back(L.object(i, 0));
    }
    std::map<std::tuple<int, int, int>, int> where;
    for (int x = 0; x < D.object_count(); ++x)
        for (int y = 0; y < D.object_count(); ++y) {
            const auto& hd = D.hom(x, y);
            const auto& hg = G.hom(phi.object_map[x], phi.object_map[y]);
            if (hd.size() != hg.size())
                return CheckReport::fail("hom(" + D.objects[x] + "," + D.objects[y] + ") has the wrong dimension");
            std::map<std::string, int> by_name;
            for (int t = 0; t < hg.size(); ++t) by_name[hg.names[t]] = t;
            for (int t = 0; t < hd.size(); ++t) {
                auto it = by_name.find(hd.names[t]);
                if (it == by_name.end()) return CheckReport::fail("no component named " + hd.names[t]);
                where[{x, y, t}] = it->second;
                by_name.erase(it);
            }
        }
    phi.map_basis = [where](int x, int y, int f) { return unit_vector(where.at({x, y, f})); };
    auto r = check_dg_functor(phi);
    if (!r.ok) return CheckReport::fail("explicit map is not a dg functor: " + r.message);
    return r;
}

}  // namespace dgw
