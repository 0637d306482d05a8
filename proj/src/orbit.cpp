#include "dgw/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgw {

std::string shift_indices(const std::string& name, int shift, int modulus) {
    std::string out;
    for (std::size_t k = 0; k < name.size();) {
        if (!std::isdigit(static_cast<unsigned char>(name[k]))) {
            out += name[k++];
            continue;
        }
        std::size_t e = k;
        while (e < name.size() && std::isdigit(static_cast<unsigned char>(name[e]))) ++e;
        const int i = std::stoi(name.substr(k, e - k));
        out += std::to_string(((i - 1 + shift) % modulus + modulus) % modulus + 1);
        k = e;
    }
    return out;
}

GroupAction index_shift_action(const GradedQuiver& q, int n, int shift, int modulus) {
    GroupAction g;
    g.group = std::make_shared<const IndexCategory>(cyclic_group_category(n));
    for (int k = 0; k < n; ++k) {
        std::vector<int> v, a;
        for (const auto& name : q.vertices()) v.push_back(q.vertex_index(shift_indices(name, k * shift, modulus)));
        for (const auto& ar : q.arrows()) {
            const std::string img = shift_indices(ar.name, k * shift, modulus);
            auto found = q.find_arrow(img);
            if (!found) throw std::invalid_argument("index shift sends " + ar.name + " to missing arrow " + img);
            a.push_back(*found);
        }
        g.on_vertices.push_back(std::move(v));
        g.on_arrows.push_back(std::move(a));
    }
    return g;
}

namespace {

Potential act_on(const GroupAction& g, int e, const Potential& w) {
    Potential out(w.algebra());
    for (const auto& [word, c] : w.terms()) {
        Word img;
        for (int a : word) img.push_back(g.on_arrows[e][a]);
        out.add_word(img, c);
    }
    return out;
}

}  // namespace

CheckReport check_action(const GroupAction& g, const QP& qp, bool require_free) {
    const auto& G = *g.group;
    const auto& q = qp.q();
    CheckReport r;
    if (G.object_count() != 1) return CheckReport::fail("group must have a single object");
    const int n = G.morphism_count();
    if (static_cast<int>(g.on_vertices.size()) != n || static_cast<int>(g.on_arrows.size()) != n)
        return CheckReport::fail("one vertex and one arrow map per group element expected");
    for (int e = 0; e < n; ++e) {
        const std::string& name = G.morphisms[e].name;
        std::vector<int> sv = g.on_vertices[e], sa = g.on_arrows[e];
        std::sort(sv.begin(), sv.end());
        std::sort(sa.begin(), sa.end());
        for (int v = 0; v < q.vertex_count(); ++v)
            if (sv[v] != v) return CheckReport::fail(name + " does not permute the vertices");
        for (int a = 0; a < q.arrow_count(); ++a)
            if (sa[a] != a) return CheckReport::fail(name + " does not permute the arrows");
        for (int a = 0; a < q.arrow_count(); ++a) {
            const auto& ar = q.arrow(a);
            const auto& im = q.arrow(g.on_arrows[e][a]);
            ++r.checks;
            if (im.source != g.on_vertices[e][ar.source] || im.target != g.on_vertices[e][ar.target] ||
                im.degree != ar.degree)
                return CheckReport::fail(name + " does not respect the ends of " + ar.name);
        }
        for (int f = 0; f < n; ++f) {
            const int fe = G.compose(f, e);
            for (int v = 0; v < q.vertex_count(); ++v) {
                ++r.checks;
                if (g.on_vertices[fe][v] != g.on_vertices[f][g.on_vertices[e][v]])
                    return CheckReport::fail("not a homomorphism at " + G.morphisms[f].name + "," + name);
            }
            for (int a = 0; a < q.arrow_count(); ++a) {
                ++r.checks;
                if (g.on_arrows[fe][a] != g.on_arrows[f][g.on_arrows[e][a]])
                    return CheckReport::fail("not a homomorphism at " + G.morphisms[f].name + "," + name);
            }
        }
        ++r.checks;
        if (!potentials_equal_cyclic(act_on(g, e, qp.potential), qp.potential))
            return CheckReport::fail("potential is not invariant under " + name);
        if (require_free && !G.is_identity(e))
            for (int v = 0; v < q.vertex_count(); ++v)
                if (g.on_vertices[e][v] == v)
                    return CheckReport::fail(name + " fixes vertex " + q.vertex(v) + "; only free actions are supported");
    }
    return r;
}

std::string orbit_name(const std::vector<std::string>& members) {
    return "G" + *std::min_element(members.begin(), members.end());
}

namespace {

// orbit index per element, orbits numbered by their least member index
std::vector<int> orbits_of(const std::vector<std::vector<int>>& perms, int size, int& count) {
    std::vector<int> orbit(size, -1);
    count = 0;
    for (int x = 0; x < size; ++x) {
        if (orbit[x] >= 0) continue;
        for (const auto& p : perms) orbit[p[x]] = count;
        ++count;
    }
    return orbit;
}

}  // namespace

QP orbit_qp(const GroupAction& g, const QP& qp) {
    auto r = check_action(g, qp, true);
    if (!r.ok)
        throw std::invalid_argument("orbit QP needs a free action (general skew group algebras are out of scope): " +
                                    r.message);
    const auto& q = qp.q();
    int nv = 0, na = 0;
    auto vo = orbits_of(g.on_vertices, q.vertex_count(), nv);
    auto ao = orbits_of(g.on_arrows, q.arrow_count(), na);
    std::vector<std::vector<std::string>> vnames(nv), anames(na);
    for (int v = 0; v < q.vertex_count(); ++v) vnames[vo[v]].push_back(q.vertex(v));
    for (int a = 0; a < q.arrow_count(); ++a) anames[ao[a]].push_back(q.arrow(a).name);
    auto out = std::make_shared<GradedQuiver>();
    for (const auto& m : vnames) out->add_vertex(orbit_name(m));
    std::vector<int> first(na, -1);
    for (int a = q.arrow_count() - 1; a >= 0; --a) first[ao[a]] = a;
    for (int o = 0; o < na; ++o) {
        const auto& ar = q.arrow(first[o]);
        out->add_arrow(orbit_name(anames[o]), vo[ar.source], vo[ar.target], ar.degree);
    }
    QP res = make_qp(out, qp.order());
    for (const auto& [word, c] : qp.potential.terms()) {
        Word img;
        for (int a : word) img.push_back(ao[a]);
        res.potential.add_word(img, c);
    }
    return res;
}

CheckReport check_strict_action(const IndexPtr& group, const CategoryPtr& c, const std::vector<DgFunctor>& act) {
    const auto& G = *group;
    CheckReport r;
    for (int e = 0; e < G.morphism_count(); ++e) {
        auto s = check_dg_functor(act[e]);
        if (!s.ok) return CheckReport::fail(G.morphisms[e].name + ": " + s.message);
        r.checks += s.checks;
        if (G.is_identity(e) && !functors_equal(act[e], identity_functor(c)))
            return CheckReport::fail("the unit does not act trivially");
        for (int f = 0; f < G.morphism_count(); ++f) {
            ++r.checks;
            if (!functors_equal(act[G.compose(f, e)], compose_functors(act[f], act[e])))
                return CheckReport::fail("not a strict action at " + G.morphisms[f].name + "," + G.morphisms[e].name);
        }
    }
    return r;
}

std::shared_ptr<const ColaxFunctor> strict_action(const IndexPtr& group, const CategoryPtr& c,
                                                  const std::vector<DgFunctor>& act) {
    const auto& G = *group;
    ColaxFunctor x;
    x.index = group;
    x.at_object = {c};
    x.at_morphism = act;
    auto units = [&c](const DgFunctor& f) {
        std::vector<SparseVec> u;
        for (int o : f.object_map) u.push_back(c->units[o]);
        return u;
    };
    x.counit.push_back(DgNatTrans{act[G.identity[0]], identity_functor(c), 0, units(act[G.identity[0]])});
    for (int b = 0; b < G.morphism_count(); ++b)
        for (int a = 0; a < G.morphism_count(); ++a) {
            const auto& f = act[G.compose(b, a)];
            x.cocomposition.emplace(std::make_pair(b, a), DgNatTrans{f, compose_functors(act[b], act[a]), 0, units(f)});
        }
    return std::make_shared<const ColaxFunctor>(std::move(x));
}

DgCategory orbit_category(const IndexPtr& group, const CategoryPtr& c, const std::vector<DgFunctor>& act) {
    return grothendieck(*strict_action(group, c, act));
}

std::vector<DgFunctor> ginzburg_action(const GroupAction& g, const GinzburgPresentation& gp, const CategoryPtr& c) {
    const auto& t = *gp.tilde;
    const int n = gp.qp.q().arrow_count();
    std::vector<DgFunctor> out;
    for (std::size_t e = 0; e < g.on_arrows.size(); ++e) {
        std::vector<int> arrow_map(t.arrow_count());
        for (int a = 0; a < n; ++a) {
            arrow_map[a] = g.on_arrows[e][a];
            arrow_map[gp.bar(a)] = gp.bar(g.on_arrows[e][a]);
        }
        for (int v = 0; v < t.vertex_count(); ++v) arrow_map[gp.loop(v)] = gp.loop(g.on_vertices[e][v]);
        const std::vector<int> vmap = g.on_vertices[e];
        auto tilde = gp.tilde;
        auto cat = c;
        DgFunctor f{c, c, vmap, {}};
        f.map_basis = [tilde, cat, vmap, arrow_map](int x, int y, int b) {
            const std::string& name = cat->hom(x, y).names[b];
            std::string img;
            if (name.rfind("e_", 0) == 0 && x == y && name == "e_" + tilde->vertex(x)) {
                img = "e_" + tilde->vertex(vmap[x]);
            } else {
                std::istringstream is(name);
                std::string tok;
                while (is >> tok) img += (img.empty() ? "" : " ") + tilde->arrow(arrow_map[tilde->arrow_index(tok)]).name;
            }
            const auto& h = cat->hom(vmap[x], vmap[y]);
            for (int k = 0; k < h.size(); ++k)
                if (h.names[k] == img) return unit_vector(k);
            throw std::logic_error("image path " + img + " missing from the truncated basis");
        };
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<OrbitDimensionRow> orbit_dimension_diagnostic(const GroupAction& g, const QP& qp, int order) {
    auto gp = build_ginzburg(qp, order);
    auto c = std::make_shared<const DgCategory>(truncated_ginzburg_as_dgcat(gp));
    auto oc = orbit_category(g.group, c, ginzburg_action(g, gp, c));
    QP qg = orbit_qp(g, qp);
    auto gg = build_ginzburg(qg, order);
    auto cg = truncated_ginzburg_as_dgcat(gg);
    const auto& q = qp.q();
    // representative of each orbit: its least-index member
    std::vector<int> rep;
    std::set<int> seen;
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (seen.count(v)) continue;
        rep.push_back(v);
        for (const auto& p : g.on_vertices) seen.insert(p[v]);
    }
    std::vector<OrbitDimensionRow> rows;
    for (std::size_t i = 0; i < rep.size(); ++i)
        for (std::size_t j = 0; j < rep.size(); ++j) {
            const int u = static_cast<int>(i), w = static_cast<int>(j);  // orbit QP vertices in the same order
            std::map<int, std::pair<int, int>> by_degree;
            for (int d : oc.hom(rep[i], rep[j]).degrees) ++by_degree[d].first;
            for (int d : cg.hom(u, w).degrees) ++by_degree[d].second;
            for (const auto& [d, n] : by_degree)
                rows.push_back({q.vertex(rep[i]), q.vertex(rep[j]), d, n.first, n.second});
        }
    return rows;
}

}  // namespace dgw

namespace dgw {

namespace {

std::string transported_name(const GradedQuiver& from, const std::vector<int>& on_arrows, const std::string& name) {
    if (auto a = from.find_arrow(name)) return from.arrow(on_arrows[*a]).name;
    if (!name.empty() && name.back() == '*')
        return star_name(transported_name(from, on_arrows, name.substr(0, name.size() - 1)));
    if (name.size() > 2 && name.front() == '[' && name.back() == ']') {
        int depth = 0;
        for (std::size_t k = 1; k + 1 < name.size(); ++k) {
            if (name[k] == '[') ++depth;
            if (name[k] == ']') --depth;
            if (name[k] == ',' && depth == 0)
                return bracket_name(transported_name(from, on_arrows, name.substr(1, k - 1)),
                                    transported_name(from, on_arrows, name.substr(k + 1, name.size() - k - 2)));
        }
    }
    throw std::invalid_argument("cannot transport arrow " + name);
}

}  // namespace

GroupAction transport_action(const GroupAction& g, const GradedQuiver& from, const GradedQuiver& to) {
    GroupAction out;
    out.group = g.group;
    for (std::size_t e = 0; e < g.on_vertices.size(); ++e) {
        std::vector<int> v, a;
        for (const auto& name : to.vertices()) v.push_back(to.vertex_index(from.vertex(g.on_vertices[e][from.vertex_index(name)])));
        for (const auto& ar : to.arrows()) a.push_back(to.arrow_index(transported_name(from, g.on_arrows[e], ar.name)));
        out.on_vertices.push_back(std::move(v));
        out.on_arrows.push_back(std::move(a));
    }
    return out;
}

std::optional<std::map<std::string, std::string>> arrow_renaming(const QP& a, const QP& b) {
    const auto& qa = a.q();
    const auto& qb = b.q();
    if (qa.vertices() != qb.vertices() || qa.arrow_count() != qb.arrow_count()) return std::nullopt;
    auto key = [](const GradedQuiver& q, const Arrow& ar) {
        return std::make_tuple(q.vertex(ar.source), q.vertex(ar.target), ar.degree);
    };
    std::map<std::tuple<std::string, std::string, int>, std::pair<std::vector<std::string>, std::vector<std::string>>> groups;
    for (const auto& ar : qa.arrows()) groups[key(qa, ar)].first.push_back(ar.name);
    for (const auto& ar : qb.arrows()) groups[key(qb, ar)].second.push_back(ar.name);
    for (auto& [k, g] : groups) {
        if (g.first.size() != g.second.size()) return std::nullopt;
        std::sort(g.second.begin(), g.second.end());
    }
    const auto terms = a.potential.named_terms();
    auto matches = [&](const std::map<std::string, std::string>& rename) {
        Potential w(b.potential.algebra());
        for (const auto& [names, c] : terms) {
            std::vector<std::string> mapped;
            for (const auto& n : names) mapped.push_back(rename.at(n));
            w.add_named_word(mapped, c);
        }
        return potentials_equal_cyclic(w, b.potential);
    };
    // odometer over the permutations of every parallel class
    std::vector<std::pair<std::vector<std::string>*, std::vector<std::string>*>> classes;
    for (auto& [k, g] : groups) classes.push_back({&g.first, &g.second});
    while (true) {
        std::map<std::string, std::string> rename;
        for (auto& [src, dst] : classes)
            for (std::size_t k = 0; k < src->size(); ++k) rename[(*src)[k]] = (*dst)[k];
        if (matches(rename)) return rename;
        std::size_t c = 0;
        for (; c < classes.size(); ++c)
            if (std::next_permutation(classes[c].second->begin(), classes[c].second->end())) break;
        if (c == classes.size()) return std::nullopt;
    }
}

}  // namespace dgw
