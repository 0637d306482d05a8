#include "dgw/io.hpp"

#include <fstream>
#include <sstream>

namespace dgw::io {

namespace {

template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(what + ": " + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> split_path(const std::string& name) {
    std::vector<std::string> out;
    std::istringstream is(name);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

json vec_to_json(const HomSpace& h, const SparseVec& v) {
    json out = json::array();
    for (const auto& [k, c] : v) out.push_back({{"basis", h.names.at(k)}, {"coeff", scalar_str(c)}});
    return out;
}

int basis_index(const HomSpace& h, const std::string& name) {
    for (int k = 0; k < h.size(); ++k)
        if (h.names[k] == name) return k;
    throw InputError("unknown basis element " + name);
}

SparseVec vec_from_json(const HomSpace& h, const json& j) {
    SparseVec v;
    for (const auto& t : j) add_entry(v, basis_index(h, field(t, "basis").get<std::string>()), scalar_from(field(t, "coeff")));
    return v;
}

}  // namespace

std::string scalar_str(const Scalar& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

Scalar scalar_from(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw InputError("coefficient must be a string literal");
    return guarded("coefficient " + j.get<std::string>(), [&] { return Scalar::parse(j.get<std::string>()); });
}

json quiver_to_json(const GradedQuiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"source", q.vertex(a.source)}, {"target", q.vertex(a.target)}, {"degree", a.degree}});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

QuiverPtr quiver_from_json(const json& j) {
    return guarded("quiver", [&] {
        auto q = std::make_shared<GradedQuiver>();
        for (const auto& v : field(j, "vertices")) {
            const auto name = v.get<std::string>();
            if (q->find_vertex(name)) throw InputError("duplicate vertex " + name);
            q->add_vertex(name);
        }
        for (const auto& a : field(j, "arrows")) {
            const auto name = field(a, "name").get<std::string>();
            if (q->find_arrow(name)) throw InputError("duplicate arrow " + name);
            q->add_arrow(name, field(a, "source").get<std::string>(), field(a, "target").get<std::string>(),
                         a.value("degree", 0));
        }
        return QuiverPtr(q);
    });
}

json potential_to_json(const Potential& w) {
    json terms = json::array();
    for (const auto& [word, c] : w.terms()) {
        json cycle = json::array();
        for (int a : word) cycle.push_back(w.quiver().arrow(a).name);
        terms.push_back({{"coeff", scalar_str(c)}, {"cycle", cycle}});
    }
    return {{"terms", terms}};
}

Potential potential_from_json(const json& j, const AlgebraPtr& alg) {
    return guarded("potential", [&] {
        Potential w(alg);
        for (const auto& t : field(j, "terms")) {
            std::vector<std::string> names = field(t, "cycle").get<std::vector<std::string>>();
            for (const auto& n : names)
                if (!alg->quiver().find_arrow(n)) throw InputError("unknown arrow " + n);
            w.add_named_word(names, scalar_from(field(t, "coeff")));
        }
        return w;
    });
}

json qp_to_json(const QP& qp) {
    return {{"quiver", quiver_to_json(qp.q())}, {"potential", potential_to_json(qp.potential)}, {"truncation", qp.order()}};
}

QP qp_from_json(const json& j) {
    return guarded("QP", [&] {
        auto q = quiver_from_json(field(j, "quiver"));
        const int order = field(j, "truncation").get<int>();
        if (order < 1) throw InputError("truncation must be at least 1");
        QP qp = make_qp(q, order);
        qp.potential = potential_from_json(field(j, "potential"), qp.potential.algebra());
        return qp;
    });
}

json dim_table_to_json(const GradedQuiver& q, const DimTable& t) {
    json pairs = json::object();
    for (const auto& [ij, d] : t.by_pair) pairs[q.vertex(ij.first) + "->" + q.vertex(ij.second)] = d;
    return {{"total", t.total}, {"by_pair", pairs}};
}

json ginzburg_to_json(const GinzburgPresentation& g) {
    const auto& t = *g.tilde;
    json d = json::object();
    for (int a = 0; a < t.arrow_count(); ++a) {
        json terms = json::array();
        for (const auto& [p, c] : g.generator_d[a].terms())
            terms.push_back({{"coeff", scalar_str(c)}, {"path", split_path(path_str(t, p))}});
        d[t.arrow(a).name] = terms;
    }
    return {{"quiver", quiver_to_json(t)}, {"differential", d}, {"truncation", g.order()}};
}

json index_to_json(const IndexCategory& c) {
    json morphisms = json::array();
    for (const auto& m : c.morphisms)
        morphisms.push_back({{"name", m.name}, {"source", c.objects[m.source]}, {"target", c.objects[m.target]}});
    json identity = json::object();
    for (int i = 0; i < c.object_count(); ++i) identity[c.objects[i]] = c.morphisms[c.identity[i]].name;
    json compose = json::array();
    for (int b = 0; b < c.morphism_count(); ++b)
        for (int a = 0; a < c.morphism_count(); ++a)
            if (c.comp[b][a] >= 0)
                compose.push_back({{"b", c.morphisms[b].name}, {"a", c.morphisms[a].name},
                                   {"result", c.morphisms[c.comp[b][a]].name}});
    return {{"objects", c.objects}, {"morphisms", morphisms}, {"identity", identity}, {"compose", compose}};
}

IndexCategory index_from_json(const json& j) {
    return guarded("index category", [&] {
        IndexCategory c;
        c.objects = field(j, "objects").get<std::vector<std::string>>();
        auto object = [&c](const std::string& n) {
            for (int i = 0; i < c.object_count(); ++i)
                if (c.objects[i] == n) return i;
            throw InputError("unknown index object " + n);
        };
        for (const auto& m : field(j, "morphisms"))
            c.morphisms.push_back({field(m, "name").get<std::string>(), object(field(m, "source").get<std::string>()),
                                   object(field(m, "target").get<std::string>())});
        c.identity.assign(c.object_count(), -1);
        for (const auto& [o, m] : field(j, "identity").items()) c.identity[object(o)] = c.morphism_index(m.get<std::string>());
        c.comp.assign(c.morphism_count(), std::vector<int>(c.morphism_count(), -1));
        for (const auto& e : field(j, "compose"))
            c.comp[c.morphism_index(field(e, "b").get<std::string>())][c.morphism_index(field(e, "a").get<std::string>())] =
                c.morphism_index(field(e, "result").get<std::string>());
        auto r = check_index_category(c);
        if (!r.ok) throw InputError("index category: " + r.message);
        return c;
    });
}

json dgcat_to_json(const DgCategory& c) {
    const int n = c.object_count();
    json homs = json::array(), units = json::object(), compose = json::array(), d = json::array();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& h = c.hom(x, y);
            if (h.size() == 0) continue;
            json basis = json::array();
            for (int k = 0; k < h.size(); ++k) basis.push_back({{"name", h.names[k]}, {"degree", h.degrees[k]}});
            homs.push_back({{"from", c.objects[x]}, {"to", c.objects[y]}, {"basis", basis}});
            for (int f = 0; f < h.size(); ++f) {
                auto df = c.d_basis(x, y, f);
                if (!df.empty())
                    d.push_back({{"from", c.objects[x]}, {"to", c.objects[y]}, {"f", h.names[f]}, {"result", vec_to_json(h, df)}});
            }
        }
    for (int x = 0; x < n; ++x) units[c.objects[x]] = vec_to_json(c.hom(x, x), c.units[x]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int g = 0; g < c.hom(y, z).size(); ++g)
                    for (int f = 0; f < c.hom(x, y).size(); ++f) {
                        auto gf = c.compose_basis(x, y, z, g, f);
                        if (gf.empty()) continue;
                        compose.push_back({{"x", c.objects[x]}, {"y", c.objects[y]}, {"z", c.objects[z]},
                                           {"g", c.hom(y, z).names[g]}, {"f", c.hom(x, y).names[f]},
                                           {"result", vec_to_json(c.hom(x, z), gf)}});
                    }
    return {{"objects", c.objects}, {"homs", homs}, {"units", units}, {"compose", compose}, {"d", d}};
}

DgCategory dgcat_from_json(const json& j) {
    return guarded("dg category", [&] {
        TableCategory t(field(j, "objects").get<std::vector<std::string>>());
        DgCategory probe;
        probe.objects = t.objects;
        auto object = [&probe](const json& v) { return probe.object_index(v.get<std::string>()); };
        for (const auto& h : field(j, "homs")) {
            const int x = object(field(h, "from")), y = object(field(h, "to"));
            for (const auto& b : field(h, "basis"))
                t.add_basis(x, y, field(b, "name").get<std::string>(), field(b, "degree").get<int>());
        }
        for (const auto& [o, v] : field(j, "units").items()) {
            const int x = probe.object_index(o);
            t.units[x] = vec_from_json(t.homs[x][x], v);
        }
        for (const auto& e : field(j, "compose")) {
            const int x = object(field(e, "x")), y = object(field(e, "y")), z = object(field(e, "z"));
            const int g = basis_index(t.homs[y][z], field(e, "g").get<std::string>());
            const int f = basis_index(t.homs[x][y], field(e, "f").get<std::string>());
            t.compose[{x, y, z, g, f}] = vec_from_json(t.homs[x][z], field(e, "result"));
        }
        for (const auto& e : field(j, "d")) {
            const int x = object(field(e, "from")), y = object(field(e, "to"));
            t.d[{x, y, basis_index(t.homs[x][y], field(e, "f").get<std::string>())}] =
                vec_from_json(t.homs[x][y], field(e, "result"));
        }
        return t.build();
    });
}

json functor_to_json(const DgFunctor& f) {
    const auto& A = *f.source;
    const auto& B = *f.target;
    json objects = json::object(), map = json::array();
    for (int x = 0; x < A.object_count(); ++x) objects[A.objects[x]] = B.objects[f.object_map[x]];
    for (int x = 0; x < A.object_count(); ++x)
        for (int y = 0; y < A.object_count(); ++y)
            for (int k = 0; k < A.hom(x, y).size(); ++k) {
                auto img = f.map_basis(x, y, k);
                if (img.empty()) continue;
                map.push_back({{"from", A.objects[x]}, {"to", A.objects[y]}, {"f", A.hom(x, y).names[k]},
                               {"image", vec_to_json(B.hom(f.object_map[x], f.object_map[y]), img)}});
            }
    return {{"object_map", objects}, {"map", map}};
}

DgFunctor functor_from_json(const json& j, const CategoryPtr& source, const CategoryPtr& target) {
    return guarded("dg functor", [&] {
        DgFunctor f{source, target, std::vector<int>(source->object_count(), -1), {}};
        for (const auto& [o, v] : field(j, "object_map").items())
            f.object_map[source->object_index(o)] = target->object_index(v.get<std::string>());
        for (int m : f.object_map)
            if (m < 0) throw InputError("object map is not total");
        auto table = std::make_shared<std::map<std::tuple<int, int, int>, SparseVec>>();
        for (const auto& e : field(j, "map")) {
            const int x = source->object_index(field(e, "from").get<std::string>());
            const int y = source->object_index(field(e, "to").get<std::string>());
            const int k = basis_index(source->hom(x, y), field(e, "f").get<std::string>());
            (*table)[{x, y, k}] = vec_from_json(target->hom(f.object_map[x], f.object_map[y]), field(e, "image"));
        }
        f.map_basis = [table](int x, int y, int k) {
            auto it = table->find({x, y, k});
            return it == table->end() ? SparseVec{} : it->second;
        };
        return f;
    });
}

json components_to_json(const DgNatTrans& a) {
    const auto& A = *a.from.source;
    const auto& B = *a.from.target;
    json comps = json::object();
    for (int x = 0; x < A.object_count(); ++x)
        comps[A.objects[x]] = vec_to_json(B.hom(a.from.object_map[x], a.to.object_map[x]), a.components[x]);
    return {{"degree", a.degree}, {"components", comps}};
}

DgNatTrans nat_trans_from_json(const json& j, const DgFunctor& from, const DgFunctor& to) {
    return guarded("natural transformation", [&] {
        const auto& A = *from.source;
        const auto& B = *from.target;
        DgNatTrans a{from, to, j.value("degree", 0), std::vector<SparseVec>(A.object_count())};
        for (const auto& [o, v] : field(j, "components").items()) {
            const int x = A.object_index(o);
            a.components[x] = vec_from_json(B.hom(from.object_map[x], to.object_map[x]), v);
        }
        return a;
    });
}

json colax_to_json(const ColaxFunctor& x) {
    const auto& I = *x.index;
    json objects = json::object(), morphisms = json::object(), counit = json::object(), co = json::object();
    for (int i = 0; i < I.object_count(); ++i) {
        objects[I.objects[i]] = dgcat_to_json(*x.at_object[i]);
        counit[I.objects[i]] = components_to_json(x.counit[i]);
    }
    for (int a = 0; a < I.morphism_count(); ++a) morphisms[I.morphisms[a].name] = functor_to_json(x.at_morphism[a]);
    for (const auto& [ba, t] : x.cocomposition)
        co["(" + I.morphisms[ba.first].name + "," + I.morphisms[ba.second].name + ")"] = components_to_json(t);
    return {{"index", index_to_json(I)}, {"at_object", objects}, {"at_morphism", morphisms}, {"counit", counit},
            {"cocomposition", co}};
}

std::shared_ptr<const ColaxFunctor> colax_from_json(const json& j) {
    return guarded("colax functor", [&] {
        ColaxFunctor x;
        x.index = std::make_shared<const IndexCategory>(index_from_json(field(j, "index")));
        const auto& I = *x.index;
        for (int i = 0; i < I.object_count(); ++i)
            x.at_object.push_back(std::make_shared<const DgCategory>(dgcat_from_json(field(field(j, "at_object"), I.objects[i].c_str()))));
        for (int a = 0; a < I.morphism_count(); ++a) {
            const auto& m = I.morphisms[a];
            x.at_morphism.push_back(functor_from_json(field(field(j, "at_morphism"), m.name.c_str()), x.at_object[m.source],
                                                      x.at_object[m.target]));
        }
        for (int i = 0; i < I.object_count(); ++i)
            x.counit.push_back(nat_trans_from_json(field(field(j, "counit"), I.objects[i].c_str()),
                                                   x.at_morphism[I.identity[i]], identity_functor(x.at_object[i])));
        for (int b = 0; b < I.morphism_count(); ++b)
            for (int a = 0; a < I.morphism_count(); ++a) {
                const int ba = I.compose(b, a);
                if (ba < 0) continue;
                const std::string key = "(" + I.morphisms[b].name + "," + I.morphisms[a].name + ")";
                x.cocomposition.emplace(std::make_pair(b, a),
                                        nat_trans_from_json(field(field(j, "cocomposition"), key.c_str()), x.at_morphism[ba],
                                                            compose_functors(x.at_morphism[b], x.at_morphism[a])));
            }
        return std::shared_ptr<const ColaxFunctor>(std::make_shared<const ColaxFunctor>(std::move(x)));
    });
}

json action_to_json(const GroupAction& g, const GradedQuiver& q) {
    const auto& G = *g.group;
    json elements = json::array(), table = json::object(), vmap = json::object(), amap = json::object();
    for (int e = 0; e < G.morphism_count(); ++e) {
        const auto& name = G.morphisms[e].name;
        elements.push_back(name);
        for (int f = 0; f < G.morphism_count(); ++f) table[name][G.morphisms[f].name] = G.morphisms[G.compose(e, f)].name;
        vmap[name] = json::object();
        amap[name] = json::object();
        for (int v = 0; v < q.vertex_count(); ++v) vmap[name][q.vertex(v)] = q.vertex(g.on_vertices[e][v]);
        for (int a = 0; a < q.arrow_count(); ++a) amap[name][q.arrow(a).name] = q.arrow(g.on_arrows[e][a]).name;
    }
    return {{"group", {{"elements", elements}, {"table", table}}}, {"vertex_map", vmap}, {"arrow_map", amap}};
}

GroupAction action_from_json(const json& j, const GradedQuiver& q) {
    return guarded("action", [&] {
        const auto& grp = field(j, "group");
        auto elements = field(grp, "elements").get<std::vector<std::string>>();
        auto index = [&elements](const std::string& n) {
            for (std::size_t k = 0; k < elements.size(); ++k)
                if (elements[k] == n) return static_cast<int>(k);
            throw InputError("unknown group element " + n);
        };
        const int n = static_cast<int>(elements.size());
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
                table[e][f] = index(field(field(field(grp, "table"), elements[e].c_str()), elements[f].c_str()).get<std::string>());
        GroupAction g;
        g.group = std::make_shared<const IndexCategory>(monoid_category(elements, table));
        if (!check_index_category(*g.group).ok) throw InputError("group table is not associative or unital");
        for (int e = 0; e < n; ++e) {
            const auto& vm = field(field(j, "vertex_map"), elements[e].c_str());
            const auto& am = field(field(j, "arrow_map"), elements[e].c_str());
            std::vector<int> v, a;
            for (const auto& name : q.vertices()) v.push_back(q.vertex_index(field(vm, name.c_str()).get<std::string>()));
            for (const auto& ar : q.arrows()) a.push_back(q.arrow_index(field(am, ar.name.c_str()).get<std::string>()));
            g.on_vertices.push_back(std::move(v));
            g.on_arrows.push_back(std::move(a));
        }
        return g;
    });
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace dgw::io
