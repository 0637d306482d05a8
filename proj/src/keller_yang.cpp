#include "dgw/keller_yang.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dgw {

int TruncatedModule::generator_index(const std::string& name) const {
    for (std::size_t h = 0; h < generators.size(); ++h)
        if (generators[h].name == name) return static_cast<int>(h);
    throw std::out_of_range("no module generator " + name);
}

std::vector<int> TruncatedModule::block_generators(int block) const {
    std::vector<int> out;
    for (std::size_t h = 0; h < generators.size(); ++h)
        if (generators[h].block == block) out.push_back(static_cast<int>(h));
    return out;
}

int TruncatedModule::degree(int h, const Path& p) const { return generators[h].degree + p.degree(quiver()); }

int TruncatedModule::weight(int h, const Path& p) const { return generators[h].weight + gamma.algebra->weight(p); }

void TruncatedModule::add(ModuleVec& v, int h, const Path& p, const Scalar& c) const {
    if (c.is_zero() || weight(h, p) > order) return;
    auto [it, fresh] = v.try_emplace({h, p}, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

ModuleVec TruncatedModule::times(const ModuleVec& v, const Path& p, const Scalar& c) const {
    ModuleVec out;
    for (const auto& [hq, x] : v) {
        auto r = compose_paths(quiver(), hq.second, p);
        if (r) add(out, hq.first, *r, x * c);
    }
    return out;
}

ModuleVec TruncatedModule::times(const ModuleVec& v, const Element& e) const {
    ModuleVec out;
    for (const auto& [p, c] : e.terms())
        for (const auto& [k, x] : times(v, p, c)) add(out, k.first, k.second, x);
    return out;
}

ModuleVec TruncatedModule::d(const ModuleVec& v) const {
    ModuleVec out;
    for (const auto& [hp, c] : v) {
        const auto& [h, p] = hp;
        for (const auto& [k, x] : times(d_generator[h], p, c)) add(out, k.first, k.second, x);
        const Scalar sign = generators[h].degree % 2 == 0 ? c : -c;
        const Element dp = differential(gamma, p);
        for (const auto& [r, y] : dp.terms()) add(out, h, r, sign * y);
    }
    return out;
}

namespace {

void require_independent(const QP& qp, const std::vector<int>& vertices) {
    const auto& q = qp.q();
    std::set<int> in(vertices.begin(), vertices.end());
    if (in.size() != vertices.size()) throw std::invalid_argument("mutated vertices repeat");
    for (int i : vertices) {
        auto r = check_mutable(qp, i);
        if (!r.ok) throw MutationError("not mutable at " + q.vertex(i) + ": " + r.message);
    }
    for (const auto& a : q.arrows())
        if (in.count(a.source) && in.count(a.target))
            throw std::invalid_argument("mutated vertices " + q.vertex(a.source) + " and " + q.vertex(a.target) +
                                        " are adjacent");
}

int out_weight(const GradedQuiver& q, int i, const std::optional<WeightGrading>& w) {
    if (!w) return 0;
    std::set<int> seen;
    for (int a : q.arrows_from(i)) seen.insert(w->arrow[a]);
    if (seen.size() > 1)
        throw std::invalid_argument("arrows leaving " + q.vertex(i) + " carry different weights");
    return seen.empty() ? 0 : *seen.begin();
}

std::string copy_name(const GradedQuiver& q, int alpha) {
    return "e_" + q.vertex(q.arrow(alpha).target) + ":" + q.arrow(alpha).name;
}

}  // namespace

TruncatedModule build_T(const QP& qp, const std::vector<int>& mutated, int order,
                        std::optional<WeightGrading> weights) {
    require_independent(qp, mutated);
    const auto& q = qp.q();
    TruncatedModule t;
    t.gamma = build_ginzburg(qp, order, weights);
    t.mutated = mutated;
    t.order = order;
    std::set<int> in(mutated.begin(), mutated.end());
    for (int j = 0; j < q.vertex_count(); ++j) {
        if (!in.count(j)) {
            t.generators.push_back({"e_" + q.vertex(j), j, 0, 0, j});
            continue;
        }
        t.generators.push_back({"s_" + q.vertex(j), j, -1, out_weight(q, j, weights), j});
        for (int a : q.arrows_from(j)) t.generators.push_back({copy_name(q, a), q.arrow(a).target, 0, 0, j});
    }
    t.d_generator.assign(t.generators.size(), ModuleVec{});
    for (int i : mutated) {
        const int s = t.generator_index("s_" + q.vertex(i));
        for (int a : q.arrows_from(i)) t.add(t.d_generator[s], t.generator_index(copy_name(q, a)), Path::of_arrow(a), 1);
    }
    return t;
}

std::string module_str(const TruncatedModule& t, const ModuleVec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [hp, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c << "*";
        os << t.generators[hp.first].name << "|" << path_str(t.quiver(), hp.second);
    }
    return os.str();
}

ModuleMap zero_map(const TruncatedModule& t, int degree) { return {degree, std::vector<ModuleVec>(t.generators.size())}; }

ModuleMap block_identity(const TruncatedModule& t, int block) {
    ModuleMap m = zero_map(t, 0);
    for (int h : t.block_generators(block)) t.add(m.images[h], h, Path::trivial(t.generators[h].vertex), 1);
    return m;
}

ModuleMap identity_map(const TruncatedModule& t) {
    ModuleMap m = zero_map(t, 0);
    for (int b = 0; b < t.block_count(); ++b) m = add_maps(m, block_identity(t, b));
    return m;
}

ModuleVec apply(const TruncatedModule& t, const ModuleMap& f, const ModuleVec& v) {
    ModuleVec out;
    for (const auto& [hp, c] : v)
        for (const auto& [k, x] : t.times(f.images[hp.first], hp.second, c)) t.add(out, k.first, k.second, x);
    return out;
}

ModuleMap compose(const TruncatedModule& t, const ModuleMap& f, const ModuleMap& g) {
    ModuleMap m{f.degree + g.degree, {}};
    for (const auto& img : g.images) m.images.push_back(apply(t, f, img));
    return m;
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g, const Scalar& c) {
    ModuleMap m = f;
    for (std::size_t h = 0; h < g.images.size(); ++h)
        for (const auto& [k, x] : g.images[h]) {
            auto [it, fresh] = m.images[h].try_emplace(k, c * x);
            if (fresh) continue;
            it->second += c * x;
            if (it->second.is_zero()) m.images[h].erase(it);
        }
    return m;
}

ModuleMap scaled(const ModuleMap& f, const Scalar& c) {
    ModuleMap m{f.degree, std::vector<ModuleVec>(f.images.size())};
    return add_maps(m, f, c);
}

ModuleMap end_differential(const TruncatedModule& t, const ModuleMap& f) {
    ModuleMap m{f.degree + 1, {}};
    const Scalar sign = f.degree % 2 == 0 ? Scalar(-1) : Scalar(1);
    for (std::size_t h = 0; h < f.images.size(); ++h) {
        ModuleVec v = t.d(f.images[h]);
        for (const auto& [k, x] : apply(t, f, t.d_generator[h])) t.add(v, k.first, k.second, sign * x);
        m.images.push_back(std::move(v));
    }
    return m;
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) { return f.images == g.images; }

SparseVec ModuleBasis::coords(const ModuleVec& v) const {
    SparseVec out;
    for (const auto& [k, c] : v) add_entry(out, index.at(k), c);
    return out;
}

ModuleBasis module_basis(const TruncatedModule& t) {
    ModuleBasis b;
    const auto& q = t.quiver();
    for (std::size_t h = 0; h < t.generators.size(); ++h)
        for (int from = 0; from < q.vertex_count(); ++from)
            for (auto& p : t.gamma.algebra->paths(from, t.generators[h].vertex)) {
                if (t.weight(static_cast<int>(h), p) > t.order) continue;
                b.index.emplace(std::make_pair(static_cast<int>(h), p), b.size());
                b.degrees.push_back(t.degree(static_cast<int>(h), p));
                b.elements.emplace_back(static_cast<int>(h), std::move(p));
            }
    return b;
}

std::vector<SparseVec> differential_matrix(const TruncatedModule& t, const ModuleBasis& b) {
    std::vector<SparseVec> cols;
    for (const auto& e : b.elements) cols.push_back(b.coords(t.d(ModuleVec{{e, Scalar(1)}})));
    return cols;
}

std::vector<SparseVec> action_matrix(const TruncatedModule& t, const ModuleBasis& b, int arrow) {
    std::vector<SparseVec> cols;
    for (const auto& e : b.elements) cols.push_back(b.coords(t.times(ModuleVec{{e, Scalar(1)}}, Path::of_arrow(arrow))));
    return cols;
}

std::vector<SparseVec> map_matrix(const TruncatedModule& t, const ModuleBasis& b, const ModuleMap& f) {
    std::vector<SparseVec> cols;
    for (const auto& [h, p] : b.elements) cols.push_back(b.coords(t.times(f.images[h], p)));
    return cols;
}

ModuleMap& GeneratorMap::at(const std::string& arrow) { return on_arrow.at(gamma_prime.tilde->arrow_index(arrow)); }

const ModuleMap& GeneratorMap::at(const std::string& arrow) const {
    return on_arrow.at(gamma_prime.tilde->arrow_index(arrow));
}

ModuleMap GeneratorMap::extend(const TruncatedModule& t, const Path& p) const {
    if (p.is_trivial()) return block_identity(t, p.vertex);
    ModuleMap m = on_arrow[p.arrows.back()];
    for (std::size_t k = p.arrows.size() - 1; k-- > 0;) m = compose(t, on_arrow[p.arrows[k]], m);
    return m;
}

ModuleMap GeneratorMap::extend(const TruncatedModule& t, const Element& e) const {
    ModuleMap m = zero_map(t, e.homogeneous_degree().value_or(0));
    for (const auto& [p, c] : e.terms()) m = add_maps(m, extend(t, p), c);
    return m;
}

QP simultaneous_premutation(const QP& qp, const std::vector<int>& vertices) {
    require_independent(qp, vertices);
    QP out = qp;
    for (int i : vertices) out = premutate(out, i);
    return out;
}

namespace {

enum class Role { out_star, in_star, bracket, plain };

struct ArrowRole {
    Role role = Role::plain;
    int a = -1;  // α, β or γ of Q
    int b = -1;  // β of a bracket [αβ]
    int vertex = -1;
};

// role of every arrow of the premutated quiver, keyed by name
std::map<std::string, ArrowRole> arrow_roles(const QP& qp, const std::vector<int>& vertices) {
    const auto& q = qp.q();
    std::set<int> in(vertices.begin(), vertices.end());
    std::map<std::string, ArrowRole> roles;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (in.count(ar.source))
            roles[star_name(ar.name)] = {Role::out_star, a, -1, ar.source};
        else if (in.count(ar.target))
            roles[star_name(ar.name)] = {Role::in_star, a, -1, ar.target};
        else
            roles[ar.name] = {Role::plain, a, -1, -1};
    }
    for (int i : vertices)
        for (int al : q.arrows_from(i))
            for (int be : q.arrows_into(i))
                roles[bracket_name(q.arrow(al).name, q.arrow(be).name)] = {Role::bracket, al, be, i};
    return roles;
}

int max_word_length(const Potential& w) {
    int m = 0;
    for (const auto& [word, c] : w.terms()) m = std::max(m, static_cast<int>(word.size()));
    return m;
}

}  // namespace

WeightGrading premutation_weights(const QP& qp, const std::vector<int>& vertices, const WeightGrading& w) {
    QP mu = simultaneous_premutation(qp, vertices);
    auto roles = arrow_roles(qp, vertices);
    WeightGrading out;
    out.potential = w.potential;
    for (const auto& ar : mu.q().arrows()) {
        const ArrowRole& r = roles.at(ar.name);
        switch (r.role) {
            case Role::out_star: out.arrow.push_back(0); break;
            case Role::in_star:
                out.arrow.push_back(w.potential - w.arrow[r.a] - out_weight(qp.q(), r.vertex, w));
                break;
            case Role::bracket: out.arrow.push_back(w.arrow[r.a] + w.arrow[r.b]); break;
            case Role::plain: out.arrow.push_back(w.arrow[r.a]); break;
        }
    }
    return out;
}

GeneratorMap build_generator_map(const TruncatedModule& t, int order, std::optional<WeightGrading> weights) {
    const QP& qp = t.gamma.qp;
    const auto& q = qp.q();
    const auto& g = t.gamma;
    GeneratorMap f;
    f.mutated_qp = simultaneous_premutation(qp, t.mutated);
    // the differentials of the generators must not be cut off
    int need = max_word_length(f.mutated_qp.potential);
    if (weights) need = std::max(need, weights->potential);
    f.gamma_prime = build_ginzburg(f.mutated_qp, std::max(order, need), weights);
    const auto& tp = *f.gamma_prime.tilde;
    const auto& mq = f.mutated_qp.q();
    f.on_arrow.clear();
    for (int k = 0; k < tp.arrow_count(); ++k) f.on_arrow.push_back(zero_map(t, tp.arrow(k).degree));

    auto gen = [&](int v) { return t.generator_index("e_" + q.vertex(v)); };
    auto shift = [&](int i) { return t.generator_index("s_" + q.vertex(i)); };
    auto copy = [&](int a) { return t.generator_index(copy_name(q, a)); };
    auto put = [&](ModuleMap& m, int from, int to, std::vector<int> arrows, const Scalar& c) {
        Path p = arrows.empty() ? Path::trivial(t.generators[to].vertex) : Path::of_arrows(std::move(arrows));
        t.add(m.images[from], to, p, c);
    };

    auto roles = arrow_roles(qp, t.mutated);
    for (int a = 0; a < mq.arrow_count(); ++a) {
        const ArrowRole& r = roles.at(mq.arrow(a).name);
        ModuleMap& m = f.on_arrow[a];
        ModuleMap& bar = f.on_arrow[f.gamma_prime.bar(a)];
        const int i = r.vertex;
        switch (r.role) {
            case Role::out_star: {  // α*: the embedding of P_{t(α)}; its bar
                const int al = r.a, j = q.arrow(al).target;
                put(m, gen(j), copy(al), {}, 1);
                put(bar, shift(i), gen(j), {al, g.loop(i)}, -1);
                for (int rho : q.arrows_from(i)) put(bar, copy(rho), gen(j), {al, g.bar(rho)}, -1);
                break;
            }
            case Role::in_star: {  // β*: T_i -> P_{s(β)}; its bar λ_{e_{Σi} β}
                const int be = r.a, j = q.arrow(be).source;
                put(m, shift(i), gen(j), {g.bar(be)}, -1);
                for (int rho : q.arrows_from(i)) {
                    const Element dw = path_derivative(qp.potential, Word{rho, be});
                    for (const auto& [p, c] : dw.terms()) t.add(m.images[copy(rho)], gen(j), p, -c);
                }
                put(bar, gen(j), shift(i), {be}, 1);
                break;
            }
            case Role::bracket:  // λ_{αβ}; the bar goes to 0
                put(m, gen(q.arrow(r.b).source), gen(q.arrow(r.a).target), {r.a, r.b}, 1);
                break;
            case Role::plain: {
                const Arrow& ga = q.arrow(r.a);
                put(m, gen(ga.source), gen(ga.target), {r.a}, 1);
                put(bar, gen(ga.target), gen(ga.source), {g.bar(r.a)}, 1);
                break;
            }
        }
    }
    std::set<int> in(t.mutated.begin(), t.mutated.end());
    for (int v = 0; v < q.vertex_count(); ++v) {
        ModuleMap& m = f.on_arrow[f.gamma_prime.loop(v)];
        if (!in.count(v)) {
            put(m, gen(v), gen(v), {g.loop(v)}, 1);
            continue;
        }
        put(m, shift(v), shift(v), {g.loop(v)}, -1);
        for (int rho : q.arrows_from(v)) put(m, copy(rho), shift(v), {g.bar(rho)}, -1);
    }
    return f;
}

bool DgHomReport::failed_at(const std::string& generator) const {
    return std::any_of(failures.begin(), failures.end(), [&](const auto& x) { return x.generator == generator; });
}

std::string DgHomReport::str() const {
    std::ostringstream os;
    if (ok) {
        os << "ok (" << checks << " checks, order " << order << ", margin " << margin << ")";
        return os.str();
    }
    for (std::size_t k = 0; k < failures.size(); ++k) {
        if (k) os << "; ";
        os << failures[k].generator << " (degree " << failures[k].degree << "): " << failures[k].reason;
    }
    return os.str();
}

DgHomReport check_dg_hom(const TruncatedModule& t, const GeneratorMap& f) {
    const auto& tp = *f.gamma_prime.tilde;
    DgHomReport r;
    r.order = t.order;
    r.max_word_length = std::max(max_word_length(t.gamma.qp.potential), max_word_length(f.mutated_qp.potential));
    r.margin = t.order - 2 * r.max_word_length;
    auto fail = [&r](const Arrow& a, std::string why) {
        r.ok = false;
        r.failures.push_back({a.name, a.degree, std::move(why)});
    };
    for (int mu = 0; mu < tp.arrow_count(); ++mu) {
        const Arrow& a = tp.arrow(mu);
        const ModuleMap& m = f.on_arrow[mu];
        ++r.checks;
        if (m.degree != a.degree) {
            fail(a, "map has degree " + std::to_string(m.degree));
            continue;
        }
        std::string bad;
        for (std::size_t h = 0; h < m.images.size() && bad.empty(); ++h) {
            const auto& gh = t.generators[h];
            if (gh.block != a.source) {
                if (!m.images[h].empty()) bad = "nonzero outside T_" + tp.vertex(a.source);
                continue;
            }
            for (const auto& [k, c] : m.images[h]) {
                if (t.generators[k.first].block != a.target) bad = "image leaves T_" + tp.vertex(a.target);
                else if (t.degree(k.first, k.second) != gh.degree + a.degree) bad = "inhomogeneous image";
            }
        }
        ++r.checks;
        if (!bad.empty()) {
            fail(a, bad);
            continue;
        }
        ++r.checks;
        const ModuleMap lhs = end_differential(t, m);
        const ModuleMap rhs = f.extend(t, differential(f.gamma_prime, Path::of_arrow(mu)));
        if (!maps_equal(lhs, rhs)) fail(a, "d(f(mu)) differs from f(d mu)");
    }
    return r;
}

namespace {

struct HomBasisKey {
    int from;  // generator of the source block
    int to;    // generator of the target block
    Path path;
    friend bool operator<(const HomBasisKey& x, const HomBasisKey& y) {
        if (x.from != y.from) return x.from < y.from;
        if (x.to != y.to) return x.to < y.to;
        return x.path < y.path;
    }
};

struct ModuleCategoryData {
    TruncatedModule t;
    int max_weight = 0;
    std::vector<std::vector<std::vector<HomBasisKey>>> basis;
    std::vector<std::vector<std::map<HomBasisKey, int>>> index;
};

SparseVec map_coords(const ModuleCategoryData& data, int x, int y, const ModuleMap& m) {
    const auto& t = data.t;
    SparseVec v;
    for (int g : t.block_generators(x))
        for (const auto& [k, c] : m.images[g]) {
            const int w = t.weight(k.first, k.second) - t.generators[g].weight;
            if (w > data.max_weight) continue;
            auto it = data.index[x][y].find({g, k.first, k.second});
            if (it == data.index[x][y].end())
                throw std::logic_error("map term " + t.generators[g].name + ">" + t.generators[k.first].name + "|" +
                                       path_str(t.quiver(), k.second) + " outside the hom basis");
            add_entry(v, it->second, c);
        }
    return v;
}

}  // namespace

DgCategory module_category(const TruncatedModule& t, int max_weight) {
    int top = 0;
    for (const auto& g : t.generators) top = std::max(top, g.weight);
    if (t.order < max_weight + top)
        throw std::invalid_argument("module truncation " + std::to_string(t.order) + " too small for maps of weight " +
                                    std::to_string(max_weight));
    auto data = std::make_shared<ModuleCategoryData>();
    data->t = t;
    data->max_weight = max_weight;
    const int n = t.block_count();
    const auto& q = t.quiver();
    data->basis.assign(n, std::vector<std::vector<HomBasisKey>>(n));
    data->index.assign(n, std::vector<std::map<HomBasisKey, int>>(n));
    DgCategory c;
    for (int b = 0; b < n; ++b) c.objects.push_back("T" + q.vertex(b));
    c.homs.assign(n, std::vector<HomSpace>(n));
    for (int x = 0; x < n; ++x)
        for (int g : t.block_generators(x))
            for (int y = 0; y < n; ++y)
                for (int h : t.block_generators(y))
                    for (auto& p : t.gamma.algebra->paths(t.generators[g].vertex, t.generators[h].vertex)) {
                        const int w = t.weight(h, p) - t.generators[g].weight;
                        if (w < 0 || w > max_weight) continue;
                        HomBasisKey key{g, h, p};
                        data->index[x][y].emplace(key, static_cast<int>(data->basis[x][y].size()));
                        c.homs[x][y].names.push_back(t.generators[g].name + ">" + t.generators[h].name + "|" +
                                                     path_str(q, p));
                        c.homs[x][y].degrees.push_back(t.degree(h, p) - t.generators[g].degree);
                        data->basis[x][y].push_back(std::move(key));
                    }
    for (int x = 0; x < n; ++x) {
        SparseVec u;
        for (int g : t.block_generators(x))
            add_entry(u, data->index[x][x].at({g, g, Path::trivial(t.generators[g].vertex)}), Scalar(1));
        c.units.push_back(std::move(u));
    }
    c.compose_basis = [data](int x, int y, int z, int gi, int fi) {
        const auto& f = data->basis[x][y][fi];
        const auto& g = data->basis[y][z][gi];
        SparseVec v;
        if (f.to != g.from) return v;
        auto p = compose_paths(data->t.quiver(), g.path, f.path);
        if (!p) return v;
        const auto& t = data->t;
        if (t.weight(g.to, *p) - t.generators[f.from].weight > data->max_weight) return v;
        add_entry(v, data->index[x][z].at({f.from, g.to, *p}), Scalar(1));
        return v;
    };
    c.d_basis = [data](int x, int y, int fi) {
        const auto& f = data->basis[x][y][fi];
        const auto& t = data->t;
        ModuleMap m = zero_map(t, t.degree(f.to, f.path) - t.generators[f.from].degree);
        t.add(m.images[f.from], f.to, f.path, 1);
        return map_coords(*data, x, y, end_differential(t, m));
    };
    return c;
}

namespace {

Path parse_path(const GradedQuiver& q, const std::string& name) {
    if (name.rfind("e_", 0) == 0) {
        if (auto v = q.find_vertex(name.substr(2)); v && !q.find_arrow(name)) return Path::trivial(*v);
    }
    Path p;
    std::istringstream is(name);
    std::string tok;
    while (is >> tok) p.arrows.push_back(q.arrow_index(tok));
    return p;
}

}  // namespace

DgFunctor generator_functor(const TruncatedModule& t, const GeneratorMap& f, const CategoryPtr& source,
                            const CategoryPtr& target) {
    DgFunctor F{source, target, {}, {}};
    for (int x = 0; x < source->object_count(); ++x) F.object_map.push_back(target->object_index("T" + source->objects[x]));
    auto data = std::make_shared<ModuleCategoryData>();
    data->t = t;
    // recover the target basis keys from the names
    const int n = target->object_count();
    data->index.assign(n, std::vector<std::map<HomBasisKey, int>>(n));
    int top = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < target->hom(x, y).size(); ++k) {
                const std::string& name = target->hom(x, y).names[k];
                const auto gt = name.find('>'), bar = name.find('|');
                HomBasisKey key{t.generator_index(name.substr(0, gt)), t.generator_index(name.substr(gt + 1, bar - gt - 1)),
                                parse_path(t.quiver(), name.substr(bar + 1))};
                top = std::max(top, t.weight(key.to, key.path) - t.generators[key.from].weight);
                data->index[x][y].emplace(std::move(key), k);
            }
    data->max_weight = top;
    auto fp = std::make_shared<GeneratorMap>(f);
    auto objects = F.object_map;
    F.map_basis = [data, fp, source, objects](int x, int y, int b) {
        const Path p = parse_path(*fp->gamma_prime.tilde, source->hom(x, y).names[b]);
        return map_coords(*data, objects[x], objects[y], fp->extend(data->t, p));
    };
    return F;
}

DgFunctor renaming_functor(const CategoryPtr& c, const std::function<std::string(const std::string&)>& rename) {
    DgFunctor F{c, c, {}, {}};
    for (const auto& o : c->objects) F.object_map.push_back(c->object_index(rename(o)));
    const int n = c->object_count();
    auto names = std::make_shared<std::vector<std::vector<std::unordered_map<std::string, int>>>>(
        n, std::vector<std::unordered_map<std::string, int>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < c->hom(x, y).size(); ++k) (*names)[x][y].emplace(c->hom(x, y).names[k], k);
    auto objects = F.object_map;
    F.map_basis = [c, names, objects, rename](int x, int y, int b) {
        const std::string img = rename(c->hom(x, y).names[b]);
        const auto& m = (*names)[objects[x]][objects[y]];
        auto it = m.find(img);
        if (it == m.end()) throw std::logic_error("renamed basis element " + img + " does not exist");
        return unit_vector(it->second);
    };
    return F;
}

FPrimeData build_F_prime_data(const QP& qp, const std::vector<std::string>& vertices, const WeightGrading& weights,
                              int max_weight, const IndexShift& symmetry) {
    const auto& q = qp.q();
    std::vector<int> I;
    for (const auto& v : vertices) I.push_back(q.vertex_index(v));
    int top = 0;
    for (int w : weights.arrow) top = std::max(top, w);

    FPrimeData d;
    d.qp = qp;
    d.weights = weights;
    d.prime_weights = premutation_weights(qp, I, weights);
    d.max_weight = max_weight;
    d.t = build_T(qp, I, max_weight + top, weights);
    d.f = build_generator_map(d.t, max_weight, d.prime_weights);
    auto gp = build_ginzburg(d.f.mutated_qp, max_weight, d.prime_weights);
    d.source = std::make_shared<const DgCategory>(truncated_ginzburg_as_dgcat(gp));
    d.target = std::make_shared<const DgCategory>(module_category(d.t, max_weight));
    d.functor = generator_functor(d.t, d.f, d.source, d.target);

    d.action = index_shift_action(q, symmetry.group_order, symmetry.shift, symmetry.modulus);
    d.prime_action = index_shift_action(d.f.mutated_qp.q(), symmetry.group_order, symmetry.shift, symmetry.modulus);
    const auto& group = d.prime_action.group;
    auto src_act = ginzburg_action(d.prime_action, gp, d.source);
    std::vector<DgFunctor> tgt_act;
    for (int k = 0; k < symmetry.group_order; ++k) {
        const int s = k * symmetry.shift, m = symmetry.modulus;
        tgt_act.push_back(renaming_functor(d.target, [s, m](const std::string& x) { return shift_indices(x, s, m); }));
    }
    d.one_morphism.source = strict_action(group, d.source, src_act);
    d.one_morphism.target = strict_action(group, d.target, tgt_act);
    d.one_morphism.F = {d.functor};
    for (int a = 0; a < group->morphism_count(); ++a) {
        DgNatTrans psi{compose_functors(tgt_act[a], d.functor), compose_functors(d.functor, src_act[a]), 0, {}};
        for (int x = 0; x < d.source->object_count(); ++x) psi.components.push_back(d.target->units[psi.from.object_map[x]]);
        d.one_morphism.psi.push_back(std::move(psi));
    }
    return d;
}

FPrimeReport check_F_prime(const FPrimeData& data) {
    FPrimeReport r;
    auto h = check_dg_hom(data.t, data.f);
    r.dg_hom = h.ok ? CheckReport{true, "", h.checks} : CheckReport::fail(h.str());
    r.target_category = check_dg_category(*data.target);
    r.one_morphism = check_one_morphism(data.one_morphism);
    r.quasi_equivalence = check_quasi_equivalence(data.functor);
    for (const auto& psi : data.one_morphism.psi) {
        auto s = check_2_quasi_iso(psi);
        r.two_quasi_iso.checks += s.checks;
        if (!s.ok) {
            r.two_quasi_iso = s;
            break;
        }
    }
    return r;
}

}  // namespace dgw
