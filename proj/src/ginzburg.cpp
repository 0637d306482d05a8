#include "dgw/ginzburg.hpp"

#include "dgw/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace dgw {

std::string bar_name(const std::string& a) { return "~" + a; }
std::string loop_name(const std::string& v) { return "t_" + v; }

std::optional<WeightGrading> length_grading(const QP& qp) {
    int m = 0;
    for (const auto& [w, c] : qp.potential.terms()) {
        int l = static_cast<int>(w.size());
        if (m != 0 && l != m) return std::nullopt;
        m = l;
    }
    if (m == 0) m = 2;
    return WeightGrading{std::vector<int>(qp.q().arrow_count(), 1), m};
}

GinzburgPresentation build_ginzburg(const QP& qp, std::optional<int> order,
                                    std::optional<WeightGrading> weights) {
    const auto& q = qp.q();
    const int n = q.arrow_count();
    const int L = order.value_or(qp.order());
    auto t = std::make_shared<GradedQuiver>();
    for (const auto& v : q.vertices()) t->add_vertex(v);
    for (const auto& a : q.arrows()) t->add_arrow(a.name, a.source, a.target, 0);
    for (const auto& a : q.arrows()) {
        if (q.find_arrow(bar_name(a.name))) throw std::invalid_argument("name collision: " + bar_name(a.name));
        t->add_arrow(bar_name(a.name), a.target, a.source, -1);
    }
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (q.find_arrow(loop_name(q.vertex(v))))
            throw std::invalid_argument("name collision: " + loop_name(q.vertex(v)));
        t->add_arrow(loop_name(q.vertex(v)), v, v, -2);
    }

    GinzburgPresentation g;
    g.qp = qp;
    g.tilde = t;
    if (weights) {
        const auto& w = *weights;
        if (static_cast<int>(w.arrow.size()) != n) throw std::invalid_argument("one weight per arrow expected");
        for (const auto& [word, c] : qp.potential.terms()) {
            int s = 0;
            for (int a : word) s += w.arrow[a];
            if (s != w.potential) throw std::invalid_argument("potential is not homogeneous for the weights");
        }
        std::vector<int> tw = w.arrow;
        for (int a = 0; a < n; ++a) {
            if (w.arrow[a] > w.potential) throw std::invalid_argument("arrow heavier than the potential");
            tw.push_back(w.potential - w.arrow[a]);
        }
        for (int v = 0; v < q.vertex_count(); ++v) tw.push_back(w.potential);
        g.algebra = std::make_shared<const PathAlgebra>(t, L, std::move(tw));
        // degree drops by at most 2 per unit of weight; a safe lower bound
        g.min_degree = -2 * L - 2;
    } else {
        g.algebra = make_algebra(t, L);
        g.min_degree = -2 * L;
    }

    const auto& alg = g.algebra;
    g.generator_d.assign(t->arrow_count(), Element(alg));
    // words of W keep their arrow indices in the tilde quiver
    for (int a = 0; a < n; ++a) {
        Element d(alg);
        const Element da = cyclic_derivative(qp.potential, a);
        for (const auto& [p, c] : da.terms()) d.add_term(p, c);
        g.generator_d[g.bar(a)] = d;
    }
    for (int a = 0; a < n; ++a) {
        const Arrow& ar = q.arrow(a);
        g.generator_d[g.loop(ar.target)].add_term(Path::of_arrows({a, g.bar(a)}), Scalar(1));
        g.generator_d[g.loop(ar.source)].add_term(Path::of_arrows({g.bar(a), a}), Scalar(-1));
    }
    return g;
}

Element differential(const GinzburgPresentation& g, const Path& p) {
    Element out(g.algebra);
    const auto& t = *g.tilde;
    int prefix_degree = 0;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        const int x = p.arrows[k];
        const Scalar sign = prefix_degree % 2 == 0 ? Scalar(1) : Scalar(-1);
        for (const auto& [r, c] : g.generator_d[x].terms()) {
            Path q;
            q.arrows.assign(p.arrows.begin(), p.arrows.begin() + k);
            q.arrows.insert(q.arrows.end(), r.arrows.begin(), r.arrows.end());
            q.arrows.insert(q.arrows.end(), p.arrows.begin() + k + 1, p.arrows.end());
            if (q.arrows.empty()) q.vertex = r.vertex;
            out.add_term(q, sign * c);
        }
        prefix_degree += t.arrow(x).degree;
    }
    return out;
}

Element differential(const GinzburgPresentation& g, const Element& e) {
    Element out(g.algebra);
    for (const auto& [p, c] : e.terms()) out.add_scaled(differential(g, p), c);
    return out;
}

bool operator==(const DimTable& a, const DimTable& b) { return a.total == b.total && a.by_pair == b.by_pair; }

std::string dim_table_str(const GradedQuiver& q, const DimTable& t) {
    std::ostringstream os;
    os << "total " << t.total;
    for (const auto& [ij, d] : t.by_pair) os << "; " << q.vertex(ij.first) << "->" << q.vertex(ij.second) << ": " << d;
    return os.str();
}

namespace {

// rank of d restricted to the listed paths, images indexed on the fly
int image_rank(const GinzburgPresentation& g, const std::vector<Path>& paths) {
    std::map<Path, int> index;
    Echelon e;
    for (const auto& p : paths) {
        SparseVec v;
        const Element dp = differential(g, p);
        for (const auto& [r, c] : dp.terms()) {
            auto [it, fresh] = index.try_emplace(r, static_cast<int>(index.size()));
            add_entry(v, it->second, c);
        }
        if (!v.empty()) e.insert(std::move(v));
    }
    return static_cast<int>(e.rank());
}

}  // namespace

DimTable cohomology_dimensions(const GinzburgPresentation& g, int k) {
    const auto& t = *g.tilde;
    const int nv = t.vertex_count();
    DimTable out;
    for (int i = 0; i < nv; ++i) {
        std::vector<std::vector<Path>> here(nv), below(nv);
        for (auto& p : g.algebra->paths_from(i, k)) here[p.target(t)].push_back(std::move(p));
        for (auto& p : g.algebra->paths_from(i, k - 1)) below[p.target(t)].push_back(std::move(p));
        for (int j = 0; j < nv; ++j) {
            int z = static_cast<int>(here[j].size()) - image_rank(g, here[j]);
            int d = z - image_rank(g, below[j]);
            if (d != 0) out.by_pair[{i, j}] = d;
            out.total += d;
        }
    }
    return out;
}

DimTable jacobian_dimensions(const QP& qp, std::optional<int> order) {
    const auto& q = qp.q();
    const int L = order.value_or(qp.order());
    auto alg = make_algebra(qp.quiver, L);
    Potential w(alg);
    for (const auto& [word, c] : qp.potential.terms()) w.add_word(word, c);
    const int nv = q.vertex_count();

    std::vector<std::vector<Path>> from(nv);
    for (int v = 0; v < nv; ++v) from[v] = alg->paths_from(v);

    // per pair: basis index of each path, and the echelon of the ideal
    std::map<std::pair<int, int>, std::map<Path, int>> basis;
    for (int v = 0; v < nv; ++v)
        for (const auto& p : from[v]) {
            auto& b = basis[{v, p.target(q)}];
            b.emplace(p, static_cast<int>(b.size()));
        }
    std::map<std::pair<int, int>, Echelon> ideal;
    for (int a = 0; a < q.arrow_count(); ++a) {
        Element d = cyclic_derivative(w, a);
        if (d.is_zero()) continue;
        const int mid_from = q.arrow(a).target, mid_to = q.arrow(a).source;
        for (int x = 0; x < nv; ++x)
            for (const auto& right : from[x]) {
                if (right.target(q) != mid_from) continue;
                for (const auto& left : from[mid_to]) {
                    Element prod = multiply(multiply(Element::path(alg, left), d), Element::path(alg, right));
                    if (prod.is_zero()) continue;
                    const int y = left.target(q);
                    auto& b = basis[{x, y}];
                    SparseVec v;
                    for (const auto& [p, c] : prod.terms()) add_entry(v, b.at(p), c);
                    ideal[{x, y}].insert(std::move(v));
                }
            }
    }
    DimTable out;
    for (const auto& [ij, b] : basis) {
        int d = static_cast<int>(b.size()) - static_cast<int>(ideal[ij].rank());
        if (d != 0) out.by_pair[ij] = d;
        out.total += d;
    }
    return out;
}

}  // namespace dgw
