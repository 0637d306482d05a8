#include "dgw/path_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dgw {

int GradedQuiver::add_vertex(const std::string& name) {
    if (vertex_ids_.count(name)) throw std::invalid_argument("duplicate vertex " + name);
    vertex_ids_[name] = vertex_count();
    vertices_.push_back(name);
    return vertex_count() - 1;
}

int GradedQuiver::add_arrow(const std::string& name, int source, int target, int degree) {
    if (arrow_ids_.count(name)) throw std::invalid_argument("duplicate arrow " + name);
    if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
        throw std::invalid_argument("arrow " + name + " has an undeclared endpoint");
    arrow_ids_[name] = arrow_count();
    arrows_.push_back({name, source, target, degree});
    return arrow_count() - 1;
}

int GradedQuiver::add_arrow(const std::string& name, const std::string& source,
                            const std::string& target, int degree) {
    auto s = find_vertex(source);
    auto t = find_vertex(target);
    if (!s || !t) throw std::invalid_argument("arrow " + name + " has an undeclared endpoint");
    return add_arrow(name, *s, *t, degree);
}

std::optional<int> GradedQuiver::find_vertex(const std::string& name) const {
    auto it = vertex_ids_.find(name);
    if (it == vertex_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> GradedQuiver::find_arrow(const std::string& name) const {
    auto it = arrow_ids_.find(name);
    if (it == arrow_ids_.end()) return std::nullopt;
    return it->second;
}

int GradedQuiver::vertex_index(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw std::invalid_argument("unknown vertex " + name);
    return *v;
}

int GradedQuiver::arrow_index(const std::string& name) const {
    auto a = find_arrow(name);
    if (!a) throw std::invalid_argument("unknown arrow " + name);
    return *a;
}

std::vector<int> GradedQuiver::arrows_from(int v) const {
    std::vector<int> out;
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[a].source == v) out.push_back(a);
    return out;
}

std::vector<int> GradedQuiver::arrows_into(int v) const {
    std::vector<int> out;
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[a].target == v) out.push_back(a);
    return out;
}

int Path::source(const GradedQuiver& q) const {
    return arrows.empty() ? vertex : q.arrow(arrows.back()).source;
}

int Path::target(const GradedQuiver& q) const {
    return arrows.empty() ? vertex : q.arrow(arrows.front()).target;
}

int Path::degree(const GradedQuiver& q) const {
    int d = 0;
    for (int a : arrows) d += q.arrow(a).degree;
    return d;
}

bool Path::well_formed(const GradedQuiver& q) const {
    if (arrows.empty()) return vertex >= 0 && vertex < q.vertex_count();
    if (vertex != -1) return false;
    for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
        if (q.arrow(arrows[k]).source != q.arrow(arrows[k + 1]).target) return false;
    return true;
}

std::optional<Path> compose_paths(const GradedQuiver& q, const Path& p, const Path& r) {
    if (p.source(q) != r.target(q)) return std::nullopt;
    if (p.is_trivial()) return r;
    if (r.is_trivial()) return p;
    Path out = p;
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    return out;
}

std::string path_str(const GradedQuiver& q, const Path& p) {
    if (p.is_trivial()) return "e_" + q.vertex(p.vertex);
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += " ";
        s += q.arrow(p.arrows[k]).name;
    }
    return s;
}

PathAlgebra::PathAlgebra(QuiverPtr quiver, int order) : quiver_(std::move(quiver)), order_(order) {
    if (order_ < 0) throw std::invalid_argument("negative truncation order");
    for (const auto& a : quiver_->arrows()) nonpositive_ = nonpositive_ && a.degree <= 0;
}

PathAlgebra::PathAlgebra(QuiverPtr quiver, int order, std::vector<int> weights)
    : quiver_(std::move(quiver)), order_(order), weights_(std::move(weights)) {
    if (order_ < 0) throw std::invalid_argument("negative truncation order");
    if (static_cast<int>(weights_.size()) != quiver_->arrow_count())
        throw std::invalid_argument("one weight per arrow expected");
    for (int w : weights_)
        if (w < 0) throw std::invalid_argument("negative arrow weight");
    for (const auto& a : quiver_->arrows()) nonpositive_ = nonpositive_ && a.degree <= 0;
}

int PathAlgebra::weight(const Path& p) const {
    if (weights_.empty()) return p.length();
    int w = 0;
    for (int a : p.arrows) w += weights_[a];
    return w;
}

std::vector<Path> PathAlgebra::paths_from(int from, std::optional<int> degree) const {
    const auto& q = *quiver_;
    std::vector<Path> out;
    std::vector<std::vector<int>> out_arrows(q.vertex_count());
    for (int a = 0; a < q.arrow_count(); ++a) out_arrows[q.arrow(a).source].push_back(a);

    // depth-first over extensions; a new arrow is applied last, so it is prepended
    std::vector<int> rev;  // reverse written order = application order
    const int guard = 64 * (order_ + 1) + 64;
    std::function<void(int, int, int)> walk = [&](int v, int w, int deg) {
        if (degree && nonpositive_ && deg < *degree) return;
        if (!degree || *degree == deg) {
            if (rev.empty())
                out.push_back(Path::trivial(from));
            else
                out.push_back(Path::of_arrows(std::vector<int>(rev.rbegin(), rev.rend())));
        }
        if (static_cast<int>(rev.size()) > guard)
            throw std::runtime_error("path enumeration does not terminate: zero-weight cycle");
        for (int a : out_arrows[v]) {
            int nw = w + arrow_weight(a);
            if (nw > order_) continue;
            rev.push_back(a);
            walk(q.arrow(a).target, nw, deg + q.arrow(a).degree);
            rev.pop_back();
        }
    };
    walk(from, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> PathAlgebra::paths(int from, int to, std::optional<int> degree) const {
    std::vector<Path> out;
    for (auto& p : paths_from(from, degree))
        if (p.target(*quiver_) == to) out.push_back(std::move(p));
    return out;
}

AlgebraPtr make_algebra(QuiverPtr q, int order) {
    return std::make_shared<const PathAlgebra>(std::move(q), order);
}

Element Element::unit(const AlgebraPtr& alg) {
    Element e(alg);
    for (int v = 0; v < alg->quiver().vertex_count(); ++v) e.add_term(Path::trivial(v), Scalar(1));
    return e;
}

Element Element::vertex(const AlgebraPtr& alg, int v) {
    Element e(alg);
    e.add_term(Path::trivial(v), Scalar(1));
    return e;
}

Element Element::arrow(const AlgebraPtr& alg, int a) {
    Element e(alg);
    e.add_term(Path::of_arrow(a), Scalar(1));
    return e;
}

Element Element::arrow(const AlgebraPtr& alg, const std::string& name) {
    return arrow(alg, alg->quiver().arrow_index(name));
}

Element Element::path(const AlgebraPtr& alg, const Path& p, const Scalar& c) {
    if (!p.well_formed(alg->quiver())) throw std::invalid_argument("not a path");
    Element e(alg);
    e.add_term(p, c);
    return e;
}

Element Element::word(const AlgebraPtr& alg, const std::vector<std::string>& names,
                      const Scalar& c) {
    Path p;
    for (const auto& n : names) p.arrows.push_back(alg->quiver().arrow_index(n));
    return path(alg, p, c);
}

Scalar Element::coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Path& p, const Scalar& c) {
    if (c.is_zero() || !alg_->keeps(p)) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_scaled(const Element& o, const Scalar& c) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [p, v] : o.terms_) add_term(p, v * c);
}

Element& Element::operator+=(const Element& o) {
    add_scaled(o, Scalar(1));
    return *this;
}

Element& Element::operator-=(const Element& o) {
    add_scaled(o, Scalar(-1));
    return *this;
}

Element Element::operator-() const {
    Element r(alg_);
    for (const auto& [p, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), p, -v);
    return r;
}

Element operator*(const Scalar& c, const Element& e) {
    Element r(e.alg_);
    r.add_scaled(e, c);
    return r;
}

std::optional<int> Element::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [p, v] : terms_) {
        int x = p.degree(alg_->quiver());
        if (d && *d != x) return std::nullopt;
        d = x;
    }
    return d;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c << ")";
        os << "[" << path_str(alg_->quiver(), p) << "]";
    }
    return os.str();
}

void accumulate_product(Element& out, const Path& left, const Path& right, const Scalar& c) {
    const auto& alg = *out.algebra();
    if (left.is_trivial()) {
        out.add_term(right, c);
        return;
    }
    if (right.is_trivial()) {
        out.add_term(left, c);
        return;
    }
    if (alg.weight(left) + alg.weight(right) > alg.order()) return;
    Path p = left;
    p.arrows.insert(p.arrows.end(), right.arrows.begin(), right.arrows.end());
    out.add_term(p, c);
}

Element multiply(const Element& a, const Element& b) {
    const AlgebraPtr& alg = a.algebra() ? a.algebra() : b.algebra();
    Element out(alg);
    if (!alg) return out;
    const auto& q = alg->quiver();
    for (const auto& [p, x] : a.terms()) {
        int s = p.source(q);
        int wp = alg->weight(p);
        for (const auto& [r, y] : b.terms()) {
            if (r.target(q) != s) continue;
            if (wp + alg->weight(r) > alg->order()) continue;
            accumulate_product(out, p, r, x * y);
        }
    }
    return out;
}

void validate_substitution(const PathAlgebra& alg, const std::map<int, Element>& images) {
    const auto& q = alg.quiver();
    for (const auto& [a, img] : images) {
        const Arrow& ar = q.arrow(a);
        for (const auto& [p, c] : img.terms()) {
            if (p.source(q) != ar.source || p.target(q) != ar.target)
                throw std::invalid_argument("image of " + ar.name + " has wrong endpoints");
            if (p.degree(q) != ar.degree)
                throw std::invalid_argument("image of " + ar.name + " has wrong degree");
        }
    }
}

Element apply_substitution(const Element& e, const std::map<int, Element>& images) {
    const AlgebraPtr& alg = e.algebra();
    Element out(alg);
    if (!alg) return out;
    validate_substitution(*alg, images);
    for (const auto& [p, c] : e.terms()) {
        if (p.is_trivial()) {
            out.add_term(p, c);
            continue;
        }
        Element acc(alg);
        acc.add_term(Path::trivial(p.target(alg->quiver())), c);
        for (int a : p.arrows) {
            auto it = images.find(a);
            acc = it == images.end() ? multiply(acc, Element::arrow(alg, a))
                                     : multiply(acc, it->second);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

}  // namespace dgw
