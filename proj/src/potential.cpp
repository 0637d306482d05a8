#include "dgw/potential.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dgw {

namespace {

std::vector<std::string> names_of(const GradedQuiver& q, const Word& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (int a : w) out.push_back(q.arrow(a).name);
    return out;
}

Word rotate(const Word& w, std::size_t k) {
    Word r;
    r.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) r.push_back(w[(k + j) % w.size()]);
    return r;
}

}  // namespace

bool is_cycle(const GradedQuiver& q, const Word& w) {
    if (w.empty()) return false;
    Path p = Path::of_arrows(w);
    return p.well_formed(q) && p.source(q) == p.target(q);
}

Word cyclic_normal_form(const GradedQuiver& q, const Word& w) {
    if (!is_cycle(q, w)) throw std::invalid_argument("not a cyclic path");
    Word best = w;
    auto best_names = names_of(q, w);
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = rotate(w, k);
        auto n = names_of(q, r);
        if (n < best_names) {
            best = std::move(r);
            best_names = std::move(n);
        }
    }
    return best;
}

void Potential::add_word(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(w.size()) > 0 && !alg_->keeps(Path::of_arrows(w))) return;
    Word k = cyclic_normal_form(quiver(), w);
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Potential::add_named_word(const std::vector<std::string>& names, const Scalar& c) {
    Word w;
    for (const auto& n : names) w.push_back(quiver().arrow_index(n));
    add_word(w, c);
}

void Potential::add_element(const Element& e, const Scalar& c) {
    for (const auto& [p, x] : e.terms()) {
        if (p.is_trivial()) throw std::invalid_argument("a potential has no trivial words");
        add_word(p.arrows, x * c);
    }
}

std::map<std::vector<std::string>, Scalar> Potential::named_terms() const {
    std::map<std::vector<std::string>, Scalar> out;
    for (const auto& [w, c] : terms_) out.emplace(names_of(quiver(), w), c);
    return out;
}

Scalar Potential::coeff(const Word& w) const {
    auto it = terms_.find(cyclic_normal_form(quiver(), w));
    return it == terms_.end() ? Scalar(0) : it->second;
}

int Potential::min_length() const {
    int m = 0;
    for (const auto& [w, c] : terms_) {
        int l = static_cast<int>(w.size());
        if (m == 0 || l < m) m = l;
    }
    return m;
}

bool Potential::mentions(int arrow) const {
    for (const auto& [w, c] : terms_)
        if (std::find(w.begin(), w.end(), arrow) != w.end()) return true;
    return false;
}

Potential& Potential::operator+=(const Potential& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [w, c] : o.terms_) add_word(w, c);
    return *this;
}

Potential& Potential::operator-=(const Potential& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [w, c] : o.terms_) add_word(w, -c);
    return *this;
}

Potential operator*(const Scalar& c, const Potential& p) {
    Potential r(p.alg_);
    for (const auto& [w, x] : p.terms_) r.add_word(w, c * x);
    return r;
}

Element Potential::to_element() const {
    Element e(alg_);
    for (const auto& [w, c] : terms_) e.add_term(Path::of_arrows(w), c);
    return e;
}

std::string Potential::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c << ")";
        os << "[";
        for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << quiver().arrow(w[k]).name;
        os << "]";
    }
    return os.str();
}

Element cyclic_derivative(const Potential& w, int arrow) {
    return path_derivative(w, Word{arrow});
}

Element path_derivative(const Potential& w, const Word& u) {
    const auto& q = w.quiver();
    Element out(w.algebra());
    if (u.empty()) throw std::invalid_argument("empty derivative word");
    for (const auto& [word, c] : w.terms()) {
        const std::size_t s = word.size();
        if (u.size() > s) continue;
        for (std::size_t k = 0; k < s; ++k) {
            bool match = true;
            for (std::size_t j = 0; j < u.size() && match; ++j) match = word[(k + j) % s] == u[j];
            if (!match) continue;
            Path rest;
            for (std::size_t j = u.size(); j < s; ++j) rest.arrows.push_back(word[(k + j) % s]);
            if (rest.arrows.empty()) rest.vertex = q.arrow(u.back()).source;
            out.add_term(rest, c);
        }
    }
    return out;
}

Potential apply_substitution(const Potential& w, const std::map<int, Element>& images) {
    for (const auto& [a, img] : images)
        for (const auto& [p, c] : img.terms())
            if (p.is_trivial())
                throw std::invalid_argument("substitution image of " + w.quiver().arrow(a).name +
                                            " has a trivial path");
    Potential out(w.algebra());
    out.add_element(apply_substitution(w.to_element(), images));
    return out;
}

bool potentials_equal_cyclic(const Potential& a, const Potential& b) {
    return a.named_terms() == b.named_terms();
}

bool same_quiver(const GradedQuiver& a, const GradedQuiver& b) {
    std::set<std::string> va(a.vertices().begin(), a.vertices().end());
    std::set<std::string> vb(b.vertices().begin(), b.vertices().end());
    if (va != vb) return false;
    using Row = std::tuple<std::string, std::string, std::string, int>;
    auto rows = [](const GradedQuiver& q) {
        std::multiset<Row> r;
        for (const auto& ar : q.arrows())
            r.emplace(ar.name, q.vertex(ar.source), q.vertex(ar.target), ar.degree);
        return r;
    };
    return rows(a) == rows(b);
}

std::string quiver_str(const GradedQuiver& q) {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& v : q.vertices()) os << " " << v;
    os << "\narrows:";
    for (const auto& ar : q.arrows()) {
        os << " " << ar.name << ":" << q.vertex(ar.source) << "->" << q.vertex(ar.target);
        if (ar.degree != 0) os << "(" << ar.degree << ")";
    }
    return os.str();
}

}  // namespace dgw
