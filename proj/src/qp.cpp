#include "dgw/qp.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace dgw {

QP make_qp(QuiverPtr quiver, int order) {
    for (const auto& a : quiver->arrows())
        if (a.degree != 0) throw std::invalid_argument("arrow " + a.name + " of a QP must have degree 0");
    return QP{quiver, Potential(make_algebra(quiver, order))};
}

MutabilityReport check_mutable(const QP& qp, int i) {
    const auto& q = qp.q();
    if (i < 0 || i >= q.vertex_count()) return {false, 0, "unknown vertex"};
    for (const auto& a : q.arrows())
        if (a.source == a.target) return {false, 1, "loop " + a.name + " at " + q.vertex(a.source)};
    for (int x : q.arrows_from(i))
        for (int y : q.arrows_into(i))
            if (q.arrow(x).target == q.arrow(y).source)
                return {false, 2,
                        "2-cycle " + q.arrow(x).name + ", " + q.arrow(y).name + " at " + q.vertex(i)};
    // a word can be cut at the source of any of its arrows
    for (const auto& [w, c] : qp.potential.terms()) {
        bool avoidable = std::any_of(w.begin(), w.end(), [&](int a) { return q.arrow(a).source != i; });
        if (!avoidable) return {false, 3, "every rotation of a word starts and ends at " + q.vertex(i)};
    }
    return {};
}

std::string bracket_name(const std::string& alpha, const std::string& beta) {
    return "[" + alpha + "," + beta + "]";
}

std::string star_name(const std::string& a) {
    if (!a.empty() && a.back() == '*') return a.substr(0, a.size() - 1);
    return a + "*";
}

QP premutate(const QP& qp, int i) {
    auto report = check_mutable(qp, i);
    if (!report.ok)
        throw MutationError("not mutable at " + qp.q().vertex(i) + ": condition (" +
                            std::to_string(report.condition) + ") " + report.message);
    const auto& q = qp.q();
    auto nq = std::make_shared<GradedQuiver>();
    for (const auto& v : q.vertices()) nq->add_vertex(v);

    auto fresh = [&](const std::string& name) {
        if (nq->find_arrow(name))
            throw MutationError("name collision for new arrow " + name);
        return name;
    };

    std::vector<int> image(q.arrow_count(), -1);  // arrows kept with their orientation
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (ar.source == i || ar.target == i) {
            std::string n = star_name(ar.name);
            if (q.find_arrow(n)) throw MutationError("name collision for reversed arrow " + n);
            nq->add_arrow(fresh(n), ar.target, ar.source);
        } else {
            image[a] = nq->add_arrow(ar.name, ar.source, ar.target);
        }
    }
    const auto outs = q.arrows_from(i);
    const auto ins = q.arrows_into(i);
    std::map<std::pair<int, int>, int> bracket;
    for (int al : outs)
        for (int be : ins) {
            std::string n = bracket_name(q.arrow(al).name, q.arrow(be).name);
            if (q.find_arrow(n)) throw MutationError("name collision for composite arrow " + n);
            bracket[{al, be}] = nq->add_arrow(fresh(n), q.arrow(be).source, q.arrow(al).target);
        }

    QP out = make_qp(nq, qp.order());
    // W'_1: cut every word away from i, then replace each αβ passing through i
    for (const auto& [w, c] : qp.potential.terms()) {
        std::size_t cut = 0;
        while (q.arrow(w[(cut + w.size() - 1) % w.size()]).source == i) ++cut;
        Word r;
        for (std::size_t j = 0; j < w.size(); ++j) r.push_back(w[(cut + j) % w.size()]);
        Word nw;
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k + 1 < r.size() && q.arrow(r[k]).source == i) {
                nw.push_back(bracket.at({r[k], r[k + 1]}));
                ++k;
            } else {
                nw.push_back(image[r[k]]);
            }
        }
        out.potential.add_word(nw, c);
    }
    // W'_2 = Σ [αβ] β* α*
    for (int al : outs)
        for (int be : ins) {
            Word w{bracket.at({al, be}), nq->arrow_index(star_name(q.arrow(be).name)),
                   nq->arrow_index(star_name(q.arrow(al).name))};
            out.potential.add_word(w, Scalar(1));
        }
    return out;
}

QP delete_arrows(const QP& qp, const std::vector<int>& arrows) {
    const auto& q = qp.q();
    std::set<int> gone(arrows.begin(), arrows.end());
    auto nq = std::make_shared<GradedQuiver>();
    for (const auto& v : q.vertices()) nq->add_vertex(v);
    std::vector<int> image(q.arrow_count(), -1);
    for (int a = 0; a < q.arrow_count(); ++a)
        if (!gone.count(a)) {
            const Arrow& ar = q.arrow(a);
            image[a] = nq->add_arrow(ar.name, ar.source, ar.target, ar.degree);
        }
    QP out = make_qp(nq, qp.order());
    for (const auto& [w, c] : qp.potential.terms()) {
        Word nw;
        for (int a : w) {
            if (image[a] < 0)
                throw std::invalid_argument("potential still mentions deleted arrow " + q.arrow(a).name);
            nw.push_back(image[a]);
        }
        out.potential.add_word(nw, c);
    }
    return out;
}

namespace {

// rotation of a cyclic word starting at position k
Word rotated(const Word& w, std::size_t k) {
    Word r;
    for (std::size_t j = 0; j < w.size(); ++j) r.push_back(w[(k + j) % w.size()]);
    return r;
}

std::optional<Word> first_two_cycle(const Potential& w, const std::set<int>& gone) {
    std::optional<Word> best;
    std::vector<std::string> best_names;
    const auto& q = w.quiver();
    for (const auto& [word, c] : w.terms()) {
        if (word.size() != 2 || gone.count(word[0]) || gone.count(word[1])) continue;
        std::vector<std::string> n{q.arrow(word[0]).name, q.arrow(word[1]).name};
        if (!best || n < best_names) {
            best = word;
            best_names = n;
        }
    }
    return best;
}

}  // namespace

SplitResult split_reduce(const QP& qp) {
    const auto& alg = qp.potential.algebra();
    const auto& q = qp.q();
    Potential w = qp.potential;
    RightEquivalence total;
    std::set<int> gone;
    SplitResult result;

    while (auto ab = first_two_cycle(w, gone)) {
        const int a = (*ab)[0];
        const int b = (*ab)[1];
        if (a == b) throw MutationError("square of the loop " + q.arrow(a).name + " cannot be split");
        const int guard = qp.order() + 2;
        for (int pass = 0;; ++pass) {
            Scalar c = w.coeff(*ab);
            if (c.is_zero()) throw MutationError("2-cycle coefficient vanished during reduction");
            Potential r = w;
            r.add_word(*ab, -c);
            // R = a·U + V·b + R0: words containing a are rotated to start at
            // their first a, the remaining words containing b to end at b
            Element u(alg), v(alg);
            for (const auto& [word, x] : r.terms()) {
                auto pa = std::find(word.begin(), word.end(), a);
                if (pa != word.end()) {
                    Word rot = rotated(word, pa - word.begin());
                    Path rest = Path::of_arrows(Word(rot.begin() + 1, rot.end()));
                    if (rest.arrows.empty()) rest.vertex = q.arrow(a).source;
                    u.add_term(rest, x);
                    continue;
                }
                auto pb = std::find(word.begin(), word.end(), b);
                if (pb != word.end()) {
                    Word rot = rotated(word, (pb - word.begin() + 1) % word.size());
                    Path rest = Path::of_arrows(Word(rot.begin(), rot.end() - 1));
                    if (rest.arrows.empty()) rest.vertex = q.arrow(b).target;
                    v.add_term(rest, x);
                }
            }
            if (u.is_zero() && v.is_zero()) break;
            if (pass >= guard)
                throw MutationError("reduction did not stabilize within " + std::to_string(guard) +
                                    " passes");
            Scalar ci = c.inverse();
            RightEquivalence step;
            step[a] = Element::arrow(alg, a) - ci * v;
            step[b] = Element::arrow(alg, b) - ci * u;
            w = apply_substitution(w, step);
            for (int x = 0; x < q.arrow_count(); ++x) {
                auto it = total.find(x);
                Element img = it == total.end() ? Element::arrow(alg, x) : it->second;
                total[x] = apply_substitution(img, step);
            }
            ++result.passes;
        }
        Scalar c = w.coeff(*ab);
        result.trivial_pairs.push_back({q.arrow(a).name, q.arrow(b).name, c});
        w.add_word(*ab, -c);
        gone.insert(a);
        gone.insert(b);
    }
    // drop identity entries so the record lists only arrows that moved
    for (auto it = total.begin(); it != total.end();)
        it = it->second == Element::arrow(alg, it->first) ? total.erase(it) : std::next(it);

    QP cur{qp.quiver, w};
    result.reduced = delete_arrows(cur, std::vector<int>(gone.begin(), gone.end()));
    result.applied = std::move(total);
    return result;
}

QP mutate(const QP& qp, int vertex) { return split_reduce(premutate(qp, vertex)).reduced; }

QP mutate_sequence(const QP& qp, const std::vector<std::string>& vertices) {
    QP cur = qp;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        try {
            cur = mutate(cur, cur.q().vertex_index(vertices[k]));
        } catch (const std::exception& e) {
            throw MutationError("step " + std::to_string(k) + " (" + vertices[k] + "): " + e.what());
        }
    }
    return cur;
}

}  // namespace dgw
