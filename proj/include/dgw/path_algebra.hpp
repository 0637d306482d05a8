#pragma once

// Graded quivers, paths and truncated completed path algebras.
//
// Paths are stored in written order: the path γβα is {γ, β, α}, so the
// rightmost arrow is applied first. A path is kept when its weight is at most
// the truncation order; by default every arrow weighs 1 and the weight is the
// length, which realizes the quotient by m^{L+1}.

#include "dgw/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dgw {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
    int degree = 0;
};

class GradedQuiver {
public:
    int add_vertex(const std::string& name);
    int add_arrow(const std::string& name, int source, int target, int degree = 0);
    int add_arrow(const std::string& name, const std::string& source, const std::string& target,
                  int degree = 0);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<int> find_vertex(const std::string& name) const;
    std::optional<int> find_arrow(const std::string& name) const;
    int vertex_index(const std::string& name) const;  // throws
    int arrow_index(const std::string& name) const;   // throws

    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_into(int v) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vertex_ids_;
    std::unordered_map<std::string, int> arrow_ids_;
};

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

struct Path {
    int vertex = -1;          // set only for trivial paths
    std::vector<int> arrows;  // written order

    static Path trivial(int v) { return Path{v, {}}; }
    static Path of_arrow(int a) { return Path{-1, {a}}; }
    static Path of_arrows(std::vector<int> a) { return Path{-1, std::move(a)}; }

    bool is_trivial() const { return arrows.empty(); }
    int length() const { return static_cast<int>(arrows.size()); }
    int source(const GradedQuiver& q) const;
    int target(const GradedQuiver& q) const;
    int degree(const GradedQuiver& q) const;
    bool well_formed(const GradedQuiver& q) const;

    friend bool operator==(const Path& a, const Path& b) {
        return a.vertex == b.vertex && a.arrows == b.arrows;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.vertex < b.vertex;
    }
};

// p∘q: q first, then p. Trivial paths act as units. None when not composable.
std::optional<Path> compose_paths(const GradedQuiver& q, const Path& p, const Path& r);
std::string path_str(const GradedQuiver& q, const Path& p);

class PathAlgebra {
public:
    PathAlgebra(QuiverPtr quiver, int order);
    PathAlgebra(QuiverPtr quiver, int order, std::vector<int> weights);

    const GradedQuiver& quiver() const { return *quiver_; }
    const QuiverPtr& quiver_ptr() const { return quiver_; }
    int order() const { return order_; }
    bool length_filtered() const { return weights_.empty(); }
    int arrow_weight(int a) const { return weights_.empty() ? 1 : weights_[a]; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(const Path& p) const;
    bool keeps(const Path& p) const { return weight(p) <= order_; }

    // paths from `from` to `to` kept by the truncation, in Path order;
    // restricted to one degree when `degree` is given
    std::vector<Path> paths(int from, int to, std::optional<int> degree = std::nullopt) const;
    std::vector<Path> paths_from(int from, std::optional<int> degree = std::nullopt) const;

private:
    QuiverPtr quiver_;
    int order_;
    std::vector<int> weights_;
    bool nonpositive_ = true;  // all arrow degrees <= 0, so degree pruning is sound
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

AlgebraPtr make_algebra(QuiverPtr q, int order);

class Element {
public:
    Element() = default;
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static Element zero(const AlgebraPtr& alg) { return Element(alg); }
    static Element unit(const AlgebraPtr& alg);  // sum of all e_i
    static Element vertex(const AlgebraPtr& alg, int v);
    static Element arrow(const AlgebraPtr& alg, int a);
    static Element path(const AlgebraPtr& alg, const Path& p, const Scalar& c = Scalar(1));
    static Element arrow(const AlgebraPtr& alg, const std::string& name);
    // written-order list of arrow names
    static Element word(const AlgebraPtr& alg, const std::vector<std::string>& names,
                        const Scalar& c = Scalar(1));

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Path, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const Path& p) const;

    // drops the term when it is truncated away or the coefficient vanishes
    void add_term(const Path& p, const Scalar& c);
    void add_scaled(const Element& o, const Scalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator-() const;
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& c, const Element& e);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    // degree of every term, or none when inhomogeneous or zero
    std::optional<int> homogeneous_degree() const;
    std::string str() const;

private:
    AlgebraPtr alg_;
    std::map<Path, Scalar> terms_;
};

Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

// concatenation of written-order arrow lists with truncation; no composability check
void accumulate_product(Element& out, const Path& left, const Path& right, const Scalar& c);

// unique vertex-fixing algebra endomorphism sending each listed arrow to its
// image; unlisted arrows are fixed. Throws std::invalid_argument when an image
// has the wrong endpoints or degree.
Element apply_substitution(const Element& e, const std::map<int, Element>& images);
void validate_substitution(const PathAlgebra& alg, const std::map<int, Element>& images);

}  // namespace dgw
