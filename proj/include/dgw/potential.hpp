#pragma once

// Potentials: formal sums of cyclic words up to rotation.
//
// A cyclic word is stored in its canonical rotation, the one whose sequence of
// arrow names is lexicographically least. Words longer than the truncation
// order are dropped.

#include "dgw/path_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgw {

using Word = std::vector<int>;  // written order, like Path::arrows

bool is_cycle(const GradedQuiver& q, const Word& w);
// throws std::invalid_argument on an empty or non-cyclic word
Word cyclic_normal_form(const GradedQuiver& q, const Word& w);

class Potential {
public:
    Potential() = default;
    explicit Potential(AlgebraPtr alg) : alg_(std::move(alg)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    const GradedQuiver& quiver() const { return alg_->quiver(); }
    int order() const { return alg_->order(); }

    void add_word(const Word& w, const Scalar& c);
    void add_named_word(const std::vector<std::string>& names, const Scalar& c);
    // every term of e must be a cycle; trivial paths are rejected
    void add_element(const Element& e, const Scalar& c = Scalar(1));

    const std::map<Word, Scalar>& terms() const { return terms_; }
    // terms keyed by arrow names, for comparisons across quivers
    std::map<std::vector<std::string>, Scalar> named_terms() const;
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Word& w) const;
    int min_length() const;  // 0 for the zero potential
    bool mentions(int arrow) const;

    Potential& operator+=(const Potential& o);
    Potential& operator-=(const Potential& o);
    friend Potential operator*(const Scalar& c, const Potential& p);

    Element to_element() const;  // each word at its canonical rotation
    std::string str() const;

private:
    AlgebraPtr alg_;
    std::map<Word, Scalar> terms_;
};

// ∂_a W, a path from t(a) to s(a)
Element cyclic_derivative(const Potential& w, int arrow);
// ∂_u W for a composable written-order sequence u: at every cyclic occurrence
// of u, the remaining arrows in cyclic order. With u = (ρ, β) this is ∂_{ρβ}.
Element path_derivative(const Potential& w, const Word& u);

Potential apply_substitution(const Potential& w, const std::map<int, Element>& images);

// same quiver up to names; equal canonical words with equal coefficients
bool potentials_equal_cyclic(const Potential& a, const Potential& b);

// vertex names plus the multiset of (name, source, target, degree)
bool same_quiver(const GradedQuiver& a, const GradedQuiver& b);
std::string quiver_str(const GradedQuiver& q);

}  // namespace dgw
