#pragma once

// Small dg algebras and randomized colax functors built from them.
//
// A twisted sample starts from a strict functor I -> dgCat sending every
// object to the chaotic category C_m(A) and each morphism a: i -> j to the
// automorphism scaling nilpotent basis elements by h(j)/h(i). The comparison
// cells are then twisted by invertible central elements θ(a) = λ + μn of
// degree 0:
//   X_i = θ(id_i)^{-1},   X_{b,a} = θ(b) X(b)(θ(a)) θ(ba)^{-1}.

#include "dgw/colax.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace dgw::samples {

struct SmallAlgebra {
    std::string name;
    DgCategory a;             // one object "*"
    std::vector<int> weight;  // nilpotency weight per basis element, unit has 0
    int nilpotent = -1;       // degree-0 central nilpotent basis element, or -1
};

SmallAlgebra ground_field();
// k[ε]/(ε²), |ε| = -1, dε = 0
SmallAlgebra odd_dual_numbers();
// k[x]/(x²), |x| = 0
SmallAlgebra even_dual_numbers();
// basis 1, x, y with |x| = 0, |y| = -1, dy = x, all products of x, y zero
SmallAlgebra acyclic_resolution();
std::vector<SmallAlgebra> all_algebras();

// m objects, every hom equal to A, composition by multiplication
DgCategory chaotic(const DgCategory& a, int m);

// A-coordinates of products and inverses of degree-0 elements λ + μn
SparseVec multiply(const SmallAlgebra& alg, const SparseVec& u, const SparseVec& v);
SparseVec invert(const SmallAlgebra& alg, const SparseVec& u);
// scale every basis element by c^weight
SparseVec scale_weights(const SmallAlgebra& alg, const SparseVec& u, const Scalar& c);

struct TwistedSample {
    IndexPtr index;
    SmallAlgebra alg;
    int m = 1;
    std::vector<Scalar> height;    // per index object
    std::vector<SparseVec> twist;  // θ(a) per index morphism
};

using ColaxPtr = std::shared_ptr<const ColaxFunctor>;

ColaxPtr build_colax(const TwistedSample& s);
// strict: every twist equal to 1
TwistedSample strict_sample(const IndexPtr& index, const SmallAlgebra& alg, int m);

// (F, ψ): X^θ -> X^θ' between samples with the same base; F(i) scales
// nilpotent elements by s and ψ(a) = F(θ(a)) θ'(a)^{-1}
ColaxOneMorphism twist_morphism(const TwistedSample& from, const ColaxPtr& x, const TwistedSample& to,
                                const ColaxPtr& y, const Scalar& s);
// ζ(i) = λ on every object, a 2-morphism between two equal 1-morphisms
ColaxTwoMorphism scalar_two_morphism(const ColaxOneMorphism& f, const Scalar& lambda);

struct IndexShape {
    std::string name;
    IndexPtr index;
};

// posets, cyclic groups, an idempotent monoid and free categories, all with
// at most three objects
std::vector<IndexShape> small_index_shapes();

TwistedSample random_sample(std::mt19937& rng);
TwistedSample random_twist(std::mt19937& rng, TwistedSample base);
bool has_nontrivial_cocomposition(const ColaxFunctor& x);

// poset 1 < 2 < 3 < 4, so that three composable non-identity morphisms exist
IndexPtr chain4();
// negate X_{b,a} for the named pair; breaks axiom (b)
ColaxPtr flip_cocomposition(const ColaxFunctor& x, const std::string& b, const std::string& a);

}  // namespace dgw::samples
