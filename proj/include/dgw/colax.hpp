#pragma once

// Colax functors from a finite index category into dg categories, and the
// Grothendieck construction Gr with its unit (the canonical morphism) and
// counit Q. Only dg natural transformations (degree 0) are accepted as
// 2-cells; inputs of other degrees are rejected by the checks.

#include "dgw/dgcat.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dgw {

struct IndexMorphism {
    std::string name;
    int source = 0;
    int target = 0;
};

// finite category with a total composition table
struct IndexCategory {
    std::vector<std::string> objects;
    std::vector<IndexMorphism> morphisms;
    std::vector<int> identity;          // identity[i] = morphism index of id_i
    std::vector<std::vector<int>> comp;  // comp[b][a] = ba, or -1 when t(a) != s(b)

    int object_count() const { return static_cast<int>(objects.size()); }
    int morphism_count() const { return static_cast<int>(morphisms.size()); }
    int compose(int b, int a) const { return comp[b][a]; }
    bool is_identity(int a) const { return identity[morphisms[a].source] == a; }
    // I(i, j) in index order
    std::vector<int> hom(int i, int j) const;
    int morphism_index(const std::string& name) const;
};

using IndexPtr = std::shared_ptr<const IndexCategory>;

CheckReport check_index_category(const IndexCategory& c);

// leq[i][j] true when i <= j; must be a partial order
IndexCategory poset_category(const std::vector<std::string>& objects, const std::vector<std::vector<bool>>& leq);
// single object; table[g][h] = gh, element 0 is the unit
IndexCategory monoid_category(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);
IndexCategory cyclic_group_category(int n);
// path category of an acyclic quiver; morphisms are named by their paths
IndexCategory free_category(const GradedQuiver& q);

struct ColaxFunctor {
    IndexPtr index;
    std::vector<CategoryPtr> at_object;                       // X(i)
    std::vector<DgFunctor> at_morphism;                       // X(a): X(i) -> X(j)
    std::vector<DgNatTrans> counit;                           // X_i: X(id_i) => id
    std::map<std::pair<int, int>, DgNatTrans> cocomposition;  // X_{b,a}: X(ba) => X(b)X(a)

    const DgNatTrans& co(int b, int a) const { return cocomposition.at({b, a}); }
};

CheckReport check_colax(const ColaxFunctor& x);

// left transformation (F, ψ): X -> X'
struct ColaxOneMorphism {
    std::shared_ptr<const ColaxFunctor> source;
    std::shared_ptr<const ColaxFunctor> target;
    std::vector<DgFunctor> F;     // F(i): X(i) -> X'(i)
    std::vector<DgNatTrans> psi;  // ψ(a): X'(a)F(i) => F(j)X(a)
};

CheckReport check_one_morphism(const ColaxOneMorphism& f);
ColaxOneMorphism identity_one_morphism(const std::shared_ptr<const ColaxFunctor>& x);
// (F', ψ')(F, ψ)
ColaxOneMorphism compose_one_morphisms(const ColaxOneMorphism& g, const ColaxOneMorphism& f);

struct ColaxTwoMorphism {
    ColaxOneMorphism from;
    ColaxOneMorphism to;
    std::vector<DgNatTrans> zeta;  // ζ(i): F(i) => F'(i)
};

CheckReport check_two_morphism(const ColaxTwoMorphism& z);
ColaxTwoMorphism vertical_compose(const ColaxTwoMorphism& later, const ColaxTwoMorphism& first);

// Δ(C): every object to C, every morphism to id_C, identity 2-cells
std::shared_ptr<const ColaxFunctor> diagonal(const IndexPtr& index, const CategoryPtr& c);
ColaxOneMorphism diagonal_on_1(const IndexPtr& index, const DgFunctor& h);
ColaxTwoMorphism diagonal_on_2(const IndexPtr& index, const DgNatTrans& a);

// objects _i x ordered by (i, x); the basis of Gr(X)(_i x, _j y) is the
// concatenation over a ∈ I(i, j) of the bases of X(j)(X(a)x, y)
struct GrothendieckLayout {
    std::vector<std::pair<int, int>> objects;  // (i, x)
    std::map<std::pair<int, int>, int> index_of;
    // blocks[u][v] = (a, offset) per I-morphism, in order
    std::vector<std::vector<std::vector<std::pair<int, int>>>> blocks;

    int object(int i, int x) const { return index_of.at({i, x}); }
    // offset of the a-block in hom(u, v), or -1
    int offset(int u, int v, int a) const;
    // (a, position inside the block) of basis element f
    std::pair<int, int> locate(int u, int v, int f) const;
};

GrothendieckLayout grothendieck_layout(const ColaxFunctor& x);
DgCategory grothendieck(const ColaxFunctor& x);

// Gr on 1- and 2-morphisms; the source and target categories are passed in so
// that composites share them
DgFunctor grothendieck_on_1(const ColaxOneMorphism& f, const CategoryPtr& gr_source, const CategoryPtr& gr_target);
DgNatTrans grothendieck_on_2(const ColaxTwoMorphism& z, const DgFunctor& gr_from, const DgFunctor& gr_to);

// (P, φ): X -> Δ(Gr X)
ColaxOneMorphism canonical_morphism(const std::shared_ptr<const ColaxFunctor>& x, const CategoryPtr& gr);
// Q_C: Gr(Δ C) -> C
DgFunctor counit_functor(const IndexPtr& index, const CategoryPtr& c, const CategoryPtr& gr_delta);

// (F, ψ)^(1)_{x,y}: ⊕_a X(j)(X(a)x, y) -> C(F(i)x, F(j)y), as images of the
// source basis (which is the Gr basis)
struct PrecoveringMap {
    GradedComplex source;
    GradedComplex target;
    std::vector<SparseVec> images;
    bool is_identity() const;
};

PrecoveringMap precovering_map(const ColaxOneMorphism& f, int i, int j, int x, int y);
CheckReport check_I_covering(const ColaxOneMorphism& f, int density_attempts = 8);
CheckReport check_adjunction_identities(const std::shared_ptr<const ColaxFunctor>& x, const CategoryPtr& c);

// Direct constructions compared with Gr(Δ A) over the matching index category.
// a must have one object.
DgCategory build_AQ(const DgCategory& a, const GradedQuiver& q);
DgCategory build_AS(const DgCategory& a, const std::vector<std::string>& objects,
                    const std::vector<std::vector<bool>>& leq);
DgCategory build_AG(const DgCategory& a, const std::vector<std::string>& elements,
                    const std::vector<std::vector<int>>& table);
// the bijection i ↦ _i*, a_μ μ ↦ (a_μ)_μ, matched through morphism names;
// verifies it is a dg functor that is bijective on objects and on every hom
CheckReport check_iso_to_grothendieck(const CategoryPtr& direct, const IndexPtr& index, const CategoryPtr& a);

}  // namespace dgw
