#pragma once

// Finite dg categories presented by hom bases, and the machinery around them:
// dg functors, dg natural transformations, cohomology of hom complexes,
// quasi-equivalence and 2-quasi-isomorphism checks.
//
// hom(x, y) is the space of morphisms x -> y. Composition g∘f takes
// f ∈ hom(x, y) and g ∈ hom(y, z). Morphisms are sparse coordinate vectors
// over the hom basis; every basis element is homogeneous.

#include "dgw/ginzburg.hpp"
#include "dgw/linalg.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgw {

struct HomSpace {
    std::vector<std::string> names;
    std::vector<int> degrees;
    int size() const { return static_cast<int>(names.size()); }
};

struct DgCategory {
    std::vector<std::string> objects;
    std::vector<std::vector<HomSpace>> homs;  // homs[x][y] = hom(x, y)
    std::function<SparseVec(int x, int y, int z, int g, int f)> compose_basis;
    std::function<SparseVec(int x, int y, int f)> d_basis;
    std::vector<SparseVec> units;
    // lowest degree represented faithfully; cohomology there is uncertified
    std::optional<int> window_min;

    int object_count() const { return static_cast<int>(objects.size()); }
    const HomSpace& hom(int x, int y) const { return homs[x][y]; }
    int object_index(const std::string& name) const;

    SparseVec compose(int x, int y, int z, const SparseVec& g, const SparseVec& f) const;
    SparseVec d(int x, int y, const SparseVec& f) const;
    // degree of a nonzero homogeneous vector, none when mixed
    std::optional<int> degree(int x, int y, const SparseVec& f) const;
};

using CategoryPtr = std::shared_ptr<const DgCategory>;

// f ∗ g = (-1)^{|f||g|} g∘f for homogeneous f ∈ hom(x,y), g ∈ hom(y,z)
SparseVec star(const DgCategory& c, int x, int y, int z, const SparseVec& f, const SparseVec& g);

// explicit tables, handy for tests and JSON input
struct TableCategory {
    std::vector<std::string> objects;
    std::vector<std::vector<HomSpace>> homs;
    std::map<std::tuple<int, int, int, int, int>, SparseVec> compose;  // (x,y,z,g,f)
    std::map<std::tuple<int, int, int>, SparseVec> d;                 // (x,y,f)
    std::vector<SparseVec> units;

    explicit TableCategory(std::vector<std::string> objs);
    int add_basis(int x, int y, const std::string& name, int degree);
    DgCategory build() const;
};

struct CheckReport {
    bool ok = true;
    std::string message;
    std::size_t checks = 0;  // number of identities tested

    static CheckReport fail(std::string m) { return {false, std::move(m), 0}; }
};

CheckReport check_dg_category(const DgCategory& c);

DgCategory opposite(const DgCategory& c);

// one object per vertex, hom(i, j) = e_j Γ e_i
DgCategory truncated_ginzburg_as_dgcat(const GinzburgPresentation& g);

struct DgFunctor {
    CategoryPtr source;
    CategoryPtr target;
    std::vector<int> object_map;
    // image of basis f of source hom(x, y) in target hom(Fx, Fy)
    std::function<SparseVec(int x, int y, int f)> map_basis;

    SparseVec map(int x, int y, const SparseVec& f) const;
};

DgFunctor identity_functor(const CategoryPtr& c);
CheckReport check_dg_functor(const DgFunctor& f);

struct DgNatTrans {
    DgFunctor from;
    DgFunctor to;
    int degree = 0;
    std::vector<SparseVec> components;  // components[x] ∈ target hom(from x, to x)
};

// naturality α_y E(f) = (-1)^{n|f|} F(f) α_x; for degree 0 also that the
// components are cocycles
CheckReport check_nat_trans(const DgNatTrans& a);

struct GradedComplex {
    std::vector<int> degrees;
    std::vector<SparseVec> d;  // d[i] = image of basis i
    int size() const { return static_cast<int>(degrees.size()); }
    std::vector<int> indices_in(int k) const;
};

GradedComplex hom_complex(const DgCategory& c, int x, int y);
int cohomology_dim(const GradedComplex& c, int k);
std::vector<int> degrees_of(const GradedComplex& c);

struct InducedMap {
    int dim_source = 0;
    int dim_target = 0;
    int rank = 0;
    bool iso() const { return dim_source == dim_target && rank == dim_source; }
};

// phi[i] is the image of source basis i; phi must be a degree-0 chain map
InducedMap induced_on_cohomology(const GradedComplex& src, const GradedComplex& dst,
                                 const std::vector<SparseVec>& phi, int k);

struct QuasiEquivalenceOptions {
    bool check_density = true;
    bool strict_density = false;  // require every target object to be an image object
    int density_attempts = 8;
    unsigned seed = 20240611;
};

CheckReport check_quasi_equivalence(const DgFunctor& f, const QuasiEquivalenceOptions& opt = {});
CheckReport check_2_quasi_iso(const DgNatTrans& a);

// search for u ∈ Z⁰(x, y), v ∈ Z⁰(y, x) inverse to each other in H⁰
bool h0_isomorphic(const DgCategory& c, int x, int y, int attempts = 8, unsigned seed = 1);
// same, but u and v must be strictly inverse 0-cocycles
bool z0_isomorphic(const DgCategory& c, int x, int y, int attempts = 8, unsigned seed = 1);

// g after f
DgFunctor compose_functors(const DgFunctor& g, const DgFunctor& f);
// same object map and same image of every basis morphism
bool functors_equal(const DgFunctor& a, const DgFunctor& b);

}  // namespace dgw
