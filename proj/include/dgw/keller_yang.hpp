#pragma once

// The Keller–Yang bimodule T for a mutation of a QP, at finite truncation.
//
// As a right Γ-module T = ⊕_j T_j with T_j = P_j = e_j Γ for unmutated j and
// T_i = cone(P_i -> ⊕_{s(α)=i} P_{t(α)}) for mutated i. Every summand is free
// as a graded module, so T is presented by generators h of fixed vertex,
// degree and weight, and an element is a sum of terms h·p with p a path of Γ
// ending at the vertex of h. For a mutated i the generators are
//   s_i      the shifted copy of e_i, degree -1, d(s_i) = Σ_{s(α)=i} g_α α
//   e_k:α    one copy g_α of e_{t(α)} per arrow α out of i, degree 0
// and e_j for unmutated j. A right Γ-linear map is given by the images of
// the generators; φ(h·p) = φ(h)·p.
//
// Several pairwise non-adjacent vertices may be mutated at once; this is the
// composite of the single mutations at those vertices.

#include "dgw/colax.hpp"
#include "dgw/orbit.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgw {

struct ModuleGenerator {
    std::string name;
    int vertex = 0;  // h = h·e_vertex
    int degree = 0;
    int weight = 0;
    int block = 0;  // the summand T_block it belongs to
};

using ModuleVec = std::map<std::pair<int, Path>, Scalar>;  // Σ c·h·p

struct TruncatedModule {
    GinzburgPresentation gamma;
    std::vector<int> mutated;  // vertices of Q with a cone summand
    std::vector<ModuleGenerator> generators;
    std::vector<ModuleVec> d_generator;
    int order = 0;  // h·p is kept when weight(h) + weight(p) <= order

    const GradedQuiver& quiver() const { return *gamma.tilde; }
    int block_count() const { return gamma.qp.q().vertex_count(); }
    int generator_index(const std::string& name) const;  // throws
    std::vector<int> block_generators(int block) const;

    // adds c·h·p, dropping it when truncated away
    void add(ModuleVec& v, int h, const Path& p, const Scalar& c) const;
    ModuleVec times(const ModuleVec& v, const Path& p, const Scalar& c = Scalar(1)) const;
    ModuleVec times(const ModuleVec& v, const Element& e) const;
    ModuleVec d(const ModuleVec& v) const;
    int degree(int h, const Path& p) const;
    int weight(int h, const Path& p) const;
};

// weighted truncation requires every arrow leaving a mutated vertex to share
// one weight, which is then the weight of s_i; length truncation gives s_i
// weight 0
TruncatedModule build_T(const QP& qp, const std::vector<int>& mutated, int order,
                        std::optional<WeightGrading> weights = std::nullopt);
inline TruncatedModule build_T(const QP& qp, int i, int order) { return build_T(qp, std::vector<int>{i}, order); }

std::string module_str(const TruncatedModule& t, const ModuleVec& v);

// graded Γ-linear endomorphism of T given on generators
struct ModuleMap {
    int degree = 0;
    std::vector<ModuleVec> images;  // one per generator
};

ModuleMap zero_map(const TruncatedModule& t, int degree);
ModuleMap block_identity(const TruncatedModule& t, int block);
ModuleMap identity_map(const TruncatedModule& t);
ModuleVec apply(const TruncatedModule& t, const ModuleMap& f, const ModuleVec& v);
// f after g
ModuleMap compose(const TruncatedModule& t, const ModuleMap& f, const ModuleMap& g);
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g, const Scalar& c = Scalar(1));
ModuleMap scaled(const ModuleMap& f, const Scalar& c);
// d(φ) = d_T φ - (-1)^{|φ|} φ d_T
ModuleMap end_differential(const TruncatedModule& t, const ModuleMap& f);
bool maps_equal(const ModuleMap& f, const ModuleMap& g);

// finite basis of T: every kept h·p, in generator then path order
struct ModuleBasis {
    std::vector<std::pair<int, Path>> elements;
    std::map<std::pair<int, Path>, int> index;
    std::vector<int> degrees;
    int size() const { return static_cast<int>(elements.size()); }
    SparseVec coords(const ModuleVec& v) const;
};

ModuleBasis module_basis(const TruncatedModule& t);
// column k is the image of basis element k
std::vector<SparseVec> differential_matrix(const TruncatedModule& t, const ModuleBasis& b);
std::vector<SparseVec> action_matrix(const TruncatedModule& t, const ModuleBasis& b, int arrow);
std::vector<SparseVec> map_matrix(const TruncatedModule& t, const ModuleBasis& b, const ModuleMap& f);

// f: {e_j} ∪ arrows of the Ginzburg quiver of the (simultaneous) premutation
// -> End_Γ(T), indexed by arrow of gamma_prime.tilde
struct GeneratorMap {
    QP mutated_qp;
    GinzburgPresentation gamma_prime;
    std::vector<ModuleMap> on_arrow;

    ModuleMap& at(const std::string& arrow);
    const ModuleMap& at(const std::string& arrow) const;
    // multiplicative extension; trivial paths go to the block identities
    ModuleMap extend(const TruncatedModule& t, const Path& p) const;
    ModuleMap extend(const TruncatedModule& t, const Element& e) const;
};

// gamma_prime is built at the given order (and weights, if any)
GeneratorMap build_generator_map(const TruncatedModule& t, int order,
                                 std::optional<WeightGrading> weights = std::nullopt);

// premutation at every listed vertex; they must be pairwise non-adjacent
QP simultaneous_premutation(const QP& qp, const std::vector<int>& vertices);
// the weights on the premutated quiver making f weight-preserving:
// α* gets 0, β* gets m - w(β) - w(out of i), [αβ] gets w(α) + w(β)
WeightGrading premutation_weights(const QP& qp, const std::vector<int>& vertices, const WeightGrading& w);

struct GeneratorFailure {
    std::string generator;
    int degree = 0;
    std::string reason;
};

struct DgHomReport {
    bool ok = true;
    std::vector<GeneratorFailure> failures;
    std::size_t checks = 0;
    int order = 0;
    int max_word_length = 0;
    // order - 2·max word length; the check is exact modulo the truncation
    // whatever its sign, a negative margin only means longer words of W are
    // invisible
    int margin = 0;

    bool failed_at(const std::string& generator) const;
    std::string str() const;
};

// degrees, blocks and d(f(μ)) = f(d μ) for every generator μ, on T as truncated
DgHomReport check_dg_hom(const TruncatedModule& t, const GeneratorMap& f);

// dg category on the blocks T_j: hom(T_x, T_y) is the part of Hom_Γ(T_x, T_y)
// of weight in [0, max_weight], composition truncated above max_weight.
// Basis names are "generator>generator|path".
DgCategory module_category(const TruncatedModule& t, int max_weight);

// Γ' truncated as a dg category -> module_category, μ ↦ f(μ)
DgFunctor generator_functor(const TruncatedModule& t, const GeneratorMap& f, const CategoryPtr& source,
                            const CategoryPtr& target);

// renames objects and basis elements and looks the results up in c
DgFunctor renaming_functor(const CategoryPtr& c, const std::function<std::string(const std::string&)>& rename);

// the functor F' = f∘Yoneda for a QP with a cyclic index-shift symmetry,
// mutated simultaneously at an orbit of pairwise non-adjacent vertices, with
// the identity 2-cells φ_i(a) = id making it a 1-morphism of strict actions
struct FPrimeData {
    QP qp;
    TruncatedModule t;
    GeneratorMap f;
    WeightGrading weights;        // on Q
    WeightGrading prime_weights;  // on the premutated quiver
    int max_weight = 0;
    CategoryPtr source;  // Γ' truncated by weight
    CategoryPtr target;  // module_category(t, max_weight)
    DgFunctor functor;
    GroupAction action;        // on Q
    GroupAction prime_action;  // on the premutated quiver
    ColaxOneMorphism one_morphism;
};

struct IndexShift {
    int group_order = 1;
    int shift = 0;
    int modulus = 1;
};

FPrimeData build_F_prime_data(const QP& qp, const std::vector<std::string>& vertices, const WeightGrading& weights,
                              int max_weight, const IndexShift& symmetry);

struct FPrimeReport {
    CheckReport dg_hom;
    CheckReport target_category;
    CheckReport one_morphism;
    CheckReport quasi_equivalence;
    CheckReport two_quasi_iso;
    bool ok() const {
        return dg_hom.ok && target_category.ok && one_morphism.ok && quasi_equivalence.ok && two_quasi_iso.ok;
    }
};

FPrimeReport check_F_prime(const FPrimeData& data);

}  // namespace dgw
