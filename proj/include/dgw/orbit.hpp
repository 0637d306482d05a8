#pragma once

// Finite group actions on quivers with potential, the orbit QP (Q_G, W_G)
// for actions free on vertices, and orbit dg categories as Gr over G.
//
// Orbits are named "G" + the lexicographically least member name.

#include "dgw/colax.hpp"
#include "dgw/qp.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgw {

struct GroupAction {
    IndexPtr group;                             // one object, every morphism invertible
    std::vector<std::vector<int>> on_vertices;  // [g][v]
    std::vector<std::vector<int>> on_arrows;    // [g][a]
};

// replace every maximal digit run k in a name by ((k - 1 + shift) mod m) + 1
std::string shift_indices(const std::string& name, int shift, int modulus);

// cyclic group of order n acting by the generator i ↦ i + shift (mod modulus)
// on all indices appearing in vertex and arrow names
GroupAction index_shift_action(const GradedQuiver& q, int n, int shift, int modulus);

CheckReport check_action(const GroupAction& g, const QP& qp, bool require_free = true);

std::string orbit_name(const std::vector<std::string>& members);

// orbit QP; throws std::invalid_argument when the action is not free on vertices
QP orbit_qp(const GroupAction& g, const QP& qp);

// G acting strictly on a dg category by automorphisms, as a colax functor
// with identity 2-cells; act[g] is the functor of g
std::shared_ptr<const ColaxFunctor> strict_action(const IndexPtr& group, const CategoryPtr& c,
                                                  const std::vector<DgFunctor>& act);
// Gr of the strict action
DgCategory orbit_category(const IndexPtr& group, const CategoryPtr& c, const std::vector<DgFunctor>& act);
// the same but validating the action first
CheckReport check_strict_action(const IndexPtr& group, const CategoryPtr& c, const std::vector<DgFunctor>& act);

// the automorphisms of the truncated Ginzburg category induced by a QP action
std::vector<DgFunctor> ginzburg_action(const GroupAction& g, const GinzburgPresentation& gp, const CategoryPtr& c);

// per pair of orbit representatives and degree: dimension of the orbit
// category hom against the truncated Ginzburg category of (Q_G, W_G);
// a diagnostic only, no Morita equivalence is asserted
struct OrbitDimensionRow {
    std::string from;
    std::string to;
    int degree = 0;
    int orbit_category = 0;
    int orbit_ginzburg = 0;
};
std::vector<OrbitDimensionRow> orbit_dimension_diagnostic(const GroupAction& g, const QP& qp, int order);

}  // namespace dgw

namespace dgw {

// g carried to a QP obtained from qp by mutations: vertices by name, and
// created arrows recursively, a* ↦ g(a)*, [x,y] ↦ [g(x),g(y)]
GroupAction transport_action(const GroupAction& g, const GradedQuiver& from, const GradedQuiver& to);

// a bijection of arrows fixing vertex names, endpoints and degrees that
// carries the potential of a onto that of b; none when there is no such
std::optional<std::map<std::string, std::string>> arrow_renaming(const QP& a, const QP& b);

}  // namespace dgw
