#pragma once

// JSON forms of the data the command line reads and writes. Coefficients are
// exact literals ("3", "-1/2"); cycles and paths list arrow names in written
// order, rightmost applied first. Writers emit keys in sorted order, so equal
// inputs give byte-identical output and read-then-write is the identity.

#include "dgw/colax.hpp"
#include "dgw/ginzburg.hpp"
#include "dgw/orbit.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace dgw::io {

using json = nlohmann::json;

// malformed or inconsistent input
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string scalar_str(const Scalar& c);
Scalar scalar_from(const json& j);

json quiver_to_json(const GradedQuiver& q);
QuiverPtr quiver_from_json(const json& j);

json potential_to_json(const Potential& w);
Potential potential_from_json(const json& j, const AlgebraPtr& alg);

// {"quiver", "potential", "truncation"}
json qp_to_json(const QP& qp);
QP qp_from_json(const json& j);

// {"total", "by_pair": {"i->j": n}}
json dim_table_to_json(const GradedQuiver& q, const DimTable& t);

// the Ginzburg quiver with the differential of every generator
json ginzburg_to_json(const GinzburgPresentation& g);

json index_to_json(const IndexCategory& c);
IndexCategory index_from_json(const json& j);

// objects, per-pair bases, units, nonzero compositions and differentials
json dgcat_to_json(const DgCategory& c);
DgCategory dgcat_from_json(const json& j);

json functor_to_json(const DgFunctor& f);
DgFunctor functor_from_json(const json& j, const CategoryPtr& source, const CategoryPtr& target);

// components only; the endpoints are implied by the context
json components_to_json(const DgNatTrans& a);
DgNatTrans nat_trans_from_json(const json& j, const DgFunctor& from, const DgFunctor& to);

// {"index", "at_object", "at_morphism", "counit", "cocomposition"}, keyed by
// object and morphism names, cocomposition keys "(b,a)"
json colax_to_json(const ColaxFunctor& x);
std::shared_ptr<const ColaxFunctor> colax_from_json(const json& j);

// {"group": {"elements", "table"}, "vertex_map", "arrow_map"}
json action_to_json(const GroupAction& g, const GradedQuiver& q);
GroupAction action_from_json(const json& j, const GradedQuiver& q);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace dgw::io
