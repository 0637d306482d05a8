#pragma once

// Complete Ginzburg dg algebra of a QP, truncated.
//
// The graded quiver keeps the arrows of Q at their indices, then adds a
// reversed arrow "~a" of degree -1 per arrow and a loop "t_v" of degree -2 per
// vertex. Truncation is by path length unless a weight grading is supplied:
// arrows of Q carry the given weights, ~a carries m - w(a) and t_v carries m,
// where m is the weight of every word of W. The differential is homogeneous
// for that grading, so either truncation is a quotient complex.

#include "dgw/qp.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgw {

struct WeightGrading {
    std::vector<int> arrow;  // one weight per arrow of Q
    int potential = 0;       // weight of every word of W
};

struct GinzburgPresentation {
    QP qp;
    QuiverPtr tilde;
    AlgebraPtr algebra;
    std::vector<Element> generator_d;  // indexed by arrow of the tilde quiver
    int min_degree = 0;                // degree window [min_degree, 0]

    int bar(int arrow) const { return qp.q().arrow_count() + arrow; }
    int loop(int vertex) const { return 2 * qp.q().arrow_count() + vertex; }
    int order() const { return algebra->order(); }
};

std::string bar_name(const std::string& a);
std::string loop_name(const std::string& v);

// truncation order defaults to the QP's; the window to [-2L, 0]
GinzburgPresentation build_ginzburg(const QP& qp, std::optional<int> order = std::nullopt,
                                    std::optional<WeightGrading> weights = std::nullopt);

// homogeneous weight grading of a QP whose words all have one length m:
// every arrow weighs 1 and W weighs m. None when W is not homogeneous.
std::optional<WeightGrading> length_grading(const QP& qp);

Element differential(const GinzburgPresentation& g, const Element& e);
Element differential(const GinzburgPresentation& g, const Path& p);

struct DimTable {
    int total = 0;
    std::map<std::pair<int, int>, int> by_pair;  // (source, target) -> dim, zeros omitted
};

bool operator==(const DimTable& a, const DimTable& b);
std::string dim_table_str(const GradedQuiver& q, const DimTable& t);

// dim of Z^k / B^k of e_j Γ e_i at every pair (i, j); H^0 when k = 0
DimTable cohomology_dimensions(const GinzburgPresentation& g, int k);
inline DimTable h0_dimensions(const GinzburgPresentation& g) { return cohomology_dimensions(g, 0); }

// kQ / (ideal of all ∂_a W + paths longer than L), computed on Q alone
DimTable jacobian_dimensions(const QP& qp, std::optional<int> order = std::nullopt);

}  // namespace dgw
