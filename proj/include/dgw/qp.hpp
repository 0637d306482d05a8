#pragma once

// Quivers with potential and their mutation.

#include "dgw/potential.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgw {

struct QP {
    QuiverPtr quiver;
    Potential potential;

    int order() const { return potential.order(); }
    const GradedQuiver& q() const { return *quiver; }
};

// builds a QP; throws when an arrow has nonzero degree or a word is too short
QP make_qp(QuiverPtr quiver, int order);

struct MutabilityReport {
    bool ok = true;
    int condition = 0;  // 1: loop, 2: 2-cycle at i, 3: word cannot avoid i as its cut point
    std::string message;
};

MutabilityReport check_mutable(const QP& qp, int vertex);

class MutationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// substitution images keyed by arrow index of the quiver it acts on
using RightEquivalence = std::map<int, Element>;

struct TrivialPair {
    std::string first;  // the word c·ab is stored as {first, second}
    std::string second;
    Scalar coeff;
};

struct SplitResult {
    QP reduced;
    std::vector<TrivialPair> trivial_pairs;
    // acts on the input quiver; maps the input potential to trivial ⊕ reduced
    RightEquivalence applied;
    int passes = 0;
};

std::string bracket_name(const std::string& alpha, const std::string& beta);
std::string star_name(const std::string& a);

QP premutate(const QP& qp, int vertex);
SplitResult split_reduce(const QP& qp);
QP mutate(const QP& qp, int vertex);
QP mutate_sequence(const QP& qp, const std::vector<std::string>& vertices);

// copy of the quiver without the listed arrows, with the potential carried over
QP delete_arrows(const QP& qp, const std::vector<int>& arrows);

}  // namespace dgw
