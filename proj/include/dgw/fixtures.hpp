#pragma once

// The worked examples used throughout the tests and the CLI.

#include "dgw/qp.hpp"

namespace dgw::fixtures {

// Four triangles a_i -gamma_i-> b_i -alpha_i-> c_i -beta_i-> a_i joined by the
// square a_1 -delta_1-> a_2 -> a_3 -> a_4 -delta_4-> a_1;
// W = delta4 delta3 delta2 delta1 + sum_i gamma_i beta_i alpha_i.
QP triangles(int order = 8);

// Oriented hexagon a_k: k -> k+1 (indices mod 6), W = a5 a4 a3 a2 a1 a6.
QP hexagon(int order = 8);

// 1 -> 2 with zero potential.
QP line(int order = 8);

}  // namespace dgw::fixtures
