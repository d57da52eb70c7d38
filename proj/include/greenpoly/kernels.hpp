#pragma once

#include "greenpoly/weyl.hpp"

#include <vector>

namespace greenpoly {

enum class Exec { Serial, Parallel };

using IntPolyMatrix = std::vector<std::vector<IntPoly>>;

// G[i][j] = (1/|W|) sum_c |C| chi_i(c) chi_j(c) weight[c], exact.
// The serial version is the reference; the parallel one splits rows over
// OpenMP threads and must agree bit for bit.
IntPolyMatrix class_weighted_gram(const WeylGroupData& g, const std::vector<IntPoly>& weight,
                                  Exec exec = Exec::Parallel);

// Class-function values of sum_i coords[i] chi_i.
std::vector<IntPoly> class_values(const WeylGroupData& g, const std::vector<IntPoly>& coords,
                                  Exec exec = Exec::Parallel);

int max_threads();

}  // namespace greenpoly
