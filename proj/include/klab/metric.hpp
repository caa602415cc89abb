#pragma once

#include <vector>

#include "klab/rational.hpp"

namespace klab {

// Finite metric space with an exact distance table. Immutable after
// construction; safe to share across threads.
struct FiniteMetric {
  int n = 0;
  std::vector<std::vector<Rat>> dist;

  const Rat& d(int a, int b) const { return dist[a][b]; }
};

// Validates symmetry, zero diagonal, positive off-diagonal entries and the
// triangle inequality (exhaustive, exact) before returning the metric.
FiniteMetric build_metric(int n, std::vector<std::vector<Rat>> dist);

Rat diameter(const FiniteMetric& m);

// smallest off-diagonal distance; 0 for n <= 1
Rat min_distance(const FiniteMetric& m);

FiniteMetric uniform_metric(int n, const Rat& d = Rat(1));
FiniteMetric line_metric(const std::vector<Rat>& positions);

}  // namespace klab
