#include "klab/metric.hpp"

#include <string>

#include "klab/errors.hpp"

namespace klab {

FiniteMetric build_metric(int n, std::vector<std::vector<Rat>> dist) {
  if (n < 1) throw Error("build_metric: need at least one point");
  if (static_cast<int>(dist.size()) != n)
    throw Error("build_metric: table has " + std::to_string(dist.size()) + " rows, expected " + std::to_string(n));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(dist[a].size()) != n)
      throw Error("build_metric: row " + std::to_string(a) + " has wrong length");
  }
  for (int a = 0; a < n; ++a) {
    if (dist[a][a] != 0)
      throw Error("build_metric: dist[" + std::to_string(a) + "][" + std::to_string(a) + "] != 0");
    for (int b = a + 1; b < n; ++b) {
      if (dist[a][b] != dist[b][a])
        throw AsymmetricDistance("pair (" + std::to_string(a) + "," + std::to_string(b) + "): " +
                                 rat_to_string(dist[a][b]) + " vs " + rat_to_string(dist[b][a]));
      if (dist[a][b] <= 0)
        throw ZeroOffDiagonal("pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (dist[a][c] > dist[a][b] + dist[b][c])
          throw TriangleViolation("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + "): " + rat_to_string(dist[a][c]) + " > " +
                                  rat_to_string(dist[a][b]) + " + " + rat_to_string(dist[b][c]));
  FiniteMetric m;
  m.n = n;
  m.dist = std::move(dist);
  return m;
}

Rat diameter(const FiniteMetric& m) {
  Rat best(0);
  for (int a = 0; a < m.n; ++a)
    for (int b = a + 1; b < m.n; ++b)
      if (m.dist[a][b] > best) best = m.dist[a][b];
  return best;
}

Rat min_distance(const FiniteMetric& m) {
  if (m.n <= 1) return Rat(0);
  Rat best = m.dist[0][1];
  for (int a = 0; a < m.n; ++a)
    for (int b = a + 1; b < m.n; ++b)
      if (m.dist[a][b] < best) best = m.dist[a][b];
  return best;
}

FiniteMetric uniform_metric(int n, const Rat& d) {
  std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n, Rat(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) t[a][b] = d;
  return build_metric(n, std::move(t));
}

FiniteMetric line_metric(const std::vector<Rat>& positions) {
  int n = static_cast<int>(positions.size());
  std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n, Rat(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = rat_abs(positions[a] - positions[b]);
  return build_metric(n, std::move(t));
}

}  // namespace klab
