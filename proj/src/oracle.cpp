#include "gwi/oracle.hpp"

#include <functional>

namespace gwi {

namespace {

DistanceMatrix connected_distances(const Graph& g) {
  require_connected(g);
  return DistanceMatrix(g);
}

// Sum of d(u,v) over unordered pairs u < v with keep(u) && keep(v).
Count filtered_distance_sum(const Graph& g, const DistanceMatrix& d,
                            const std::function<bool(Vertex)>& keep) {
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep(v)) chosen.push_back(v);
  }
  Count total = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) total += d(chosen[i], chosen[j]);
  }
  return total;
}

WienerPolynomial polynomial_from(const DistanceMatrix& d) {
  WienerPolynomial poly;
  poly.coeffs.assign(static_cast<std::size_t>(d.diameter()) + 1, 0);
  const auto n = static_cast<Vertex>(d.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) ++poly.coeffs[static_cast<std::size_t>(d(u, v))];
  }
  return poly;
}

}  // namespace

Count WienerPolynomial::derivative_at_one() const {
  Count total = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) total += static_cast<Count>(k) * coeffs[k];
  return total;
}

Count WienerPolynomial::pair_count() const {
  Count total = 0;
  for (std::size_t k = 1; k < coeffs.size(); ++k) total += coeffs[k];
  return total;
}

Count wiener(const Graph& g) {
  const auto d = connected_distances(g);
  return d.matrix().cast<Count>().sum() / 2;
}

Count wk(const Graph& g, unsigned k) {
  if (k == 0) throw Error(ErrorCode::OutOfRange, "wk requires k >= 1");
  const auto d = connected_distances(g);
  return (d.matrix().array() == static_cast<Distance>(k)).count() / 2;
}

WienerPolynomial wiener_polynomial(const Graph& g) {
  return polynomial_from(connected_distances(g));
}

Count twk(const Graph& g, unsigned k) {
  const auto d = connected_distances(g);
  return filtered_distance_sum(g, d, [&](Vertex v) { return g.degree(v) == k; });
}

Count wk_star(const Graph& g, unsigned k) {
  if (k == 0) throw Error(ErrorCode::OutOfRange, "wk_star requires k >= 1");
  const auto d = connected_distances(g);
  const auto within = (d.matrix().array() >= 1 && d.matrix().array() <= static_cast<Distance>(k));
  return within.count() / 2;
}

Count twk_star(const Graph& g, unsigned k) {
  if (k == 0) throw Error(ErrorCode::OutOfRange, "twk_star requires k >= 1");
  const auto d = connected_distances(g);
  return filtered_distance_sum(g, d, [&](Vertex v) { return g.degree(v) <= k; });
}

Count zagreb_m1(const Graph& g) {
  Count total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto deg = static_cast<Count>(g.degree(v));
    total += deg * deg;
  }
  return total;
}

Count zagreb_m2(const Graph& g) {
  Count total = 0;
  for (const auto& [u, v] : g.edges()) {
    total += static_cast<Count>(g.degree(u)) * static_cast<Count>(g.degree(v));
  }
  return total;
}

IndexReport index_report(const Graph& g, std::optional<unsigned> k) {
  const auto d = connected_distances(g);
  IndexReport report;
  report.polynomial = polynomial_from(d);
  report.wiener = report.polynomial.derivative_at_one();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto deg = static_cast<unsigned>(g.degree(v));
    if (report.twk.contains(deg)) continue;
    report.twk[deg] = filtered_distance_sum(g, d, [&](Vertex x) { return g.degree(x) == deg; });
  }
  report.m1 = zagreb_m1(g);
  report.m2 = zagreb_m2(g);
  if (k) {
    if (*k == 0) throw Error(ErrorCode::OutOfRange, "cumulative indices require k >= 1");
    report.k = k;
    Count cumulative = 0;
    for (unsigned j = 1; j <= *k; ++j) cumulative += report.polynomial.at(j);
    report.wk_star = cumulative;
    report.twk_star = filtered_distance_sum(g, d, [&](Vertex v) { return g.degree(v) <= *k; });
  }
  return report;
}

}  // namespace gwi
