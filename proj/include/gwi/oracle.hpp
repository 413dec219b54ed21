#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gwi/distance.hpp"
#include "gwi/graph.hpp"

// Definitional (brute-force) distance indices. Every function here recomputes
// an all-pairs BFS; these are the ground truth the faster methods are checked
// against. All distance-based functions require a connected graph and throw
// Error(Disconnected) otherwise.

namespace gwi {

using Count = std::int64_t;

/// coeffs[k] = number of unordered pairs at distance k, k = 0..diam (coeffs[0] = 0).
struct WienerPolynomial {
  std::vector<Count> coeffs;

  Count at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : 0; }
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// Sum of k * coeffs[k], i.e. the Wiener index.
  Count derivative_at_one() const;
  Count pair_count() const;
};

Count wiener(const Graph& g);
Count wk(const Graph& g, unsigned k);
WienerPolynomial wiener_polynomial(const Graph& g);
/// Sum of distances over unordered pairs of degree-k vertices.
Count twk(const Graph& g, unsigned k);
Count wk_star(const Graph& g, unsigned k);
/// Sum of distances over unordered pairs whose degrees are both at most k.
Count twk_star(const Graph& g, unsigned k);

Count zagreb_m1(const Graph& g);
Count zagreb_m2(const Graph& g);

struct IndexReport {
  Count wiener = 0;
  WienerPolynomial polynomial;
  std::map<unsigned, Count> twk;  // every degree present in the graph
  Count m1 = 0;
  Count m2 = 0;
  std::optional<unsigned> k;
  std::optional<Count> wk_star;
  std::optional<Count> twk_star;
};

/// All oracle indices from a single distance matrix; cumulative values only when k is given.
IndexReport index_report(const Graph& g, std::optional<unsigned> k = std::nullopt);

}  // namespace gwi
