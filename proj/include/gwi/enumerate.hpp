#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gwi/graph.hpp"
#include "gwi/oracle.hpp"

namespace gwi {

/// Largest order accepted by the free-tree enumerator.
inline constexpr std::size_t kMaxEnumerationOrder = 16;

/// Constant-amortized-time generation of free trees as canonical level
/// sequences (Wright, Richmond, Odlyzko and McKay). Yields one tree per
/// isomorphism class in a fixed order.
class FreeTreeGenerator {
 public:
  /// Throws OrderTooLarge for n > kMaxEnumerationOrder, OutOfRange for n == 0.
  explicit FreeTreeGenerator(std::size_t n);

  std::optional<Graph> next();

 private:
  std::size_t n_;
  bool single_pending_ = false;
  std::optional<std::vector<int>> layout_;
};

void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> all_free_trees(std::size_t n);

/// Isomorphism invariant of a tree: nested-parenthesis encoding of the tree
/// rooted at its center, taking the smaller rooting for bicentral trees.
std::string canonical_form(const Graph& tree);

namespace claim {
struct MaxWk {
  unsigned k;
};
struct MaxTw3 {};
struct MaxDegreeCount {
  unsigned k;
};
struct WienerBounds {};
}  // namespace claim

using Claim = std::variant<claim::MaxWk, claim::MaxTw3, claim::MaxDegreeCount, claim::WienerBounds>;

std::string claim_name(const Claim& c);

struct ExtremalReport {
  std::string claim;
  std::size_t n = 0;
  std::size_t trees_scanned = 0;
  Count observed_max = 0;
  Count predicted_max = 0;
  std::vector<std::string> maximizers;  // canonical forms
  bool unique_maximizer = false;
  std::optional<Count> observed_min;    // wiener_bounds only
  std::optional<Count> predicted_min;
  std::vector<std::string> minimizers;
  std::vector<std::string> failures;    // empty iff the claim holds

  bool passed() const noexcept { return failures.empty(); }
};

/// Scans every free tree on n vertices with the oracle and compares against
/// the closed-form prediction. Throws OrderTooLarge, or InfeasibleSpec when
/// the claim has no prediction at this (n, k).
ExtremalReport verify_extremal(std::size_t n, const Claim& claim);

}  // namespace gwi
