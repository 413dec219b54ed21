#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "gwi/graph.hpp"
#include "gwi/oracle.hpp"

namespace gwi {

namespace family {

struct Path {
  std::size_t n;
};

struct Star {
  std::size_t n;
};

/// Path of k-1 vertices with a1 leaves on one end and a2 on the other;
/// leaves from different ends are at distance k.
struct DoubleBroom {
  unsigned k;
  std::size_t a1;
  std::size_t a2;
};

/// Center with parts.size() paths of length k/2 - 1, each ending in a group
/// of parts[i] leaves. Leaves of different groups are at distance k (k even).
struct StarlikeBroom {
  unsigned k;
  std::vector<std::size_t> parts;
};

/// Spine v_0..v_{s+1} with k-2 leaves on p of v_1..v_s, placed from both
/// ends inward; s = n - p(k-2) - 2.
struct Caterpillar {
  std::size_t n;
  unsigned k;
  std::size_t p;
};

}  // namespace family

using TreeSpec = std::variant<family::Path, family::Star, family::DoubleBroom,
                              family::StarlikeBroom, family::Caterpillar>;

std::size_t spec_order(const TreeSpec& spec);
std::string describe(const TreeSpec& spec);

/// Builds the tree; spine vertices are numbered first, then pendant groups in spine order.
/// Throws InfeasibleSpec.
Graph gen(const TreeSpec& spec);

/// Spine indices (1..s) of the p decorated caterpillar vertices, in placement order.
std::vector<std::size_t> caterpillar_positions(std::size_t s, std::size_t p);

struct ExtremalValue {
  Count value;
  TreeSpec witness;
};

/// Largest W_k over trees on n vertices for odd k >= 3: floor(q/2) * ceil(q/2), q = n-k+1.
ExtremalValue max_wk_odd(std::size_t n, unsigned k);

using Rational = boost::rational<std::int64_t>;

/// The relaxed bound (1/2)(n - 1 - pk/2 + p)^2 (1 - 1/p); requires 2 <= p <= 2(n-1)/k.
Rational f_even(std::size_t n, unsigned k, std::size_t p);

/// Stationary point 1/4 + (1/4) sqrt((16n + k - 18)/(k - 2)) of f_even.
double p_star(std::size_t n, unsigned k);

/// (1/2)(q^2 - sum a_i^2) for the most balanced split of q into p parts.
Count balanced_starlike_value(std::size_t q, std::size_t p);
std::vector<std::size_t> balanced_parts(std::size_t q, std::size_t p);

/// Exact maximum of W_k over the p = 2 double broom and every feasible
/// balanced starlike broom, for even k >= 4. Ties go to the smallest p.
ExtremalValue max_wk_even_search(std::size_t n, unsigned k);

/// Largest number of degree-k vertices in a tree on n vertices: floor((n-2)/(k-1)).
Count max_degree_k_count(std::size_t n, unsigned k);

struct CaterpillarFormula {
  Count by_spine;  // in terms of s
  Count by_order;  // in terms of n
};

/// Both closed forms of TW_k(C_{n,k,p}); throws InfeasibleSpec.
CaterpillarFormula caterpillar_formula_forms(std::size_t n, unsigned k, std::size_t p);
/// The common value of both forms (they are checked to agree).
Count twk_caterpillar_formula(std::size_t n, unsigned k, std::size_t p);

/// TW_3(C_{n,3,floor(n/2)-1}) with its witnessing caterpillar, n > 4.
ExtremalValue max_tw3(std::size_t n);

}  // namespace gwi
