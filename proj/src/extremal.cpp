#include "gwi/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gwi {

namespace {

[[noreturn]] void infeasible(const std::string& msg) { throw Error(ErrorCode::InfeasibleSpec, msg); }

// Signed spine length s = n - p(k-2) - 2 of a caterpillar.
std::int64_t caterpillar_spine(std::size_t n, unsigned k, std::size_t p) {
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(p) * (static_cast<std::int64_t>(k) - 2) - 2;
}

void check_caterpillar(std::size_t n, unsigned k, std::size_t p) {
  if (k < 3) infeasible("caterpillar needs k >= 3");
  const auto s = caterpillar_spine(n, k, p);
  if (s < 0) infeasible("caterpillar spine length s = n - p(k-2) - 2 is negative");
  if (static_cast<std::int64_t>(p) > s) infeasible("caterpillar needs p <= s");
}

struct Builder {
  std::size_t next = 0;
  std::vector<Edge> edges;

  Vertex add() { return static_cast<Vertex>(next++); }
  void leaves(Vertex at, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) edges.emplace_back(at, add());
  }
  Graph build() const { return Graph(next, edges); }
};

Graph gen_double_broom(const family::DoubleBroom& spec) {
  if (spec.k < 3) infeasible("double broom needs k >= 3");
  if (spec.a1 == 0 || spec.a2 == 0) infeasible("double broom needs nonempty leaf groups");
  Builder b;
  for (unsigned i = 0; i + 1 < spec.k; ++i) {
    const Vertex v = b.add();
    if (i > 0) b.edges.emplace_back(v - 1, v);
  }
  b.leaves(0, spec.a1);
  b.leaves(static_cast<Vertex>(spec.k - 2), spec.a2);
  return b.build();
}

Graph gen_starlike(const family::StarlikeBroom& spec) {
  if (spec.k < 4 || spec.k % 2 != 0) infeasible("starlike broom needs even k >= 4");
  if (spec.parts.size() < 2) infeasible("starlike broom needs at least two groups");
  if (std::ranges::any_of(spec.parts, [](std::size_t a) { return a == 0; })) {
    infeasible("starlike broom groups must be nonempty");
  }
  const std::size_t arm = spec.k / 2 - 1;
  Builder b;
  const Vertex center = b.add();
  std::vector<Vertex> ends;
  for (std::size_t j = 0; j < spec.parts.size(); ++j) {
    Vertex prev = center;
    for (std::size_t i = 0; i < arm; ++i) {
      const Vertex v = b.add();
      b.edges.emplace_back(prev, v);
      prev = v;
    }
    ends.push_back(prev);
  }
  for (std::size_t j = 0; j < spec.parts.size(); ++j) b.leaves(ends[j], spec.parts[j]);
  return b.build();
}

Graph gen_caterpillar(const family::Caterpillar& spec) {
  check_caterpillar(spec.n, spec.k, spec.p);
  const auto s = static_cast<std::size_t>(caterpillar_spine(spec.n, spec.k, spec.p));
  Builder b;
  for (std::size_t i = 0; i < s + 2; ++i) {
    const Vertex v = b.add();
    if (i > 0) b.edges.emplace_back(v - 1, v);
  }
  auto positions = caterpillar_positions(s, spec.p);
  std::ranges::sort(positions);
  for (std::size_t pos : positions) b.leaves(static_cast<Vertex>(pos), spec.k - 2);
  return b.build();
}

}  // namespace

std::size_t spec_order(const TreeSpec& spec) {
  struct {
    std::size_t operator()(const family::Path& s) const { return s.n; }
    std::size_t operator()(const family::Star& s) const { return s.n; }
    std::size_t operator()(const family::DoubleBroom& s) const { return s.k - 1 + s.a1 + s.a2; }
    std::size_t operator()(const family::StarlikeBroom& s) const {
      return 1 + s.parts.size() * (s.k / 2 - 1) + std::accumulate(s.parts.begin(), s.parts.end(), std::size_t{0});
    }
    std::size_t operator()(const family::Caterpillar& s) const { return s.n; }
  } visitor;
  return std::visit(visitor, spec);
}

std::string describe(const TreeSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, family::Path>) {
          out << "path(n=" << s.n << ")";
        } else if constexpr (std::is_same_v<T, family::Star>) {
          out << "star(n=" << s.n << ")";
        } else if constexpr (std::is_same_v<T, family::DoubleBroom>) {
          out << "double_broom(k=" << s.k << ",a1=" << s.a1 << ",a2=" << s.a2 << ")";
        } else if constexpr (std::is_same_v<T, family::StarlikeBroom>) {
          out << "starlike_broom(k=" << s.k << ",p=" << s.parts.size() << ",parts=";
          for (std::size_t i = 0; i < s.parts.size(); ++i) out << (i ? "," : "(") << s.parts[i];
          out << "))";
        } else {
          out << "caterpillar(n=" << s.n << ",k=" << s.k << ",p=" << s.p << ")";
        }
      },
      spec);
  return out.str();
}

Graph gen(const TreeSpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, family::Path> || std::is_same_v<T, family::Star>) {
          if (s.n == 0) infeasible("tree needs at least one vertex");
          std::vector<Edge> edges;
          for (Vertex v = 1; v < s.n; ++v) {
            edges.emplace_back(std::is_same_v<T, family::Path> ? v - 1 : 0, v);
          }
          return Graph(s.n, edges);
        } else if constexpr (std::is_same_v<T, family::DoubleBroom>) {
          return gen_double_broom(s);
        } else if constexpr (std::is_same_v<T, family::StarlikeBroom>) {
          return gen_starlike(s);
        } else {
          return gen_caterpillar(s);
        }
      },
      spec);
}

std::vector<std::size_t> caterpillar_positions(std::size_t s, std::size_t p) {
  if (p > s) infeasible("more decorated vertices than spine positions");
  std::vector<std::size_t> positions;
  positions.reserve(p);
  for (std::size_t i = 1; i <= p / 2; ++i) {
    positions.push_back(i);
    positions.push_back(s + 1 - i);
  }
  if (p % 2 == 1) positions.push_back((s + 1) / 2);
  return positions;
}

ExtremalValue max_wk_odd(std::size_t n, unsigned k) {
  if (k < 3 || k % 2 == 0) infeasible("max_wk_odd needs odd k >= 3");
  if (n < k + 1) infeasible("no tree on n vertices has diameter k");
  const std::size_t q = n - k + 1;
  const std::size_t lo = q / 2, hi = q - q / 2;
  return {static_cast<Count>(lo * hi), family::DoubleBroom{k, lo, hi}};
}

Rational f_even(std::size_t n, unsigned k, std::size_t p) {
  if (k < 2 || k % 2 != 0) throw Error(ErrorCode::OutOfRange, "f_even needs even k");
  if (p < 2 || p * k > 2 * (n - 1)) {
    throw Error(ErrorCode::OutOfRange, "f_even needs 2 <= p <= 2(n-1)/k");
  }
  const auto ni = static_cast<std::int64_t>(n);
  const auto pi = static_cast<std::int64_t>(p);
  const std::int64_t base = ni - 1 - pi * static_cast<std::int64_t>(k / 2) + pi;
  return Rational(base * base) * Rational(pi - 1, 2 * pi);
}

double p_star(std::size_t n, unsigned k) {
  if (k < 4 || k % 2 != 0) throw Error(ErrorCode::OutOfRange, "p_star needs even k >= 4");
  const double ratio = (16.0 * static_cast<double>(n) + k - 18.0) / (k - 2.0);
  return 0.25 + 0.25 * std::sqrt(ratio);
}

std::vector<std::size_t> balanced_parts(std::size_t q, std::size_t p) {
  if (p == 0) throw Error(ErrorCode::OutOfRange, "partition needs at least one part");
  std::vector<std::size_t> parts(p, q / p);
  for (std::size_t i = 0; i < q % p; ++i) ++parts[i];
  return parts;
}

Count balanced_starlike_value(std::size_t q, std::size_t p) {
  Count squares = 0;
  for (std::size_t a : balanced_parts(q, p)) squares += static_cast<Count>(a * a);
  return (static_cast<Count>(q * q) - squares) / 2;
}

ExtremalValue max_wk_even_search(std::size_t n, unsigned k) {
  if (k < 4 || k % 2 != 0) infeasible("max_wk_even_search needs even k >= 4");
  if (n < k + 1) infeasible("no tree on n vertices has diameter k");
  const std::size_t q2 = n - k + 1;
  ExtremalValue best{static_cast<Count>((q2 / 2) * (q2 - q2 / 2)),
                     family::DoubleBroom{k, q2 / 2, q2 - q2 / 2}};
  const std::size_t arm = k / 2 - 1;
  for (std::size_t p = 3; 1 + p * arm + p <= n; ++p) {
    const std::size_t q = n - 1 - p * arm;
    const Count value = balanced_starlike_value(q, p);
    if (value > best.value) best = {value, family::StarlikeBroom{k, balanced_parts(q, p)}};
  }
  return best;
}

Count max_degree_k_count(std::size_t n, unsigned k) {
  if (n < 2 || k < 2) throw Error(ErrorCode::OutOfRange, "max_degree_k_count needs n >= 2, k >= 2");
  return static_cast<Count>((n - 2) / (k - 1));
}

CaterpillarFormula caterpillar_formula_forms(std::size_t n, unsigned k, std::size_t p) {
  check_caterpillar(n, k, p);
  const auto s = caterpillar_spine(n, k, p);
  const auto P = static_cast<std::int64_t>(p);
  const auto N = static_cast<std::int64_t>(n);
  const auto K = static_cast<std::int64_t>(k);
  std::int64_t by_spine = 0, by_order = 0;
  if (p % 2 == 0) {
    by_spine = P * (3 * P * s - P * P - 2);
    by_order = P * (3 * N * P + 5 * P * P - 3 * K * P * P - 2 - 6 * P);
  } else {
    by_spine = (P + 1) * (P - 1) * (3 * s - P);
    by_order = (P + 1) * (P - 1) * (3 * N + 5 * P - 3 * K * P - 6);
  }
  if (by_spine % 12 != 0 || by_order % 12 != 0) {
    throw std::logic_error("caterpillar formula is not an integer");
  }
  return {by_spine / 12, by_order / 12};
}

Count twk_caterpillar_formula(std::size_t n, unsigned k, std::size_t p) {
  const auto forms = caterpillar_formula_forms(n, k, p);
  if (forms.by_spine != forms.by_order) {
    throw std::logic_error("caterpillar formula forms disagree");
  }
  return forms.by_spine;
}

ExtremalValue max_tw3(std::size_t n) {
  if (n <= 4) infeasible("max_tw3 needs n > 4");
  const std::size_t p = n / 2 - 1;
  return {twk_caterpillar_formula(n, 3, p), family::Caterpillar{n, 3, p}};
}

}  // namespace gwi
