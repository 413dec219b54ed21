#include "gwi/enumerate.hpp"

#include <algorithm>
#include <string>

#include "gwi/extremal.hpp"

namespace gwi {

namespace {

using Layout = std::vector<int>;

// Splits a level sequence into the first principal subtree (levels shifted
// up by one) and the remainder rooted at the original root.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t second_one = layout.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (seen_one) {
      second_one = i;
      break;
    }
    seen_one = true;
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < second_one; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = second_one; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {std::move(left), std::move(rest)};
}

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> start = {}) {
  std::size_t p = 0;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Accepts a rooted candidate if it is the canonical (centered) rooting of its
// free tree, otherwise jumps to the next candidate that can be.
std::optional<Layout> next_tree(const Layout& candidate) {
  const auto [left, rest] = split_tree(candidate);
  const int left_height = *std::ranges::max_element(left);
  const int rest_height = *std::ranges::max_element(rest);
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (next && candidate[p] > 2) {
    const auto [new_left, new_rest] = split_tree(*next);
    const int new_left_height = *std::ranges::max_element(new_left);
    const auto suffix_len = static_cast<std::size_t>(new_left_height + 1);
    for (std::size_t j = 0; j < suffix_len; ++j) {
      (*next)[next->size() - suffix_len + j] = static_cast<int>(j) + 1;
    }
  }
  return next;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    stack.push_back(i);
  }
  return Graph(layout.size(), edges);
}

std::string encode_rooted(const Graph& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, static_cast<Vertex>(-1)), order{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex u : t.neighbors(v)) {
      if (u != parent[v]) {
        parent[u] = v;
        order.push_back(u);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& children = child_codes[*it];
    std::ranges::sort(children);
    code = "(";
    for (const auto& c : children) code += c;
    code += ")";
    children.clear();
    if (*it != root) child_codes[parent[*it]].push_back(std::move(code));
  }
  return code;
}

std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex u : t.neighbors(leaf)) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::ranges::sort(layer);
  return layer;
}

template <class Value>
void scan(std::size_t n, ExtremalReport& report, Value value, bool track_min) {
  bool first = true;
  for_each_free_tree(n, [&](const Graph& t) {
    ++report.trees_scanned;
    const Count v = value(t);
    if (first || v > report.observed_max) {
      report.observed_max = v;
      report.maximizers.clear();
    }
    if (v == report.observed_max) report.maximizers.push_back(canonical_form(t));
    if (track_min) {
      if (first || v < *report.observed_min) {
        report.observed_min = v;
        report.minimizers.clear();
      }
      if (v == *report.observed_min) report.minimizers.push_back(canonical_form(t));
    }
    first = false;
  });
  report.unique_maximizer = report.maximizers.size() == 1;
}

void expect(ExtremalReport& report, bool ok, const std::string& failure) {
  if (!ok) report.failures.push_back(failure);
}

bool contains(const std::vector<std::string>& forms, const std::string& form) {
  return std::ranges::find(forms, form) != forms.end();
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "free trees need n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::OrderTooLarge, "free-tree enumeration is limited to n <= " +
                                              std::to_string(kMaxEnumerationOrder));
  }
  if (n == 1) {
    single_pending_ = true;
    return;
  }
  Layout layout;
  for (std::size_t i = 0; i <= n / 2; ++i) layout.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout.push_back(static_cast<int>(i));
  layout_ = std::move(layout);
}

std::optional<Graph> FreeTreeGenerator::next() {
  if (single_pending_) {
    single_pending_ = false;
    return Graph(1, {});
  }
  if (!layout_) return std::nullopt;
  layout_ = next_tree(*layout_);
  if (!layout_) return std::nullopt;
  Graph tree = layout_to_graph(*layout_);
  layout_ = next_rooted_tree(*layout_);
  return tree;
}

void for_each_free_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) visit(*t);
}

std::vector<Graph> all_free_trees(std::size_t n) {
  std::vector<Graph> trees;
  for_each_free_tree(n, [&](const Graph& t) { trees.push_back(t); });
  return trees;
}

std::string canonical_form(const Graph& tree) {
  require_tree(tree);
  const auto centers = tree_centers(tree);
  std::string best = encode_rooted(tree, centers.front());
  if (centers.size() == 2) best = std::min(best, encode_rooted(tree, centers.back()));
  return best;
}

std::string claim_name(const Claim& c) {
  struct {
    std::string operator()(const claim::MaxWk& x) const { return "max_wk(" + std::to_string(x.k) + ")"; }
    std::string operator()(const claim::MaxTw3&) const { return "max_tw3"; }
    std::string operator()(const claim::MaxDegreeCount& x) const {
      return "max_degree_count(" + std::to_string(x.k) + ")";
    }
    std::string operator()(const claim::WienerBounds&) const { return "wiener_bounds"; }
  } visitor;
  return std::visit(visitor, c);
}

ExtremalReport verify_extremal(std::size_t n, const Claim& c) {
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::OrderTooLarge, "verification is limited to n <= " +
                                              std::to_string(kMaxEnumerationOrder));
  }
  ExtremalReport report;
  report.claim = claim_name(c);
  report.n = n;

  if (const auto* x = std::get_if<claim::MaxWk>(&c)) {
    const auto predicted = x->k % 2 == 1 ? max_wk_odd(n, x->k) : max_wk_even_search(n, x->k);
    report.predicted_max = predicted.value;
    scan(n, report, [&](const Graph& t) { return wk(t, x->k); }, false);
    expect(report, report.observed_max == report.predicted_max, "maximum differs from prediction");
    const Graph witness = gen(predicted.witness);
    expect(report, wk(witness, x->k) == predicted.value, "witness " + describe(predicted.witness) +
                                                              " does not attain the prediction");
    expect(report, contains(report.maximizers, canonical_form(witness)),
           "witness is not among the maximizers");
  } else if (std::holds_alternative<claim::MaxTw3>(c)) {
    const auto predicted = max_tw3(n);
    report.predicted_max = predicted.value;
    scan(n, report, [](const Graph& t) { return twk(t, 3); }, false);
    expect(report, report.observed_max == report.predicted_max, "maximum differs from prediction");
    expect(report, report.unique_maximizer,
           "maximizer is not unique (" + std::to_string(report.maximizers.size()) + " trees)");
    expect(report, contains(report.maximizers, canonical_form(gen(predicted.witness))),
           describe(predicted.witness) + " is not a maximizer");
  } else if (const auto* x = std::get_if<claim::MaxDegreeCount>(&c)) {
    report.predicted_max = max_degree_k_count(n, x->k);
    scan(n, report, [&](const Graph& t) {
      Count count = 0;
      for (Vertex v = 0; v < t.order(); ++v) count += t.degree(v) == x->k;
      return count;
    }, false);
    expect(report, report.observed_max == report.predicted_max, "maximum differs from prediction");
  } else {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "wiener_bounds needs n >= 1");
    const auto N = static_cast<Count>(n);
    report.predicted_min = (N - 1) * (N - 1);
    report.predicted_max = (N + 1) * N * (N - 1) / 6;
    report.observed_min = 0;
    scan(n, report, [](const Graph& t) { return wiener(t); }, true);
    expect(report, report.observed_min == report.predicted_min, "minimum differs from (n-1)^2");
    expect(report, report.observed_max == report.predicted_max, "maximum differs from C(n+1,3)");
    expect(report, report.minimizers.size() == 1 &&
                       report.minimizers.front() == canonical_form(gen(family::Star{n})),
           "minimum is not attained uniquely by the star");
    expect(report, report.unique_maximizer &&
                       report.maximizers.front() == canonical_form(gen(family::Path{n})),
           "maximum is not attained uniquely by the path");
  }
  return report;
}

}  // namespace gwi
