#include "gwi/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

namespace gwi {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

// Exactly two non-negative integers separated by whitespace.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(std::string_view line) {
  std::uint64_t values[2];
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  };
  for (auto& value : values) {
    skip_ws();
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
      return std::nullopt;
    }
  }
  skip_ws();
  if (pos != line.size()) return std::nullopt;
  return std::make_pair(values[0], values[1]);
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto pair = parse_pair(line);
    if (!pair) parse_error(line_no, "expected two non-negative integers");
    if (!header) {
      if (pair->first > std::uint64_t{1} << 31) parse_error(line_no, "vertex count too large");
      header = pair;
      continue;
    }
    if (edges.size() == header->second) parse_error(line_no, "more edges than declared");
    if (pair->first >= header->first || pair->second >= header->first) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(pair->first), static_cast<Vertex>(pair->second));
  }
  if (!header) parse_error(line_no, "missing header line `n m`");
  if (edges.size() != header->second) {
    parse_error(line_no, "declared " + std::to_string(header->second) + " edges, found " +
                             std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(header->first), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace gwi
