#include "lip/edgelist_io.hpp"

#include <charconv>
#include <vector>

#include "lip/error.hpp"

namespace lip {
namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text, std::size_t first_number) {
  std::vector<Line> lines;
  std::size_t number = first_number;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

/// Exactly two non-negative integers separated by whitespace.
bool read_two(std::string_view s, std::uint64_t& a, std::uint64_t& b) {
  auto skip = [&] {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  };
  auto take = [&](std::uint64_t& out) {
    skip();
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr == s.data()) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
  };
  if (!take(a)) return false;
  if (s.empty() || (s.front() != ' ' && s.front() != '\t')) return false;
  if (!take(b)) return false;
  skip();
  return s.empty();
}

Graph parse_block(const std::vector<Line>& lines, std::size_t begin, std::size_t end,
                  std::size_t header_fallback_line) {
  while (end > begin && blank(lines[end - 1].text)) --end;
  if (begin >= end) throw ParseError(header_fallback_line, "missing \"n m\" header");
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (!read_two(lines[begin].text, n, m)) {
    throw ParseError(lines[begin].number, "expected header \"n m\"");
  }
  if (n >= kNoVertex) throw ParseError(lines[begin].number, "vertex count too large");
  const std::size_t edge_lines = end - begin - 1;
  if (edge_lines != m) {
    const std::size_t where = edge_lines < m ? (end == begin + 1 ? lines[begin].number : lines[end - 1].number)
                                             : lines[begin + 1 + m].number;
    throw ParseError(where, "header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(edge_lines));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = begin + 1; i < end; ++i) {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!read_two(lines[i].text, u, v)) throw ParseError(lines[i].number, "expected edge \"u v\"");
    if (u >= n || v >= n) {
      throw ParseError(lines[i].number, "endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw ParseError(lines[i].number, "self-loop on vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

std::size_t find_separator(const std::vector<Line>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].text == "---") return i;
  }
  return lines.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text, 1);
  const auto sep = find_separator(lines);
  if (sep != lines.size()) throw ParseError(lines[sep].number, "unexpected pair separator");
  return parse_block(lines, 0, lines.size(), 1);
}

GraphPair parse_pair(std::string_view text, bool allow_single) {
  const auto lines = split_lines(text, 1);
  const auto sep = find_separator(lines);
  if (sep == lines.size()) {
    if (!allow_single) {
      throw ParseError(lines.empty() ? 1 : lines.back().number, "missing \"---\" separator");
    }
    return GraphPair(parse_block(lines, 0, lines.size(), 1));
  }
  Graph g = parse_block(lines, 0, sep, 1);
  Graph g_prime = parse_block(lines, sep + 1, lines.size(), lines[sep].number + 1);
  if (g.n() != g_prime.n()) {
    throw ParseError(lines[sep].number + 1, "G' vertex count differs from G");
  }
  try {
    return GraphPair(std::move(g), std::move(g_prime));
  } catch (const InvalidArgument& e) {
    throw ParseError(lines[sep].number + 1, e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string format_pair(const GraphPair& pair) {
  return format_edge_list(pair.g()) + "---\n" + format_edge_list(pair.g_prime());
}

}  // namespace lip
