#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dominator/error.hpp"
#include "dominator/graph.hpp"

namespace dominator {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits on whitespace and parses every token as a non-negative integer.
inline bool parse_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

inline std::string at_line(std::size_t line_no, const std::string& msg) {
  return "line " + std::to_string(line_no) + ": " + msg;
}

}  // namespace detail

/// Edge-list text: the first non-comment line holds n, every later line "u v".
/// Lines whose first non-blank character is '#' and blank lines are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<long long> fields;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!detail::parse_ints(line, fields)) {
      throw Error(ErrorCode::malformed_line, detail::at_line(line_no, "expected integers, got '" + std::string(line) + "'"));
    }
    if (!n) {
      if (fields.size() != 1 || fields[0] < 0 || fields[0] > INT32_MAX) {
        throw Error(ErrorCode::malformed_line, detail::at_line(line_no, "expected a single vertex count"));
      }
      n = static_cast<int>(fields[0]);
      continue;
    }
    if (fields.size() != 2) {
      throw Error(ErrorCode::malformed_line, detail::at_line(line_no, "expected 'u v'"));
    }
    const long long u = fields[0], v = fields[1];
    if (u < 0 || v < 0 || u >= *n || v >= *n) {
      throw Error(ErrorCode::endpoint_out_of_range,
                  detail::at_line(line_no, "endpoint outside [0," + std::to_string(*n) + ")"));
    }
    if (u == v) throw Error(ErrorCode::self_loop, detail::at_line(line_no, "self-loop at " + std::to_string(u)));
    Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::duplicate_edge, detail::at_line(line_no, "edge {" + std::to_string(e.first) + "," +
                                                                         std::to_string(e.second) + "} repeated"));
    }
    edges.push_back(e);
  }
  if (!n) throw Error(ErrorCode::malformed_line, "missing vertex count line");
  return Graph(*n, std::move(edges));
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// graph6: size header followed by the upper triangle of the adjacency matrix
/// in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per
/// byte, most significant first, each byte offset by 63.
inline std::string write_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
  if (text.empty()) throw Error(ErrorCode::bad_header, "empty graph6 input");

  auto sextet = [&](std::size_t idx) -> int {
    const auto c = static_cast<unsigned char>(text[idx]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::malformed_line, "byte " + std::to_string(idx) + " outside graph6 range");
    }
    return c - 63;
  };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) < 63 || static_cast<unsigned char>(text[0]) > 126) {
    throw Error(ErrorCode::bad_header, "first byte is not a graph6 size byte");
  }
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(sextet(0));
    pos = 1;
  } else {
    const bool huge = text.size() > 1 && text[1] == 126;
    const std::size_t digits = huge ? 6 : 3;
    const std::size_t start = huge ? 2 : 1;
    if (text.size() < start + digits) throw Error(ErrorCode::bad_header, "truncated long-form size");
    for (std::size_t k = 0; k < digits; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(start + k));
    pos = start + digits;
    if (n > static_cast<std::uint64_t>(INT32_MAX)) throw Error(ErrorCode::bad_header, "vertex count too large");
  }

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t payload = (pairs + 5) / 6;
  if (text.size() - pos < payload) {
    throw Error(ErrorCode::truncated_payload, "expected " + std::to_string(payload) + " payload bytes, got " +
                                                  std::to_string(text.size() - pos));
  }
  if (text.size() - pos > payload) {
    throw Error(ErrorCode::malformed_line, "trailing bytes after graph6 payload");
  }

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int byte = sextet(pos + bit / 6);
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (byte & pad_mask) throw Error(ErrorCode::non_canonical_padding, "nonzero padding bits in final byte");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

/// Edge list if the first significant byte is a digit or '#', graph6 otherwise.
inline Graph parse_graph_auto(std::string_view text) {
  std::string_view t = detail::trim(text);
  if (!t.empty() && (std::isdigit(static_cast<unsigned char>(t.front())) || t.front() == '#')) {
    return parse_edge_list(text);
  }
  return parse_graph6(text);
}

}  // namespace dominator
