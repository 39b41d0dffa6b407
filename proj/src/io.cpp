#include "berge/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace berge {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

// Parses whitespace-separated non-negative integers; rejects anything else.
bool parse_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i || value < 0) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') return false;
    out.push_back(value);
  }
  return true;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Multigraph parse_edgelist(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<long> nums;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.front() == '#') continue;
    if (is_blank(line)) continue;
    if (!parse_ints(line, nums) || nums.size() != 2)
      throw ParseError(lineno, "expected two non-negative integers");
    if (n < 0) {
      n = nums[0];
      m = nums[1];
      continue;
    }
    if (static_cast<long>(edges.size()) == m) throw ParseError(lineno, "more edges than declared");
    const long a = nums[0], b = nums[1];
    if (a >= n || b >= n) throw ParseError(lineno, "vertex out of range");
    if (a == b) throw ParseError(lineno, "loops are not allowed");
    if (a > b) throw ParseError(lineno, "endpoints must satisfy a < b");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (n < 0) throw ParseError(1, "missing header line \"n m\"");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(static_cast<int>(lines.size()), "fewer edges than declared");
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string emit_edgelist(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << std::min(e.a, e.b) << ' ' << std::max(e.a, e.b) << '\n';
  return out.str();
}

Multigraph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(1, "empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError(1, "byte outside the graph6 range 63..126");
  }
  std::size_t pos = 0;
  long n = 0;
  auto take = [&](int count) {
    if (pos + count > text.size()) throw ParseError(1, "truncated vertex count");
    long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (text[pos++] - 63);
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  const long pairs = n * (n - 1) / 2;
  const long needed = (pairs + 5) / 6;
  if (static_cast<long>(text.size() - pos) != needed)
    throw ParseError(1, "adjacency section has wrong length for n = " + std::to_string(n));
  std::vector<Edge> edges;
  long bit = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if (byte >> (5 - bit % 6) & 1) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string emit_graph6(const Multigraph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, 126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    if (adj[e.a][e.b]) throw std::invalid_argument("graph6 cannot encode parallel edges");
    adj[e.a][e.b] = adj[e.b][e.a] = true;
  }
  int acc = 0, bits = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

std::string emit_cover(const std::vector<EdgeSet>& matchings) {
  std::ostringstream out;
  out << "cover " << matchings.size() << '\n';
  for (const EdgeSet& m : matchings) {
    bool first = true;
    for (EdgeId e : m) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<EdgeSet> parse_cover(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing \"cover k\" header");
  std::string_view head = lines[0];
  if (head.substr(0, 6) != "cover ") throw ParseError(1, "expected \"cover k\"");
  std::vector<long> nums;
  if (!parse_ints(head.substr(6), nums) || nums.size() != 1) throw ParseError(1, "bad cover size");
  const long k = nums[0];
  if (static_cast<long>(lines.size()) - 1 < k) throw ParseError(static_cast<int>(lines.size()), "fewer matchings than declared");
  std::vector<EdgeSet> result;
  for (long i = 1; i <= k; ++i) {
    if (!parse_ints(lines[i], nums)) throw ParseError(static_cast<int>(i) + 1, "expected edge ids");
    std::vector<EdgeId> ids(nums.begin(), nums.end());
    if (!std::is_sorted(ids.begin(), ids.end()) ||
        std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      throw ParseError(static_cast<int>(i) + 1, "edge ids must be strictly ascending");
    result.emplace_back(std::move(ids));
  }
  for (std::size_t i = k + 1; i < lines.size(); ++i) {
    if (!is_blank(lines[i])) throw ParseError(static_cast<int>(i) + 1, "trailing content");
  }
  return result;
}

}  // namespace berge
