#include "geodex/graph6.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace geodex {

namespace {

constexpr const char* kPrefix = ">>graph6<<";

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (e > b && (s[e - 1] == '\n' || s[e - 1] == '\r' || s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return s.substr(b, e - b);
}

int body_byte(unsigned char c, std::size_t at) {
  if (c < 63 || c > 126)
    throw Graph6Error(Graph6Error::Kind::BadByte,
                      "graph6: byte " + std::to_string(at) + " out of range (value " +
                          std::to_string(static_cast<int>(c)) + ")");
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string s = strip(raw);
  if (s.rfind(kPrefix, 0) == 0) s = s.substr(std::string(kPrefix).size());
  if (s.empty()) throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: empty input");

  std::size_t pos = 0;
  long long n;
  unsigned char h0 = static_cast<unsigned char>(s[0]);
  if (h0 == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw Graph6Error(Graph6Error::Kind::BadHeader,
                        "graph6: long size form (n > 258047) not supported");
    if (s.size() < 4) throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: medium header truncated");
    n = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      unsigned char c = static_cast<unsigned char>(s[k]);
      if (c < 63 || c > 126)
        throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: header byte out of range");
      n = (n << 6) | (c - 63);
    }
    if (n < 63)
      throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: medium form used for small n");
    pos = 4;
  } else {
    if (h0 < 63 || h0 > 125)
      throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: header byte out of range");
    n = h0 - 63;
    pos = 1;
  }

  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos < need)
    throw Graph6Error(Graph6Error::Kind::Truncated,
                      "graph6: expected " + std::to_string(need) + " body bytes, got " +
                          std::to_string(s.size() - pos));
  if (s.size() - pos > need)
    throw Graph6Error(Graph6Error::Kind::TrailingGarbage,
                      "graph6: " + std::to_string(s.size() - pos - need) + " extra bytes after body");

  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = body_byte(static_cast<unsigned char>(s[pos + static_cast<std::size_t>(k / 6)]),
                           pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 258047) throw std::invalid_argument("encode_graph6: n > 258047 not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  std::string body(static_cast<std::size_t>((bits + 5) / 6), 0);
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) body[static_cast<std::size_t>(k / 6)] |= static_cast<char>(1 << (5 - k % 6));
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

Graph parse_adjacency_matrix(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<int> row;
    for (char ch : line) {
      if (ch == '0' || ch == '1')
        row.push_back(ch - '0');
      else if (ch == ' ' || ch == '\t' || ch == '\r')
        continue;
      else
        throw MatrixParseError(std::string("invalid character '") + ch + "' at row " +
                                   std::to_string(rows.size()) + ", col " + std::to_string(row.size()),
                               static_cast<int>(rows.size()), static_cast<int>(row.size()));
    }
    if (row.empty()) continue;  // tolerate blank lines
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw MatrixParseError("empty matrix", -1, -1);
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw MatrixParseError("matrix not square: row " + std::to_string(i) + " has " +
                                 std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                 " entries, expected " + std::to_string(n),
                             i, -1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
      throw MatrixParseError("nonzero diagonal at row " + std::to_string(i), i, i);
    for (int j = i + 1; j < n; ++j) {
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw MatrixParseError("matrix asymmetric at row " + std::to_string(i) + ", col " +
                                   std::to_string(j),
                               i, j);
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace geodex
