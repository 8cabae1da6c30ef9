#include "dcycles/edge_list.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "dcycles/error.hpp"

namespace dcycles {

namespace {

std::vector<std::string_view> split_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t sp = line.find(' ', start);
    std::string_view f = line.substr(start, sp == std::string_view::npos ? sp : sp - start);
    if (f.empty()) {
      fail(ErrorKind::InvalidInput,
           "line " + std::to_string(line_no) + ": fields must be separated by single spaces");
    }
    fields.push_back(f);
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return fields;
}

long long parse_int(std::string_view f, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (ec != std::errc() || ptr != f.data() + f.size()) {
    fail(ErrorKind::InvalidInput,
         "line " + std::to_string(line_no) + ": not an integer: '" + std::string(f) + "'");
  }
  return value;
}

std::string header(char kind, int n, std::size_t m) {
  return std::string(1, kind) + " " + std::to_string(n) + " " + std::to_string(m) + "\n";
}

}  // namespace

AnyGraph parse_edge_list(std::string_view text) {
  bool have_header = false;
  bool directed = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      fail(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": empty line");
    }
    if (line.find_first_of("\r\t") != std::string_view::npos) {
      fail(ErrorKind::InvalidInput,
           "line " + std::to_string(line_no) + ": only single spaces and \\n are allowed");
    }
    auto fields = split_fields(line, line_no);
    if (!have_header) {
      if (fields.size() != 3 || (fields[0] != "U" && fields[0] != "D")) {
        fail(ErrorKind::InvalidInput, "line " + std::to_string(line_no) +
                                          ": expected header 'U n m' or 'D n m'");
      }
      directed = fields[0] == "D";
      n = parse_int(fields[1], line_no);
      m = parse_int(fields[2], line_no);
      if (n < 0 || m < 0 || n > (1LL << 30)) {
        fail(ErrorKind::InvalidInput, "header: invalid vertex or edge count");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != 2) {
      fail(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    long long u = parse_int(fields[0], line_no);
    long long v = parse_int(fields[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorKind::InvalidInput,
           "line " + std::to_string(line_no) + ": endpoint out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) fail(ErrorKind::InvalidInput, "missing header line");
  if (static_cast<long long>(edges.size()) != m) {
    fail(ErrorKind::InvalidInput, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  if (directed) return Digraph::from_arcs(static_cast<int>(n), edges);
  return Graph::from_edges(static_cast<int>(n), edges);
}

AnyGraph read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out = header('U', g.order(), g.size());
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string to_edge_list(const Digraph& d) {
  std::string out = header('D', d.order(), d.size());
  for (const auto& a : d.arcs()) {
    out += std::to_string(a.u);
    out += ' ';
    out += std::to_string(a.v);
    out += '\n';
  }
  return out;
}

std::string to_edge_list(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_edge_list(x); }, g);
}

std::string content_hash(const AnyGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace dcycles
