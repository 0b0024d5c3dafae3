#include "wlcirc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "wlcirc/errors.hpp"

namespace wlcirc {

namespace {

// --- graph6 / digraph6 low-level encoding ---

void append_number(std::string& out, int n) {
  if (n < 0) throw InvalidInput("negative graph order");
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw InvalidInput("graph too large for this graph6 writer");
  }
}

int read_number(const std::string& s, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> int {
    if (i >= s.size()) throw InvalidInput("truncated graph6 header");
    int b = static_cast<unsigned char>(s[i]) - 63;
    if (b < 0 || b > 63) throw InvalidInput("invalid graph6 byte");
    return b;
  };
  int b0 = byte(pos);
  if (b0 < 63) {
    ++pos;
    return b0;
  }
  // 63 == byte 126: medium size (3 more bytes); the 8-byte form is rejected.
  if (pos + 1 < s.size() && s[pos + 1] == 126) throw InvalidInput("graph6 orders beyond 258047 unsupported");
  int n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
  pos += 4;
  return n;
}

struct BitReader {
  const std::string& s;
  std::size_t pos;
  int bit = 0;  // next bit within current byte, MSB (value 32) first
  int take() {
    if (pos >= s.size()) throw InvalidInput("truncated graph6 bit data");
    int b = static_cast<unsigned char>(s[pos]) - 63;
    if (b < 0 || b > 63) throw InvalidInput("invalid graph6 byte");
    int v = (b >> (5 - bit)) & 1;
    if (++bit == 6) {
      bit = 0;
      ++pos;
    }
    return v;
  }
};

struct BitWriter {
  std::string& out;
  int acc = 0, filled = 0;
  void put(int v) {
    acc = (acc << 1) | (v & 1);
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + 63));
      acc = 0;
      filled = 0;
    }
  }
  void flush() {
    if (filled > 0) {
      acc <<= (6 - filled);
      out.push_back(static_cast<char>(acc + 63));
      acc = 0;
      filled = 0;
    }
  }
};

std::string strip_format_prefix(const std::string& line) {
  const std::string g6 = ">>graph6<<", d6 = ">>digraph6<<";
  if (line.rfind(g6, 0) == 0) return line.substr(g6.size());
  if (line.rfind(d6, 0) == 0) return line.substr(d6.size());
  return line;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string line = strip_format_prefix(raw);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw InvalidInput("empty graph6 line");
  if (line[0] == '&') throw InvalidInput("digraph6 input passed to the graph6 parser");
  std::size_t pos = 0;
  int n = read_number(line, pos);
  if (n == 0) throw InvalidInput("graph6 with zero vertices");
  BitReader bits{line, pos};
  std::vector<Arc> arcs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.take()) {
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
      }
  return Graph(n, std::move(arcs));
}

std::string to_graph6(const Graph& g) {
  if (!g.is_undirected()) throw InvalidInput("graph6 encodes undirected graphs only");
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.has_arc(v, v)) throw InvalidInput("graph6 cannot encode loops");
  std::string out;
  append_number(out, n);
  BitWriter bits{out};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.put(g.has_arc(i, j) ? 1 : 0);
  bits.flush();
  return out;
}

Graph parse_digraph6(const std::string& raw) {
  std::string line = strip_format_prefix(raw);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty() || line[0] != '&') throw InvalidInput("digraph6 line must start with '&'");
  std::size_t pos = 1;
  int n = read_number(line, pos);
  if (n == 0) throw InvalidInput("digraph6 with zero vertices");
  BitReader bits{line, pos};
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bits.take()) arcs.emplace_back(i, j);
  return Graph(n, std::move(arcs));
}

std::string to_digraph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out = "&";
  append_number(out, n);
  BitWriter bits{out};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bits.put(g.has_arc(i, j) ? 1 : 0);
  bits.flush();
  return out;
}

Graph read_edge_list(std::istream& in, ParseReport* report) {
  std::vector<std::pair<long long, long long>> raw_arcs;
  long long declared_n = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first == "n") {
      long long n;
      if (!(ls >> n) || n <= 0)
        throw InvalidInput("edge list line " + std::to_string(lineno) + ": bad header");
      declared_n = n;
      if (report) report->had_header = true;
      continue;
    }
    long long u, v;
    try {
      std::size_t used = 0;
      u = std::stoll(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw InvalidInput("edge list line " + std::to_string(lineno) + ": bad vertex id '" + first + "'");
    }
    if (!(ls >> v))
      throw InvalidInput("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    std::string extra;
    if (ls >> extra)
      throw InvalidInput("edge list line " + std::to_string(lineno) + ": trailing tokens");
    raw_arcs.emplace_back(u, v);
  }

  std::map<long long, int> relabel;
  if (declared_n >= 0) {
    for (auto& [u, v] : raw_arcs)
      if (u < 0 || u >= declared_n || v < 0 || v >= declared_n)
        throw InvalidInput("edge list: vertex id outside declared range [0,n)");
    for (long long x = 0; x < declared_n; ++x) relabel[x] = static_cast<int>(x);
  } else {
    for (auto& [u, v] : raw_arcs) {
      relabel.emplace(u, 0);
      relabel.emplace(v, 0);
    }
    int next = 0;
    for (auto& [ext, dense] : relabel) dense = next++;  // ascending external id
    if (relabel.empty()) throw InvalidInput("edge list contains no vertices");
  }

  std::vector<Arc> arcs;
  arcs.reserve(raw_arcs.size());
  for (auto& [u, v] : raw_arcs) arcs.emplace_back(relabel.at(u), relabel.at(v));
  std::size_t before = arcs.size();
  int n = declared_n >= 0 ? static_cast<int>(declared_n) : static_cast<int>(relabel.size());
  Graph g(n, std::move(arcs));
  if (report) {
    report->duplicate_arcs = static_cast<int>(before - g.arc_count());
    report->relabeling.assign(relabel.begin(), relabel.end());
  }
  return g;
}

Graph read_edge_list_file(const std::string& path, ParseReport* report) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open edge-list file: " + path);
  return read_edge_list(in, report);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.arcs()) out << u << " " << v << "\n";
}

Graph load_graph_spec(const std::string& spec, ParseReport* report) {
  if (spec.rfind("circ:", 0) == 0) return build_circulant(ConnectionSet::parse(spec));

  auto ends_with = [&](const char* suffix) {
    std::string s(suffix);
    return spec.size() >= s.size() && spec.compare(spec.size() - s.size(), s.size(), s) == 0;
  };
  std::ifstream in(spec);
  if (!in) throw InvalidInput("cannot open graph file: " + spec);
  if (ends_with(".el") || ends_with(".txt")) return read_edge_list(in, report);
  std::string first_line;
  if (ends_with(".g6")) {
    std::getline(in, first_line);
    return parse_graph6(first_line);
  }
  if (ends_with(".d6")) {
    std::getline(in, first_line);
    return parse_digraph6(first_line);
  }
  // sniff: graph6/digraph6 lines have no spaces and stay in the 6-bit range
  std::getline(in, first_line);
  std::string stripped = strip_format_prefix(first_line);
  if (!stripped.empty() && stripped[0] == '&') return parse_digraph6(stripped);
  bool sixbit = !stripped.empty();
  for (char ch : stripped)
    if (ch < 63 || ch > 126) sixbit = false;
  if (sixbit && stripped.find(' ') == std::string::npos && !std::isdigit(static_cast<unsigned char>(stripped[0])))
    return parse_graph6(stripped);
  in.clear();
  in.seekg(0);
  return read_edge_list(in, report);
}

}  // namespace wlcirc
