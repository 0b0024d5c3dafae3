#include "wlcirc_cli/digest.hpp"

#include <sstream>

namespace wlcirc::cli {

std::string fnv128_hex(const std::string& bytes) {
  // FNV-1a, 128-bit parameters
  unsigned __int128 hash =
      (static_cast<unsigned __int128>(0x6c62272e07bb0142ULL) << 64) | 0x62b821756295c58dULL;
  const unsigned __int128 prime = (static_cast<unsigned __int128>(0x0000000001000000ULL) << 64) | 0x000000000000013bULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= prime;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(32, '0');
  for (int i = 31; i >= 0; --i) {
    out[i] = hex[static_cast<int>(hash & 0xf)];
    hash >>= 4;
  }
  return out;
}

std::string canonical_graph_bytes(const Graph& g) {
  std::ostringstream os;
  os << "graph;n=" << g.vertex_count() << ";";
  for (const auto& [u, v] : g.arcs()) os << u << "," << v << ";";
  return os.str();
}

std::string graph_digest(const Graph& g) { return fnv128_hex(canonical_graph_bytes(g)); }

}  // namespace wlcirc::cli
