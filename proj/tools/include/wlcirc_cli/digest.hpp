#ifndef WLCIRC_CLI_DIGEST_HPP
#define WLCIRC_CLI_DIGEST_HPP

#include <string>

#include "wlcirc/graph.hpp"

namespace wlcirc::cli {

/// FNV-1a over the bytes, 128-bit variant, rendered as 32 hex digits.
/// Stable across platforms and runs; used only for cache keying.
std::string fnv128_hex(const std::string& bytes);

/// Canonical byte serialization of a graph (sorted arc list), the basis of
/// input digests.
std::string canonical_graph_bytes(const Graph& g);

std::string graph_digest(const Graph& g);

}  // namespace wlcirc::cli

#endif
