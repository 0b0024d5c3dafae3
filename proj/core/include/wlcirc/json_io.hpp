#ifndef WLCIRC_JSON_IO_HPP
#define WLCIRC_JSON_IO_HPP

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "wlcirc/cc.hpp"
#include "wlcirc/circulant.hpp"
#include "wlcirc/iso.hpp"
#include "wlcirc/wl.hpp"

namespace wlcirc {

using ordered_json = nlohmann::ordered_json;

/// Configuration dump: n, rank, fiber partition, color table (row-major),
/// nonzero constants list.
ordered_json config_to_json(const cc::CoherentConfiguration& x);

/// Certificate: verdict, witness permutation, distinguisher, search stats.
ordered_json certificate_to_json(const iso::IsoCertificate& cert);

/// Decomposition tree: nested (kind, n, rank, U, L, radical, normal flag).
ordered_json tree_to_json(const circ::DecompositionNode& node);

/// Coloring dump header: m, n, rounds, class count, class-size histogram.
ordered_json coloring_header_json(const wl::TupleColoring& c);

/// CSV body: "tuple,color" with tuples rendered as space-separated points.
void write_coloring_csv(std::ostream& out, const wl::TupleColoring& c);

}  // namespace wlcirc

#endif
