#include "wlcirc/json_io.hpp"

#include <ostream>

namespace wlcirc {

ordered_json config_to_json(const cc::CoherentConfiguration& x) {
  ordered_json j;
  j["n"] = x.size();
  j["rank"] = x.rank();
  ordered_json fibers = ordered_json::array();
  for (const auto& fiber : x.fibers()) fibers.push_back(fiber);
  j["fibers"] = std::move(fibers);
  j["color_table"] = x.table();
  ordered_json constants = ordered_json::array();
  for (const auto& [r, s, t, c] : x.constants()) constants.push_back({r, s, t, c});
  j["constants"] = std::move(constants);
  return j;
}

ordered_json certificate_to_json(const iso::IsoCertificate& cert) {
  ordered_json j;
  switch (cert.verdict) {
    case iso::IsoCertificate::Verdict::isomorphic:
      j["verdict"] = "isomorphic";
      break;
    case iso::IsoCertificate::Verdict::non_isomorphic:
      j["verdict"] = "non-isomorphic";
      break;
    case iso::IsoCertificate::Verdict::undecided:
      j["verdict"] = "undecided";
      break;
  }
  if (cert.witness)
    j["witness"] = *cert.witness;
  else
    j["witness"] = nullptr;
  if (cert.distinguisher) {
    ordered_json d;
    d["m"] = cert.distinguisher->m;
    d["round"] = cert.distinguisher->round;
    d["histogram_a"] = cert.distinguisher->histogram_a;
    d["histogram_b"] = cert.distinguisher->histogram_b;
    j["distinguisher"] = std::move(d);
  } else {
    j["distinguisher"] = nullptr;
  }
  j["search"] = {{"nodes", cert.stats.nodes}};
  return j;
}

ordered_json tree_to_json(const circ::DecompositionNode& node) {
  ordered_json j;
  switch (node.kind) {
    case circ::DecompositionNode::Kind::trivial:
      j["kind"] = "trivial";
      break;
    case circ::DecompositionNode::Kind::normal:
      j["kind"] = "normal";
      break;
    case circ::DecompositionNode::Kind::wedge:
      j["kind"] = "wedge";
      break;
    case circ::DecompositionNode::Kind::unresolved:
      j["kind"] = "unresolved";
      break;
  }
  j["n"] = node.n;
  j["rank"] = node.rank;
  j["radical"] = node.radical_generator;
  j["normal"] = node.normal_flag;
  j["prime_power"] = node.prime_power;
  if (node.kind == circ::DecompositionNode::Kind::wedge) {
    j["U"] = node.wedge_u;
    j["L"] = node.wedge_l;
    j["quotient"] = tree_to_json(*node.child0);
    j["restriction"] = tree_to_json(*node.child1);
  }
  return j;
}

ordered_json coloring_header_json(const wl::TupleColoring& c) {
  ordered_json j;
  j["m"] = c.m;
  j["n"] = c.n;
  j["rounds"] = c.round;
  j["stable"] = c.stable;
  j["classes"] = c.num_colors;
  std::vector<long long> sizes(c.num_colors, 0);
  for (int color : c.color_of) ++sizes[color];
  j["class_sizes"] = sizes;
  return j;
}

void write_coloring_csv(std::ostream& out, const wl::TupleColoring& c) {
  out << "tuple,color\n";
  std::vector<int> digits(c.m, 0);
  for (std::size_t t = 0; t < c.color_of.size(); ++t) {
    for (int i = 0; i < c.m; ++i) {
      out << digits[i];
      if (i + 1 < c.m) out << ' ';
    }
    out << ',' << c.color_of[t] << '\n';
    for (int i = c.m - 1; i >= 0; --i) {
      if (++digits[i] < c.n) break;
      digits[i] = 0;
    }
  }
}

}  // namespace wlcirc
