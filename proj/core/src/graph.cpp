#include "wlcirc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wlcirc/errors.hpp"

namespace wlcirc {

Graph::Graph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n <= 0) throw InvalidInput("graph order must be positive");
  for (const auto& [u, v] : arcs_) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "arc (" << u << "," << v << ") out of range for n=" << n;
      throw InvalidInput(os.str());
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  words_ = (n + 63) / 64;
  adj_.assign(static_cast<std::size_t>(n) * words_, 0);
  radj_.assign(static_cast<std::size_t>(n) * words_, 0);
  out_deg_.assign(n, 0);
  in_deg_.assign(n, 0);
  for (const auto& [u, v] : arcs_) {
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    radj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++out_deg_[u];
    ++in_deg_[v];
  }
}

bool Graph::is_undirected() const {
  for (const auto& [u, v] : arcs_)
    if (!has_arc(v, u)) return false;
  return true;
}

ConnectionSet::ConnectionSet(int modulus, std::vector<int> elements)
    : modulus(modulus), elements(std::move(elements)) {
  if (modulus < 2) throw InvalidInput("connection-set modulus must be >= 2");
  for (int& s : this->elements) {
    s %= modulus;
    if (s < 0) s += modulus;
    if (s == 0) throw InvalidInput("connection set must not contain 0 (mod n)");
  }
  std::sort(this->elements.begin(), this->elements.end());
  this->elements.erase(std::unique(this->elements.begin(), this->elements.end()),
                       this->elements.end());
}

bool ConnectionSet::is_symmetric() const {
  for (int s : elements)
    if (!std::binary_search(elements.begin(), elements.end(), modulus - s)) return false;
  return true;
}

ConnectionSet ConnectionSet::parse(const std::string& spec) {
  if (spec.rfind("circ:", 0) != 0) throw InvalidInput("connection-set spec must start with 'circ:'");
  std::size_t second = spec.find(':', 5);
  if (second == std::string::npos) throw InvalidInput("connection-set spec needs 'circ:<n>:<list>'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(5, second - 5), &used);
    if (used != second - 5) throw InvalidInput("bad modulus in connection-set spec");
  } catch (const std::exception&) {
    throw InvalidInput("bad modulus in connection-set spec: " + spec);
  }
  std::vector<int> elems;
  std::string rest = spec.substr(second + 1);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      elems.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("bad element '" + item + "' in connection-set spec");
    }
  }
  return ConnectionSet(n, std::move(elems));
}

std::string ConnectionSet::to_spec_string() const {
  std::ostringstream os;
  os << "circ:" << modulus << ":";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) os << ',';
    os << elements[i];
  }
  return os.str();
}

Graph build_circulant(const ConnectionSet& c) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(c.modulus) * c.elements.size());
  for (int x = 0; x < c.modulus; ++x)
    for (int s : c.elements) arcs.emplace_back(x, (x + s) % c.modulus);
  return Graph(c.modulus, std::move(arcs));
}

Graph build_paley(int q) {
  if (!is_prime(q)) throw InvalidInput("Paley graph order must be prime");
  if (q % 4 != 1) throw InvalidInput("Paley graph needs q = 1 (mod 4)");
  std::vector<char> is_square(q, 0);
  for (int x = 1; x < q; ++x) is_square[static_cast<int>((static_cast<long long>(x) * x) % q)] = 1;
  std::vector<int> elems;
  for (int s = 1; s < q; ++s)
    if (is_square[s]) elems.push_back(s);
  return build_circulant(ConnectionSet(q, std::move(elems)));
}

Graph apply_permutation(const Graph& g, const Perm& f) {
  if (static_cast<int>(f.size()) != g.vertex_count() || !is_permutation(f))
    throw InvalidInput("apply_permutation needs a bijection on [0,n)");
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(f[u], f[v]);
  return Graph(g.vertex_count(), std::move(arcs));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n, int* prime, int* exponent) {
  if (n < 2) return false;
  int p = n;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  int m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return false;
  if (prime) *prime = p;
  if (exponent) *exponent = e;
  return true;
}

}  // namespace wlcirc
