#include "wlcirc/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "wlcirc/errors.hpp"

namespace wlcirc {

bool is_permutation(const Perm& f) {
  std::vector<char> seen(f.size(), 0);
  for (int x : f) {
    if (x < 0 || x >= static_cast<int>(f.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

Perm inverse_perm(const Perm& f) {
  Perm g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[f[i]] = static_cast<int>(i);
  return g;
}

Perm compose_perms(const Perm& f, const Perm& g) {
  Perm h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

std::vector<int> PermGroup::point_orbits() const {
  std::vector<int> orbit(degree, -1);
  int next = 0;
  for (int start = 0; start < degree; ++start) {
    if (orbit[start] != -1) continue;
    int label = next++;
    std::deque<int> queue{start};
    orbit[start] = label;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const Perm& g : generators) {
        int y = g[x];
        if (orbit[y] == -1) {
          orbit[y] = label;
          queue.push_back(y);
        }
      }
    }
  }
  return orbit;
}

std::vector<int> PermGroup::pair_orbit_partition() const {
  const std::size_t n = static_cast<std::size_t>(degree);
  std::vector<int> orbit(n * n, -1);
  int next = 0;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (orbit[start] != -1) continue;
    int label = next++;
    std::deque<std::size_t> queue{start};
    orbit[start] = label;
    while (!queue.empty()) {
      std::size_t idx = queue.front();
      queue.pop_front();
      int a = static_cast<int>(idx / n), b = static_cast<int>(idx % n);
      for (const Perm& g : generators) {
        std::size_t jdx = static_cast<std::size_t>(g[a]) * n + g[b];
        if (orbit[jdx] == -1) {
          orbit[jdx] = label;
          queue.push_back(jdx);
        }
      }
    }
  }
  return orbit;
}

bool PermGroup::is_transitive() const {
  auto orbits = point_orbits();
  return std::all_of(orbits.begin(), orbits.end(), [](int o) { return o == 0; });
}

std::string uint128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string PermGroup::order_string() const { return uint128_to_string(order); }

}  // namespace wlcirc
