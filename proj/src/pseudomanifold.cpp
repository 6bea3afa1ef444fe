#include "hdx/pseudomanifold.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

#include "hdx/error.hpp"
#include "hdx/expansion.hpp"

namespace hdx {

FlipGraph flip_graph(const ComplexZ2& x) {
  FlipGraph g;
  g.dim = x.top_dim();
  if (g.dim < 0) throw HypothesisFailed("flip graph of a complex without cells");
  if (!x.is_pure()) throw HypothesisFailed("flip graph requires a pure complex");
  g.vertices = x.f(g.dim);
  g.adj.assign(g.vertices, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  g.ridges_in_two = true;
  if (g.dim == 0) {
    // Ridges of vertices are the empty cell.
    g.ridges_in_two = g.vertices == 2;
    for (std::size_t u = 0; u < g.vertices; ++u)
      for (std::size_t v = u + 1; v < g.vertices; ++v) {
        g.edges.emplace_back(u, v);
        g.edge_ridge.push_back(0);
      }
  } else {
    const auto co = x.cofaces(g.dim - 1);
    for (std::size_t r = 0; r < co.size(); ++r) {
      if (co[r].size() != 2) g.ridges_in_two = false;
      for (std::size_t a = 0; a < co[r].size(); ++a)
        for (std::size_t b = a + 1; b < co[r].size(); ++b) {
          const auto e = std::minmax(co[r][a], co[r][b]);
          if (!seen.insert(e).second) continue;
          g.edges.emplace_back(e.first, e.second);
          g.edge_ridge.push_back(r);
        }
    }
    std::vector<std::size_t> order(g.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.edges[a] < g.edges[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> ridge;
    for (std::size_t i : order) {
      edges.push_back(g.edges[i]);
      ridge.push_back(g.edge_ridge[i]);
    }
    g.edges = std::move(edges);
    g.edge_ridge = std::move(ridge);
  }
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  const auto d0 = bfs_distances(g, 0);
  g.connected = std::none_of(d0.begin(), d0.end(), [](int d) { return d < 0; });
  return g;
}

std::vector<int> bfs_distances(const FlipGraph& g, std::size_t source) {
  std::vector<int> dist(g.vertices, -1);
  if (g.vertices == 0) return dist;
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

int diameter(const FlipGraph& g) {
  int best = 0;
  for (std::size_t s = 0; s < g.vertices; ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

Rational cheeger_top_via_diameter(const ComplexZ2& x) {
  const FlipGraph g = flip_graph(x);
  if (!g.pseudomanifold()) throw HypothesisFailed("complex is not a pseudomanifold");
  if (cohomology_dim(RelativePair(x), g.dim - 1) != 0)
    throw HypothesisFailed("codimension-one cohomology does not vanish");
  const int d = diameter(g);
  if (d <= 0) throw HypothesisFailed("flip graph has diameter 0");
  return Rational(2, d);
}

std::vector<std::size_t> cochain_flip_subgraph(const FlipGraph& g, const BitVec& phi) {
  if (!g.ridges_in_two) throw HypothesisFailed("cochain flip subgraph requires every ridge in two top cells");
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (phi.test(g.edge_ridge[e])) out.push_back(e);
  return out;
}

BitVec odd_degree_support(const FlipGraph& g, const std::vector<std::size_t>& edges) {
  BitVec odd(g.vertices);
  for (std::size_t e : edges) {
    odd.flip(g.edges[e].first);
    odd.flip(g.edges[e].second);
  }
  return odd;
}

bool is_forest(const FlipGraph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e : edges) {
    const std::size_t a = root(g.edges[e].first), b = root(g.edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::size_t codim1_cosystole(const ComplexZ2& x, const BitVec& phi) {
  const FlipGraph g = flip_graph(x);
  if (!g.pseudomanifold()) throw HypothesisFailed("complex is not a pseudomanifold");
  if (phi.size() != x.f(g.dim - 1)) throw InvalidArgument("cochain length differs from f_{n-1}");
  if (cohomology_dim(RelativePair(x), g.dim - 1) != 0)
    throw HypothesisFailed("codimension-one cohomology does not vanish");
  const std::vector<std::size_t> t = x.coboundary(g.dim - 1, phi).support();
  if (t.size() > 20) throw InvalidArgument("codim1_cosystole supports at most 20 odd top cells");
  if (t.empty()) return 0;
  std::vector<std::vector<int>> dist;
  for (std::size_t s : t) {
    const auto d = bfs_distances(g, s);
    std::vector<int> row;
    for (std::size_t u : t) row.push_back(d[u]);
    dist.push_back(std::move(row));
  }
  // Minimum perfect matching of T under the graph metric, by subset DP.
  const std::size_t m = t.size();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<int> best(std::size_t{1} << m, -1);
  best[0] = 0;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (best[mask] < 0) continue;
    const int i = std::countr_one(mask);
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j) {
      if ((mask >> j) & 1U) continue;
      const std::uint32_t next = mask | (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
      const int c = best[mask] + dist[static_cast<std::size_t>(i)][j];
      if (best[next] < 0 || c < best[next]) best[next] = c;
    }
  }
  return static_cast<std::size_t>(best[full]);
}

std::string flip_graph_edge_list(const FlipGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<std::uint32_t> coxeter_An_vertex_masks(int n) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s + 1 < (std::uint32_t{1} << n); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  return subsets;
}

std::vector<int> phi_n_permutation(int n, int m) {
  std::vector<int> pi;
  if (m == 0) {
    for (int i = 1; i <= n; ++i) pi.push_back(i);
    return pi;
  }
  int count = 0;
  for (int j = 1; j <= n - 1; ++j)
    for (int l = 1; l <= n - j; ++l) {
      if (++count != m) continue;
      for (int t = n; t >= n - j + 2; --t) pi.push_back(t);
      for (int t = 1; t <= n - j - l; ++t) pi.push_back(t);
      pi.push_back(n - j + 1);
      for (int t = n - j - l + 1; t <= n - j; ++t) pi.push_back(t);
      return pi;
    }
  throw InvalidArgument("phi_n_permutation: m outside [0, C(n,2)]");
}

namespace {

std::vector<int> prefix_chain(int n, const std::vector<int>& pi) {
  const auto masks = coxeter_An_vertex_masks(n);
  std::vector<int> chain;
  std::uint32_t cur = 0;
  for (int i = 0; i + 1 < n; ++i) {
    cur |= std::uint32_t{1} << (pi[static_cast<std::size_t>(i)] - 1);
    const auto it = std::find(masks.begin(), masks.end(), cur);
    chain.push_back(static_cast<int>(it - masks.begin()));
  }
  return chain;
}

std::size_t lookup(const ComplexZ2& x, int k, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  const auto idx = x.find(k, simplex_label(vertices));
  if (!idx) throw InvariantBreach("coxeter complex is missing the simplex " + simplex_label(vertices));
  return *idx;
}

}  // namespace

std::size_t coxeter_An_top_cell(const ComplexZ2& coxeter, int n, const std::vector<int>& pi) {
  return lookup(coxeter, n - 2, prefix_chain(n, pi));
}

BitVec phi_n_cochain(int n, const ComplexZ2& coxeter) {
  if (n < 4 || n > 6) throw InvalidArgument("phi_n_cochain requires 4 <= n <= 6");
  BitVec phi(coxeter.f(n - 3));
  int m = 0;
  for (int j = 1; j <= n - 1; ++j)
    for (int l = 1; l <= n - j; ++l) {
      ++m;
      std::vector<int> chain = prefix_chain(n, phi_n_permutation(n, m));
      // The i-th face drops the prefix of size i (1-based); here i = n - l.
      chain.erase(chain.begin() + (n - l - 1));
      phi.flip(lookup(coxeter, n - 3, chain));
    }
  return phi;
}

BitVec phi_n_cochain(int n) { return phi_n_cochain(n, coxeter_An(n)); }

}  // namespace hdx
