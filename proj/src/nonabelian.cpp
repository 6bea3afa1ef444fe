#include "hdx/nonabelian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "hdx/random.hpp"

namespace hdx {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

double power_of(std::size_t base, std::size_t exp) { return std::pow(static_cast<double>(base), static_cast<double>(exp)); }

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidArgument("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidArgument("group table is not square");
    for (std::size_t v : row)
      if (v >= n) throw InvalidArgument("group table is not closed");
  }
  identity_ = kNpos;
  for (std::size_t e = 0; e < n && identity_ == kNpos; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ == kNpos) throw InvalidArgument("group table has no identity");
  inverse_.assign(n, kNpos);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  if (std::count(inverse_.begin(), inverse_.end(), kNpos)) throw InvalidArgument("group table lacks inverses");
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table_[table_[a][b]][c] == table_[a][table_[b][c]];
  };
  if (n <= 24) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InvalidArgument("group table is not associative");
  } else {
    Rng rng(0x5eedULL);
    for (int t = 0; t < 20000; ++t)
      if (!assoc(uniform_below(rng, n), uniform_below(rng, n), uniform_below(rng, n)))
        throw InvalidArgument("group table is not associative");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t m) {
  if (m == 0) throw InvalidArgument("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return FiniteGroup("Z" + std::to_string(m), std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<std::vector<int>>& generators,
                                           std::size_t cap) {
  if (generators.empty()) throw InvalidArgument("no generators");
  const std::size_t deg = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != deg) throw InvalidArgument("generators of different degree");
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < deg; ++i)
      if (s[i] != static_cast<int>(i)) throw InvalidArgument("generator is not a permutation");
  }
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : generators) {
      std::vector<int> h(deg);
      for (std::size_t i = 0; i < deg; ++i) h[i] = g[static_cast<std::size_t>(queue[head][i])];
      if (seen.insert(h).second) {
        queue.push_back(std::move(h));
        if (queue.size() > cap) throw BudgetExceeded("permutation group closure", static_cast<double>(queue.size()), cap);
      }
    }
  const std::vector<std::vector<int>> elems(seen.begin(), seen.end());
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::vector<std::size_t>> t(elems.size(), std::vector<std::size_t>(elems.size()));
  std::vector<int> h(deg);
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      // (ab)(x) = a(b(x))
      for (std::size_t i = 0; i < deg; ++i) h[i] = elems[a][static_cast<std::size_t>(elems[b][i])];
      t[a][b] = index.at(h);
    }
  return FiniteGroup(std::move(name), std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw InvalidArgument("symmetric group supports 1 <= n <= 5");
  std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  if (n >= 2) std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  return from_permutations("S" + std::to_string(n), {swap, cycle});
}

FiniteGroup FiniteGroup::alternating5() {
  return from_permutations("A5", {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
}

FiniteGroup FiniteGroup::psl27() {
  // Action on the projective line over F_7; point 7 is infinity.
  std::vector<int> shift(8), scale(8), invert(8);
  for (int x = 0; x < 7; ++x) {
    shift[static_cast<std::size_t>(x)] = (x + 1) % 7;
    scale[static_cast<std::size_t>(x)] = (2 * x) % 7;
  }
  shift[7] = 7;
  scale[7] = 7;
  const int inv7[7] = {0, 1, 4, 5, 2, 3, 6};
  invert[0] = 7;
  invert[7] = 0;
  for (int x = 1; x < 7; ++x) invert[static_cast<std::size_t>(x)] = (7 - inv7[x]) % 7;
  return from_permutations("PSL(2,7)", {shift, scale, invert});
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<FiniteGroup> simple_groups_up_to(std::uint64_t n) {
  std::vector<FiniteGroup> out;
  for (std::uint64_t p = 2; p <= std::min<std::uint64_t>(n, 61); ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) out.push_back(FiniteGroup::cyclic(p));
  }
  if (n >= 60) out.push_back(FiniteGroup::alternating5());
  if (n >= 168) out.push_back(FiniteGroup::psl27());
  std::stable_sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) { return a.order() < b.order(); });
  return out;
}

// ---------------------------------------------------------------------------

NonAbContext::NonAbContext(const ComplexZ2& x, FiniteGroup g) : host_(x), g_(std::move(g)) {
  if (!x.is_simplicial()) throw InvalidArgument("non-abelian cochains require a simplicial complex");
  n_ = x.f(0);
  std::map<int, int> pos;
  for (std::size_t i = 0; i < n_; ++i) pos[x.simplex(0, i)[0]] = static_cast<int>(i);
  edge_at_.assign(n_ * n_, kNpos);
  for (std::size_t e = 0; e < x.f(1); ++e) {
    const auto& s = x.simplex(1, e);
    const int u = pos.at(s[0]), v = pos.at(s[1]);
    edge_at_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] = edges_.size();
    edge_at_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)] = edges_.size();
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (std::size_t t = 0; t < x.f(2); ++t) {
    const auto& s = x.simplex(2, t);
    std::array<int, 3> tri{pos.at(s[0]), pos.at(s[1]), pos.at(s[2])};
    std::sort(tri.begin(), tri.end());
    triangles_.push_back(tri);
  }
}

std::size_t NonAbContext::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) return kNpos;
  return edge_at_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
}

bool NonAbContext::connected() const {
  if (n_ == 0) return true;
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t parts = n_;
  for (const auto& [u, v] : edges_) {
    const auto a = root(static_cast<std::size_t>(u)), b = root(static_cast<std::size_t>(v));
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

NonAbCochain1 NonAbContext::identity() const { return {std::vector<std::size_t>(edges_.size(), g_.identity())}; }

std::size_t NonAbContext::value(const NonAbCochain1& phi, int u, int v) const {
  const std::size_t e = edge_index(u, v);
  if (e == kNpos) throw InvalidArgument("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return u < v ? phi.values[e] : g_.inv(phi.values[e]);
}

void NonAbContext::set(NonAbCochain1& phi, int u, int v, std::size_t g) const {
  const std::size_t e = edge_index(u, v);
  if (e == kNpos) throw InvalidArgument("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  if (g >= g_.order()) throw InvalidArgument("group element out of range");
  phi.values[e] = u < v ? g : g_.inv(g);
}

std::vector<std::size_t> NonAbContext::d1(const NonAbCochain1& phi) const {
  std::vector<std::size_t> out;
  out.reserve(triangles_.size());
  for (const auto& [u, v, w] : triangles_)
    out.push_back(g_.mul(g_.mul(value(phi, u, v), value(phi, v, w)), value(phi, w, u)));
  return out;
}

bool NonAbContext::is_cocycle(const NonAbCochain1& phi) const {
  const auto d = d1(phi);
  return std::all_of(d.begin(), d.end(), [&](std::size_t g) { return g == g_.identity(); });
}

std::size_t NonAbContext::d1_norm(const NonAbCochain1& phi) const {
  const auto d = d1(phi);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [&](std::size_t g) { return g != g_.identity(); }));
}

NonAbCochain1 NonAbContext::act(const VertexMap& psi, const NonAbCochain1& phi) const {
  if (psi.size() != n_) throw InvalidArgument("vertex map has the wrong length");
  NonAbCochain1 out = phi;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    out.values[e] = g_.mul(g_.mul(psi[static_cast<std::size_t>(u)], phi.values[e]), g_.inv(psi[static_cast<std::size_t>(v)]));
  }
  return out;
}

BitVec NonAbContext::support(const NonAbCochain1& phi) const {
  BitVec s(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (phi.values[e] != g_.identity()) s.set(e);
  return s;
}

std::vector<std::size_t> NonAbContext::spanning_tree() const {
  if (!connected()) throw InvalidArgument("spanning tree of a disconnected 1-skeleton");
  std::vector<std::size_t> tree;
  if (n_ == 0) return tree;
  std::vector<bool> seen(n_, false);
  // Iterative DFS, neighbours in increasing order.
  std::vector<std::pair<int, int>> stack{{0, 0}};
  seen[0] = true;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    bool pushed = false;
    while (static_cast<std::size_t>(next) < n_) {
      const int v = next++;
      const std::size_t e = edge_index(u, v);
      if (e != kNpos && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        tree.push_back(e);
        stack.emplace_back(v, 0);
        pushed = true;
        break;
      }
    }
    if (!pushed) stack.pop_back();
  }
  return tree;
}

VertexMap NonAbContext::tree_gauge(const NonAbCochain1& phi) const {
  const auto tree = spanning_tree();
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n_);
  for (std::size_t e : tree) {
    adj[static_cast<std::size_t>(edges_[e].first)].emplace_back(edges_[e].second, e);
    adj[static_cast<std::size_t>(edges_[e].second)].emplace_back(edges_[e].first, e);
  }
  VertexMap psi(n_, kNpos);
  if (n_ == 0) return psi;
  psi[0] = g_.identity();
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& [v, e] : adj[static_cast<std::size_t>(u)]) {
      (void)e;
      if (psi[static_cast<std::size_t>(v)] != kNpos) continue;
      // psi(u) phi(u,v) psi(v)^-1 = 1  =>  psi(v) = psi(u) phi(u,v)
      psi[static_cast<std::size_t>(v)] = g_.mul(psi[static_cast<std::size_t>(u)], value(phi, u, v));
      stack.push_back(v);
    }
  }
  return psi;
}

// ---------------------------------------------------------------------------

namespace {

// Depth-first enumeration of G-assignments to a list of slots subject to
// constraints; each constraint is checked at its last slot.
struct SlotSearch {
  const FiniteGroup* g = nullptr;
  std::size_t slots = 0;
  std::vector<std::vector<std::size_t>> checks;  // slot -> constraint ids
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> assign;

  // visit returns false to stop the search.
  template <class Holds, class Visit>
  bool run(std::size_t i, const Holds& holds, const Visit& visit) {
    if (i == slots) return visit(assign);
    for (std::size_t x = 0; x < g->order(); ++x) {
      if (++nodes > budget) throw BudgetExceeded("cocycle search nodes", static_cast<double>(nodes), budget);
      assign[i] = x;
      bool ok = true;
      for (std::size_t c : checks[i])
        if (!holds(c, assign)) {
          ok = false;
          break;
        }
      if (ok && !run(i + 1, holds, visit)) return false;
    }
    return true;
  }
};

std::vector<std::size_t> canonical_under_conjugation(const FiniteGroup& g, const std::vector<std::size_t>& v) {
  std::vector<std::size_t> best = v, cur(v.size());
  for (std::size_t h = 0; h < g.order(); ++h) {
    for (std::size_t i = 0; i < v.size(); ++i) cur[i] = g.conj(h, v[i]);
    if (cur < best) best = cur;
  }
  return best;
}

// Gauge search setup shared by the orbit count and the existence test.
struct GaugeSetup {
  std::vector<std::size_t> free_edges;  // slot -> edge
  std::vector<std::size_t> slot_of;     // edge -> slot or npos (tree edge)
  SlotSearch search;
};

GaugeSetup gauge_setup(const NonAbContext& ctx, std::uint64_t budget) {
  GaugeSetup s;
  const auto& edges = ctx.edges();
  const auto tree = ctx.spanning_tree();
  std::vector<bool> in_tree(edges.size(), false);
  for (std::size_t e : tree) in_tree[e] = true;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!in_tree[e]) s.free_edges.push_back(e);
  // Short edges first, so each triangle closes as early as possible.
  std::stable_sort(s.free_edges.begin(), s.free_edges.end(), [&](std::size_t a, std::size_t b) {
    const int la = edges[a].second - edges[a].first, lb = edges[b].second - edges[b].first;
    return la != lb ? la < lb : edges[a] < edges[b];
  });
  s.slot_of.assign(edges.size(), kNpos);
  for (std::size_t i = 0; i < s.free_edges.size(); ++i) s.slot_of[s.free_edges[i]] = i;
  s.search.g = &ctx.group();
  s.search.slots = s.free_edges.size();
  s.search.checks.assign(s.free_edges.size(), {});
  s.search.budget = budget;
  s.search.assign.assign(s.free_edges.size(), ctx.group().identity());
  const auto& tris = ctx.triangles();
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const auto [u, v, w] = tris[t];
    std::size_t last = kNpos;
    for (std::size_t e : {ctx.edge_index(u, v), ctx.edge_index(v, w), ctx.edge_index(u, w)})
      if (s.slot_of[e] != kNpos) last = last == kNpos ? s.slot_of[e] : std::max(last, s.slot_of[e]);
    if (last != kNpos) s.search.checks[last].push_back(t);
  }
  return s;
}

// d1 phi = 1 on triangle t, phi(w,u) = phi(u,w)^-1 and tree edges at 1.
bool triangle_closes(const NonAbContext& ctx, const GaugeSetup& s, std::size_t t, const std::vector<std::size_t>& a) {
  const FiniteGroup& g = ctx.group();
  const auto [u, v, w] = ctx.triangles()[t];
  auto val = [&](int x, int y) {
    const std::size_t slot = s.slot_of[ctx.edge_index(x, y)];
    return slot == kNpos ? g.identity() : a[slot];
  };
  return g.mul(g.mul(val(u, v), val(v, w)), g.inv(val(u, w))) == g.identity();
}

}  // namespace

OrbitSet h1_orbits(const NonAbContext& ctx, std::uint64_t budget) {
  GaugeSetup s = gauge_setup(ctx, budget);
  std::set<std::vector<std::size_t>> classes;
  const FiniteGroup& g = ctx.group();
  const auto holds = [&](std::size_t t, const std::vector<std::size_t>& a) { return triangle_closes(ctx, s, t, a); };
  s.search.run(0, holds, [&](const std::vector<std::size_t>& a) {
    classes.insert(canonical_under_conjugation(g, a));
    return true;
  });
  OrbitSet out;
  out.count = classes.size();
  out.nodes = s.search.nodes;
  for (const auto& c : classes) {
    NonAbCochain1 phi = ctx.identity();
    for (std::size_t i = 0; i < c.size(); ++i) phi.values[s.free_edges[i]] = c[i];
    out.representatives.push_back(std::move(phi));
  }
  return out;
}

bool h1_nontrivial(const NonAbContext& ctx, std::uint64_t node_budget) {
  GaugeSetup s = gauge_setup(ctx, node_budget);
  const std::size_t e = ctx.group().identity();
  bool found = false;
  const auto holds = [&](std::size_t t, const std::vector<std::size_t>& a) { return triangle_closes(ctx, s, t, a); };
  s.search.run(0, holds, [&](const std::vector<std::size_t>& a) {
    found = std::any_of(a.begin(), a.end(), [&](std::size_t x) { return x != e; });
    return !found;
  });
  return found;
}

std::size_t hom_pi1_orbits(const NonAbContext& ctx, std::uint64_t budget) {
  const int n = static_cast<int>(ctx.vertices());
  if (!ctx.complete_graph()) throw InvalidArgument("hom_pi1_orbits requires the full 1-skeleton");
  const FiniteGroup& g = ctx.group();
  // Generators e_ij for 1 <= i < j <= n-1 (vertex 0 is the base point); e_ji = e_ij^-1 by (R1).
  std::vector<std::pair<int, int>> gens;
  std::vector<int> gen_of(static_cast<std::size_t>(n * n), -1);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      gen_of[static_cast<std::size_t>(i * n + j)] = static_cast<int>(gens.size());
      gens.emplace_back(i, j);
    }
  check_budget(power_of(g.order(), gens.size()), budget, "hom_pi1_orbits: generator assignments");
  // (R2) forces e_ij = 1 when (0,i,j) is a triangle; (R3) e_ij e_jk e_ki = 1.
  std::vector<bool> forced(gens.size(), false);
  std::vector<std::array<int, 3>> r3;
  for (const auto& [u, v, w] : ctx.triangles()) {
    if (u == 0)
      forced[static_cast<std::size_t>(gen_of[static_cast<std::size_t>(v * n + w)])] = true;
    else
      r3.push_back({gen_of[static_cast<std::size_t>(u * n + v)], gen_of[static_cast<std::size_t>(v * n + w)],
                    gen_of[static_cast<std::size_t>(u * n + w)]});
  }
  std::vector<std::vector<std::size_t>> rel_at(gens.size());
  for (std::size_t r = 0; r < r3.size(); ++r)
    rel_at[static_cast<std::size_t>(std::max({r3[r][0], r3[r][1], r3[r][2]}))].push_back(r);

  std::set<std::vector<std::size_t>> classes;
  std::vector<std::size_t> a(gens.size(), g.identity());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      classes.insert(canonical_under_conjugation(g, a));
      return;
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (forced[i] && x != g.identity()) continue;
      a[i] = x;
      bool ok = true;
      for (std::size_t r : rel_at[i]) {
        const auto& q = r3[r];
        // e_uv e_vw e_wu with e_wu = e_uw^-1
        if (g.mul(g.mul(a[static_cast<std::size_t>(q[0])], a[static_cast<std::size_t>(q[1])]),
                  g.inv(a[static_cast<std::size_t>(q[2])])) != g.identity()) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return classes.size();
}

std::size_t nonab_csy(const NonAbContext& ctx, const NonAbCochain1& phi, std::uint64_t budget) {
  const FiniteGroup& g = ctx.group();
  const std::size_t n = ctx.vertices();
  check_budget(power_of(g.order(), n), budget, "nonab_csy: vertex maps");
  VertexMap psi(n, 0);
  std::size_t best = ctx.norm(phi);
  while (true) {
    best = std::min(best, ctx.norm(ctx.act(psi, phi)));
    std::size_t i = 0;
    while (i < n && ++psi[i] == g.order()) psi[i++] = 0;
    if (i == n) break;
  }
  return best;
}

QuotientReport quotient_experiment(int n, double c, std::size_t trials, std::uint64_t seed, std::uint64_t budget,
                                   std::optional<double> p_override) {
  if (n < 3) throw InvalidArgument("quotient_experiment requires n >= 3");
  if (c <= 0) throw InvalidArgument("quotient_experiment requires c > 0");
  QuotientReport rep;
  rep.n = n;
  rep.c = c;
  rep.trials = trials;
  rep.seed = seed;
  rep.p = p_override ? *p_override : std::min(1.0, (6 + 7 * c) * std::log(static_cast<double>(n)) / n);
  if (rep.p < 0 || rep.p > 1) throw InvalidArgument("probability outside [0,1]");
  const auto limit = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(n), c) + 1e-9));
  const auto groups = simple_groups_up_to(limit);
  for (const auto& g : groups) rep.groups.push_back({g.name(), 0, 0, 0});
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexZ2 y = random_Ynp(n, rep.p, trial_seed(seed, t));
    bool any = false, skipped = false;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      try {
        if (h1_nontrivial(NonAbContext(y, groups[i]), budget)) {
          ++rep.groups[i].nontrivial;
          any = true;
        }
      } catch (const BudgetExceeded&) {
        ++rep.groups[i].skipped;
        skipped = true;
      }
    }
    if (any)
      ++rep.any_nontrivial;
    else if (skipped)
      ++rep.skipped;
  }
  for (auto& row : rep.groups) {
    const std::size_t done = trials - row.skipped;
    row.fraction_nontrivial = done ? static_cast<double>(row.nontrivial) / static_cast<double>(done) : 0;
  }
  const std::size_t done = trials - rep.skipped;
  rep.fraction_nontrivial = done ? static_cast<double>(rep.any_nontrivial) / static_cast<double>(done) : 0;
  return rep;
}

std::vector<HomologyPoint> homology_sweep(int n, const std::vector<double>& ps, std::size_t trials, std::uint64_t seed) {
  if (n < 3) throw InvalidArgument("homology_sweep requires n >= 3");
  std::vector<HomologyPoint> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] < 0 || ps[i] > 1) throw InvalidArgument("probability outside [0,1]");
    HomologyPoint pt;
    pt.p = ps[i];
    pt.trials = trials;
    const std::uint64_t point_seed = trial_seed(seed, i);
    for (std::size_t t = 0; t < trials; ++t) {
      const ComplexZ2 y = random_Ynp(n, ps[i], trial_seed(point_seed, t));
      if (cohomology_dim(RelativePair(y), 1) == 0) ++pt.vanishing;
    }
    pt.fraction = trials ? static_cast<double>(pt.vanishing) / static_cast<double>(trials) : 0;
    out.push_back(pt);
  }
  return out;
}

}  // namespace hdx
