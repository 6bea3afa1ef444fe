#include "hdx/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hdx {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

struct PiercingSearch {
  std::vector<BitVec> sets;
  std::size_t ground = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> best;
  bool have_best = false;

  std::size_t packing_bound(const std::vector<std::size_t>& unhit, const BitVec& forbidden) const {
    BitVec used(ground);
    std::size_t count = 0;
    for (std::size_t i : unhit) {
      BitVec eff = sets[i];
      eff ^= eff & forbidden;
      if ((eff & used).none()) {
        used |= eff;
        ++count;
      }
    }
    return count;
  }

  void run(std::vector<std::size_t>& chosen, const std::vector<std::size_t>& unhit, BitVec forbidden) {
    if (++nodes > budget)
      throw BudgetExceeded("piercing_number: branch and bound nodes", static_cast<double>(nodes), budget);
    if (unhit.empty()) {
      if (!have_best || chosen.size() < best.size()) {
        best = chosen;
        have_best = true;
      }
      return;
    }
    if (have_best && chosen.size() + packing_bound(unhit, forbidden) >= best.size()) return;
    // Branch on the unhit set with the fewest admissible elements.
    std::size_t pick = kNpos, pick_size = kNpos;
    for (std::size_t i : unhit) {
      BitVec eff = sets[i];
      eff ^= eff & forbidden;
      const std::size_t w = eff.weight();
      if (w == 0) return;
      if (w < pick_size) {
        pick = i;
        pick_size = w;
      }
    }
    BitVec eff = sets[pick];
    eff ^= eff & forbidden;
    for (std::size_t e : eff.support()) {
      std::vector<std::size_t> rest;
      for (std::size_t i : unhit)
        if (!sets[i].test(e)) rest.push_back(i);
      chosen.push_back(e);
      run(chosen, rest, forbidden);
      chosen.pop_back();
      forbidden.set(e);
    }
  }
};

}  // namespace

PiercingResult piercing_number(const std::vector<std::vector<std::size_t>>& family, std::uint64_t node_budget) {
  PiercingResult out;
  if (family.empty()) return out;
  std::size_t ground = 0;
  for (const auto& f : family) {
    if (f.empty()) throw InvalidArgument("piercing_number: family contains an empty set");
    for (std::size_t e : f) ground = std::max(ground, e + 1);
  }
  std::vector<BitVec> sets;
  for (const auto& f : family) {
    BitVec v(ground);
    for (std::size_t e : f) v.set(e);
    sets.push_back(std::move(v));
  }
  // Drop duplicates and supersets: hitting the smaller set hits the larger.
  std::sort(sets.begin(), sets.end(), [](const BitVec& a, const BitVec& b) {
    const auto wa = a.weight(), wb = b.weight();
    return wa != wb ? wa < wb : a.lex_less(b);
  });
  std::vector<BitVec> minimal;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& m : minimal)
      if ((m & s) == m) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }

  PiercingSearch search;
  search.sets = std::move(minimal);
  search.ground = ground;
  search.budget = node_budget;
  // Greedy upper bound.
  {
    std::vector<std::size_t> unhit(search.sets.size());
    std::iota(unhit.begin(), unhit.end(), 0);
    std::vector<std::size_t> chosen;
    while (!unhit.empty()) {
      std::vector<std::size_t> freq(ground, 0);
      for (std::size_t i : unhit)
        for (std::size_t e : search.sets[i].support()) ++freq[e];
      const auto e = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
      chosen.push_back(e);
      std::vector<std::size_t> rest;
      for (std::size_t i : unhit)
        if (!search.sets[i].test(e)) rest.push_back(i);
      unhit = std::move(rest);
    }
    search.best = chosen;
    search.have_best = true;
  }
  std::vector<std::size_t> all(search.sets.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::size_t> chosen;
  search.run(chosen, all, BitVec(ground));
  out.tau = search.best.size();
  out.witness = search.best;
  std::sort(out.witness.begin(), out.witness.end());
  out.nodes = search.nodes;
  return out;
}

PiercingResult cycle_detection_bound(const ComplexZ2& x, int k, const BitVec& phi, const std::vector<BitVec>& cycles,
                                     std::uint64_t node_budget) {
  if (phi.size() != x.f(k)) throw InvalidArgument("cochain length differs from f_k");
  std::vector<std::vector<std::size_t>> family;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].size() != x.f(k)) throw InvalidArgument("cycle length differs from f_k");
    if (x.boundary(k, cycles[i]).any()) throw NotACycle(i);
    if (!phi.dot(cycles[i])) throw ZeroEvaluation(i);
    family.push_back(cycles[i].support());
  }
  return piercing_number(family, node_budget);
}

TripartiteExample tripartite_example(int k, int m) {
  if (k < 0 || m < 1) throw InvalidArgument("tripartite_example requires k >= 0 and m >= 1");
  const int n = (k + 2) * m;
  TripartiteExample t;
  t.k = k;
  t.complex = simplex_skeleton(n, k + 1);
  t.phi = BitVec(t.complex.f(k));
  for (std::size_t i = 0; i < t.complex.f(k); ++i) {
    const auto& s = t.complex.simplex(k, i);
    bool transversal = true;
    for (int j = 0; j <= k; ++j)
      if (s[static_cast<std::size_t>(j)] / m != j) transversal = false;
    if (transversal) t.phi.set(i);
  }
  for (std::size_t i = 0; i < t.complex.f(k + 1); ++i) {
    const auto& s = t.complex.simplex(k + 1, i);
    bool transversal = true;
    int sum = 0;
    for (int j = 0; j <= k + 1; ++j) {
      if (s[static_cast<std::size_t>(j)] / m != j) transversal = false;
      sum += s[static_cast<std::size_t>(j)] % m;
    }
    if (!transversal || sum % m != 0) continue;
    BitVec cell(t.complex.f(k + 1));
    cell.set(i);
    t.cycles.push_back(t.complex.boundary(k + 1, cell));
  }
  return t;
}

// ---------------------------------------------------------------------------

void validate_scheme(const HomotopyScheme& h) {
  const ComplexZ2& x = h.complex;
  const int k = h.k;
  if (h.lower.size() != h.upper.size()) throw InvalidArgument("scheme: upper and lower families differ in size");
  if (h.upper.empty()) throw InvalidArgument("scheme: empty probability space");
  if (!h.weights.empty()) {
    if (h.weights.size() != h.upper.size()) throw InvalidArgument("scheme: weight count differs from |S|");
    Rational total(0);
    for (const auto& w : h.weights) {
      if (w < Rational(0)) throw InvalidArgument("scheme: negative weight");
      total = total + w;
    }
    if (total != Rational(1)) throw InvalidArgument("scheme: weights do not sum to 1");
  }
  for (std::size_t s = 0; s < h.upper.size(); ++s) {
    if (h.upper[s].size() != x.f(k) || h.lower[s].size() != x.f(k - 1))
      throw InvalidArgument("scheme: chain family sizes differ from f_k, f_{k-1}");
    for (const auto& c : h.upper[s])
      if (c.size() != x.f(k + 1)) throw InvalidArgument("scheme: upper chain has the wrong length");
    for (const auto& c : h.lower[s])
      if (c.size() != x.f(k)) throw InvalidArgument("scheme: lower chain has the wrong length");
    for (std::size_t sigma = 0; sigma < x.f(k); ++sigma) {
      BitVec rhs(x.f(k));
      rhs.set(sigma);
      if (k >= 0)
        for (std::size_t face : x.cell(k, sigma).boundary) rhs ^= h.lower[s][face];
      if (x.boundary(k + 1, h.upper[s][sigma]) != rhs) throw FillIdentityViolated(s, k, sigma);
    }
  }
}

std::vector<std::uint64_t> scheme_delta(const HomotopyScheme& h) {
  std::vector<std::uint64_t> delta(h.complex.f(h.k + 1), 0);
  for (const auto& fam : h.upper)
    for (const auto& c : fam)
      for (std::size_t t : c.support()) ++delta[t];
  return delta;
}

Rational homotopy_bound(const HomotopyScheme& h) {
  validate_scheme(h);
  if (h.weights.empty()) {
    const auto delta = scheme_delta(h);
    const std::uint64_t mx = delta.empty() ? 0 : *std::max_element(delta.begin(), delta.end());
    if (mx == 0) throw HypothesisFailed("scheme has no (k+1)-cells in any support");
    return Rational(static_cast<std::int64_t>(h.size()), static_cast<std::int64_t>(mx));
  }
  std::vector<Rational> expect(h.complex.f(h.k + 1), Rational(0));
  for (std::size_t s = 0; s < h.size(); ++s) {
    std::vector<std::int64_t> d(expect.size(), 0);
    for (const auto& c : h.upper[s])
      for (std::size_t t : c.support()) ++d[t];
    for (std::size_t t = 0; t < d.size(); ++t)
      if (d[t]) expect[t] = expect[t] + h.weights[s] * Rational(d[t]);
  }
  Rational mx(0);
  for (const auto& e : expect) mx = std::max(mx, e);
  if (mx == Rational(0)) throw HypothesisFailed("scheme has no (k+1)-cells in any support");
  return Rational(1) / mx;
}

HomotopyScheme cone_scheme(const ComplexZ2& x, int k, int apex) {
  if (!x.is_simplicial()) throw InvalidArgument("cone_scheme requires a simplicial complex");
  if (!x.reduced() && k == 0) throw InvalidArgument("cone_scheme at k=0 requires the reduced complex");
  auto cone = [&](int j, std::size_t i) {
    BitVec out(x.f(j + 1));
    std::vector<int> v;
    if (j >= 0) v = x.simplex(j, i);
    if (std::find(v.begin(), v.end(), apex) != v.end()) return out;
    v.push_back(apex);
    std::sort(v.begin(), v.end());
    const auto idx = x.find(j + 1, simplex_label(v));
    if (!idx) throw InvalidArgument("cone_scheme: cone " + simplex_label(v) + " is not a cell");
    out.set(*idx);
    return out;
  };
  HomotopyScheme h;
  h.complex = x;
  h.k = k;
  h.upper.resize(1);
  h.lower.resize(1);
  for (std::size_t i = 0; i < x.f(k); ++i) h.upper[0].push_back(cone(k, i));
  for (std::size_t i = 0; i < x.f(k - 1); ++i) h.lower[0].push_back(cone(k - 1, i));
  return h;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> close_group(const std::vector<std::vector<std::size_t>>& generators,
                                                  std::size_t size, std::size_t cap) {
  std::vector<std::size_t> id(size);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::size_t>> out{id};
  std::set<std::vector<std::size_t>> seen{id};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& t : generators) {
      if (t.size() != size) throw InvalidArgument("group generator has the wrong length");
      std::vector<std::size_t> h(size);
      for (std::size_t i = 0; i < size; ++i) h[i] = t[out[head][i]];
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > cap)
          throw BudgetExceeded("close_group: group order above the cap", static_cast<double>(out.size()), cap);
      }
    }
  }
  return out;
}

LatticeScheme::LatticeScheme(Poset lattice, std::vector<std::vector<std::size_t>> group)
    : lattice_(std::move(lattice)), group_(std::move(group)) {
  if (!lattice_.is_geometric_lattice()) throw InvalidArgument("lattice scheme requires a geometric lattice");
  if (group_.empty()) throw InvalidArgument("lattice scheme requires a nonempty set of automorphisms");
  for (const auto& g : group_)
    if (!lattice_.is_automorphism(g)) throw InvalidArgument("lattice scheme: permutation is not an automorphism");
  for (const auto& g : group_) {
    std::vector<std::size_t> inv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) inv[g[i]] = i;
    inverse_.push_back(std::move(inv));
  }
  rank_ = lattice_.rank(lattice_.top());
  const Poset proper = lattice_.proper_part(&kept_);
  vertex_of_.assign(lattice_.size(), kNpos);
  for (std::size_t i = 0; i < kept_.size(); ++i) vertex_of_[kept_[i]] = i;
  atoms_ = lattice_.atoms();
  complex_ = order_complex(proper, "proper_part");
}

std::vector<std::size_t> LatticeScheme::chain_vertices(int k, std::size_t sigma) const {
  std::vector<std::size_t> v;
  if (k < 0) return v;
  for (int p : complex_.simplex(k, sigma)) v.push_back(kept_[static_cast<std::size_t>(p)]);
  std::sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) { return lattice_.rank(a) < lattice_.rank(b); });
  return v;
}

std::size_t LatticeScheme::selector(std::size_t s, int k, std::size_t sigma, int i) const {
  const auto v = chain_vertices(k, sigma);
  std::size_t best = kNpos;
  for (std::size_t a : atoms_) {
    if (i <= k && !lattice_.leq(a, v[static_cast<std::size_t>(i)])) continue;
    if (best == kNpos || inverse_[s][a] < inverse_[s][best]) best = a;
  }
  return best;
}

namespace {

// Join chains b_{p(1)} < b_{p(1)} v b_{p(2)} < ... for every ordering p, each
// extended by `tail`; degenerate chains (repeated elements) contribute 0.
void add_join_chains(const Poset& L, const std::vector<std::size_t>& atoms, const std::vector<std::size_t>& tail,
                     const std::vector<std::size_t>& vertex_of, const ComplexZ2& cx, std::size_t top, BitVec& out) {
  const std::size_t m = atoms.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  const int dim = static_cast<int>(m + tail.size()) - 1;
  do {
    std::vector<int> verts;
    std::size_t cur = kNpos;
    bool degenerate = false;
    for (std::size_t t = 0; t < m && !degenerate; ++t) {
      const std::size_t next = cur == kNpos ? atoms[perm[t]] : L.join(cur, atoms[perm[t]]);
      if (next == cur || next == top) degenerate = true;
      cur = next;
      verts.push_back(static_cast<int>(vertex_of[cur]));
    }
    if (degenerate) continue;
    if (!tail.empty() && !L.less(cur, tail.front())) continue;
    for (std::size_t t : tail) verts.push_back(static_cast<int>(vertex_of[t]));
    std::sort(verts.begin(), verts.end());
    const auto idx = cx.find(dim, simplex_label(verts));
    if (!idx) throw InvariantBreach("join chain is not a simplex of the order complex");
    out.flip(*idx);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

BitVec LatticeScheme::K(const std::vector<std::size_t>& atoms) const {
  const int dim = static_cast<int>(atoms.size()) - 1;
  BitVec out(complex_.f(dim));
  if (atoms.empty()) {
    out.set(0);
    return out;
  }
  add_join_chains(lattice_, atoms, {}, vertex_of_, complex_, lattice_.top(), out);
  return out;
}

BitVec LatticeScheme::chain(std::size_t s, int k, std::size_t sigma) const {
  if (k < -1 || k > rank_ - 3) throw InvalidArgument("lattice chain: k outside [-1, rank-3]");
  const auto v = chain_vertices(k, sigma);
  std::vector<std::size_t> a;
  for (int i = 0; i <= k + 1; ++i) a.push_back(selector(s, k, sigma, i));
  BitVec out(complex_.f(k + 1));
  for (int j = 0; j <= k + 1; ++j) {
    const std::vector<std::size_t> atoms(a.begin(), a.begin() + j + 1);
    const std::vector<std::size_t> tail(v.begin() + j, v.end());
    add_join_chains(lattice_, atoms, tail, vertex_of_, complex_, lattice_.top(), out);
  }
  return out;
}

HomotopyScheme LatticeScheme::scheme(int k) const {
  HomotopyScheme h;
  h.complex = complex_;
  h.k = k;
  for (std::size_t s = 0; s < group_.size(); ++s) {
    std::vector<BitVec> up, low;
    for (std::size_t i = 0; i < complex_.f(k); ++i) up.push_back(chain(s, k, i));
    for (std::size_t i = 0; i < complex_.f(k - 1); ++i) low.push_back(chain(s, k - 1, i));
    h.upper.push_back(std::move(up));
    h.lower.push_back(std::move(low));
  }
  return h;
}

std::size_t LatticeScheme::verify_fill() const {
  std::size_t checked = 0;
  for (std::size_t s = 0; s < group_.size(); ++s) {
    std::vector<BitVec> prev;  // chains of the (k-1)-cells
    for (int k = -1; k <= rank_ - 3; ++k) {
      std::vector<BitVec> cur;
      for (std::size_t i = 0; i < complex_.f(k); ++i) {
        BitVec c = chain(s, k, i);
        BitVec rhs(complex_.f(k));
        rhs.set(i);
        if (k >= 0)
          for (std::size_t face : complex_.cell(k, i).boundary) rhs ^= prev[face];
        if (complex_.boundary(k + 1, c) != rhs) throw FillIdentityViolated(s, k, i);
        cur.push_back(std::move(c));
        ++checked;
      }
      prev = std::move(cur);
    }
  }
  return checked;
}

bool LatticeScheme::homogeneous() const {
  const int top = rank_ - 2;
  if (top < 0 || complex_.f(top) == 0) return false;
  std::set<std::size_t> orbit;
  for (const auto& g : group_) {
    std::vector<int> img;
    for (int p : complex_.simplex(top, 0))
      img.push_back(static_cast<int>(vertex_of_[g[kept_[static_cast<std::size_t>(p)]]]));
    std::sort(img.begin(), img.end());
    const auto idx = complex_.find(top, simplex_label(img));
    if (!idx) return false;
    orbit.insert(*idx);
  }
  return orbit.size() == complex_.f(top);
}

LatticeBound lattice_bound(const Poset& lattice, const std::vector<std::vector<std::size_t>>& generators,
                           std::size_t cap) {
  LatticeScheme ls(lattice, close_group(generators, lattice.size(), cap));
  const int n = ls.rank();
  if (n < 3) throw InvalidArgument("lattice_bound requires rank >= 3");
  if (!ls.homogeneous()) throw NotHomogeneous("automorphisms are not transitive on the top cells");
  std::int64_t fact = 1, sum = 0;
  for (int j = 1; j <= n - 1; ++j) {
    fact *= j;
    sum += fact;
  }
  LatticeBound b;
  const auto& cx = ls.complex();
  b.formula = Rational(static_cast<std::int64_t>(cx.f(n - 2)), static_cast<std::int64_t>(cx.f(n - 3)) * sum);
  b.scheme_bound = homotopy_bound(ls.scheme(n - 3));
  b.group_size = ls.group_size();
  return b;
}

}  // namespace hdx
