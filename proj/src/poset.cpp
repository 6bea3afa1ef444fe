#include "hdx/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hdx/error.hpp"

namespace hdx {

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  above_.assign(n, BitVec(n));
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw InvalidArgument("poset relation index out of range");
    above_[a].set(b);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (above_[i].test(k)) above_[i] |= above_[k];
  for (std::size_t i = 0; i < n; ++i)
    if (above_[i].test(i)) throw InvalidArgument("order relation has a cycle through '" + labels_[i] + "'");

  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : above_[i].support()) ++below[j];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  rank_.assign(n, 0);
  for (std::size_t a : order)
    for (std::size_t b : above_[a].support()) rank_[b] = std::max(rank_[b], rank_[a] + 1);
}

bool Poset::covers(std::size_t a, std::size_t b) const {
  if (!less(a, b)) return false;
  for (std::size_t c : above_[a].support())
    if (less(c, b)) return false;
  return true;
}

int Poset::height() const noexcept {
  int h = -1;
  for (int r : rank_) h = std::max(h, r);
  return h;
}

bool Poset::is_graded() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : above_[a].support())
      if (covers(a, b) && rank_[b] != rank_[a] + 1) return false;
  // All maximal elements share the top rank.
  for (std::size_t a = 0; a < size(); ++a)
    if (above_[a].none() && rank_[a] != height()) return false;
  return true;
}

std::size_t Poset::bottom() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (above_[a].weight() + 1 == size()) return a;
  return kNoElement;
}

std::size_t Poset::top() const {
  std::size_t t = kNoElement;
  for (std::size_t a = 0; a < size(); ++a) {
    if (above_[a].any()) continue;
    if (t != kNoElement) return kNoElement;
    t = a;
  }
  if (t == kNoElement) return t;
  for (std::size_t a = 0; a < size(); ++a)
    if (a != t && !less(a, t)) return kNoElement;
  return t;
}

std::size_t Poset::join(std::size_t a, std::size_t b) const {
  BitVec ua = above_[a];
  ua.set(a);
  BitVec ub = above_[b];
  ub.set(b);
  const BitVec common = ua & ub;
  for (std::size_t u : common.support()) {
    BitVec rest = common;
    rest.set(u, false);
    if ((rest & above_[u]) == rest) return u;
  }
  return kNoElement;
}

std::size_t Poset::meet(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> common;
  for (std::size_t c = 0; c < size(); ++c)
    if (leq(c, a) && leq(c, b)) common.push_back(c);
  for (std::size_t m : common)
    if (std::all_of(common.begin(), common.end(), [&](std::size_t c) { return leq(c, m); })) return m;
  return kNoElement;
}

std::vector<std::size_t> Poset::atoms() const {
  std::vector<std::size_t> out;
  const std::size_t z = bottom();
  if (z == kNoElement) return out;
  for (std::size_t a = 0; a < size(); ++a)
    if (covers(z, a)) out.push_back(a);
  return out;
}

bool Poset::is_lattice() const {
  if (size() == 0) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (join(a, b) == kNoElement || meet(a, b) == kNoElement) return false;
  return bottom() != kNoElement && top() != kNoElement;
}

bool Poset::is_geometric_lattice() const {
  if (!is_lattice() || !is_graded()) return false;
  const auto at = atoms();
  const std::size_t z = bottom();
  for (std::size_t x = 0; x < size(); ++x) {
    if (x == z) continue;
    std::size_t j = kNoElement;
    for (std::size_t a : at)
      if (leq(a, x)) j = j == kNoElement ? a : join(j, a);
    if (j != x) return false;
  }
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (rank_[a] + rank_[b] < rank_[join(a, b)] + rank_[meet(a, b)]) return false;
  return true;
}

Poset Poset::induced(const std::vector<std::size_t>& elements) const {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(labels_[elements[i]]);
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (less(elements[i], elements[j])) rel.emplace_back(i, j);
  }
  return Poset(std::move(labels), rel);
}

Poset Poset::proper_part(std::vector<std::size_t>* kept) const {
  const std::size_t z = bottom();
  const std::size_t t = top();
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < size(); ++a)
    if (a != z && a != t) keep.push_back(a);
  if (kept) *kept = keep;
  return induced(keep);
}

bool Poset::is_automorphism(const std::vector<std::size_t>& perm) const {
  if (perm.size() != size()) return false;
  std::vector<std::uint8_t> seen(size(), 0);
  for (std::size_t p : perm) {
    if (p >= size() || seen[p]) return false;
    seen[p] = 1;
  }
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (less(a, b) != less(perm[a], perm[b])) return false;
  return true;
}

// ---------------------------------------------------------------------------

ComplexZ2 order_complex(const Poset& p, std::string name) {
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(std::size_t)> extend = [&](std::size_t a) {
    cur.push_back(static_cast<int>(a));
    std::vector<int> s = cur;
    std::sort(s.begin(), s.end());
    chains.push_back(std::move(s));
    for (std::size_t b : p.up_set(a).support()) extend(b);
    cur.pop_back();
  };
  for (std::size_t a = 0; a < p.size(); ++a) extend(a);
  return simplicial_closure(std::move(name), chains, true);
}

Poset chain_poset(std::size_t m) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i) rel.emplace_back(i - 1, i);
  }
  return Poset(std::move(labels), rel);
}

Poset antichain_poset(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i));
  return Poset(std::move(labels), {});
}

namespace {

std::string subset_label(std::uint32_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1U) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

// F_q^n vectors coded base q, coordinate 0 least significant.
struct FqSpace {
  int q;
  int n;
  int size;
  int digit(int v, int i) const {
    for (int t = 0; t < i; ++t) v /= q;
    return v % q;
  }
  int add(int u, int v) const {
    int out = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
      out += ((u % q + v % q) % q) * mul;
      u /= q;
      v /= q;
      mul *= q;
    }
    return out;
  }
  int scale(int c, int u) const {
    int out = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
      out += ((c * (u % q)) % q) * mul;
      u /= q;
      mul *= q;
    }
    return out;
  }
  // Applies the n x n matrix m (row-major) to u.
  int apply(const std::vector<int>& m, int u) const {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = digit(u, i);
    int out = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += m[static_cast<std::size_t>(i * n + j)] * x[static_cast<std::size_t>(j)];
      out += (s % q) * mul;
      mul *= q;
    }
    return out;
  }
};

struct SubspaceData {
  FqSpace space;
  std::vector<std::vector<int>> members;  // sorted codes, in element order
  std::map<std::vector<int>, std::size_t> index;
};

SubspaceData enumerate_subspaces(int q, int n) {
  if ((q != 2 && q != 3) || n < 2 || n > 4) throw InvalidArgument("subspace_lattice supports q in {2,3}, 2 <= n <= 4");
  FqSpace sp{q, n, 1};
  for (int i = 0; i < n; ++i) sp.size *= q;
  std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(n + 1));
  std::map<std::vector<int>, int> seen;
  by_dim[0].push_back({0});
  seen[{0}] = 0;
  for (int d = 0; d < n; ++d) {
    for (const auto& w : by_dim[static_cast<std::size_t>(d)]) {
      std::vector<std::uint8_t> in(static_cast<std::size_t>(sp.size), 0);
      for (int x : w) in[static_cast<std::size_t>(x)] = 1;
      for (int v = 1; v < sp.size; ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        std::vector<int> span;
        for (int x : w)
          for (int c = 0; c < q; ++c) span.push_back(sp.add(x, sp.scale(c, v)));
        std::sort(span.begin(), span.end());
        span.erase(std::unique(span.begin(), span.end()), span.end());
        if (seen.emplace(span, d + 1).second) by_dim[static_cast<std::size_t>(d + 1)].push_back(span);
      }
    }
    std::sort(by_dim[static_cast<std::size_t>(d + 1)].begin(), by_dim[static_cast<std::size_t>(d + 1)].end());
  }
  SubspaceData out{sp, {}, {}};
  for (const auto& level : by_dim)
    for (const auto& w : level) {
      out.index.emplace(w, out.members.size());
      out.members.push_back(w);
    }
  return out;
}

std::vector<std::size_t> subspace_permutation(const SubspaceData& data, const std::vector<int>& m) {
  std::vector<std::size_t> perm(data.members.size());
  for (std::size_t i = 0; i < data.members.size(); ++i) {
    std::vector<int> img;
    for (int x : data.members[i]) img.push_back(data.space.apply(m, x));
    std::sort(img.begin(), img.end());
    perm[i] = data.index.at(img);
  }
  return perm;
}

}  // namespace

Poset boolean_lattice(int n) {
  if (n < 1 || n > 12) throw InvalidArgument("boolean_lattice requires 1 <= n <= 12");
  const std::uint32_t m = std::uint32_t{1} << n;
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::uint32_t s = 0; s < m; ++s) {
    labels.push_back(subset_label(s, n));
    for (int i = 0; i < n; ++i)
      if (!((s >> i) & 1U)) rel.emplace_back(s, s | (std::uint32_t{1} << i));
  }
  return Poset(std::move(labels), rel);
}

Poset subspace_lattice(int q, int n) {
  const SubspaceData data = enumerate_subspaces(q, n);
  std::vector<std::string> labels;
  std::vector<int> dims;
  for (const auto& w : data.members) {
    int d = 0;
    for (std::size_t s = w.size(); s > 1; s /= static_cast<std::size_t>(q)) ++d;
    dims.push_back(d);
    labels.push_back("W" + std::to_string(d) + "." + std::to_string(labels.size()));
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < data.members.size(); ++a)
    for (std::size_t b = 0; b < data.members.size(); ++b) {
      if (dims[b] != dims[a] + 1) continue;
      if (std::includes(data.members[b].begin(), data.members[b].end(), data.members[a].begin(),
                        data.members[a].end()))
        rel.emplace_back(a, b);
    }
  return Poset(std::move(labels), rel);
}

std::vector<std::vector<std::size_t>> boolean_lattice_generators(int n) {
  std::vector<std::vector<std::size_t>> gens;
  const std::uint32_t m = std::uint32_t{1} << n;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> perm(m);
    for (std::uint32_t s = 0; s < m; ++s) {
      const std::uint32_t bi = (s >> i) & 1U, bj = (s >> (i + 1)) & 1U;
      std::uint32_t t = s & ~((std::uint32_t{1} << i) | (std::uint32_t{1} << (i + 1)));
      t |= (bj << i) | (bi << (i + 1));
      perm[s] = t;
    }
    gens.push_back(std::move(perm));
  }
  return gens;
}

std::vector<std::vector<std::size_t>> subspace_lattice_generators(int q, int n) {
  const SubspaceData data = enumerate_subspaces(q, n);
  std::vector<std::vector<std::size_t>> gens;
  auto identity = [n] {
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    return m;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto m = identity();
      m[static_cast<std::size_t>(i * n + j)] = 1;
      gens.push_back(subspace_permutation(data, m));
    }
  if (q == 3) {
    auto m = identity();
    m[0] = 2;
    gens.push_back(subspace_permutation(data, m));
  }
  return gens;
}

// ---------------------------------------------------------------------------

ComplexZ2 coxeter_An(int n) {
  if (n < 3 || n > 8) throw InvalidArgument("coxeter_An requires 3 <= n <= 8");
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s + 1 < (std::uint32_t{1} << n); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    labels.push_back(subset_label(subsets[i], n));
    for (std::size_t j = 0; j < subsets.size(); ++j)
      if (subsets[i] != subsets[j] && (subsets[i] & subsets[j]) == subsets[i] &&
          std::popcount(subsets[j]) == std::popcount(subsets[i]) + 1)
        rel.emplace_back(i, j);
  }
  return order_complex(Poset(std::move(labels), rel), "coxeter_A(" + std::to_string(n) + ")");
}

ComplexZ2 coxeter_Bn(int n) {
  if (n < 2 || n > 5) throw InvalidArgument("coxeter_Bn requires 2 <= n <= 5");
  struct Signed {
    std::uint32_t pos, neg;
  };
  std::vector<Signed> elems;
  for (std::uint32_t pos = 0; pos < (std::uint32_t{1} << n); ++pos)
    for (std::uint32_t neg = 0; neg < (std::uint32_t{1} << n); ++neg)
      if ((pos & neg) == 0 && (pos | neg) != 0) elems.push_back({pos, neg});
  std::stable_sort(elems.begin(), elems.end(), [](const Signed& a, const Signed& b) {
    return std::popcount(a.pos | a.neg) < std::popcount(b.pos | b.neg);
  });
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::string l;
    for (int t = 0; t < n; ++t) l += ((elems[i].pos >> t) & 1U) ? '+' : (((elems[i].neg >> t) & 1U) ? '-' : '0');
    labels.push_back(l);
    for (std::size_t j = 0; j < elems.size(); ++j)
      if ((elems[i].pos & elems[j].pos) == elems[i].pos && (elems[i].neg & elems[j].neg) == elems[i].neg &&
          std::popcount(elems[j].pos | elems[j].neg) == std::popcount(elems[i].pos | elems[i].neg) + 1)
        rel.emplace_back(i, j);
  }
  return order_complex(Poset(std::move(labels), rel), "coxeter_B(" + std::to_string(n) + ")");
}

}  // namespace hdx
