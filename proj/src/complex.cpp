#include "hdx/complex.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>

#include "hdx/error.hpp"
#include "hdx/random.hpp"

namespace hdx {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

std::vector<std::vector<int>> sorted_faces(const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<int> face;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) face.push_back(s[j]);
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string simplex_label(const std::vector<int>& vertices) {
  std::string s;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices[i]);
  }
  return s;
}

std::optional<std::vector<int>> parse_simplex_label(std::string_view label) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    const std::size_t comma = std::min(label.find(',', pos), label.size());
    const std::string_view tok = label.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) return std::nullopt;
    if (!out.empty() && v <= out.back()) return std::nullopt;
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

// ---------------------------------------------------------------------------

ComplexZ2::ComplexZ2(std::string name, std::vector<std::vector<Cell>> cells, bool reduced)
    : name_(std::move(name)), cells_(std::move(cells)), reduced_(reduced) {
  while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
  index_and_validate();
}

void ComplexZ2::index_and_validate() {
  index_.assign(cells_.size(), {});
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k].empty()) throw InvalidArgument("complex has an empty dimension below its top dimension");
    const std::size_t lower = k == 0 ? (reduced_ ? 1 : 0) : cells_[k - 1].size();
    for (std::size_t i = 0; i < cells_[k].size(); ++i) {
      Cell& c = cells_[k][i];
      if (!index_[k].emplace(c.label, i).second)
        throw InvalidArgument("duplicate cell label '" + c.label + "' in dimension " + std::to_string(k));
      std::sort(c.boundary.begin(), c.boundary.end());
      if (std::adjacent_find(c.boundary.begin(), c.boundary.end()) != c.boundary.end())
        throw InvalidArgument("repeated boundary index in cell '" + c.label + "'");
      for (std::size_t b : c.boundary)
        if (b >= lower) throw InvalidArgument("boundary index out of range in cell '" + c.label + "'");
      if (k == 0 && reduced_) c.boundary = {0};
      if (k == 0 && !reduced_) c.boundary.clear();
    }
  }
  // dd = 0
  for (std::size_t k = 1; k < cells_.size(); ++k) {
    const std::size_t lower2 = k == 1 ? (reduced_ ? 1 : 0) : cells_[k - 2].size();
    std::vector<std::uint8_t> parity(lower2);
    for (const Cell& c : cells_[k]) {
      std::fill(parity.begin(), parity.end(), 0);
      for (std::size_t b : c.boundary)
        for (std::size_t bb : cells_[k - 1][b].boundary) parity[bb] ^= 1U;
      if (std::find(parity.begin(), parity.end(), 1) != parity.end())
        throw InvariantBreach("boundary of boundary is nonzero at cell '" + c.label + "'");
    }
  }
  simplicial_ = true;
  simplices_.assign(cells_.size(), {});
  for (std::size_t k = 0; k < cells_.size() && simplicial_; ++k) {
    for (const Cell& c : cells_[k]) {
      auto v = parse_simplex_label(c.label);
      if (!v || v->size() != k + 1) {
        simplicial_ = false;
        break;
      }
      simplices_[k].push_back(std::move(*v));
    }
  }
  if (simplicial_) {
    // Boundaries must be exactly the codimension-one faces.
    for (std::size_t k = 1; k < cells_.size() && simplicial_; ++k) {
      for (std::size_t i = 0; i < cells_[k].size() && simplicial_; ++i) {
        std::vector<std::size_t> expect;
        for (const auto& face : sorted_faces(simplices_[k][i])) {
          auto it = index_[k - 1].find(simplex_label(face));
          if (it == index_[k - 1].end()) {
            simplicial_ = false;
            break;
          }
          expect.push_back(it->second);
        }
        std::sort(expect.begin(), expect.end());
        if (simplicial_ && expect != cells_[k][i].boundary) simplicial_ = false;
      }
    }
  }
  if (!simplicial_) simplices_.clear();
}

ComplexZ2 ComplexZ2::with_reduced(bool reduced) const {
  ComplexZ2 out = *this;
  out.reduced_ = reduced;
  if (!out.cells_.empty())
    for (Cell& c : out.cells_[0]) c.boundary.clear();
  out.index_and_validate();
  return out;
}

std::size_t ComplexZ2::f(int k) const noexcept {
  if (k == -1) return reduced_ ? 1 : 0;
  if (k < -1 || k > top_dim()) return 0;
  return cells_[static_cast<std::size_t>(k)].size();
}

std::vector<std::size_t> ComplexZ2::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& d : cells_) out.push_back(d.size());
  return out;
}

std::size_t ComplexZ2::total_cells() const noexcept {
  std::size_t n = 0;
  for (const auto& d : cells_) n += d.size();
  return n;
}

const std::vector<Cell>& ComplexZ2::cells(int k) const {
  static const std::vector<Cell> kEmpty;
  if (k < 0 || k > top_dim()) return kEmpty;
  return cells_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> ComplexZ2::find(int k, std::string_view label) const {
  if (k < 0 || k > top_dim()) return std::nullopt;
  auto it = index_[static_cast<std::size_t>(k)].find(std::string(label));
  if (it == index_[static_cast<std::size_t>(k)].end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& ComplexZ2::simplex(int k, std::size_t i) const {
  if (!simplicial_) throw InvalidArgument("complex is not simplicial");
  return simplices_.at(static_cast<std::size_t>(k)).at(i);
}

GF2Matrix ComplexZ2::boundary_matrix(int k) const {
  GF2Matrix m(f(k), f(k - 1));
  const auto& cs = cells(k);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t b : cs[i].boundary) m.set(i, b);
  return m;
}

GF2Matrix ComplexZ2::coboundary_matrix(int k) const {
  GF2Matrix m(f(k), f(k + 1));
  const auto& cs = cells(k + 1);
  for (std::size_t j = 0; j < cs.size(); ++j)
    for (std::size_t b : cs[j].boundary) m.set(b, j);
  return m;
}

BitVec ComplexZ2::boundary(int k, const BitVec& chain) const {
  if (chain.size() != f(k)) throw InvalidArgument("chain length differs from f_k");
  BitVec out(f(k - 1));
  if (k < 0) return out;
  const auto& cs = cells(k);
  for (std::size_t i : chain.support())
    for (std::size_t b : cs[i].boundary) out.flip(b);
  return out;
}

BitVec ComplexZ2::coboundary(int k, const BitVec& cochain) const {
  if (cochain.size() != f(k)) throw InvalidArgument("cochain length differs from f_k");
  BitVec out(f(k + 1));
  const auto& cs = cells(k + 1);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    bool v = false;
    for (std::size_t b : cs[j].boundary) v ^= cochain.test(b);
    if (v) out.set(j);
  }
  return out;
}

std::vector<std::vector<std::size_t>> ComplexZ2::cofaces(int k) const {
  std::vector<std::vector<std::size_t>> out(f(k));
  const auto& cs = cells(k + 1);
  for (std::size_t j = 0; j < cs.size(); ++j)
    for (std::size_t b : cs[j].boundary) out[b].push_back(j);
  return out;
}

bool ComplexZ2::is_pure() const {
  for (int k = top_dim() - 1; k >= 0; --k) {
    const auto co = cofaces(k);
    for (const auto& c : co)
      if (c.empty()) return false;
  }
  return true;
}

bool operator==(const ComplexZ2& a, const ComplexZ2& b) {
  if (a.reduced_ != b.reduced_ || a.cells_.size() != b.cells_.size()) return false;
  for (std::size_t k = 0; k < a.cells_.size(); ++k) {
    if (a.cells_[k].size() != b.cells_[k].size()) return false;
    for (std::size_t i = 0; i < a.cells_[k].size(); ++i)
      if (a.cells_[k][i].label != b.cells_[k][i].label || a.cells_[k][i].boundary != b.cells_[k][i].boundary)
        return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

RelativePair::RelativePair(ComplexZ2 ambient) : ambient_(std::move(ambient)) {
  for (int k = -1; k <= ambient_.top_dim(); ++k) masks_.emplace_back(ambient_.f(k));
  build();
}

RelativePair::RelativePair(ComplexZ2 ambient, std::vector<BitVec> masks)
    : ambient_(std::move(ambient)), masks_(std::move(masks)) {
  const auto dims = static_cast<std::size_t>(ambient_.top_dim() + 2);
  if (masks_.size() > dims) throw InvalidArgument("relative pair: too many mask dimensions");
  while (masks_.size() < dims) masks_.emplace_back(ambient_.f(static_cast<int>(masks_.size()) - 1));
  for (int k = -1; k <= ambient_.top_dim(); ++k) {
    const BitVec& m = mask(k);
    if (m.size() != ambient_.f(k)) throw InvalidArgument("relative pair: mask length differs from f_k");
    for (std::size_t i : m.support()) {
      if (k == -1) continue;
      for (std::size_t b : ambient_.cell(k, i).boundary)
        if (!mask(k - 1).test(b))
          throw NotASubcomplex("cell '" + ambient_.cell(k, i).label + "' is in Y but a boundary cell is not");
    }
  }
  build();
}

RelativePair RelativePair::from_subcomplex(ComplexZ2 ambient, const ComplexZ2& sub) {
  std::vector<BitVec> masks;
  masks.emplace_back(ambient.f(-1));
  const bool has_empty = sub.reduced() || sub.top_dim() >= 0;
  if (has_empty) {
    if (!ambient.reduced()) throw NotASubcomplex("subcomplex contains the empty cell but the ambient does not");
    masks[0].set(0);
  }
  for (int k = 0; k <= ambient.top_dim(); ++k) {
    masks.emplace_back(ambient.f(k));
    for (const Cell& c : sub.cells(k)) {
      auto idx = ambient.find(k, c.label);
      if (!idx) throw NotASubcomplex("cell '" + c.label + "' of Y is not a cell of X");
      masks.back().set(*idx);
    }
  }
  if (sub.top_dim() > ambient.top_dim()) throw NotASubcomplex("Y has higher dimension than X");
  return RelativePair(std::move(ambient), std::move(masks));
}

void RelativePair::build() {
  free_.clear();
  position_.clear();
  for (int k = -1; k <= ambient_.top_dim(); ++k) {
    std::vector<std::size_t> fr;
    std::vector<std::size_t> pos(ambient_.f(k), kNpos);
    for (std::size_t i = 0; i < ambient_.f(k); ++i)
      if (!mask(k).test(i)) {
        pos[i] = fr.size();
        fr.push_back(i);
      }
    free_.push_back(std::move(fr));
    position_.push_back(std::move(pos));
  }
}

bool RelativePair::in_sub(int k, std::size_t i) const { return mask(k).test(i); }

std::size_t RelativePair::f(int k) const {
  if (k < -1 || k > ambient_.top_dim()) return 0;
  return free_[static_cast<std::size_t>(k + 1)].size();
}

std::vector<std::size_t> RelativePair::f_vector() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= ambient_.top_dim(); ++k) out.push_back(f(k));
  return out;
}

const std::vector<std::size_t>& RelativePair::free_cells(int k) const {
  static const std::vector<std::size_t> kEmpty;
  if (k < -1 || k > ambient_.top_dim()) return kEmpty;
  return free_[static_cast<std::size_t>(k + 1)];
}

GF2Matrix RelativePair::boundary_matrix(int k) const {
  GF2Matrix m(f(k), f(k - 1));
  if (k < 0 || k > ambient_.top_dim()) return m;
  const auto& rows = free_cells(k);
  const auto& pos = position_[static_cast<std::size_t>(k)];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t b : ambient_.cell(k, rows[r]).boundary)
      if (pos[b] != kNpos) m.set(r, pos[b]);
  }
  return m;
}

GF2Matrix RelativePair::coboundary_matrix(int k) const {
  if (k + 1 > ambient_.top_dim()) return GF2Matrix(f(k), 0);
  return boundary_matrix(k + 1).transpose();
}

// ---------------------------------------------------------------------------

ComplexZ2 simplicial_closure(std::string name, const std::vector<std::vector<int>>& simplices, bool reduced) {
  std::vector<std::set<std::vector<int>>> by_dim;
  std::vector<std::vector<int>> stack;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidArgument("simplex with repeated vertex");
    if (!s.empty() && s.front() < 0) throw InvalidArgument("negative vertex label");
    if (!s.empty()) stack.push_back(std::move(s));
  }
  while (!stack.empty()) {
    std::vector<int> s = std::move(stack.back());
    stack.pop_back();
    const std::size_t k = s.size() - 1;
    if (by_dim.size() <= k) by_dim.resize(k + 1);
    if (!by_dim[k].insert(s).second) continue;
    if (k > 0)
      for (auto& face : sorted_faces(s)) stack.push_back(std::move(face));
  }
  std::vector<std::vector<Cell>> cells(by_dim.size());
  std::vector<std::map<std::vector<int>, std::size_t>> index(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    for (const auto& s : by_dim[k]) {
      Cell c;
      c.label = simplex_label(s);
      if (k > 0)
        for (const auto& face : sorted_faces(s)) c.boundary.push_back(index[k - 1].at(face));
      index[k].emplace(s, cells[k].size());
      cells[k].push_back(std::move(c));
    }
  }
  return ComplexZ2(std::move(name), std::move(cells), reduced);
}

ComplexZ2 simplex_skeleton(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw InvalidArgument("simplex_skeleton requires 0 <= k <= n-1");
  if (n > 30) throw InvalidArgument("simplex_skeleton: n above 30");
  std::vector<std::vector<int>> gens;
  // Generate all (k+1)-subsets; closure adds the lower faces.
  std::vector<int> s(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    gens.push_back(s);
    int i = k;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - 1 - (k - i)) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return simplicial_closure("simplex(" + std::to_string(n) + "," + std::to_string(k) + ")", gens);
}

ComplexZ2 hypercube(int d) {
  if (d < 1 || d > 12) throw InvalidArgument("hypercube requires 1 <= d <= 12");
  const char sym[3] = {'-', '+', '*'};
  std::vector<std::vector<std::string>> words(static_cast<std::size_t>(d + 1));
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  for (std::uint64_t x = 0; x < total; ++x) {
    std::string w(static_cast<std::size_t>(d), '-');
    std::uint64_t y = x;
    int stars = 0;
    for (int i = d - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = sym[y % 3];
      stars += (y % 3 == 2);
      y /= 3;
    }
    words[static_cast<std::size_t>(stars)].push_back(std::move(w));
  }
  std::vector<std::vector<Cell>> cells(words.size());
  std::vector<std::unordered_map<std::string, std::size_t>> idx(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    for (const auto& w : words[k]) {
      Cell c;
      c.label = w;
      if (k > 0) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] != '*') continue;
          std::string lo = w, hi = w;
          lo[i] = '-';
          hi[i] = '+';
          c.boundary.push_back(idx[k - 1].at(lo));
          c.boundary.push_back(idx[k - 1].at(hi));
        }
      }
      idx[k].emplace(w, cells[k].size());
      cells[k].push_back(std::move(c));
    }
  }
  return ComplexZ2("hypercube(" + std::to_string(d) + ")", std::move(cells), true);
}

ComplexZ2 product_with_simplex(const ComplexZ2& x, int n) {
  if (n < 2) throw InvalidArgument("product_with_simplex requires n >= 2");
  const ComplexZ2 delta = simplex_skeleton(n, n - 1);
  const int top = x.top_dim() + delta.top_dim();
  if (x.top_dim() < 0) return ComplexZ2(x.name() + "x" + delta.name(), {}, x.reduced());
  // pos[dim a][(a, dim b, b)] = index within dimension (dim a + dim b).
  std::vector<std::map<std::array<std::size_t, 3>, std::size_t>> pos(
      static_cast<std::size_t>(x.top_dim() + 1));
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    for (int i = std::max(0, k - delta.top_dim()); i <= std::min(k, x.top_dim()); ++i) {
      const int j = k - i;
      for (std::size_t a = 0; a < x.f(i); ++a)
        for (std::size_t b = 0; b < delta.f(j); ++b) {
          Cell c;
          c.label = x.cell(i, a).label + "|" + delta.cell(j, b).label;
          std::vector<std::size_t> bd;
          if (i > 0)
            for (std::size_t aa : x.cell(i, a).boundary)
              bd.push_back(pos[static_cast<std::size_t>(i - 1)].at({aa, static_cast<std::size_t>(j), b}));
          if (j > 0)
            for (std::size_t bb : delta.cell(j, b).boundary)
              bd.push_back(pos[static_cast<std::size_t>(i)].at({a, static_cast<std::size_t>(j - 1), bb}));
          // (i-1, a', b) and (i, a, b') live in the same target dimension.
          std::sort(bd.begin(), bd.end());
          std::vector<std::size_t> odd;
          for (std::size_t t = 0; t < bd.size();) {
            std::size_t u = t;
            while (u < bd.size() && bd[u] == bd[t]) ++u;
            if ((u - t) % 2 == 1) odd.push_back(bd[t]);
            t = u;
          }
          c.boundary = std::move(odd);
          pos[static_cast<std::size_t>(i)][{a, static_cast<std::size_t>(j), b}] = cells[static_cast<std::size_t>(k)].size();
          cells[static_cast<std::size_t>(k)].push_back(std::move(c));
        }
    }
  }
  return ComplexZ2(x.name() + "x" + delta.name(), std::move(cells), true);
}

ComplexZ2 alexander_dual(const ComplexZ2& x, int n) {
  if (n < 1 || n > 22) throw InvalidArgument("alexander_dual requires 1 <= n <= 22");
  if (x.top_dim() >= 0 && !x.is_simplicial()) throw InvalidArgument("alexander_dual requires a simplicial complex");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint8_t> in_x(std::size_t{1} << n, 0);
  in_x[0] = (x.reduced() || x.top_dim() >= 0) ? 1 : 0;
  for (int k = 0; k <= x.top_dim(); ++k)
    for (std::size_t i = 0; i < x.f(k); ++i) {
      std::uint32_t m = 0;
      for (int v : x.simplex(k, i)) {
        if (v >= n) throw InvalidArgument("alexander_dual: vertex label outside [n]");
        m |= std::uint32_t{1} << v;
      }
      in_x[m] = 1;
    }
  std::vector<std::vector<int>> simplices;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (in_x[full ^ s]) continue;
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U) v.push_back(i);
    simplices.push_back(std::move(v));
  }
  const bool reduced = in_x[full] == 0;
  const std::string suffix = "^dual";
  std::string name = x.name();
  if (name.size() > suffix.size() && name.ends_with(suffix))
    name.resize(name.size() - suffix.size());
  else
    name += suffix;
  return simplicial_closure(name, simplices, reduced);
}

RelativePair duality_pair(const ComplexZ2& x, int n) {
  return RelativePair::from_subcomplex(simplex_skeleton(n, n - 1), alexander_dual(x, n));
}

BitVec duality_map(const ComplexZ2& x, const RelativePair& pair, int n, int k, const BitVec& c) {
  if (c.size() != x.f(k)) throw InvalidArgument("chain length differs from f_k");
  const int j = n - k - 2;
  const auto& free = pair.free_cells(j);
  BitVec out(free.size());
  const ComplexZ2& full = pair.ambient();
  for (std::size_t i : c.support()) {
    std::vector<int> sigma;
    if (k >= 0) sigma = x.simplex(k, i);
    std::vector<int> comp;
    for (int v = 0; v < n; ++v)
      if (!std::binary_search(sigma.begin(), sigma.end(), v)) comp.push_back(v);
    const std::size_t idx = j < 0 ? 0 : full.find(j, simplex_label(comp)).value();
    const auto it = std::lower_bound(free.begin(), free.end(), idx);
    if (it == free.end() || *it != idx) throw InvariantBreach("complement of a cell of X lies in the dual");
    out.set(static_cast<std::size_t>(it - free.begin()));
  }
  return out;
}

ComplexZ2 random_Ynp(int n, double p, std::uint64_t seed) {
  if (n < 1 || n > 200) throw InvalidArgument("random_Ynp requires 1 <= n <= 200");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("random_Ynp requires 0 <= p <= 1");
  Rng rng(seed);
  std::vector<std::vector<Cell>> cells(3);
  for (int v = 0; v < n; ++v) cells[0].push_back({std::to_string(v), {}});
  std::vector<std::vector<std::size_t>> edge(static_cast<std::size_t>(n),
                                             std::vector<std::size_t>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = cells[1].size();
      cells[1].push_back({simplex_label({a, b}), {static_cast<std::size_t>(a), static_cast<std::size_t>(b)}});
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!bernoulli(rng, p)) continue;
        const auto A = static_cast<std::size_t>(a), B = static_cast<std::size_t>(b), C = static_cast<std::size_t>(c);
        cells[2].push_back({simplex_label({a, b, c}), {edge[A][B], edge[A][C], edge[B][C]}});
      }
  return ComplexZ2("Y(" + std::to_string(n) + ")", std::move(cells), true);
}

ComplexZ2 random_subcomplex(int n, double p, int max_size, std::uint64_t seed) {
  if (n < 1 || n > 20) throw InvalidArgument("random_subcomplex requires 1 <= n <= 20");
  Rng rng(seed);
  std::vector<std::vector<int>> gens;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    if (std::popcount(s) > max_size) continue;
    if (!bernoulli(rng, p)) continue;
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U) v.push_back(i);
    gens.push_back(std::move(v));
  }
  return simplicial_closure("random(" + std::to_string(n) + ")", gens, true);
}

}  // namespace hdx
