#include "hdx/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hdx/error.hpp"
#include "hdx/parallel.hpp"

namespace hdx {

namespace {

void check_degree(const RelativePair& x, int k) {
  if (k < -1 || k > x.top_dim())
    throw InvalidArgument("degree k=" + std::to_string(k) + " outside [-1, " + std::to_string(x.top_dim()) + "]");
}

// Minimum-weight member of the coset with syndrome s: the lexicographically
// smallest one when the member scan is affordable, else the table leader.
BitVec coset_witness(const QuotientSpace& q, const CosetLeaderTable& table, std::uint64_t s, std::uint64_t budget,
                     unsigned threads, std::uint64_t& visited) {
  const std::size_t r = q.rank();
  const bool scan = std::ldexp(1.0, static_cast<int>(r)) <= static_cast<double>(budget) &&
                    (r <= 20 || r <= q.quotient_dim());
  BitVec w;
  if (scan) {
    const CosetMinimum m = coset_min_weight(q.coset(q.representative(s)), budget, threads);
    visited += m.visited;
    w = m.witness;
  } else {
    w = table.leader(s);
  }
  if (w.weight() != table.weight(s) || q.syndrome(w) != s)
    throw InvariantBreach("coset witness disagrees with the coset leader table");
  return w;
}

struct Candidate {
  std::uint64_t num = 0;
  std::uint64_t den = 0;
  std::uint64_t syndrome = 0;
  bool valid = false;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num) * b.den;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num) * a.den;
  if (lhs != rhs) return lhs < rhs;
  if (a.num != b.num) return a.num < b.num;
  return a.syndrome < b.syndrome;
}

}  // namespace

const char* mode_name(Mode m) noexcept { return m == Mode::kCo ? "co" : "ho"; }

DegreeData degree_data(const RelativePair& x, int k, Mode mode) {
  check_degree(x, k);
  DegreeData d;
  d.k = k;
  d.mode = mode;
  d.dim = x.f(k);
  if (mode == Mode::kCo) {
    d.target = x.f(k + 1);
    d.quotient = QuotientSpace(d.dim, x.coboundary_matrix(k - 1));
    d.image = x.coboundary_matrix(k).row_list();
  } else {
    d.target = x.f(k - 1);
    d.quotient = QuotientSpace(d.dim, x.boundary_matrix(k + 1));
    d.image = x.boundary_matrix(k).row_list();
  }
  if (d.image.size() != d.dim) d.image.assign(d.dim, BitVec(d.target));
  return d;
}

BitVec apply_operator(const DegreeData& d, const BitVec& v) {
  if (v.size() != d.dim) throw InvalidArgument("vector length differs from f_k");
  BitVec out(d.target);
  for (std::size_t i : v.support()) out ^= d.image[i];
  return out;
}

NormResult cosystolic_norm(const RelativePair& x, int k, const BitVec& phi, std::uint64_t budget, unsigned threads) {
  const DegreeData d = degree_data(x, k, Mode::kCo);
  if (phi.size() != d.dim) throw InvalidArgument("cochain length differs from f_k");
  const CosetMinimum m = coset_min_weight_auto(d.quotient, phi, budget, threads);
  return {m.weight, m.witness, m.visited};
}

NormResult systolic_norm(const RelativePair& x, int k, const BitVec& c, std::uint64_t budget, unsigned threads) {
  const DegreeData d = degree_data(x, k, Mode::kHo);
  if (c.size() != d.dim) throw InvalidArgument("chain length differs from f_k");
  const CosetMinimum m = coset_min_weight_auto(d.quotient, c, budget, threads);
  return {m.weight, m.witness, m.visited};
}

ExpansionResult cheeger(const RelativePair& x, int k, Mode mode, std::uint64_t budget, unsigned threads) {
  const DegreeData d = degree_data(x, k, mode);
  const std::size_t q = d.quotient.quotient_dim();
  if (q == 0)
    throw DegenerateSpace(std::string(mode == Mode::kCo ? "C^k = B^k" : "C_k = B_k") + " at k=" + std::to_string(k));
  if (q > CosetLeaderTable::kMaxQuotientDim)
    throw BudgetExceeded("cheeger: coset sweep", std::ldexp(1.0, static_cast<int>(q)), budget);
  // Table construction and the numerator walk each touch 2^q cosets.
  check_budget(std::ldexp(1.0, static_cast<int>(q) + 1), budget, "cheeger: coset sweep");
  const CosetLeaderTable table(d.quotient, budget);

  const auto& free = d.quotient.free_coords();
  const std::size_t words = BitVec::word_count(d.target);
  std::vector<BitVec::Word> flat(q * std::max<std::size_t>(words, 1), 0);
  for (std::size_t j = 0; j < q; ++j) {
    auto w = d.image[free[j]].words();
    std::copy(w.begin(), w.end(), flat.begin() + static_cast<std::ptrdiff_t>(j * words));
  }
  const std::uint64_t total = std::uint64_t{1} << q;
  threads = resolve_threads(threads);
  std::vector<Candidate> best(threads);
  run_partitioned(total, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<BitVec::Word> acc(words, 0);
    const std::uint64_t g0 = lo ^ (lo >> 1);
    for (std::size_t b = 0; b < q; ++b)
      if ((g0 >> b) & 1U) {
        const std::size_t j = q - 1 - b;
        for (std::size_t w = 0; w < words; ++w) acc[w] ^= flat[j * words + w];
      }
    Candidate& mine = best[t];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t s = i ^ (i >> 1);
      if (s != 0) {
        std::uint64_t num = 0;
        for (std::size_t w = 0; w < words; ++w) num += static_cast<std::uint64_t>(std::popcount(acc[w]));
        const Candidate c{num, table.weight(s), s, true};
        if (better(c, mine)) mine = c;
      }
      if (i + 1 < hi) {
        const std::size_t j = q - 1 - static_cast<std::size_t>(std::countr_zero(i + 1));
        for (std::size_t w = 0; w < words; ++w) acc[w] ^= flat[j * words + w];
      }
    }
  });
  Candidate win;
  for (const auto& c : best)
    if (better(c, win)) win = c;

  ExpansionResult out;
  out.k = k;
  out.mode = mode;
  out.numerator_norm = win.num;
  out.denominator_norm = win.den;
  out.value = Rational(static_cast<std::int64_t>(win.num), static_cast<std::int64_t>(win.den));
  out.witness_syndrome = win.syndrome;
  out.quotient_dim = q;
  out.budget_used = 2 * total;
  out.witness = coset_witness(d.quotient, table, win.syndrome, budget, 1, out.budget_used);
  if (apply_operator(d, out.witness).weight() != win.num)
    throw InvariantBreach("cheeger witness numerator mismatch");
  out.f_vector = x.f_vector();
  return out;
}

MaxCosystole max_cosystole(const RelativePair& x, int k, std::uint64_t budget) {
  const DegreeData d = degree_data(x, k, Mode::kCo);
  MaxCosystole out;
  if (d.quotient.quotient_dim() == 0) {
    out.witness = BitVec(d.dim);
    return out;
  }
  const CosetLeaderTable table(d.quotient, budget);
  out.lambda = table.max_weight();
  out.budget_used = table.size();
  for (std::uint64_t s = 0; s < table.size(); ++s)
    if (table.weight(s) == out.lambda) {
      out.witness = coset_witness(d.quotient, table, s, budget, 1, out.budget_used);
      break;
    }
  return out;
}

std::size_t cohomology_dim(const RelativePair& x, int k) {
  check_degree(x, k);
  const std::size_t r_out = rank(x.coboundary_matrix(k));
  const std::size_t r_in = rank(x.coboundary_matrix(k - 1));
  return x.f(k) - r_out - r_in;
}

// ---------------------------------------------------------------------------

BlamBound bound_blam(std::uint64_t f_k, std::uint64_t f_km1) {
  if (f_k == 0) throw InvalidArgument("bound_blam requires f_k > 0");
  BlamBound b;
  const Enclosure root = Enclosure::sqrt(BigRational(f_km1) / BigRational(f_k));
  const Enclosure half_f(BigRational(f_k) / 2);
  b.lower = (Enclosure(BigRational(1)) - Enclosure(BigRational(20)) * root) * half_f;
  b.upper = Rational(static_cast<std::int64_t>(f_k), 2);
  b.vacuous = b.lower.hi() <= 0;
  return b;
}

UphkBound bound_uphk(std::uint64_t D, int k) {
  if (D == 0 || k < 0) throw InvalidArgument("bound_uphk requires D > 0 and k >= 0");
  UphkBound b;
  const BigRational kp1(k + 1);
  const Enclosure root = Enclosure::sqrt(kp1 / BigRational(D));
  const Enclosure factor = Enclosure(BigRational(1)) + Enclosure(BigRational(50)) * root;
  b.value = factor * Enclosure(BigRational(D) / BigRational(k + 2));
  b.hypothesis_holds = BigRational(D) >= BigRational(1600) * kp1;
  return b;
}

Rational bound_prod(const std::optional<Rational>& h, int n, int k) {
  if (n < 2 || k < 0) throw InvalidArgument("bound_prod requires n >= 2 and k >= 0");
  const Rational inner = std::max(Rational(1), Rational(n, k + 2));
  if (!h) return inner;
  return std::min(*h, inner);
}

ProductBoundReport verify_product_bound(const ComplexZ2& x, int n, int k, std::uint64_t budget) {
  ProductBoundReport r;
  try {
    r.h_x = cheeger_co(RelativePair(x), k, budget).value;
  } catch (const DegenerateSpace&) {
    r.h_x.reset();
  }
  const ComplexZ2 y = product_with_simplex(x, n);
  r.h_product = cheeger_co(RelativePair(y), k, budget).value;
  r.bound = bound_prod(r.h_x, n, k);
  r.holds = r.h_product >= r.bound;
  return r;
}

}  // namespace hdx
