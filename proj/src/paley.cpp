#include "hdx/paley.hpp"

#include <cmath>
#include <sstream>

#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "hdx/random.hpp"

namespace hdx {

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_odd_prime(std::int64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int legendre(std::int64_t x, std::int64_t p) {
  require_odd_prime(p);
  const std::int64_t r = pow_mod(x, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

CharTable::CharTable(int p) : p_(p) {
  require_odd_prime(p);
  chi_.assign(static_cast<std::size_t>(p), -1);
  chi_[0] = 0;
  for (std::int64_t y = 1; y < p; ++y) chi_[static_cast<std::size_t>(y * y % p)] = 1;
}

std::vector<int> CharTable::residues() const {
  std::vector<int> out;
  for (int x = 1; x < p_; ++x)
    if (chi_[static_cast<std::size_t>(x)] == 1) out.push_back(x);
  return out;
}

PaleyCochain paley_cochain(int p, int k) {
  require_odd_prime(p);
  if (k < 1 || k + 1 >= p) throw InvalidArgument("paley_cochain requires 1 <= k and k+1 < p");
  if (binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k + 2)) > 2000000)
    throw InvalidArgument("paley_cochain: complex too large");
  const CharTable chi(p);
  PaleyCochain out;
  out.p = p;
  out.k = k;
  out.complex = simplex_skeleton(p, k + 1);
  out.phi = BitVec(out.complex.f(k));
  for (std::size_t i = 0; i < out.complex.f(k); ++i) {
    std::int64_t sum = 0;
    for (int v : out.complex.simplex(k, i)) sum += v;
    if (chi(sum) == 1) out.phi.set(i);
  }
  return out;
}

Rational paley_norm_formula(int p, int k) {
  require_odd_prime(p);
  const auto c = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k + 1)));
  return Rational(p - 1, 2 * p) * Rational(c);
}

std::int64_t chung_sum(const CharTable& chi, int k, const std::vector<BitVec>& r) {
  const int p = chi.p();
  const std::uint64_t slice = ipow(static_cast<std::uint64_t>(p), k);
  if (r.size() != static_cast<std::size_t>(k + 1)) throw InvalidArgument("chung_sum needs k+1 sets");
  for (const auto& s : r)
    if (s.size() != slice) throw InvalidArgument("chung_sum: set has the wrong length");
  const std::uint64_t total = slice * static_cast<std::uint64_t>(p);
  std::vector<int> x(static_cast<std::size_t>(k + 1), 0);
  std::int64_t sum = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (int i = k; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
    bool inside = true;
    for (int i = 0; i <= k && inside; ++i) {
      std::uint64_t proj = 0;
      for (int j = 0; j <= k; ++j)
        if (j != i) proj = proj * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(x[static_cast<std::size_t>(j)]);
      inside = r[static_cast<std::size_t>(i)].test(proj);
    }
    if (!inside) continue;
    std::int64_t s = 0;
    for (int v : x) s += v;
    sum += chi(s);
  }
  return sum;
}

namespace {

long double chung_bound(int p, int k, const std::vector<std::uint64_t>& sizes) {
  long double prod_log = 0;
  for (auto s : sizes) {
    if (s == 0) return 0;
    prod_log += std::log(static_cast<long double>(s));
  }
  const long double e = std::ldexp(1.0L, -k);
  return std::pow(2.0L, (k - 1) * std::ldexp(1.0L, -(k - 1))) * std::pow(static_cast<long double>(p), 1 - e) *
         std::exp(prod_log / (k + 1));
}

}  // namespace

bool chung_within_bound(int p, int k, std::int64_t sum, const std::vector<std::uint64_t>& sizes) {
  if (k == 1) {
    // |sum| <= sqrt(p |R_0| |R_1|)
    const auto lhs = static_cast<unsigned __int128>(sum < 0 ? -sum : sum) * static_cast<unsigned __int128>(sum < 0 ? -sum : sum);
    const auto rhs = static_cast<unsigned __int128>(p) * sizes.at(0) * sizes.at(1);
    return lhs <= rhs;
  }
  const long double b = chung_bound(p, k, sizes);
  return std::fabs(static_cast<long double>(sum)) <= b * (1 + 1e-12L);
}

ChungReport chung_sum_check(int p, int k, int trials, std::uint64_t seed) {
  require_odd_prime(p);
  if (k < 1 || k > 3) throw InvalidArgument("chung_sum_check supports 1 <= k <= 3");
  if (trials < 0) throw InvalidArgument("chung_sum_check: negative trial count");
  const CharTable chi(p);
  const std::uint64_t slice = ipow(static_cast<std::uint64_t>(p), k);
  ChungReport rep;
  rep.p = p;
  rep.k = k;
  rep.seed = seed;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    const double density = uniform01(rng);
    std::vector<BitVec> r;
    ChungTrial tr;
    for (int i = 0; i <= k; ++i) {
      BitVec s(slice);
      for (std::uint64_t j = 0; j < slice; ++j)
        if (bernoulli(rng, density)) s.set(j);
      tr.sizes.push_back(s.weight());
      r.push_back(std::move(s));
    }
    tr.sum = chung_sum(chi, k, r);
    tr.bound = static_cast<double>(chung_bound(p, k, tr.sizes));
    tr.violated = !chung_within_bound(p, k, tr.sum, tr.sizes);
    if (tr.violated) ++rep.violations;
    rep.trials.push_back(std::move(tr));
  }
  return rep;
}

PaleyExperiment paley_csy_experiment(int p, int k, std::uint64_t budget, unsigned threads) {
  const PaleyCochain pc = paley_cochain(p, k);
  PaleyExperiment e;
  e.p = p;
  e.k = k;
  e.norm = pc.phi.weight();
  const NormResult n = cosystolic_norm(RelativePair(pc.complex), k, pc.phi, budget, threads);
  e.csy = n.value;
  e.witness = n.form;
  e.budget_used = n.visited;
  e.ratio = e.norm ? Rational(static_cast<std::int64_t>(e.csy), static_cast<std::int64_t>(e.norm)) : Rational(0);

  const BigRational bp(p);
  std::int64_t fact = 1;
  for (int j = 2; j <= k + 1; ++j) fact *= j;
  BigRational pk1 = 1;
  for (int j = 0; j <= k; ++j) pk1 *= bp;
  const auto c = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k + 1)));
  const Enclosure main(BigRational(p - 1) / (2 * bp) * BigRational(c));
  const Enclosure err =
      Enclosure(BigRational(std::int64_t{1} << (k + 1)) / BigRational(fact) * pk1) / Enclosure::root(bp, 1U << k);
  e.bound = main - err;
  e.vacuous = e.bound.hi() <= 0;
  return e;
}

std::string paley_csv_header() { return "p,k,norm,exact_csy,bound_lo,bound_hi,vacuous,ratio"; }

std::string paley_csv_row(const PaleyExperiment& e) {
  std::ostringstream os;
  os.precision(12);
  os << e.p << ',' << e.k << ',' << e.norm << ',' << e.csy << ',' << e.bound.lo_double() << ','
     << e.bound.hi_double() << ',' << (e.vacuous ? "true" : "false") << ',' << e.ratio.str();
  return os.str();
}

}  // namespace hdx
