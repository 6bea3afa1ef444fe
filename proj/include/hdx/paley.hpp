#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

namespace hdx {

bool is_odd_prime(std::int64_t p) noexcept;

/// Legendre symbol (x/p) by Euler's criterion. Throws InvalidArgument unless
/// p is an odd prime.
int legendre(std::int64_t x, std::int64_t p);

/// Quadratic character of F_p.
class CharTable {
 public:
  explicit CharTable(int p);
  int p() const noexcept { return p_; }
  int operator()(std::int64_t x) const noexcept { return chi_[static_cast<std::size_t>(((x % p_) + p_) % p_)]; }
  const std::vector<int>& values() const noexcept { return chi_; }
  std::vector<int> residues() const;

 private:
  int p_;
  std::vector<int> chi_;
};

struct PaleyCochain {
  ComplexZ2 complex;  ///< simplex_skeleton(p, k+1)
  int p = 0;
  int k = 0;
  BitVec phi;
};

/// phi_k(sigma) = 1 iff the vertex sum of sigma is a nonzero square mod p.
PaleyCochain paley_cochain(int p, int k);
/// (p-1)/(2p) * C(p, k+1).
Rational paley_norm_formula(int p, int k);

/// Subsets R_0..R_k of F_p^k as indicator vectors of length p^k; a tuple
/// (y_1..y_k) has index sum y_i p^(k-i).
std::int64_t chung_sum(const CharTable& chi, int k, const std::vector<BitVec>& r);
/// True if |sum| is within 2^((k-1)2^-(k-1)) p^(1-2^-k) (prod |R_i|)^(1/(k+1)).
/// Exact integer comparison at k = 1; long double with 1e-12 slack above.
bool chung_within_bound(int p, int k, std::int64_t sum, const std::vector<std::uint64_t>& sizes);

struct ChungTrial {
  std::int64_t sum = 0;
  std::vector<std::uint64_t> sizes;
  double bound = 0;
  bool violated = false;
};

struct ChungReport {
  int p = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<ChungTrial> trials;
  std::size_t violations = 0;
};

/// Random R_i with a per-trial density drawn uniformly in [0,1).
ChungReport chung_sum_check(int p, int k, int trials, std::uint64_t seed);

struct PaleyExperiment {
  int p = 0;
  int k = 0;
  std::uint64_t norm = 0;
  std::uint64_t csy = 0;
  BitVec witness;
  Enclosure bound;  ///< (p-1)/(2p) C(p,k+1) - 2^(k+1)/(k+1)! p^(k+1-2^-k)
  bool vacuous = false;
  Rational ratio;  ///< csy / norm
  std::uint64_t budget_used = 0;
};

PaleyExperiment paley_csy_experiment(int p, int k, std::uint64_t budget, unsigned threads = 1);

std::string paley_csv_header();
std::string paley_csv_row(const PaleyExperiment& e);

}  // namespace hdx
