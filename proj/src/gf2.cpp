#include "hdx/gf2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hdx/error.hpp"
#include "hdx/parallel.hpp"

namespace hdx {

namespace {

constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();

double pow2(std::size_t e) { return std::ldexp(1.0, static_cast<int>(e)); }

}  // namespace

GF2Matrix::GF2Matrix(std::size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw InvalidArgument("matrix row length differs from column count");
}

GF2Matrix GF2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVec> out;
  std::size_t cols = 0;
  for (auto s : rows) {
    out.push_back(BitVec::from_string(s));
    cols = s.size();
  }
  return GF2Matrix(cols, std::move(out));
}

void GF2Matrix::append_row(BitVec row) {
  if (row.size() != cols_) throw InvalidArgument("matrix row length differs from column count");
  rows_.push_back(std::move(row));
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  return t;
}

BitVec GF2Matrix::combine_rows(const BitVec& combo) const {
  if (combo.size() != rows_.size()) throw InvalidArgument("row combination length mismatch");
  BitVec out(cols_);
  for (std::size_t r : combo.support()) out ^= rows_[r];
  return out;
}

BitVec GF2Matrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector length mismatch");
  BitVec out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].dot(v)) out.set(r);
  return out;
}

RowReduction row_reduce(const GF2Matrix& m) {
  std::vector<BitVec> rows = m.row_list();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].test(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(c)) rows[r] ^= rows[rank];
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return {GF2Matrix(m.cols(), std::move(rows)), std::move(pivots), rank};
}

std::size_t rank(const GF2Matrix& m) { return row_reduce(m).rank; }

bool in_row_space(const GF2Matrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw InvalidArgument("in_row_space: vector length differs from column count");
  const RowReduction rr = row_reduce(m);
  BitVec w = v;
  for (std::size_t i = 0; i < rr.rank; ++i)
    if (w.test(rr.pivots[i])) w ^= rr.reduced.row(i);
  return w.none();
}

void CosetProblem::validate() const {
  if (rep.size() != ambient_dim) throw InvalidArgument("coset representative length differs from ambient dimension");
  if (basis.rows() > 0 && basis.cols() != ambient_dim)
    throw InvalidArgument("coset basis width differs from ambient dimension");
  if (rank(basis) != basis.rows()) throw InvalidArgument("coset basis rows are linearly dependent");
}

CosetMinimum coset_min_weight(const CosetProblem& p, std::uint64_t budget, unsigned threads) {
  p.validate();
  const std::size_t r = p.basis.rows();
  check_budget(pow2(r), budget, "coset_min_weight: 2^rank members");
  const std::size_t words = BitVec::word_count(p.ambient_dim);
  if (r == 0 || words == 0) return {p.rep.weight(), p.rep, 1};

  std::vector<BitVec::Word> flat(r * words);
  for (std::size_t j = 0; j < r; ++j) {
    auto w = p.basis.row(j).words();
    std::copy(w.begin(), w.end(), flat.begin() + static_cast<std::ptrdiff_t>(j * words));
  }
  const std::uint64_t total = std::uint64_t{1} << r;
  threads = resolve_threads(threads);

  struct Best {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::vector<BitVec::Word> bits;
  };
  std::vector<Best> best(threads);

  run_partitioned(total, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<BitVec::Word> cur(p.rep.words().begin(), p.rep.words().end());
    const std::uint64_t g = lo ^ (lo >> 1);
    for (std::size_t j = 0; j < r; ++j)
      if ((g >> j) & 1U)
        for (std::size_t w = 0; w < words; ++w) cur[w] ^= flat[j * words + w];
    Best& b = best[t];
    for (std::uint64_t i = lo; i < hi; ++i) {
      std::size_t wt = 0;
      for (std::size_t w = 0; w < words; ++w) wt += static_cast<std::size_t>(std::popcount(cur[w]));
      if (wt < b.weight || (wt == b.weight && lex_compare_words(cur, b.bits) < 0)) {
        b.weight = wt;
        b.bits = cur;
      }
      if (i + 1 < hi) {
        const auto j = static_cast<std::size_t>(std::countr_zero(i + 1));
        const BitVec::Word* row = &flat[j * words];
        for (std::size_t w = 0; w < words; ++w) cur[w] ^= row[w];
      }
    }
  });

  const Best* winner = nullptr;
  for (const auto& b : best) {
    if (b.bits.empty()) continue;
    if (winner == nullptr || b.weight < winner->weight ||
        (b.weight == winner->weight && lex_compare_words(b.bits, winner->bits) < 0))
      winner = &b;
  }
  CosetMinimum out;
  out.weight = winner->weight;
  out.witness = BitVec(p.ambient_dim);
  std::copy(winner->bits.begin(), winner->bits.end(), out.witness.words().begin());
  out.visited = total;
  return out;
}

// ---------------------------------------------------------------------------

CosetRepStream::CosetRepStream(std::size_t ambient_dim, const GF2Matrix& basis) : ambient_(ambient_dim) {
  if (basis.rows() > 0 && basis.cols() != ambient_dim)
    throw InvalidArgument("coset basis width differs from ambient dimension");
  const RowReduction rr = row_reduce(basis);
  if (rr.rank != basis.rows()) throw InvalidArgument("coset basis rows are linearly dependent");
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (next_pivot < rr.pivots.size() && rr.pivots[next_pivot] == c)
      ++next_pivot;
    else
      free_.push_back(c);
  }
  if (free_.size() > 63) throw InvalidArgument("coset stream: quotient dimension above 63");
}

std::uint64_t CosetRepStream::count() const noexcept { return std::uint64_t{1} << free_.size(); }

bool CosetRepStream::next(BitVec& out) {
  if (done_) return false;
  const std::size_t q = free_.size();
  out = BitVec(ambient_);
  for (std::size_t j = 0; j < q; ++j)
    if ((index_ >> (q - 1 - j)) & 1U) out.set(free_[j]);
  ++index_;
  if (index_ == count()) done_ = true;
  return true;
}

// ---------------------------------------------------------------------------

QuotientSpace::QuotientSpace(std::size_t ambient_dim, const GF2Matrix& spanning_rows)
    : ambient_(ambient_dim), pivot_row_(ambient_dim, kNpos) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_dim)
    throw InvalidArgument("quotient: spanning rows have the wrong width");
  rref_ = row_reduce(spanning_rows);
  if (rref_.rank == 0) rref_.reduced = GF2Matrix(0, ambient_dim);
  for (std::size_t i = 0; i < rref_.rank; ++i) pivot_row_[rref_.pivots[i]] = i;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (pivot_row_[c] == kNpos) free_.push_back(c);
}

BitVec QuotientSpace::reduce(const BitVec& v) const {
  if (v.size() != ambient_) throw InvalidArgument("quotient: vector length mismatch");
  BitVec w = v;
  for (std::size_t i = 0; i < rref_.rank; ++i)
    if (w.test(rref_.pivots[i])) w ^= rref_.reduced.row(i);
  return w;
}

std::uint64_t QuotientSpace::syndrome(const BitVec& v) const {
  const std::size_t q = free_.size();
  if (q > 64) throw InvalidArgument("quotient dimension above 64 has no syndrome encoding");
  const BitVec w = reduce(v);
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < q; ++j)
    if (w.test(free_[j])) s |= std::uint64_t{1} << (q - 1 - j);
  return s;
}

BitVec QuotientSpace::representative(std::uint64_t syndrome) const {
  const std::size_t q = free_.size();
  BitVec out(ambient_);
  for (std::size_t j = 0; j < q; ++j)
    if ((syndrome >> (q - 1 - j)) & 1U) out.set(free_[j]);
  return out;
}

std::vector<std::uint64_t> QuotientSpace::unit_syndromes() const {
  std::vector<std::uint64_t> out(ambient_);
  for (std::size_t c = 0; c < ambient_; ++c) {
    BitVec e(ambient_);
    e.set(c);
    out[c] = syndrome(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

CosetLeaderTable::CosetLeaderTable(const QuotientSpace& space, std::uint64_t budget)
    : space_(&space), q_(static_cast<unsigned>(space.quotient_dim())) {
  if (q_ > kMaxQuotientDim)
    throw BudgetExceeded("coset leader table: quotient dimension above 30", pow2(q_), budget);
  check_budget(pow2(q_), budget, "coset leader table: 2^q cosets");
  gens_ = space.unit_syndromes();
  std::vector<std::uint64_t> distinct;
  for (auto g : gens_)
    if (g != 0) distinct.push_back(g);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const std::uint64_t n = size();
  constexpr std::uint8_t kUnset = 0xFF;
  dist_.assign(n, kUnset);
  dist_[0] = 0;
  std::uint64_t reached = 1;
  for (unsigned level = 0; reached < n; ++level) {
    const auto next = static_cast<std::uint8_t>(level + 1);
    std::uint64_t added = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
      if (dist_[s] != level) continue;
      for (auto g : distinct) {
        const std::uint64_t t = s ^ g;
        if (dist_[t] == kUnset) {
          dist_[t] = next;
          ++added;
        }
      }
    }
    if (added == 0) throw InvariantBreach("coset leader table: unit vectors do not span the quotient");
    reached += added;
    max_weight_ = next;
  }
}

BitVec CosetLeaderTable::leader(std::uint64_t syndrome) const {
  BitVec out(space_->ambient_dim());
  unsigned w = dist_[syndrome];
  while (w > 0) {
    bool stepped = false;
    for (std::size_t c = 0; c < gens_.size(); ++c) {
      const std::uint64_t t = syndrome ^ gens_[c];
      if (gens_[c] != 0 && dist_[t] + 1U == w) {
        out.set(c);
        syndrome = t;
        --w;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InvariantBreach("coset leader table: broken parent chain");
  }
  return out;
}

CosetMinimum coset_min_weight_auto(const QuotientSpace& space, const BitVec& v, std::uint64_t budget,
                                   unsigned threads) {
  const std::size_t r = space.rank();
  const std::size_t q = space.quotient_dim();
  const bool scan_fits = pow2(r) <= static_cast<double>(budget);
  const bool table_fits = q <= CosetLeaderTable::kMaxQuotientDim && pow2(q) <= static_cast<double>(budget);
  if (scan_fits && (r <= 20 || r <= q || !table_fits)) return coset_min_weight(space.coset(v), budget, threads);
  if (!table_fits)
    throw BudgetExceeded("cosystolic norm: both 2^rank and 2^q exceed the budget", pow2(std::min(r, q)), budget);
  const CosetLeaderTable table(space, budget);
  const std::uint64_t s = space.syndrome(v);
  CosetMinimum out;
  out.weight = table.weight(s);
  out.witness = table.leader(s);
  out.visited = table.size();
  return out;
}

}  // namespace hdx
