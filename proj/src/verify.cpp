#include "hdx/verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "hdx/certificates.hpp"
#include "hdx/complex.hpp"
#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "hdx/nonabelian.hpp"
#include "hdx/paley.hpp"
#include "hdx/poset.hpp"
#include "hdx/pseudomanifold.hpp"
#include "hdx/random.hpp"

namespace hdx {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass && !c.informational) ++n;
  return n;
}

Json VerifyReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["failures"] = failures();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (c.informational) j["informational"] = true;
    if (!c.detail.is_null()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  out["checks"] = std::move(list);
  return out;
}

namespace {

struct Ctx {
  VerifyReport& report;
  const VerifyOptions& opts;

  std::size_t trials(std::size_t fallback) const { return opts.trials ? opts.trials : fallback; }

  void add(std::string name, bool pass, Json detail = {}, bool informational = false) {
    report.checks.push_back({std::move(name), pass, informational, std::move(detail)});
  }

  /// Runs `body`; a library error becomes a failed check named `name`.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      add(name, false, Json{{"error", e.kind()}, {"message", e.what()}});
    }
  }
};

Json rat(const Rational& r) { return r.str(); }

std::string tag(const std::string& base, std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string s = base;
  for (const auto& [k, v] : kv) s += " " + std::string(k) + "=" + std::to_string(v);
  return s;
}

// Witness re-validation: the witness is in the optimal coset, its norm is the
// denominator and its coboundary weight the numerator.
bool witness_ok(const RelativePair& x, const ExpansionResult& r) {
  const DegreeData d = degree_data(x, r.k, r.mode);
  if (r.witness.size() != d.dim) return false;
  if (r.witness.weight() != r.denominator_norm) return false;
  if (apply_operator(d, r.witness).weight() != r.numerator_norm) return false;
  if (d.quotient.contains(r.witness)) return false;
  return Rational(static_cast<std::int64_t>(r.numerator_norm), static_cast<std::int64_t>(r.denominator_norm)) ==
         r.value;
}

BitVec random_bits(Rng& rng, std::size_t n, double density) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (bernoulli(rng, density)) v.set(i);
  return v;
}

ComplexZ2 polygon(int m) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < m; ++i) {
    int a = i, b = (i + 1) % m;
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  return simplicial_closure("polygon" + std::to_string(m), edges);
}

ComplexZ2 cross_polytope_boundary(int d) {
  std::vector<std::vector<int>> facets;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < d; ++i) f.push_back(2 * i + ((mask >> i) & 1));
    facets.push_back(f);
  }
  return simplicial_closure("cross" + std::to_string(d), facets);
}

ComplexZ2 rp2_six() {
  return simplicial_closure("rp2", {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                    {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

ComplexZ2 two_triangle_disk() { return simplicial_closure("disk", {{0, 1, 2}, {1, 2, 3}}); }

// Suites -------------------------------------------------------------------

void suite_hypercube(Ctx& c) {
  const std::vector<std::pair<int, int>> cases = {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 2}, {4, 3}};
  for (auto [d, k] : cases) {
    const RelativePair q(hypercube(d));
    const std::string name = tag("hypercube co", {{"d", d}, {"k", k}});
    c.guard(name, [&] {
      const ExpansionResult r = cheeger_co(q, k, c.opts.budget, c.opts.threads);
      c.add(name, r.value == Rational(1) && witness_ok(q, r), {{"value", rat(r.value)}});
    });
    const std::string hname = tag("hypercube ho", {{"d", d}, {"k", k}});
    try {
      const ExpansionResult r = cheeger_ho(q, k, c.opts.budget, c.opts.threads);
      c.add(hname, r.value == Rational(1), {{"value", rat(r.value)}, {"witness_valid", witness_ok(q, r)}}, true);
    } catch (const Error& e) {
      c.add(hname, false, {{"error", e.kind()}}, true);
    }
  }
}

void suite_coxeter(Ctx& c) {
  for (int n = 4; n <= 6; ++n) {
    const std::string name = tag("coxeter A diameter", {{"n", n}});
    c.guard(name, [&] {
      const Rational v = cheeger_top_via_diameter(coxeter_An(n));
      c.add(name, v == Rational(4, n * (n - 1)), {{"value", rat(v)}, {"expected", rat(Rational(4, n * (n - 1)))}});
    });
  }
  c.guard("coxeter A exact n=4", [&] {
    const RelativePair x(coxeter_An(4));
    const ExpansionResult r = cheeger_co(x, 1, c.opts.budget, c.opts.threads);
    c.add("coxeter A exact n=4", r.value == Rational(1, 3) && witness_ok(x, r),
          {{"value", rat(r.value)}, {"budget_used", r.budget_used}});
  });
  for (int n = 2; n <= 3; ++n) {
    const std::string name = tag("coxeter B diameter", {{"n", n}});
    c.guard(name, [&] {
      const Rational v = cheeger_top_via_diameter(coxeter_Bn(n));
      c.add(name, v == Rational(2, n * n), {{"value", rat(v)}});
    });
  }
  for (int n = 4; n <= 5; ++n) {
    const std::string name = tag("phi_n norms", {{"n", n}});
    c.guard(name, [&] {
      const ComplexZ2 x = coxeter_An(n);
      const BitVec phi = phi_n_cochain(n, x);
      const std::size_t norm = phi.weight();
      const std::size_t dnorm = x.coboundary(n - 3, phi).weight();
      c.add(name, norm == binomial(n, 2) && dnorm == 2, {{"norm", norm}, {"d_norm", dnorm}});
      const std::size_t tj = codim1_cosystole(x, phi);
      c.add(tag("phi_n cosystole by T-join", {{"n", n}}), tj == norm, {{"csy", tj}});
    });
  }
  c.guard("phi_n cosystole by coset scan n=4", [&] {
    const ComplexZ2 x = coxeter_An(4);
    const BitVec phi = phi_n_cochain(4, x);
    const NormResult r = cosystolic_norm(RelativePair(x), 1, phi, c.opts.budget, c.opts.threads);
    c.add("phi_n cosystole by coset scan n=4", r.value == 6 && phi.weight() == 6,
          {{"csy", r.value}, {"visited", r.visited}});
  });
}

void suite_duality(Ctx& c) {
  const int n = 6;
  const std::size_t trials = c.trials(20);
  std::size_t agree = 0;
  Json rows = Json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(c.opts.seed, t);
    const ComplexZ2 x = random_subcomplex(n, 0.1 + 0.1 * static_cast<double>(t % 4), 5, s);
    const RelativePair pair = duality_pair(x, n);
    const RelativePair rx(x);
    Rng rng(s ^ 0xd0a1);
    bool ok = true;
    Json per = Json::array();
    for (int k = -1; k <= x.top_dim(); ++k) {
      const int j = n - k - 2;
      std::string lhs, rhs;
      try {
        lhs = cheeger_ho(rx, k, c.opts.budget, c.opts.threads).value.str();
      } catch (const DegenerateSpace&) {
        lhs = "degenerate";
      }
      try {
        rhs = cheeger_co(pair, j, c.opts.budget, c.opts.threads).value.str();
      } catch (const DegenerateSpace&) {
        rhs = "degenerate";
      }
      bool iso = true;
      if (x.f(k) > 0) {
        const BitVec ch = random_bits(rng, x.f(k), 0.5);
        const BitVec img = duality_map(x, pair, n, k, ch);
        iso = iso && img.weight() == ch.weight();
        const BitVec lhs_d = pair.coboundary_matrix(j).combine_rows(img);
        const BitVec rhs_d = duality_map(x, pair, n, k - 1, x.boundary(k, ch));
        iso = iso && lhs_d == rhs_d;
        iso = iso && systolic_norm(rx, k, ch, c.opts.budget).value == cosystolic_norm(pair, j, img, c.opts.budget).value;
      }
      ok = ok && lhs == rhs && iso;
      per.push_back({{"k", k}, {"h_k", lhs}, {"h^dual", rhs}, {"isometry", iso}});
    }
    if (ok) ++agree;
    rows.push_back({{"trial", t}, {"f_vector", x.f_vector()}, {"ok", ok}, {"degrees", per}});
  }
  c.add("alexander duality", agree == trials, {{"agree", agree}, {"trials", trials}, {"rows", rows}});
}

void suite_cycle_detection(Ctx& c) {
  c.guard("tripartite k=1 m=2", [&] {
    const TripartiteExample te = tripartite_example(1, 2);
    const PiercingResult p = cycle_detection_bound(te.complex, 1, te.phi, te.cycles);
    const NormResult n = cosystolic_norm(RelativePair(te.complex), 1, te.phi, c.opts.budget, c.opts.threads);
    c.add("tripartite k=1 m=2", p.tau == 4 && n.value == 4,
          {{"tau", p.tau}, {"csy", n.value}, {"cycles", te.cycles.size()}});
  });
  c.guard("paley triangle boundaries p=5", [&] {
    const PaleyCochain pc = paley_cochain(5, 1);
    std::vector<BitVec> cycles;
    for (std::size_t i = 0; i < pc.complex.f(2); ++i) {
      const BitVec b = pc.complex.boundary_matrix(2).row(i);
      if (pc.phi.dot(b)) cycles.push_back(b);
    }
    const PiercingResult p = cycle_detection_bound(pc.complex, 1, pc.phi, cycles);
    const NormResult n = cosystolic_norm(RelativePair(pc.complex), 1, pc.phi, c.opts.budget);
    c.add("paley triangle boundaries p=5", p.tau <= n.value, {{"tau", p.tau}, {"csy", n.value}});
  });
}

void suite_lattice(Ctx& c) {
  c.guard("fill identity A2(F2)", [&] {
    const Poset l = subspace_lattice(2, 3);
    const LatticeScheme ls(l, close_group(subspace_lattice_generators(2, 3), l.size()));
    const std::size_t pairs = ls.verify_fill();
    c.add("fill identity A2(F2)", pairs > 0, {{"pairs_checked", pairs}, {"group", ls.group_size()}});
  });
  c.guard("fill identity boolean n=4", [&] {
    const Poset l = boolean_lattice(4);
    const LatticeScheme ls(l, close_group(boolean_lattice_generators(4), l.size()));
    const std::size_t pairs = ls.verify_fill();
    c.add("fill identity boolean n=4", pairs > 0, {{"pairs_checked", pairs}, {"group", ls.group_size()}});
  });
  c.guard("lattice bound A2(F2)", [&] {
    const Poset l = subspace_lattice(2, 3);
    const LatticeBound b = lattice_bound(l, subspace_lattice_generators(2, 3));
    const ExpansionResult h = cheeger_co(RelativePair(order_complex(l.proper_part())), 0, c.opts.budget);
    c.add("lattice bound A2(F2)", b.formula == Rational(1, 2) && h.value >= Rational(1, 2) && h.value >= b.scheme_bound,
          {{"formula", rat(b.formula)}, {"scheme_bound", rat(b.scheme_bound)}, {"h0", rat(h.value)}});
  });
  c.guard("lattice bound boolean n=4", [&] {
    const Poset l = boolean_lattice(4);
    const LatticeBound b = lattice_bound(l, boolean_lattice_generators(4));
    const ExpansionResult h = cheeger_co(RelativePair(order_complex(l.proper_part())), 1, c.opts.budget,
                                         c.opts.threads);
    c.add("lattice bound boolean n=4", h.value >= b.scheme_bound && h.value >= b.formula,
          {{"formula", rat(b.formula)}, {"scheme_bound", rat(b.scheme_bound)}, {"h1", rat(h.value)}});
  });
}

void suite_pseudomanifold(Ctx& c) {
  std::vector<ComplexZ2> gallery;
  for (int m = 3; m <= 8; ++m) gallery.push_back(polygon(m));
  gallery.push_back(simplex_skeleton(4, 2));
  gallery.push_back(simplex_skeleton(5, 3));
  gallery.push_back(cross_polytope_boundary(3));
  gallery.push_back(cross_polytope_boundary(4));
  gallery.push_back(coxeter_An(4));
  gallery.push_back(coxeter_Bn(2));
  gallery.push_back(coxeter_An(5));
  gallery.push_back(coxeter_Bn(3));
  gallery.push_back(rp2_six());
  for (const ComplexZ2& x : gallery) {
    std::string fv;
    for (std::size_t f : x.f_vector()) fv += (fv.empty() ? "" : ",") + std::to_string(f);
    const std::string name = "gallery " + x.name() + " (" + fv + ")";
    const FlipGraph g = flip_graph(x);
    const int k = x.top_dim() - 1;
    const RelativePair rx(x);
    const bool vanishing = cohomology_dim(rx, k) == 0;
    if (!g.pseudomanifold() || !vanishing) {
      bool threw = false;
      try {
        (void)cheeger_top_via_diameter(x);
      } catch (const HypothesisFailed&) {
        threw = true;
      }
      c.add(name + " excluded by hypothesis", threw, {{"pseudomanifold", g.pseudomanifold()}, {"vanishing", vanishing}});
      continue;
    }
    const Rational diam = cheeger_top_via_diameter(x);
    try {
      const ExpansionResult r = cheeger_co(rx, k, c.opts.budget, c.opts.threads);
      c.add(name, r.value == diam && witness_ok(rx, r), {{"exact", rat(r.value)}, {"diameter_route", rat(diam)}});
    } catch (const BudgetExceeded& e) {
      c.add(name + " skipped over budget", true, {{"diameter_route", rat(diam)}, {"message", e.what()}}, true);
    }
  }
  bool threw = false;
  try {
    (void)cheeger_top_via_diameter(two_triangle_disk());
  } catch (const HypothesisFailed&) {
    threw = true;
  }
  c.add("disk rejected", threw);
}

void suite_lambda(Ctx& c) {
  c.guard("lambda_1 of the 3-simplex", [&] {
    const MaxCosystole m = max_cosystole(RelativePair(simplex_skeleton(4, 3)), 1, c.opts.budget);
    c.add("lambda_1 of the 3-simplex", m.lambda == 2, {{"lambda", m.lambda}});
  });
  const std::size_t trials = c.trials(30);
  std::size_t ok = 0, checked = 0;
  Json rows = Json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(c.opts.seed ^ 0x1a3b, t);
    const ComplexZ2 x = random_subcomplex(6, 0.4, 4, s);
    const RelativePair rx(x);
    Rng rng(s);
    bool good = true;
    for (int k = 0; k <= x.top_dim(); ++k) {
      try {
        const MaxCosystole m = max_cosystole(rx, k, c.opts.budget);
        ++checked;
        const BlamBound bb = bound_blam(x.f(k), x.f(k - 1));
        double mean_csy = 0;
        const int samples = 20;
        for (int i = 0; i < samples; ++i)
          mean_csy += static_cast<double>(cosystolic_norm(rx, k, random_bits(rng, x.f(k), 0.5), c.opts.budget).value);
        mean_csy /= samples;
        const bool within = 2 * m.lambda <= x.f(k);
        good = good && within;
        rows.push_back({{"trial", t}, {"k", k}, {"f_k", x.f(k)}, {"lambda", m.lambda},
                        {"blam_lower_hi", bb.lower.hi_double()}, {"blam_vacuous", bb.vacuous},
                        {"mean_random_csy", mean_csy}});
      } catch (const BudgetExceeded&) {
        rows.push_back({{"trial", t}, {"k", k}, {"skipped", "budget"}});
      }
    }
    if (good) ++ok;
  }
  c.add("lambda_k <= f_k/2 on random complexes", ok == trials && checked > 0,
        {{"trials", trials}, {"degrees_checked", checked}, {"rows", rows}});
}

void suite_paley(Ctx& c) {
  bool all = true;
  Json rows = Json::array();
  for (int p : {3, 5, 7, 11, 13}) {
    for (int k = 1; k <= 3 && k + 1 < p; ++k) {
      const PaleyCochain pc = paley_cochain(p, k);
      const Rational f = paley_norm_formula(p, k);
      const bool eq = Rational(static_cast<std::int64_t>(pc.phi.weight())) == f;
      all = all && eq;
      rows.push_back({{"p", p}, {"k", k}, {"norm", pc.phi.weight()}, {"formula", rat(f)}});
    }
  }
  c.add("paley norm formula", all, rows);
  for (int p : {5, 7, 11}) {
    const std::string name = tag("paley exact csy k=1", {{"p", p}});
    c.guard(name, [&] {
      const PaleyExperiment e = paley_csy_experiment(p, 1, c.opts.budget, c.opts.threads);
      const PaleyCochain pc = paley_cochain(p, 1);
      const DegreeData d = degree_data(RelativePair(pc.complex), 1, Mode::kCo);
      const bool valid = e.witness.weight() == e.csy && d.quotient.contains(e.witness ^ pc.phi) && e.csy <= e.norm;
      c.add(name, valid,
            {{"norm", e.norm}, {"csy", e.csy}, {"bound_lo", e.bound.lo_double()}, {"bound_hi", e.bound.hi_double()},
             {"vacuous", e.vacuous}, {"ratio", rat(e.ratio)}});
    });
  }
  for (int p : {5, 7}) {
    const std::string name = tag("chung sums k=1", {{"p", p}});
    const ChungReport r = chung_sum_check(p, 1, static_cast<int>(c.trials(100)), c.opts.seed);
    c.add(name, r.violations == 0, {{"trials", r.trials.size()}, {"violations", r.violations}});
  }
}

void suite_nonabelian(Ctx& c) {
  const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)};
  const std::size_t per_n = c.trials(6);
  std::size_t tested = 0, agree = 0;
  Json rows = Json::array();
  for (int n = 2; n <= 5; ++n) {
    for (std::size_t t = 0; t < per_n; ++t) {
      const double p = per_n == 1 ? 0.5 : static_cast<double>(t) / static_cast<double>(per_n - 1);
      const ComplexZ2 x = random_Ynp(n, p, trial_seed(c.opts.seed ^ 0xb1, static_cast<std::uint64_t>(n) * 1000 + t));
      for (const FiniteGroup& g : groups) {
        const NonAbContext ctx(x, g);
        const std::size_t h = h1_orbits(ctx, c.opts.budget).count;
        const std::size_t m = hom_pi1_orbits(ctx, c.opts.budget);
        ++tested;
        if (h == m) ++agree;
        rows.push_back({{"n", n}, {"f2", x.f(2)}, {"group", g.name()}, {"h1", h}, {"hom", m}});
      }
    }
  }
  c.add("h1 orbits = hom(pi1) orbits", tested > 0 && agree == tested, {{"tested", tested}, {"rows", rows}});

  const ComplexZ2 d4 = simplex_skeleton(5, 2);
  const std::size_t trials = c.trials(500);
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
    const NonAbContext ctx(d4, g);
    std::size_t violations = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(trial_seed(c.opts.seed ^ 0xb01, t));
      const double density = uniform01(rng);
      NonAbCochain1 phi = ctx.identity();
      for (auto& v : phi.values)
        if (bernoulli(rng, density)) v = 1 + uniform_below(rng, g.order() - 1);
      const std::size_t csy = nonab_csy(ctx, phi, c.opts.budget);
      if (3 * ctx.d1_norm(phi) < ctx.vertices() * csy) ++violations;
    }
    c.add("bw1 on the 4-simplex G=" + g.name(), violations == 0, {{"trials", trials}, {"violations", violations}});
  }
  {
    const NonAbContext ctx(simplex_skeleton(3, 2), FiniteGroup::symmetric(3));
    NonAbCochain1 phi = ctx.identity();
    ctx.set(phi, 1, 2, 1);
    const std::size_t csy = nonab_csy(ctx, phi, c.opts.budget);
    const std::size_t d = ctx.d1_norm(phi);
    c.add("bw1 single edge tight", csy == 1 && d == 1 && 3 * d == ctx.vertices() * csy, {{"csy", csy}, {"d1", d}});
  }
  {
    const QuotientReport q0 = quotient_experiment(6, 1.0, c.trials(10), c.opts.seed, c.opts.budget, 0.0);
    const QuotientReport q1 = quotient_experiment(6, 1.0, c.trials(10), c.opts.seed, c.opts.budget, 1.0);
    c.add("quotient experiment extremes", q0.fraction_nontrivial == 1.0 && q1.fraction_nontrivial == 0.0,
          {{"p0", q0.fraction_nontrivial}, {"p1", q1.fraction_nontrivial}});
  }
  {
    const int n = 40;
    const double ln = std::log(static_cast<double>(n));
    const std::vector<double> ps = {(2 * ln - 4) / n, (2 * ln + 4) / n};
    const auto pts = homology_sweep(n, ps, c.trials(200), c.opts.seed);
    c.add("homology threshold direction n=40", pts[1].fraction > pts[0].fraction,
          {{"p_low", ps[0]}, {"fraction_low", pts[0].fraction}, {"p_high", ps[1]}, {"fraction_high", pts[1].fraction},
           {"trials", pts[0].trials}});
  }
}

void suite_product(Ctx& c) {
  struct Case {
    std::string name;
    ComplexZ2 x;
    int n, k;
  };
  const std::vector<Case> cases = {{"boundary triangle n=2 k=0", simplex_skeleton(3, 1), 2, 0},
                                   {"vertex n=3 k=0", simplex_skeleton(1, 0), 3, 0},
                                   {"square n=2 k=1", hypercube(2), 2, 1}};
  for (const Case& cs : cases) {
    c.guard("product " + cs.name, [&] {
      const ProductBoundReport r = verify_product_bound(cs.x, cs.n, cs.k, c.opts.budget);
      c.add("product " + cs.name, r.holds,
            {{"h_x", r.h_x ? Json(rat(*r.h_x)) : Json("inf")}, {"h_product", rat(r.h_product)},
             {"bound", rat(r.bound)}});
    });
  }
}

std::vector<ComplexZ2> built_complexes(std::uint64_t seed) {
  std::vector<ComplexZ2> out = {simplex_skeleton(5, 3), hypercube(2), hypercube(3), hypercube(4),
                                coxeter_An(4), coxeter_An(5), coxeter_Bn(2), coxeter_Bn(3),
                                product_with_simplex(simplex_skeleton(3, 1), 3), random_Ynp(8, 0.5, seed),
                                order_complex(subspace_lattice(2, 3).proper_part()),
                                order_complex(boolean_lattice(4).proper_part())};
  const ComplexZ2 r = random_subcomplex(6, 0.3, 4, seed);
  out.push_back(r);
  out.push_back(alexander_dual(r, 6));
  return out;
}

void suite_infrastructure(Ctx& c) {
  const std::vector<ComplexZ2> cs = built_complexes(c.opts.seed);
  {
    bool ok = true;
    for (const ComplexZ2& x : cs)
      for (int k = 1; k <= x.top_dim(); ++k) {
        const GF2Matrix b = x.boundary_matrix(k);
        for (std::size_t i = 0; i < b.rows(); ++i) ok = ok && x.boundary(k - 1, b.row(i)).none();
      }
    c.add("boundary of boundary vanishes", ok, {{"complexes", cs.size()}});
  }
  {
    Rng rng(trial_seed(c.opts.seed, 0xe1));
    const std::size_t trials = c.trials(1000);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const ComplexZ2& x = cs[uniform_below(rng, cs.size())];
      const int k = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(x.top_dim()) + 1));
      const BitVec ch = random_bits(rng, x.f(k), uniform01(rng));
      const BitVec phi = random_bits(rng, x.f(k - 1), uniform01(rng));
      if (phi.dot(x.boundary(k, ch)) != x.coboundary(k - 1, phi).dot(ch)) ++bad;
    }
    c.add("evaluation identity", bad == 0, {{"pairs", trials}, {"failures", bad}});
  }
  {
    Rng rng(trial_seed(c.opts.seed, 0x5d));
    const std::size_t trials = c.trials(1000);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = 1 + uniform_below(rng, 200);
      const BitVec a = random_bits(rng, n, uniform01(rng));
      const BitVec b = random_bits(rng, n, uniform01(rng));
      const BitVec x = random_bits(rng, n, uniform01(rng));
      if ((a ^ x).weight() + (b ^ x).weight() > a.weight() + b.weight() + 2 * (a ^ b ^ x).weight()) ++bad;
    }
    c.add("symmetric difference inequality", bad == 0, {{"triples", trials}, {"failures", bad}});
  }
  {
    Rng rng(trial_seed(c.opts.seed, 0xc0));
    const std::size_t trials = c.trials(200);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = 1 + uniform_below(rng, 40);
      const std::size_t want = uniform_below(rng, std::min<std::size_t>(n, 16) + 1);
      GF2Matrix basis(n, std::vector<BitVec>{});
      std::size_t attempts = 0;
      while (basis.rows() < want && attempts++ < 200) {
        GF2Matrix trial = basis;
        trial.append_row(random_bits(rng, n, uniform01(rng)));
        if (rank(trial) == trial.rows()) basis = std::move(trial);
      }
      const CosetProblem prob{n, basis, random_bits(rng, n, uniform01(rng))};
      const CosetMinimum m = coset_min_weight(prob, c.opts.budget);
      // Plain enumeration of every subset of the basis.
      std::size_t best = n + 1;
      BitVec arg;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << basis.rows()); ++s) {
        BitVec v = prob.rep;
        for (std::size_t i = 0; i < basis.rows(); ++i)
          if ((s >> i) & 1U) v ^= basis.row(i);
        const std::size_t w = v.weight();
        if (w < best || (w == best && v.lex_less(arg))) {
          best = w;
          arg = v;
        }
      }
      if (m.weight != best || !(m.witness == arg)) ++bad;
    }
    c.add("coset minimum matches enumeration", bad == 0, {{"instances", trials}, {"failures", bad}});
  }
}

const std::map<std::string, void (*)(Ctx&)>& suites() {
  static const std::map<std::string, void (*)(Ctx&)> m = {
      {"hypercube", suite_hypercube},   {"coxeter", suite_coxeter},
      {"duality", suite_duality},       {"cycle-detection", suite_cycle_detection},
      {"lattice", suite_lattice},       {"pseudomanifold", suite_pseudomanifold},
      {"lambda", suite_lambda},         {"paley", suite_paley},
      {"nonabelian", suite_nonabelian}, {"product", suite_product},
      {"infrastructure", suite_infrastructure},
  };
  return m;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  out.push_back("all");
  return out;
}

VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opts) {
  VerifyReport report;
  report.suite = name;
  Ctx c{report, opts};
  if (name == "all") {
    for (const auto& [n, fn] : suites()) {
      const std::size_t before = report.checks.size();
      fn(c);
      for (std::size_t i = before; i < report.checks.size(); ++i) report.checks[i].name = n + ": " + report.checks[i].name;
    }
    return report;
  }
  const auto it = suites().find(name);
  if (it == suites().end()) throw InvalidArgument("unknown verify suite '" + name + "'");
  it->second(c);
  return report;
}

}  // namespace hdx
