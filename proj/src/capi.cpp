#include "hdx/hdx.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "hdx/certificates.hpp"
#include "hdx/complex.hpp"
#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "hdx/nonabelian.hpp"
#include "hdx/paley.hpp"
#include "hdx/poset.hpp"
#include "hdx/pseudomanifold.hpp"
#include "hdx/serialize.hpp"
#include "hdx/verify.hpp"

struct hdx_complex {
  hdx::ComplexZ2 x;
};

namespace {

using hdx::Json;

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const Json& j) {
  if (out) *out = dup(j.dump(2) + "\n");
}

int fail(int code, const std::string& kind, const std::string& message, char** out = nullptr, Json extra = {}) {
  g_last_error = message;
  if (out) {
    Json j = extra.is_object() ? extra : Json::object();
    j["error"] = kind;
    j["message"] = message;
    j["status"] = code;
    put(out, j);
  }
  return code;
}

/// Runs `body` and maps every exception onto a status code and error record.
template <class F>
int guarded(char** out, const Json& context, F&& body) {
  try {
    body();
    g_last_error.clear();
    return HDX_OK;
  } catch (const hdx::BudgetExceeded& e) {
    Json extra = context;
    extra["required"] = e.required();
    extra["budget"] = e.budget();
    return fail(HDX_BUDGET_EXCEEDED, e.kind(), e.what(), out, extra);
  } catch (const hdx::Error& e) {
    return fail(static_cast<int>(e.code()), e.kind(), e.what(), out, context);
  } catch (const Json::exception& e) {
    return fail(HDX_INVALID_ARGUMENT, "InvalidArgument", e.what(), out, context);
  } catch (const std::bad_alloc&) {
    return fail(HDX_INTERNAL, "OutOfMemory", "allocation failed", out, context);
  } catch (const std::exception& e) {
    return fail(HDX_INTERNAL, "Internal", e.what(), out, context);
  }
}

Json parse_object(const char* text, const char* what) {
  if (!text || !*text) return Json::object();
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw hdx::InvalidArgument(std::string(what) + " is not a JSON object");
  return j;
}

int req_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw hdx::InvalidArgument(std::string("missing integer '") + key + "'");
  return j[key].get<int>();
}

int opt_int(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw hdx::InvalidArgument(std::string("'") + key + "' must be an integer");
  return j[key].get<int>();
}

double req_double(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) throw hdx::InvalidArgument(std::string("missing number '") + key + "'");
  return j[key].get<double>();
}

std::uint64_t opt_u64(const Json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_unsigned() && !(j[key].is_number_integer() && j[key].get<std::int64_t>() >= 0))
    throw hdx::InvalidArgument(std::string("'") + key + "' must be a non-negative integer");
  return j[key].get<std::uint64_t>();
}

void require_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi)
    throw hdx::InvalidArgument(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

const hdx::ComplexZ2& need(const hdx_complex* x, const char* command) {
  if (!x) throw hdx::InvalidArgument(std::string(command) + " needs an input complex");
  return x->x;
}

hdx::ComplexZ2 build(const Json& spec, const hdx_complex* base) {
  if (!spec.contains("shape") || !spec["shape"].is_string()) throw hdx::InvalidArgument("build spec needs a 'shape'");
  const std::string shape = spec["shape"].get<std::string>();
  if (shape == "simplex") {
    const int n = req_int(spec, "n");
    require_range(n, 1, 24, "n");
    const int k = opt_int(spec, "k", n - 1);
    require_range(k, 0, n - 1, "k");
    return hdx::simplex_skeleton(n, k);
  }
  if (shape == "hypercube") {
    const int d = req_int(spec, "d");
    require_range(d, 0, 10, "d");
    return hdx::hypercube(d);
  }
  if (shape == "coxeter-a") {
    const int n = req_int(spec, "n");
    require_range(n, 2, 7, "n");
    return hdx::coxeter_An(n);
  }
  if (shape == "coxeter-b") {
    const int n = req_int(spec, "n");
    require_range(n, 1, 4, "n");
    return hdx::coxeter_Bn(n);
  }
  if (shape == "product") {
    const int n = req_int(spec, "n");
    require_range(n, 1, 12, "n");
    return hdx::product_with_simplex(need(base, "product"), n);
  }
  if (shape == "dual") {
    const int n = req_int(spec, "n");
    require_range(n, 1, 20, "n");
    return hdx::alexander_dual(need(base, "dual"), n);
  }
  if (shape == "order-complex") {
    const std::string lattice = spec.value("lattice", std::string("boolean"));
    const int n = req_int(spec, "n");
    hdx::Poset p;
    if (lattice == "boolean") {
      require_range(n, 1, 6, "n");
      p = hdx::boolean_lattice(n);
    } else if (lattice == "subspace") {
      p = hdx::subspace_lattice(opt_int(spec, "q", 2), n);
    } else {
      throw hdx::InvalidArgument("lattice must be 'boolean' or 'subspace'");
    }
    return hdx::order_complex(p.proper_part(), "order_complex_" + lattice + std::to_string(n));
  }
  if (shape == "ynp") {
    const int n = req_int(spec, "n");
    require_range(n, 1, 200, "n");
    return hdx::random_Ynp(n, req_double(spec, "p"), opt_u64(spec, "seed", 0));
  }
  if (shape == "random") {
    const int n = req_int(spec, "n");
    require_range(n, 1, 16, "n");
    return hdx::random_subcomplex(n, req_double(spec, "p"), opt_int(spec, "max_size", n), opt_u64(spec, "seed", 0));
  }
  throw hdx::InvalidArgument("unknown shape '" + shape + "'");
}

hdx::FiniteGroup parse_group(const std::string& name) {
  if (name == "S3") return hdx::FiniteGroup::symmetric(3);
  if (name == "S4") return hdx::FiniteGroup::symmetric(4);
  if (name == "S5") return hdx::FiniteGroup::symmetric(5);
  if (name == "A5") return hdx::FiniteGroup::alternating5();
  if (name == "PSL27") return hdx::FiniteGroup::psl27();
  if (name.size() >= 2 && name[0] == 'Z') {
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(name.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == name.size() - 1 && m >= 1 && m <= 64) return hdx::FiniteGroup::cyclic(static_cast<std::size_t>(m));
  }
  throw hdx::InvalidArgument("unknown group '" + name + "' (Zm, S3, S4, S5, A5, PSL27)");
}

hdx::Mode parse_mode(const Json& r) {
  const std::string m = r.value("mode", std::string("co"));
  if (m == "co") return hdx::Mode::kCo;
  if (m == "ho") return hdx::Mode::kHo;
  throw hdx::InvalidArgument("mode must be 'co' or 'ho'");
}

Json table(std::vector<std::string> header, Json rows) { return Json{{"header", std::move(header)}, {"rows", std::move(rows)}}; }

// Fills `ctx` with what is known before an exact search starts, so a budget
// overrun can still report it.
Json compute(const hdx_complex* xh, const Json& r, Json& ctx) {
  using namespace hdx;
  const std::string cmd = r.at("command").get<std::string>();
  const std::uint64_t budget = opt_u64(r, "budget", kDefaultBudget);
  if (budget < 1) throw InvalidArgument("budget must be at least 1");
  const unsigned threads = static_cast<unsigned>(std::max(1, opt_int(r, "threads", 1)));
  const std::uint64_t seed = opt_u64(r, "seed", 0);
  ctx["command"] = cmd;
  Json out;
  out["command"] = cmd;

  if (cmd == "cheeger") {
    const ComplexZ2& x = need(xh, "cheeger");
    const int k = req_int(r, "k");
    const Mode mode = parse_mode(r);
    const RelativePair pair(x);
    const DegreeData d = degree_data(pair, k, mode);
    ctx["partial"] = {{"k", k}, {"mode", mode_name(mode)}, {"quotient_dim", d.quotient.quotient_dim()},
                      {"f_vector", x.f_vector()}};
    out["result"] = expansion_json(cheeger(pair, k, mode, budget, threads));
  } else if (cmd == "cheeger-top-diam") {
    const ComplexZ2& x = need(xh, "cheeger-top-diam");
    const Rational v = cheeger_top_via_diameter(x);
    out["result"] = {{"value", rational_json(v)}, {"diameter", diameter(flip_graph(x))}, {"k", x.top_dim() - 1}};
  } else if (cmd == "cosystole") {
    const ComplexZ2& x = need(xh, "cosystole");
    if (!r.contains("cochain")) throw InvalidArgument("cosystole needs a 'cochain' record");
    int k = 0;
    const BitVec v = cochain_from_json(x, r["cochain"], &k);
    const Mode mode = parse_mode(r);
    const RelativePair pair(x);
    ctx["partial"] = {{"k", k}, {"mode", mode_name(mode)}, {"weight", v.weight()}};
    const NormResult n =
        mode == Mode::kCo ? cosystolic_norm(pair, k, v, budget, threads) : systolic_norm(pair, k, v, budget, threads);
    out["result"] = {{"k", k},           {"mode", mode_name(mode)},   {"weight", v.weight()}, {"norm", n.value},
                     {"witness_bits", bits_to_hex(n.form)}, {"budget_used", n.visited}};
  } else if (cmd == "max-cosystole") {
    const ComplexZ2& x = need(xh, "max-cosystole");
    const int k = req_int(r, "k");
    const MaxCosystole m = max_cosystole(RelativePair(x), k, budget);
    const BlamBound b = k >= 0 ? bound_blam(x.f(k), x.f(k - 1)) : BlamBound{};
    out["result"] = {{"k", k},
                     {"lambda", m.lambda},
                     {"f_k", x.f(k)},
                     {"witness_bits", bits_to_hex(m.witness)},
                     {"budget_used", m.budget_used},
                     {"blam_lower", enclosure_json(b.lower)},
                     {"blam_upper", rational_json(b.upper)},
                     {"blam_vacuous", b.vacuous}};
  } else if (cmd == "flip-graph") {
    const ComplexZ2& x = need(xh, "flip-graph");
    const FlipGraph g = flip_graph(x);
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    out["result"] = {{"dim", g.dim},
                     {"vertices", g.vertices},
                     {"edges", edges},
                     {"ridges_in_two", g.ridges_in_two},
                     {"connected", g.connected},
                     {"pseudomanifold", g.pseudomanifold()},
                     {"diameter", diameter(g)}};
    out["edge_list"] = flip_graph_edge_list(g);
  } else if (cmd == "paley") {
    std::vector<int> ps;
    if (r.contains("ps")) {
      ps = r["ps"].get<std::vector<int>>();
    } else {
      ps.push_back(req_int(r, "p"));
    }
    const int k = opt_int(r, "k", 1);
    Json rows = Json::array();
    Json records = Json::array();
    for (int p : ps) {
      ctx["partial"] = {{"p", p}, {"k", k}, {"completed", records}};
      const PaleyExperiment e = paley_csy_experiment(p, k, budget, threads);
      records.push_back({{"p", e.p},
                         {"k", e.k},
                         {"norm", e.norm},
                         {"norm_formula", rational_json(paley_norm_formula(p, k))},
                         {"exact_csy", e.csy},
                         {"bound", enclosure_json(e.bound)},
                         {"vacuous", e.vacuous},
                         {"ratio", rational_json(e.ratio)},
                         {"witness_bits", bits_to_hex(e.witness)},
                         {"budget_used", e.budget_used}});
      rows.push_back({e.p, e.k, e.norm, e.csy, e.bound.lo_double(), e.bound.hi_double(), e.vacuous, e.ratio.str()});
    }
    out["result"] = records;
    out["table"] = table({"p", "k", "norm", "exact_csy", "bound_lo", "bound_hi", "vacuous", "ratio"}, rows);
  } else if (cmd == "chung") {
    const int p = req_int(r, "p");
    const int k = opt_int(r, "k", 1);
    const ChungReport c = chung_sum_check(p, k, opt_int(r, "trials", 100), seed);
    Json rows = Json::array();
    for (std::size_t t = 0; t < c.trials.size(); ++t)
      rows.push_back({t, c.trials[t].sum, c.trials[t].bound, c.trials[t].violated});
    out["result"] = {{"p", p}, {"k", k}, {"seed", seed}, {"trials", c.trials.size()}, {"violations", c.violations}};
    out["table"] = table({"trial", "sum", "bound", "violated"}, rows);
  } else if (cmd == "product-bound") {
    const ComplexZ2& x = need(xh, "product-bound");
    const int n = req_int(r, "n");
    const int k = req_int(r, "k");
    const ProductBoundReport p = verify_product_bound(x, n, k, budget);
    out["result"] = {{"h_x", p.h_x ? rational_json(*p.h_x) : Json("inf")},
                     {"h_product", rational_json(p.h_product)},
                     {"bound", rational_json(p.bound)},
                     {"holds", p.holds}};
  } else if (cmd == "h1") {
    const ComplexZ2& x = need(xh, "h1");
    const NonAbContext c(x, parse_group(r.value("group", std::string("Z2"))));
    const OrbitSet o = h1_orbits(c, budget);
    Json res = {{"group", c.group().name()}, {"order", c.group().order()}, {"h1_orbits", o.count},
                {"nontrivial", o.count >= 2}, {"nodes", o.nodes}};
    if (c.complete_graph()) {
      try {
        res["hom_pi1_orbits"] = hom_pi1_orbits(c, budget);
      } catch (const BudgetExceeded&) {
        res["hom_pi1_orbits"] = "budget";
      }
    }
    out["result"] = res;
  } else if (cmd == "quotient-experiment") {
    const int n = req_int(r, "n");
    require_range(n, 3, 40, "n");
    std::optional<double> p;
    if (r.contains("p")) p = req_double(r, "p");
    const QuotientReport q = quotient_experiment(n, r.value("c", 1.0), opt_u64(r, "trials", 20), seed, budget, p);
    Json rows = Json::array();
    for (const auto& g : q.groups) rows.push_back({q.n, q.p, g.group, q.trials, g.fraction_nontrivial, g.skipped});
    rows.push_back({q.n, q.p, "any", q.trials, q.fraction_nontrivial, q.skipped});
    out["result"] = {{"n", q.n}, {"c", q.c}, {"p", q.p}, {"trials", q.trials}, {"seed", q.seed},
                     {"fraction_nontrivial", q.fraction_nontrivial}, {"skipped", q.skipped}};
    out["table"] = table({"n", "p", "group", "trials", "fraction_nontrivial", "skipped"}, rows);
  } else if (cmd == "homology-sweep") {
    const int n = req_int(r, "n");
    require_range(n, 3, 400, "n");
    std::vector<double> ps;
    if (r.contains("ps")) {
      ps = r["ps"].get<std::vector<double>>();
    } else {
      // Default: 2 ln n / n + offset / n for offsets -6..6.
      const double ln = std::log(static_cast<double>(n));
      for (int off = -6; off <= 6; off += 2) ps.push_back(std::clamp((2 * ln + off) / n, 0.0, 1.0));
    }
    const auto pts = homology_sweep(n, ps, opt_u64(r, "trials", 200), seed);
    Json rows = Json::array();
    for (const auto& pt : pts) rows.push_back({n, pt.p, "Z2", pt.trials, pt.fraction, 0});
    out["result"] = {{"n", n}, {"seed", seed}};
    out["table"] = table({"n", "p", "group", "trials", "fraction_vanishing", "skipped"}, rows);
  } else if (cmd == "betti") {
    const ComplexZ2& x = need(xh, "betti");
    std::vector<std::size_t> dims;
    for (int k = 0; k <= x.top_dim(); ++k) dims.push_back(cohomology_dim(RelativePair(x), k));
    out["result"] = {{"reduced", x.reduced()}, {"dims", dims}};
  } else {
    throw InvalidArgument("unknown command '" + cmd + "'");
  }
  if (xh) out["complex_hash"] = hash_hex(complex_hash(xh->x));
  return out;
}

}  // namespace

extern "C" {

const char* hdx_version(void) { return "0.1.0"; }

const char* hdx_last_error(void) { return g_last_error.c_str(); }

void hdx_string_free(char* s) { std::free(s); }

int hdx_complex_build(const char* spec, const hdx_complex* base, hdx_complex** out) {
  if (!out) return fail(HDX_INVALID_ARGUMENT, "InvalidArgument", "out is NULL");
  *out = nullptr;
  return guarded(nullptr, {}, [&] {
    const Json s = parse_object(spec, "build spec");
    *out = new hdx_complex{build(s, base)};
  });
}

int hdx_complex_from_json(const char* json, hdx_complex** out) {
  if (!out || !json) return fail(HDX_INVALID_ARGUMENT, "InvalidArgument", "NULL argument");
  *out = nullptr;
  return guarded(nullptr, {}, [&] {
    const Json j = Json::parse(json, nullptr, false);
    if (j.is_discarded()) throw hdx::InvalidArgument("complex file is not valid JSON");
    *out = new hdx_complex{hdx::complex_from_json(j)};
  });
}

int hdx_complex_to_json(const hdx_complex* x, char** out) {
  if (!x || !out) return fail(HDX_INVALID_ARGUMENT, "InvalidArgument", "NULL argument");
  return guarded(nullptr, {}, [&] { *out = dup(hdx::canonical(hdx::complex_to_json(x->x)) + "\n"); });
}

int hdx_complex_f_vector(const hdx_complex* x, size_t* out, size_t cap, size_t* len) {
  if (!x) return fail(HDX_INVALID_ARGUMENT, "InvalidArgument", "NULL complex");
  const auto f = x->x.f_vector();
  if (len) *len = f.size();
  for (size_t i = 0; i < f.size() && i < cap && out; ++i) out[i] = f[i];
  return HDX_OK;
}

unsigned long long hdx_complex_hash(const hdx_complex* x) { return x ? hdx::complex_hash(x->x) : 0; }

void hdx_complex_free(hdx_complex* x) { delete x; }

int hdx_compute(const hdx_complex* x, const char* request, char** result) {
  if (result) *result = nullptr;
  Json ctx = Json::object();
  return guarded(result, ctx, [&] {
    const Json r = parse_object(request, "request");
    if (!r.contains("command") || !r["command"].is_string()) throw hdx::InvalidArgument("request needs a 'command'");
    put(result, compute(x, r, ctx));
  });
}

int hdx_verify(const char* suite, const char* options, char** report) {
  if (report) *report = nullptr;
  int status = HDX_OK;
  const int rc = guarded(report, {}, [&] {
    if (!suite) throw hdx::InvalidArgument("suite is NULL");
    const Json o = parse_object(options, "options");
    hdx::VerifyOptions opts;
    opts.trials = opt_u64(o, "trials", 0);
    opts.seed = opt_u64(o, "seed", 0);
    opts.budget = opt_u64(o, "budget", hdx::kDefaultBudget);
    opts.threads = static_cast<unsigned>(std::max(1, opt_int(o, "threads", 1)));
    const hdx::VerifyReport rep = hdx::run_verify_suite(suite, opts);
    put(report, rep.to_json());
    if (!rep.passed()) status = HDX_CHECKS_FAILED;
  });
  return rc != HDX_OK ? rc : status;
}

}  // extern "C"
