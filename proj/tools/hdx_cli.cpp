#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdx/hdx.h"

using Json = nlohmann::json;

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { hdx_string_free(s); }
};

struct ComplexHandle {
  hdx_complex* x = nullptr;
  ~ComplexHandle() { hdx_complex_free(x); }
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return HDX_INVALID_ARGUMENT;
}

bool read_file(const std::string& path, std::string& out) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int load_complex(const std::string& path, ComplexHandle& h) {
  std::string text;
  if (!read_file(path, text)) return usage_error("cannot read " + path);
  const int rc = hdx_complex_from_json(text.c_str(), &h.x);
  if (rc != HDX_OK) std::cerr << "error: " << path << ": " << hdx_last_error() << "\n";
  return rc;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (v.is_object() && v.contains("num") && v.contains("den"))
    return std::to_string(v["num"].get<std::int64_t>()) + "/" + std::to_string(v["den"].get<std::int64_t>());
  return v.dump();
}

std::string as_csv(const Json& rec) {
  std::string out;
  if (rec.contains("table")) {
    const Json& t = rec["table"];
    for (std::size_t i = 0; i < t["header"].size(); ++i) out += (i ? "," : "") + t["header"][i].get<std::string>();
    out += "\n";
    for (const Json& row : t["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
      out += "\n";
    }
    return out;
  }
  const Json& r = rec.contains("result") ? rec["result"] : rec;
  std::string head, body;
  for (const auto& [k, v] : r.items()) {
    if (v.is_array()) continue;
    head += (head.empty() ? "" : ",") + k;
    body += (body.empty() ? "" : ",") + csv_cell(v);
  }
  return head + "\n" + body + "\n";
}

std::string as_text(const Json& rec) {
  std::string out;
  const Json& r = rec.contains("result") ? rec["result"] : rec;
  if (r.is_object()) {
    for (const auto& [k, v] : r.items()) out += k + ": " + csv_cell(v) + "\n";
  } else {
    out = r.dump(2) + "\n";
  }
  return out;
}

std::string verify_text(const Json& rep) {
  std::string out;
  for (const Json& c : rep["checks"]) {
    const bool info = c.value("informational", false);
    out += std::string(info ? "INFO " : (c["pass"].get<bool>() ? "PASS " : "FAIL ")) + c["name"].get<std::string>() + "\n";
  }
  out += rep["passed"].get<bool>() ? "suite passed\n" : "suite FAILED (" + std::to_string(rep["failures"].get<int>()) + ")\n";
  return out;
}

int emit(const char* record, const std::string& format, const std::string& output, bool verify = false) {
  if (!record) return HDX_OK;
  std::string text = record;
  if (format != "json") {
    const Json j = Json::parse(text, nullptr, false);
    if (!j.is_discarded() && !j.contains("error")) {
      if (verify)
        text = verify_text(j);
      else
        text = format == "csv" ? as_csv(j) : as_text(j);
    }
  }
  if (!write_output(output, text)) return usage_error("cannot write " + output);
  return HDX_OK;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("HDX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
    std::cerr << "warning: ignoring malformed HDX_BUDGET\n";
  }
  return std::uint64_t{1} << 28;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hdx: exact expansion constants of Z2 cell complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hdx_version()));

  std::string output, input, format = "json";
  std::uint64_t budget = default_budget(), seed = 0;
  unsigned threads = 1;

  // build
  std::string shape, lattice = "boolean";
  int n = -1, d = -1, k = -1, q = 2, max_size = -1;
  double p = -1;
  auto* b = app.add_subcommand("build", "build a complex and write its canonical JSON");
  b->add_option("--shape", shape, "simplex|hypercube|coxeter-a|coxeter-b|product|dual|order-complex|ynp|random")
      ->required();
  b->add_option("--n", n, "vertex count / rank / factor size");
  b->add_option("--d", d, "hypercube dimension");
  b->add_option("--k", k, "skeleton dimension (simplex)");
  b->add_option("--p", p, "probability (ynp, random)");
  b->add_option("--q", q, "field size (order-complex subspace)");
  b->add_option("--lattice", lattice, "boolean|subspace");
  b->add_option("--max-size", max_size, "largest random face (random)");
  b->add_option("--seed", seed, "RNG seed");
  b->add_option("--input", input, "base complex (product, dual)");
  b->add_option("--output", output, "output file (default stdout)");

  // compute
  std::string command, mode = "co", cochain, group = "Z2";
  std::vector<double> ps;
  double c = 1.0;
  std::size_t trials = 0;
  int ck = -1000;
  auto* cmp = app.add_subcommand("compute", "run one computation");
  cmp->add_option("command", command,
                  "cheeger|cheeger-top-diam|cosystole|max-cosystole|flip-graph|paley|chung|product-bound|h1|"
                  "quotient-experiment|homology-sweep|betti")
      ->required();
  cmp->add_option("--input", input, "complex file");
  cmp->add_option("--output", output, "output file (default stdout)");
  cmp->add_option("--k", ck, "degree");
  cmp->add_option("--mode", mode, "co|ho")->check(CLI::IsMember({"co", "ho"}));
  cmp->add_option("--budget", budget, "enumeration budget (default $HDX_BUDGET or 2^28)")->check(CLI::PositiveNumber);
  cmp->add_option("--seed", seed, "RNG seed");
  cmp->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 256U));
  cmp->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmp->add_option("--cochain", cochain, "cochain file (cosystole)");
  cmp->add_option("--n", n, "vertex count / factor size");
  cmp->add_option("--p", p, "prime (paley, chung) or probability (quotient-experiment)");
  cmp->add_option("--ps", ps, "list of primes or probabilities")->delimiter(',');
  cmp->add_option("--c", c, "exponent c (quotient-experiment)");
  cmp->add_option("--trials", trials, "trial count");
  cmp->add_option("--group", group, "Zm|S3|S4|S5|A5|PSL27 (h1)");

  // verify
  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "suite name or 'all'")->required();
  ver->add_option("--trials", trials, "trial count override");
  ver->add_option("--seed", seed, "RNG seed");
  ver->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);
  ver->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 256U));
  ver->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return HDX_INVALID_ARGUMENT;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = HDX_OK;

  if (*b) {
    Json spec = {{"shape", shape}, {"seed", seed}};
    if (n >= 0) spec["n"] = n;
    if (d >= 0) spec["d"] = d;
    if (k >= 0) spec["k"] = k;
    if (p >= 0) spec["p"] = p;
    if (max_size >= 0) spec["max_size"] = max_size;
    spec["q"] = q;
    spec["lattice"] = lattice;
    ComplexHandle base, out;
    if (!input.empty()) {
      rc = load_complex(input, base);
      if (rc != HDX_OK) return rc;
    }
    rc = hdx_complex_build(spec.dump().c_str(), base.x, &out.x);
    if (rc != HDX_OK) {
      std::cerr << "error: " << hdx_last_error() << "\n";
      return rc;
    }
    Owned text;
    rc = hdx_complex_to_json(out.x, &text.s);
    if (rc != HDX_OK) return rc;
    if (!write_output(output, text.s)) return usage_error("cannot write " + output);
  } else if (*cmp) {
    ComplexHandle x;
    if (!input.empty()) {
      rc = load_complex(input, x);
      if (rc != HDX_OK) return rc;
    }
    Json req = {{"command", command}, {"budget", budget}, {"seed", seed}, {"threads", threads}, {"mode", mode}};
    if (ck != -1000) req["k"] = ck;
    if (n >= 0) req["n"] = n;
    if (!ps.empty()) {
      if (command == "paley") {
        std::vector<int> primes;
        for (double v : ps) primes.push_back(static_cast<int>(v));
        req["ps"] = primes;
      } else {
        req["ps"] = ps;
      }
    }
    if (p >= 0) {
      if (command == "paley" || command == "chung")
        req["p"] = static_cast<int>(p);
      else
        req["p"] = p;
    }
    if (trials > 0) req["trials"] = trials;
    req["c"] = c;
    req["group"] = group;
    if (!cochain.empty()) {
      std::string text;
      if (!read_file(cochain, text)) return usage_error("cannot read " + cochain);
      const Json cj = Json::parse(text, nullptr, false);
      if (cj.is_discarded()) return usage_error(cochain + " is not valid JSON");
      req["cochain"] = cj;
    }
    Owned result;
    rc = hdx_compute(x.x, req.dump().c_str(), &result.s);
    if (rc != HDX_OK) std::cerr << "error: " << hdx_last_error() << "\n";
    const int erc = emit(result.s, rc == HDX_OK ? format : "json", output);
    if (rc == HDX_OK) rc = erc;
  } else if (*ver) {
    Json opts = {{"seed", seed}, {"budget", budget}, {"threads", threads}};
    if (trials > 0) opts["trials"] = trials;
    Owned report;
    rc = hdx_verify(suite.c_str(), opts.dump().c_str(), &report.s);
    if (rc != HDX_OK && rc != HDX_CHECKS_FAILED) std::cerr << "error: " << hdx_last_error() << "\n";
    const int erc = emit(report.s, rc == HDX_OK || rc == HDX_CHECKS_FAILED ? format : "json", output, true);
    if (rc == HDX_OK) rc = erc;
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "wall_time_s=%.3f\n", secs);
  return rc;
}
