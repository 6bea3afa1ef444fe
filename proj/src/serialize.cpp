#include "hdx/serialize.hpp"

#include <cstdio>

#include "hdx/error.hpp"

namespace hdx {

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json complex_to_json(const ComplexZ2& x) {
  Json cells = Json::array();
  Json dims = Json::array();
  for (int k = 0; k <= x.top_dim(); ++k) {
    dims.push_back(x.f(k));
    for (const Cell& c : x.cells(k)) {
      Json b = Json::array();
      if (k > 0)
        for (std::size_t i : c.boundary) b.push_back(i);
      cells.push_back(Json::array({k, c.label, b}));
    }
  }
  return Json{{"schema", kComplexSchema}, {"name", x.name()}, {"dims", dims}, {"cells", cells}, {"reduced", x.reduced()}};
}

ComplexZ2 complex_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("complex JSON must be an object");
    if (j.value("schema", std::string()) != kComplexSchema)
      throw InvalidArgument(std::string("complex JSON schema must be '") + kComplexSchema + "'");
    const auto& dims = j.at("dims");
    if (!dims.is_array()) throw InvalidArgument("dims must be an array");
    std::vector<std::vector<Cell>> cells(dims.size());
    int last = 0;
    for (const auto& c : j.at("cells")) {
      if (!c.is_array() || c.size() != 3) throw InvalidArgument("each cell must be [dim, label, [boundary]]");
      const int k = c[0].get<int>();
      if (k < 0 || static_cast<std::size_t>(k) >= cells.size()) throw InvalidArgument("cell dimension outside dims");
      if (k < last) throw InvalidArgument("cells must be listed by nondecreasing dimension");
      last = k;
      Cell cell;
      cell.label = c[1].get<std::string>();
      for (const auto& b : c[2]) cell.boundary.push_back(b.get<std::size_t>());
      cells[static_cast<std::size_t>(k)].push_back(std::move(cell));
    }
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].size() != dims[k].get<std::size_t>()) throw InvalidArgument("cell counts disagree with dims");
    return ComplexZ2(j.value("name", std::string()), std::move(cells), j.at("reduced").get<bool>());
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed complex JSON: ") + e.what());
  } catch (const InvariantBreach& e) {
    throw InvalidArgument(std::string("complex JSON is not a chain complex: ") + e.what());
  }
}

std::string canonical(const Json& j) { return j.dump(); }

std::uint64_t complex_hash(const ComplexZ2& x) { return fnv1a64(canonical(complex_to_json(x))); }

std::string bits_to_hex(const BitVec& v) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < v.size(); i += 4) {
    unsigned d = 0;
    for (std::size_t b = 0; b < 4; ++b) d = (d << 1) | (i + b < v.size() && v.test(i + b) ? 1U : 0U);
    out.push_back(digits[d]);
  }
  return out;
}

BitVec bits_from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) throw InvalidArgument("hex string length does not match vector length");
  BitVec v(length);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    unsigned d;
    if (c >= '0' && c <= '9')
      d = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      d = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      d = static_cast<unsigned>(c - 'A' + 10);
    else
      throw InvalidArgument("invalid hex digit");
    for (std::size_t b = 0; b < 4; ++b) {
      const bool bit = (d >> (3 - b)) & 1U;
      const std::size_t pos = 4 * i + b;
      if (pos < length)
        v.set(pos, bit);
      else if (bit)
        throw InvalidArgument("nonzero padding bits in hex string");
    }
  }
  return v;
}

Json cochain_to_json(const ComplexZ2& x, int k, const BitVec& v) {
  if (v.size() != x.f(k)) throw InvalidArgument("cochain length differs from f_k");
  return Json{{"complex_hash", hash_hex(complex_hash(x))}, {"dim", k}, {"bits_hex", bits_to_hex(v)}};
}

BitVec cochain_from_json(const ComplexZ2& x, const Json& j, int* dim) {
  try {
    const std::string h = j.at("complex_hash").get<std::string>();
    if (h != hash_hex(complex_hash(x))) throw InvalidArgument("cochain complex_hash does not match the complex");
    const int k = j.at("dim").get<int>();
    if (k < -1 || k > x.top_dim()) throw InvalidArgument("cochain dimension outside the complex");
    if (dim) *dim = k;
    return bits_from_hex(j.at("bits_hex").get<std::string>(), x.f(k));
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed cochain JSON: ") + e.what());
  }
}

Json rational_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json enclosure_json(const Enclosure& e) {
  return Json{{"lo", to_string(e.lo())}, {"hi", to_string(e.hi())}, {"lo_approx", e.lo_double()}, {"hi_approx", e.hi_double()}};
}

Json expansion_json(const ExpansionResult& r) {
  return Json{{"value", rational_json(r.value)},
              {"k", r.k},
              {"mode", mode_name(r.mode)},
              {"numerator", r.numerator_norm},
              {"denominator", r.denominator_norm},
              {"witness_bits", bits_to_hex(r.witness)},
              {"quotient_dim", r.quotient_dim},
              {"f_vector", r.f_vector},
              {"budget_used", r.budget_used}};
}

}  // namespace hdx
