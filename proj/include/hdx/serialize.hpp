#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"
#include "hdx/expansion.hpp"
#include "hdx/rational.hpp"

namespace hdx {

using Json = nlohmann::json;

inline constexpr const char* kComplexSchema = "hdx/1";

std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hash_hex(std::uint64_t h);

/// {schema, name, dims, cells: [[dim, label, [boundary]]...], reduced}.
/// dims is the f-vector f_0..f_top; vertex boundaries are written as [].
Json complex_to_json(const ComplexZ2& x);
/// Throws InvalidArgument on malformed input.
ComplexZ2 complex_from_json(const Json& j);
/// Compact dump with sorted keys; the bytes hashed by complex_hash.
std::string canonical(const Json& j);
std::uint64_t complex_hash(const ComplexZ2& x);

/// Coordinate 0 is the most significant bit of the first hex digit; the
/// last digit is zero-padded.
std::string bits_to_hex(const BitVec& v);
BitVec bits_from_hex(std::string_view hex, std::size_t length);

/// {complex_hash, dim, bits_hex}
Json cochain_to_json(const ComplexZ2& x, int k, const BitVec& v);
/// Checks the hash against `x` and the length against f_k.
BitVec cochain_from_json(const ComplexZ2& x, const Json& j, int* dim = nullptr);

Json rational_json(const Rational& r);
Json enclosure_json(const Enclosure& e);
/// {value, witness_bits, numerator, denominator, f_vector, budget_used, k, mode, quotient_dim}
Json expansion_json(const ExpansionResult& r);

}  // namespace hdx
