#pragma once

#include <string>

#include "json.hpp"
#include "pconvex/curve.hpp"
#include "pconvex/polynomial.hpp"

namespace pconvex {

using Json = nlohmann::json;

const char* mode_name(NumericMode m);
NumericMode parse_mode(const std::string& s);

/// Rational values become "p/q" strings, doubles become JSON numbers.
template <class T>
Json scalar_to_json(const T& x);
/// Accepts numbers or rational strings in either mode. `where` names the
/// field for diagnostics.
template <class T>
T scalar_from_json(const Json& j, const std::string& where);

template <class T>
Json complex_to_json(const Complex<T>& z);
template <class T>
Complex<T> complex_from_json(const Json& j, const std::string& where);

/// Complex curve format: "dim" is the complex dimension.
template <class T>
Json curve_to_json(const PolyCurve<T>& c);
template <class T>
PolyCurve<T> curve_from_json(const Json& j);

/// Real-space map format ("space": "real", "dim" is the real dimension,
/// "domain": "interval" | "circle").
template <class T>
Json bvmap_to_json(const PolyCurve<T>& c);
template <class T>
PolyCurve<T> bvmap_from_json(const Json& j);

template <class T>
Json polynomial_to_json(const CPolynomial<T>& p);
template <class T>
CPolynomial<T> polynomial_from_json(const Json& j, const std::string& where = "polynomial");

template <class T>
Json form_to_json(const OneForm<T>& f);
template <class T>
OneForm<T> form_from_json(const Json& j);

template <class T>
Vec<T> point_from_json(const Json& j, const std::string& where);
template <class T>
Json point_to_json(std::span<const T> p);

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& data);
/// Digest of the canonical (sorted-key, compact) JSON encoding.
std::string json_digest(const Json& j);
template <class T>
std::string curve_digest(const PolyCurve<T>& c);

Json read_json_file(const std::string& path);
/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace pconvex
