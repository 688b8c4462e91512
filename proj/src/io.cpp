#include "pconvex/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pconvex/errors.hpp"

namespace pconvex {

const char* mode_name(NumericMode m) { return m == NumericMode::rational ? "rational" : "f64"; }

NumericMode parse_mode(const std::string& s) {
  if (s == "rational" || s == "exact") return NumericMode::rational;
  if (s == "f64" || s == "float" || s == "float64") return NumericMode::f64;
  throw InvalidInput("unknown numeric mode '" + s + "'");
}

template <class T>
Json scalar_to_json(const T& x) {
  if constexpr (NumTraits<T>::exact) {
    return format_rational(x);
  } else {
    return x;
  }
}

template <class T>
T scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    Rational q;
    try {
      q = parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": " + e.what());
    }
    if constexpr (NumTraits<T>::exact) {
      return q;
    } else {
      return q.get_num().get_d() / q.get_den().get_d();
    }
  }
  if (j.is_number_integer()) {
    if constexpr (NumTraits<T>::exact) {
      return Rational(std::to_string(j.get<long long>()));
    } else {
      return static_cast<double>(j.get<long long>());
    }
  }
  if (j.is_number()) {
    double d = j.get<double>();
    if (!std::isfinite(d)) throw InvalidInput(where + ": non-finite number");
    if constexpr (NumTraits<T>::exact) {
      return Rational(d);
    } else {
      return d;
    }
  }
  throw InvalidInput(where + ": expected a number or a \"p/q\" string");
}

template <class T>
Json complex_to_json(const Complex<T>& z) {
  return Json::array({scalar_to_json(z.re), scalar_to_json(z.im)});
}

template <class T>
Complex<T> complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput(where + ": expected [re, im]");
  return Complex<T>(scalar_from_json<T>(j[0], where + "[0]"), scalar_from_json<T>(j[1], where + "[1]"));
}

template <class T>
Json point_to_json(std::span<const T> p) {
  Json a = Json::array();
  for (const T& x : p) a.push_back(scalar_to_json(x));
  return a;
}

template <class T>
Vec<T> point_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of coordinates");
  Vec<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar_from_json<T>(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(where + ": missing field '" + name + "'");
  return *it;
}

template <class T>
Json curve_body(const PolyCurve<T>& c, std::size_t dim) {
  Json j;
  j["dim"] = dim;
  j["closed"] = c.closed();
  j["mode"] = mode_name(NumTraits<T>::mode);
  Json params = Json::array();
  for (const T& t : c.params()) params.push_back(scalar_to_json(t));
  j["params"] = params;
  Json pts = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) pts.push_back(point_to_json<T>(c.point(i)));
  j["points"] = pts;
  return j;
}

template <class T>
PolyCurve<T> curve_body_from(const Json& j, std::size_t real_dim, bool closed, const std::string& where) {
  const Json& pts = field(j, "points", where);
  if (!pts.is_array()) throw InvalidInput(where + ".points: expected an array");
  std::vector<T> coords;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec<T> p = point_from_json<T>(pts[i], where + ".points[" + std::to_string(i) + "]");
    if (p.size() != real_dim) {
      throw InvalidInput(where + ".points[" + std::to_string(i) + "]: expected " + std::to_string(real_dim) +
                         " real coordinates, got " + std::to_string(p.size()));
    }
    coords.insert(coords.end(), p.begin(), p.end());
  }
  if (!j.contains("params")) return PolyCurve<T>::from_points(real_dim, closed, std::move(coords));
  Vec<T> params = point_from_json<T>(j["params"], where + ".params");
  try {
    return PolyCurve<T>(real_dim, closed, std::move(params), std::move(coords));
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

std::size_t positive_size(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) throw InvalidInput(where + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

bool boolean(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw InvalidInput(where + ": expected true or false");
  return j.get<bool>();
}

}  // namespace

template <class T>
Json curve_to_json(const PolyCurve<T>& c) {
  return curve_body(c, c.complex_dim());
}

template <class T>
PolyCurve<T> curve_from_json(const Json& j) {
  const std::size_t n = positive_size(field(j, "dim", "curve"), "curve.dim");
  const bool closed = boolean(field(j, "closed", "curve"), "curve.closed");
  if (j.contains("space") && j["space"] != "complex") throw InvalidInput("curve.space: expected \"complex\"");
  return curve_body_from<T>(j, 2 * n, closed, "curve");
}

template <class T>
Json bvmap_to_json(const PolyCurve<T>& c) {
  Json j = curve_body(c, c.real_dim());
  j["space"] = "real";
  j["domain"] = c.closed() ? "circle" : "interval";
  return j;
}

template <class T>
PolyCurve<T> bvmap_from_json(const Json& j) {
  const std::size_t k = positive_size(field(j, "dim", "map"), "map.dim");
  bool closed = false;
  if (j.contains("domain")) {
    const Json& d = j["domain"];
    if (d == "circle") {
      closed = true;
    } else if (d != "interval") {
      throw InvalidInput("map.domain: expected \"interval\" or \"circle\"");
    }
  } else {
    closed = boolean(field(j, "closed", "map"), "map.closed");
  }
  return curve_body_from<T>(j, k, closed, "map");
}

template <class T>
Json polynomial_to_json(const CPolynomial<T>& p) {
  Json terms = Json::array();
  for (const auto& [a, c] : p.terms()) terms.push_back({{"exp", a}, {"coeff", complex_to_json(c)}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

template <class T>
CPolynomial<T> polynomial_from_json(const Json& j, const std::string& where) {
  const std::size_t n = positive_size(field(j, "nvars", where), where + ".nvars");
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) throw InvalidInput(where + ".terms: expected an array");
  CPolynomial<T> p(n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = where + ".terms[" + std::to_string(i) + "]";
    const Json& e = field(terms[i], "exp", w);
    if (!e.is_array() || e.size() != n) throw InvalidInput(w + ".exp: expected " + std::to_string(n) + " exponents");
    Exponent a;
    for (const Json& x : e) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw InvalidInput(w + ".exp: exponents must be nonnegative integers");
      a.push_back(static_cast<unsigned>(x.get<long long>()));
    }
    if (p.terms().count(a)) throw InvalidInput(w + ": duplicate exponent");
    p.add_term(a, complex_from_json<T>(field(terms[i], "coeff", w), w + ".coeff"));
  }
  return p;
}

template <class T>
Json form_to_json(const OneForm<T>& f) {
  Json comps = Json::array();
  for (const auto& p : f.components) comps.push_back(polynomial_to_json(p));
  return {{"nvars", f.nvars()}, {"components", comps}};
}

template <class T>
OneForm<T> form_from_json(const Json& j) {
  const std::size_t n = positive_size(field(j, "nvars", "form"), "form.nvars");
  const Json& comps = field(j, "components", "form");
  if (!comps.is_array() || comps.size() != n) throw InvalidInput("form.components: expected " + std::to_string(n) + " polynomials");
  std::vector<CPolynomial<T>> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(polynomial_from_json<T>(comps[i], "form.components[" + std::to_string(i) + "]"));
  }
  try {
    return OneForm<T>(std::move(out));
  } catch (const DomainError& e) {
    throw InvalidInput(std::string("form: ") + e.what());
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string json_digest(const Json& j) { return sha256_hex(j.dump()); }

template <class T>
std::string curve_digest(const PolyCurve<T>& c) {
  return json_digest(c.real_dim() % 2 == 0 ? curve_to_json(c) : bvmap_to_json(c));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

#define PCONVEX_INSTANTIATE(T)                                                      \
  template Json scalar_to_json<T>(const T&);                                        \
  template T scalar_from_json<T>(const Json&, const std::string&);                  \
  template Json complex_to_json<T>(const Complex<T>&);                              \
  template Complex<T> complex_from_json<T>(const Json&, const std::string&);        \
  template Json point_to_json<T>(std::span<const T>);                               \
  template Vec<T> point_from_json<T>(const Json&, const std::string&);              \
  template Json curve_to_json<T>(const PolyCurve<T>&);                              \
  template PolyCurve<T> curve_from_json<T>(const Json&);                            \
  template Json bvmap_to_json<T>(const PolyCurve<T>&);                              \
  template PolyCurve<T> bvmap_from_json<T>(const Json&);                            \
  template Json polynomial_to_json<T>(const CPolynomial<T>&);                       \
  template CPolynomial<T> polynomial_from_json<T>(const Json&, const std::string&); \
  template Json form_to_json<T>(const OneForm<T>&);                                 \
  template OneForm<T> form_from_json<T>(const Json&);                               \
  template std::string curve_digest<T>(const PolyCurve<T>&);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
