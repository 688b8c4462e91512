#include "pconvex/certificates.hpp"

#include <cmath>
#include <numbers>

#include "pconvex/errors.hpp"
#include "pconvex/io.hpp"

namespace pconvex {

namespace {

template <class T>
void check_closed_form_dims(const PolyCurve<T>& c, const OneForm<T>& form) {
  if (!c.closed()) throw InvalidInput("contour integral needs a closed curve");
  if (c.real_dim() % 2 != 0 || c.complex_dim() != form.nvars()) {
    throw DimensionMismatch("curve dimension " + std::to_string(c.real_dim() / 2) + " differs from form dimension " +
                            std::to_string(form.nvars()));
  }
}

template <class T>
void segment_data(const PolyCurve<T>& c, std::size_t i, std::vector<Complex<T>>& base, std::vector<Complex<T>>& dir) {
  const std::size_t n = c.complex_dim();
  const std::size_t k = c.next(i);
  base.resize(n);
  dir.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    base[j] = c.z(i, j);
    dir[j] = c.z(k, j) - base[j];
  }
}

// Upper estimate of |integral| for float zero tests: length times the
// largest size of the form over the vertices.
template <class T>
double form_scale(const PolyCurve<T>& c, const OneForm<T>& form) {
  const double len = length_to_double(total_variation(c));
  double big = 0;
  std::vector<Complex<T>> z(form.nvars());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = c.z(i, j);
    double s = 0;
    for (const auto& p : form.components) s += abs_double(p.evaluate(z));
    big = std::max(big, s);
  }
  return std::max(len * big, 1e-300);
}

// q(s) = g(m + h s)
template <class T>
UPoly<T> recentre(const UPoly<T>& g, const T& m, const T& h) {
  UPoly<T> q;
  const UPoly<T> lin{Complex<T>(m), Complex<T>(h)};
  for (std::size_t k = g.size(); k-- > 0;) {
    q = upoly_mul(q, lin);
    if (q.empty()) q.resize(1);
    q[0] += g[k];
  }
  return q;
}

template <class T>
bool arg_increment(const UPoly<T>& g, const T& t0, const T& t1, int depth, double fscale, const Tolerance& tol,
                   double& total) {
  const T m = (t0 + t1) / T(2);
  const T h = (t1 - t0) / T(2);
  const UPoly<T> q = recentre(g, m, h);
  const Complex<T> c0 = q.empty() ? Complex<T>() : q[0];
  T rest(0);
  for (std::size_t k = 1; k < q.size(); ++k) rest += q[k].l1();
  bool accept = T(2) * rest * rest < c0.norm2();
  if constexpr (!NumTraits<T>::exact) {
    accept = accept && std::sqrt(c0.norm2()) > tol.tau * fscale;
  }
  if (accept) {
    Complex<T> plus, minus;
    for (std::size_t k = 0; k < q.size(); ++k) {
      plus += q[k];
      if (k % 2 == 0) {
        minus += q[k];
      } else {
        minus -= q[k];
      }
    }
    const Complex<T> r = plus * minus.conj();
    total += std::atan2(to_double(r.im), to_double(r.re));
    return true;
  }
  if (depth == 0) return false;
  return arg_increment(g, t0, m, depth - 1, fscale, tol, total) && arg_increment(g, m, t1, depth - 1, fscale, tol, total);
}

}  // namespace

template <class T>
Complex<T> contour_integral(const PolyCurve<T>& c, const OneForm<T>& form) {
  check_closed_form_dims(c, form);
  Complex<T> acc;
  std::vector<Complex<T>> base, dir;
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    segment_data(c, i, base, dir);
    for (std::size_t j = 0; j < form.nvars(); ++j) {
      if (form.components[j].is_zero() || dir[j].exactly_zero()) continue;
      acc += upoly_integral01(form.components[j].along(base, dir)) * dir[j];
    }
  }
  return acc;
}

template <class T>
std::vector<Complex<T>> monomial_integrals(const PolyCurve<T>& c, unsigned max_degree) {
  std::vector<Complex<T>> out;
  for (const auto& f : monomial_forms<T>(c.complex_dim(), max_degree)) out.push_back(contour_integral(c, f));
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified-polynomially-convex";
    case Verdict::certified_float:
      return "certified-polynomially-convex (float)";
    default:
      return "inconclusive";
  }
}

template <class T>
std::pair<double, double> Certificate<T>::integral_value() const {
  const double re = to_double(integral.re);
  const double im = to_double(integral.im);
  if (!per_two_pi_i) return {re, im};
  const double tau = 2 * std::numbers::pi;
  return {-tau * im, tau * re};
}

template <class T>
Verdict verdict_for(const Complex<T>& integral, double scale, const Tolerance& tol) {
  if constexpr (NumTraits<T>::exact) {
    (void)scale;
    (void)tol;
    return integral.exactly_zero() ? Verdict::inconclusive : Verdict::certified;
  } else {
    return abs_double(integral) > tol.tau * scale ? Verdict::certified_float : Verdict::inconclusive;
  }
}

template <class T>
Certificate<T> certify(const PolyCurve<T>& c, const OneForm<T>& form, const Tolerance& tol) {
  check_closed_form_dims(c, form);
  require_simple(c, "certify", tol);
  Certificate<T> cert;
  cert.form = form;
  cert.integral = contour_integral(c, form);
  cert.verdict = verdict_for(cert.integral, NumTraits<T>::exact ? 1.0 : form_scale(c, form), tol);
  cert.curve_digest = curve_digest(c);
  return cert;
}

template <class T>
std::optional<Certificate<T>> certificate_search(const PolyCurve<T>& c, unsigned max_degree, const Tolerance& tol) {
  require_simple(c, "certificate_search", tol);
  for (const auto& f : monomial_forms<T>(c.complex_dim(), max_degree)) {
    Complex<T> v = contour_integral(c, f);
    Verdict verdict = verdict_for(v, NumTraits<T>::exact ? 1.0 : form_scale(c, f), tol);
    if (verdict == Verdict::inconclusive) continue;
    Certificate<T> cert;
    cert.form = f;
    cert.integral = v;
    cert.verdict = verdict;
    cert.curve_digest = curve_digest(c);
    return cert;
  }
  return std::nullopt;
}

template <class T>
long winding_number(const PolyCurve<T>& c, const CPolynomial<T>& f, const Tolerance& tol) {
  if (!c.closed()) throw InvalidInput("winding number needs a closed curve");
  if (c.real_dim() % 2 != 0 || c.complex_dim() != f.nvars()) throw DimensionMismatch("curve and polynomial dimensions differ");
  double fscale = 0;
  std::vector<Complex<T>> z(f.nvars());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = c.z(i, j);
    fscale = std::max(fscale, abs_double(f.evaluate(z)));
  }
  double total = 0;
  std::vector<Complex<T>> base, dir;
  constexpr int kDepth = NumTraits<T>::exact ? 64 : 48;
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    segment_data(c, i, base, dir);
    const UPoly<T> g = f.along(base, dir);
    if (!arg_increment(g, T(0), T(1), kDepth, fscale, tol, total)) {
      throw DomainError("polynomial vanishes on (or within tolerance of) segment " + std::to_string(i));
    }
  }
  return std::lround(total / (2 * std::numbers::pi));
}

template <class T>
std::pair<Complex<T>, Complex<T>> LinearFrame<T>::apply(std::span<const Complex<T>> z) const {
  Complex<T> s1, s2;
  for (std::size_t j = 0; j < z.size(); ++j) {
    s1 += row1[j] * z[j];
    s2 += row2[j] * z[j];
  }
  return {s1, s2};
}

template <class T>
std::optional<std::pair<std::size_t, std::size_t>> independent_pivot(std::span<const Complex<T>> u,
                                                                     std::span<const Complex<T>> w,
                                                                     const Tolerance& tol) {
  if (u.size() != w.size()) throw DimensionMismatch("frame vectors differ in dimension");
  std::optional<std::pair<std::size_t, std::size_t>> best;
  T best_norm(0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t k = j + 1; k < u.size(); ++k) {
      T m = (u[j] * w[k] - u[k] * w[j]).norm2();
      if (m > best_norm) {
        best_norm = m;
        best = std::pair{j, k};
      }
    }
  }
  if (!best) return std::nullopt;
  if constexpr (!NumTraits<T>::exact) {
    T uu(0), ww(0);
    for (std::size_t j = 0; j < u.size(); ++j) {
      uu += u[j].norm2();
      ww += w[j].norm2();
    }
    if (std::sqrt(best_norm) <= tol.tau * std::sqrt(uu * ww)) return std::nullopt;
  }
  return best;
}

template <class T>
std::pair<LinearFrame<T>, OneForm<T>> totally_real_frame(std::span<const Complex<T>> a, std::span<const Complex<T>> u,
                                                         std::span<const Complex<T>> w, const Tolerance& tol) {
  const std::size_t n = a.size();
  if (u.size() != n || w.size() != n) throw DimensionMismatch("frame point and vectors differ in dimension");
  const auto pivot = independent_pivot(u, w, tol);
  if (!pivot) throw DomainError("u and w are complex-linearly dependent; the triangle spans no totally real plane");
  const auto [j, k] = *pivot;
  const Complex<T> I = Complex<T>::i();
  const Complex<T> M = u[j] * w[k] - u[k] * w[j];

  LinearFrame<T> fr;
  fr.row1.assign(n, Complex<T>());
  fr.row2.assign(n, Complex<T>());
  fr.base.assign(a.begin(), a.end());
  fr.pivot = *pivot;
  fr.row1[j] = (w[k] - I * u[k]) / M;
  fr.row1[k] = (I * u[j] - w[j]) / M;
  fr.row2[j] = (w[k] + I * u[k]) / M;
  fr.row2[k] = (-(I * u[j]) - w[j]) / M;

  const Complex<T> t2a = fr.apply(a).second;
  std::vector<CPolynomial<T>> comps(n, CPolynomial<T>(n));
  for (std::size_t p = 0; p < n; ++p) {
    if (fr.row1[p].exactly_zero()) continue;
    CPolynomial<T> t2 = CPolynomial<T>::constant(n, -t2a);
    for (std::size_t l = 0; l < n; ++l) {
      if (fr.row2[l].exactly_zero()) continue;
      Exponent e(n, 0);
      e[l] = 1;
      t2.add_term(e, fr.row2[l]);
    }
    t2 *= fr.row1[p];
    comps[p] = std::move(t2);
  }
  return {std::move(fr), OneForm<T>(std::move(comps))};
}

template <class T>
MonomialImageCurve<T>::MonomialImageCurve(PolyCurve<T> b, std::vector<int> e) : base(std::move(b)), exponents(std::move(e)) {
  if (base.real_dim() != 2 || !base.closed()) throw InvalidInput("monomial image curve needs a closed planar base");
  if (exponents.empty()) throw InvalidInput("monomial image curve needs at least one exponent");
  bool negative = false;
  for (int x : exponents) negative = negative || x < 0;
  if (negative) {
    const T origin[2] = {T(0), T(0)};
    if (sign_of(point_curve_dist2(std::span<const T>(origin, 2), base)) == 0) {
      throw DomainError("base curve passes through 0 but an exponent is negative");
    }
  }
}

template <class T>
std::vector<Complex<T>> MonomialImageCurve<T>::image(const Complex<T>& w) const {
  std::vector<Complex<T>> out;
  for (int e : exponents) {
    Complex<T> b = e < 0 ? Complex<T>(T(1)) / w : w;
    Complex<T> p(T(1));
    for (int k = 0; k < std::abs(e); ++k) p *= b;
    out.push_back(p);
  }
  return out;
}

template <class T>
PolyCurve<T> MonomialImageCurve<T>::vertex_polyline() const {
  std::vector<T> coords;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (const auto& z : image(base.z(i, 0))) {
      coords.push_back(z.re);
      coords.push_back(z.im);
    }
  }
  return PolyCurve<T>(2 * exponents.size(), true, base.params(), std::move(coords));
}

template <class T>
long MonomialImageCurve<T>::base_winding() const {
  return winding_number(base, CPolynomial<T>::variable(1, 0));
}

template <class T>
Complex<T> MonomialImageCurve<T>::integral_per_two_pi_i(const OneForm<T>& form) const {
  if (form.nvars() != exponents.size()) throw DimensionMismatch("form dimension differs from image curve dimension");
  // z^a dz_j pulls back to e_j w^(sum a_l e_l + e_j - 1) dw.
  Complex<T> residue;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0) continue;
    for (const auto& [a, c] : form.components[j].terms()) {
      long m = exponents[j] - 1;
      for (std::size_t l = 0; l < a.size(); ++l) m += static_cast<long>(a[l]) * exponents[l];
      if (m == -1) residue += c * T(exponents[j]);
    }
  }
  if (residue.exactly_zero()) return residue;
  return residue * T(base_winding());
}

template <class T>
bool MonomialImageCurve<T>::is_simple() const {
  bool unit = false;
  for (int e : exponents) unit = unit || e == 1 || e == -1;
  return unit && pconvex::is_simple(base).simple;
}

template <class T>
std::vector<Complex<T>> monomial_integrals(const MonomialImageCurve<T>& c, unsigned max_degree) {
  std::vector<Complex<T>> out;
  for (const auto& f : monomial_forms<T>(c.complex_dim(), max_degree)) out.push_back(c.integral_per_two_pi_i(f));
  return out;
}

namespace {

template <class T>
std::string image_digest(const MonomialImageCurve<T>& c) {
  return json_digest(Json{{"base", curve_to_json(c.base)}, {"exponents", c.exponents}});
}

}  // namespace

template <class T>
Certificate<T> certify(const MonomialImageCurve<T>& c, const OneForm<T>& form, const Tolerance& tol) {
  if (!c.is_simple()) throw NotSimple("certify: image curve is not simple");
  Certificate<T> cert;
  cert.form = form;
  cert.integral = c.integral_per_two_pi_i(form);
  cert.per_two_pi_i = true;
  cert.verdict = verdict_for(cert.integral, 1.0, tol);
  cert.curve_digest = image_digest(c);
  return cert;
}

template <class T>
std::optional<Certificate<T>> certificate_search(const MonomialImageCurve<T>& c, unsigned max_degree, const Tolerance& tol) {
  if (!c.is_simple()) throw NotSimple("certificate_search: image curve is not simple");
  for (const auto& f : monomial_forms<T>(c.complex_dim(), max_degree)) {
    Certificate<T> cert = certify(c, f, tol);
    if (cert.certified()) return cert;
  }
  return std::nullopt;
}

#define PCONVEX_INSTANTIATE(T)                                                                                     \
  template Complex<T> contour_integral<T>(const PolyCurve<T>&, const OneForm<T>&);                                 \
  template std::vector<Complex<T>> monomial_integrals<T>(const PolyCurve<T>&, unsigned);                           \
  template struct Certificate<T>;                                                                                  \
  template Verdict verdict_for<T>(const Complex<T>&, double, const Tolerance&);                                    \
  template Certificate<T> certify<T>(const PolyCurve<T>&, const OneForm<T>&, const Tolerance&);                    \
  template std::optional<Certificate<T>> certificate_search<T>(const PolyCurve<T>&, unsigned, const Tolerance&);   \
  template long winding_number<T>(const PolyCurve<T>&, const CPolynomial<T>&, const Tolerance&);                   \
  template struct LinearFrame<T>;                                                                                  \
  template std::optional<std::pair<std::size_t, std::size_t>> independent_pivot<T>(                                \
      std::span<const Complex<T>>, std::span<const Complex<T>>, const Tolerance&);                                 \
  template std::pair<LinearFrame<T>, OneForm<T>> totally_real_frame<T>(                                            \
      std::span<const Complex<T>>, std::span<const Complex<T>>, std::span<const Complex<T>>, const Tolerance&);    \
  template struct MonomialImageCurve<T>;                                                                           \
  template std::vector<Complex<T>> monomial_integrals<T>(const MonomialImageCurve<T>&, unsigned);                  \
  template Certificate<T> certify<T>(const MonomialImageCurve<T>&, const OneForm<T>&, const Tolerance&);           \
  template std::optional<Certificate<T>> certificate_search<T>(const MonomialImageCurve<T>&, unsigned,             \
                                                               const Tolerance&);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
