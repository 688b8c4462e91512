#include "pconvex/hull_lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "pconvex/errors.hpp"
#include "pconvex/random.hpp"
#include "pconvex/shapes.hpp"

namespace pconvex {

namespace {

constexpr double kPi = std::numbers::pi;

double seg_dist(std::span<const double> x, const PolyCurve<double>& c) { return std::sqrt(point_curve_dist2<double>(x, c)); }

double disc_dist(std::span<const double> x, const HullDisc& d) {
  double perp = 0, in = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = x[i] - d.center[i];
    if (i / 2 == d.axis) in += e * e;
    else perp += e * e;
  }
  const double out = std::max(0.0, std::sqrt(in) - d.radius);
  return std::sqrt(perp + out * out);
}

// even-odd rule; planar polygons only
bool inside_polygon(std::span<const double> x, const PolyCurve<double>& p) {
  bool in = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto a = p.point(i), b = p.point(p.next(i));
    if ((a[1] > x[1]) != (b[1] > x[1])) {
      const double xc = a[0] + (x[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
      if (x[0] < xc) in = !in;
    }
  }
  return in;
}

void append_curve_samples(CompactSample<double>& s, const PolyCurve<double>& c, double h) {
  auto r = refine_to_mesh(c, h);
  for (std::size_t i = 0; i < r.size(); ++i) s.append(r.point(i));
}

void append_disc_samples(CompactSample<double>& s, const HullDisc& d, double h) {
  const std::size_t rings = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(d.radius / h)));
  s.append(d.center);
  for (std::size_t j = 1; j <= rings; ++j) {
    const double r = d.radius * static_cast<double>(j) / static_cast<double>(rings);
    const std::size_t count = std::max<std::size_t>(6, static_cast<std::size_t>(std::ceil(2 * kPi * r / h)));
    for (std::size_t i = 0; i < count; ++i) {
      const double a = 2 * kPi * static_cast<double>(i) / static_cast<double>(count);
      Vec<double> p = d.center;
      p[2 * d.axis] += r * std::cos(a);
      p[2 * d.axis + 1] += r * std::sin(a);
      s.append(p);
    }
  }
}

// closed polygon in R^dim through f(theta_i), theta_i = 2 pi i / m
template <class F>
PolyCurve<double> sampled_loop(std::size_t dim, std::size_t m, F&& f) {
  std::vector<double> c;
  c.reserve(dim * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto p = f(2 * kPi * static_cast<double>(i) / static_cast<double>(m));
    c.insert(c.end(), p.begin(), p.end());
  }
  return PolyCurve<double>::from_points(dim, true, std::move(c));
}

CompactSample<double> sample_of(const HullModel& m) { return m.sample; }

double max_norm(const CompactSample<double>& s) {
  double r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r = std::max(r, std::sqrt(dot<double>(s.point(i), s.point(i))));
  return r;
}

// Dense evaluation of a polynomial over a sample through power tables.
struct DensePoly {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<std::pair<Exponent, std::complex<double>>> terms;

  double lipschitz(double radius) const {
    double l = 0;
    for (const auto& [e, c] : terms) {
      unsigned d = 0;
      for (unsigned x : e) d += x;
      if (d > 0) l += std::abs(c) * d * std::pow(radius, static_cast<double>(d - 1));
    }
    return l;
  }

  double sup(const CompactSample<double>& s) const {
    double best = 0;
    std::vector<std::complex<double>> pw(nvars * (degree + 1));
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto p = s.point(i);
      for (std::size_t j = 0; j < nvars; ++j) {
        const std::complex<double> z(p[2 * j], p[2 * j + 1]);
        pw[j * (degree + 1)] = 1;
        for (unsigned e = 1; e <= degree; ++e) pw[j * (degree + 1) + e] = pw[j * (degree + 1) + e - 1] * z;
      }
      std::complex<double> v = 0;
      for (const auto& [e, c] : terms) {
        std::complex<double> t = c;
        for (std::size_t j = 0; j < nvars; ++j) t *= pw[j * (degree + 1) + e[j]];
        v += t;
      }
      best = std::max(best, std::abs(v));
    }
    return best;
  }
};

}  // namespace

const char* hull_kind_name(HullKind k) {
  switch (k) {
    case HullKind::curve_only: return "curve-only";
    case HullKind::polygon_with_interior: return "polygon-with-interior";
    case HullKind::parametric_disc: return "parametric-disc";
    case HullKind::explicit_union: return "explicit-union";
  }
  return "?";
}

double HullModel::distance(std::span<const double> x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : curves) best = std::min(best, seg_dist(x, c));
  for (const auto& d : discs) best = std::min(best, disc_dist(x, d));
  for (const auto& p : filled) {
    if (inside_polygon(x, p)) return 0;
    best = std::min(best, seg_dist(x, p));
  }
  return best;
}

bool HullModel::contains(std::span<const double> x, double tol) const { return distance(x) <= tol; }

void sample_hull(HullModel& m, double h) {
  if (!(h > 0)) throw InvalidInput("sampling step must be positive");
  m.sample = CompactSample<double>();
  for (const auto& c : m.curves) append_curve_samples(m.sample, c, h);
  for (const auto& d : m.discs) append_disc_samples(m.sample, d, h);
  for (const auto& p : m.filled) {
    append_curve_samples(m.sample, p, h);
    double lo[2] = {p.point(0)[0], p.point(0)[1]}, hi[2] = {lo[0], lo[1]};
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (int d = 0; d < 2; ++d) {
        lo[d] = std::min(lo[d], p.point(i)[d]);
        hi[d] = std::max(hi[d], p.point(i)[d]);
      }
    }
    for (double y = lo[1] + h / 2; y < hi[1]; y += h) {
      for (double x = lo[0] + h / 2; x < hi[0]; x += h) {
        const double q[2] = {x, y};
        if (inside_polygon(q, p)) m.sample.append(q);
      }
    }
  }
  m.mesh = h;
}

template <class T>
double max_segment_length(const PolyCurve<T>& c) {
  double m = 0;
  for (std::size_t i = 0; i < c.segment_count(); ++i)
    m = std::max(m, std::sqrt(to_double(dist2<T>(c.point(i), c.point(c.next(i))))));
  return m;
}

template <class T>
SlitAnnulus<T> slit_annulus_family(std::size_t k, std::size_t n) {
  if (k < 2) throw InvalidInput("slit annulus family needs k >= 2");
  if (n < 16) throw InvalidInput("slit annulus family needs N >= 16");
  const double kd = static_cast<double>(k);
  const double a0 = kPi / (4 * kd);
  const double r_in = 1 + 1 / (4 * kd), r_out = 1 + 3 / (4 * kd);
  const std::size_t n_out = n / 2, n_in = n - n_out;
  std::vector<T> c;
  c.reserve(2 * n);
  auto push = [&](double r, double a) {
    c.push_back(snap_to<T>(r * std::cos(a), 30));
    c.push_back(snap_to<T>(r * std::sin(a), 30));
  };
  for (std::size_t i = 0; i < n_out; ++i)
    push(r_out, a0 + (2 * kPi - 2 * a0) * static_cast<double>(i) / static_cast<double>(n_out - 1));
  for (std::size_t i = 0; i < n_in; ++i)
    push(r_in, 2 * kPi - a0 - (2 * kPi - 2 * a0) * static_cast<double>(i) / static_cast<double>(n_in - 1));

  SlitAnnulus<T> out;
  out.k = k;
  out.curve = PolyCurve<T>::from_points(2, true, std::move(c));

  // every chord stays in 1 < |z| < 1 + 1/k and crosses the real axis at x < 0
  const T outer2 = T(1 + T(1) / T(static_cast<long>(k))) * T(1 + T(1) / T(static_cast<long>(k)));
  for (std::size_t i = 0; i < n; ++i) {
    auto a = out.curve.point(i), b = out.curve.point(out.curve.next(i));
    if (!(dot<T>(a, a) < outer2)) throw InvalidInput("N too small: a vertex leaves the annulus");
    const Vec<T> d = sub<T>(b, a);
    const T dd = dot<T>(d, d);
    T t = -dot<T>(a, d) / dd;
    if (t < T(0)) t = T(0);
    if (t > T(1)) t = T(1);
    const Vec<T> f = lerp<T>(a, b, t);
    if (!(dot<T>(f, f) > T(1))) throw InvalidInput("N too small: a chord enters the unit disc");
    if (sign_of(a[1]) * sign_of(b[1]) <= 0) {
      if (sign_of(a[1]) == 0 && sign_of(b[1]) == 0) throw InvalidInput("N too small: a chord lies on the real axis");
      const T x = a[0] - a[1] * d[0] / d[1];
      if (!(x < T(0))) throw InvalidInput("N too small: a chord crosses the slit");
    }
  }

  const std::size_t lm = 33;
  std::vector<T> l;
  const double rl = 1 + 1 / (2 * kd), b0 = kPi / (2 * kd);
  for (std::size_t i = 0; i < lm; ++i) {
    const double a = b0 + (2 * kPi - 2 * b0) * static_cast<double>(i) / static_cast<double>(lm - 1);
    l.push_back(snap_to<T>(rl * std::cos(a), 30));
    l.push_back(snap_to<T>(rl * std::sin(a), 30));
  }
  out.lambda = PolyCurve<T>::from_points(2, false, std::move(l));
  for (std::size_t i = 0; i < out.lambda.size(); ++i) {
    CPolynomial<T> f = CPolynomial<T>::variable(1, 0);
    f += CPolynomial<T>::constant(1, -out.lambda.z(i, 0));
    if (winding_number(out.curve, f) == 0) throw std::logic_error("slit annulus curve does not enclose the arc");
  }

  out.hull.kind = HullKind::polygon_with_interior;
  out.hull.dim = 2;
  out.hull.filled.push_back(out.curve.template convert<double>());
  sample_hull(out.hull, max_segment_length(out.curve));
  return out;
}

template <class T>
GraphFamily<T> graph_family(std::size_t k, std::size_t n) {
  auto base = slit_annulus_family<T>(k, n).curve;
  MonomialImageCurve<T> sk(std::move(base), {1, -1});
  auto poly = sk.vertex_polyline();
  return GraphFamily<T>{conjugate_polygon<T>(n), std::move(sk), std::move(poly)};
}

KallinData kallin_example(std::size_t k, std::size_t m) {
  if (k < 1) throw InvalidInput("kallin example needs k >= 1");
  if (m < 8) throw InvalidInput("kallin example needs at least 8 samples per component");
  const double kd = static_cast<double>(k);
  const double h = 2 * std::sin(kPi / static_cast<double>(m));
  KallinData out;

  auto a_k = sampled_loop(4, m, [&](double t) {
    return std::array<double, 4>{std::cos(t), std::sin(t), std::cos(t) / kd, -std::sin(t) / kd};
  });
  auto e_k = sampled_loop(4, m, [&](double t) {
    return std::array<double, 4>{2 + std::cos(t), std::sin(t), 1 / kd, 0};
  });
  auto a0 = sampled_loop(4, m, [&](double t) { return std::array<double, 4>{std::cos(t), std::sin(t), 0, 0}; });
  auto e0 = sampled_loop(4, m, [&](double t) { return std::array<double, 4>{2 + std::cos(t), std::sin(t), 0, 0}; });

  auto model = [&](HullKind kind, std::vector<PolyCurve<double>> curves, std::vector<HullDisc> discs) {
    HullModel hm;
    hm.kind = kind;
    hm.dim = 4;
    hm.curves = std::move(curves);
    hm.discs = std::move(discs);
    sample_hull(hm, h);
    return hm;
  };
  out.xk_model = model(HullKind::curve_only, {a_k, e_k}, {});
  out.xk_hull_model = model(HullKind::explicit_union, {a_k}, {HullDisc{{2, 0, 1 / kd, 0}, 0, 1}});
  out.x_model = model(HullKind::curve_only, {a0, e0}, {});
  out.x_hull_model = model(HullKind::explicit_union, {}, {HullDisc{{0, 0, 0, 0}, 0, 1}, HullDisc{{2, 0, 0, 0}, 0, 1}});
  out.limit_model = model(HullKind::explicit_union, {a0}, {HullDisc{{2, 0, 0, 0}, 0, 1}});
  // curves are sampled at their vertices, so the sample of X_k is exactly the two polygons
  out.xk = CompactSample<double>::from_curve(a_k);
  for (std::size_t i = 0; i < e_k.size(); ++i) out.xk.append(e_k.point(i));
  out.x = CompactSample<double>::from_curve(a0);
  for (std::size_t i = 0; i < e0.size(); ++i) out.x.append(e0.point(i));
  out.xk_hull = out.xk_hull_model.sample;
  out.x_hull = out.x_hull_model.sample;
  out.limit = out.limit_model.sample;

  out.limit_gap = hausdorff_points(out.limit, out.x_hull);
  const double origin[4] = {0, 0, 0, 0};
  out.witness_distance = out.limit_model.distance(origin);
  out.length_xk = total_variation(a_k) + total_variation(e_k);
  out.length_bound = 2 * (std::numbers::sqrt2 + 1) * kPi;
  double u = 0;
  for (std::size_t i = 0; i < m; ++i) {
    u = std::max(u, std::sqrt(dist2<double>(a_k.point(i), a0.point(i))));
    u = std::max(u, std::sqrt(dist2<double>(e_k.point(i), e0.point(i))));
  }
  out.uniform_distance = u;
  return out;
}

TangentData tangent_circles(std::size_t k, std::size_t circles, std::size_t m) {
  if (k < 1 || k > circles) throw InvalidInput("tangent circles need 1 <= k <= number of circles");
  if (m < 16) throw InvalidInput("tangent circles need at least 16 samples on the unit circle");
  using C = std::complex<double>;
  auto unit = [](double a) { return std::polar(1.0, a); };
  const std::size_t mc = std::max<std::size_t>(16, m / 8);
  auto base = sampled_loop(4, m, [&](double t) {
    return std::array<double, 4>{std::cos(t), std::sin(t), std::cos(t), -std::sin(t)};
  });
  auto p_of = [&](std::size_t j) { return unit(kPi / static_cast<double>(j)); };
  auto radius = [&](std::size_t j) { return std::numbers::sqrt2 * std::abs(p_of(j) - p_of(j + 1)) / 4; };
  // both circles pass through p_j at phi = pi
  auto g_circle = [&](std::size_t j) {
    const C c = p_of(j);
    const double rho = radius(j) / std::numbers::sqrt2;
    return sampled_loop(4, mc, [&](double phi) {
      const C w = c * (1 + rho + rho * unit(phi));
      return std::array<double, 4>{w.real(), w.imag(), w.real(), -w.imag()};
    });
  };
  auto e_circle = [&](std::size_t j) {
    const C c = p_of(j);
    const double r = radius(j);
    return sampled_loop(4, mc, [&](double phi) {
      const C w = c + r * c * (1.0 + unit(phi));
      return std::array<double, 4>{w.real(), w.imag(), c.real(), -c.imag()};
    });
  };

  TangentData out;
  out.x_model.kind = out.xk_model.kind = HullKind::curve_only;
  out.x_model.dim = out.xk_model.dim = 4;
  out.x_model.curves.push_back(base);
  out.xk_model.curves.push_back(base);
  out.x = CompactSample<double>::from_curve(base);
  out.xk = CompactSample<double>::from_curve(base);
  out.length_x = out.length_xk = total_variation(base);
  out.mesh = max_segment_length(base);
  for (std::size_t j = 1; j <= circles; ++j) {
    auto g = g_circle(j);
    auto e = j == k ? e_circle(j) : g;
    for (std::size_t i = 0; i < g.size(); ++i) out.x.append(g.point(i));
    for (std::size_t i = 0; i < e.size(); ++i) out.xk.append(e.point(i));
    out.length_x += total_variation(g);
    out.length_xk += total_variation(e);
    out.mesh = std::max({out.mesh, max_segment_length(g), max_segment_length(e)});
    if (j == k) {
      for (std::size_t i = 0; i < g.size(); ++i)
        out.uniform_distance = std::max(out.uniform_distance, std::sqrt(dist2<double>(g.point(i), e.point(i))));
    }
    out.x_model.curves.push_back(std::move(g));
    out.xk_model.curves.push_back(std::move(e));
  }
  out.x_model.sample = out.x;
  out.xk_model.sample = out.xk;
  out.x_model.mesh = out.xk_model.mesh = out.mesh;
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
  return os.str();
}

ConvergenceReport hull_limit_inequality(const std::vector<CompactSample<double>>& xks,
                                        const std::vector<HullModel>& hulls, const CompactSample<double>& x,
                                        unsigned degree, std::size_t trials, std::uint64_t seed) {
  if (xks.size() != hulls.size()) throw InvalidInput("hull_limit_inequality needs matched lists");
  if (x.dim % 2 != 0) throw DimensionMismatch("samples must live in C^n");
  const std::size_t n = x.dim / 2;
  double radius = max_norm(x);
  std::vector<double> dk;
  for (std::size_t k = 0; k < xks.size(); ++k) {
    if (xks[k].dim != x.dim || hulls[k].sample.dim != x.dim) throw DimensionMismatch("samples differ in dimension");
    radius = std::max({radius, max_norm(xks[k]), max_norm(sample_of(hulls[k]))});
    dk.push_back(hausdorff_points(xks[k], x));
  }

  ConvergenceReport rep;
  rep.columns = {"k", "hausdorff_xk_x", "mesh", "max_principle_gap", "max_chain_excess", "violations"};
  std::vector<double> gap(xks.size(), 0), excess(xks.size(), -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> bad(xks.size(), 0);
  SeededRng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    DensePoly p;
    p.nvars = n;
    p.degree = std::max(1u, degree);
    if (t == 0) {
      p.terms.push_back({Exponent(n, 0), 1.0});
    } else {
      std::vector<Exponent> exps;
      for (unsigned d = 0; d <= degree; ++d)
        for (auto& e : exponents_of_degree(n, d)) exps.push_back(e);
      const double s = 1 / std::sqrt(2.0 * static_cast<double>(exps.size()));
      for (auto& e : exps) {
        const double re = rng.normal(), im = rng.normal();
        p.terms.push_back({e, std::complex<double>(re * s, im * s)});
      }
    }
    const double lip = p.lipschitz(radius);
    const double sx = p.sup(x);
    for (std::size_t k = 0; k < xks.size(); ++k) {
      const double tol = 10 * hulls[k].mesh * lip;
      const double sxk = p.sup(xks[k]);
      const double sh = p.sup(hulls[k].sample);
      gap[k] = std::max(gap[k], std::abs(sh - sxk));
      const double ex = sh - sx - lip * dk[k];
      excess[k] = std::max(excess[k], ex);
      if (std::abs(sh - sxk) > tol + 1e-12) {
        ++bad[k];
        rep.violations.push_back("trial " + std::to_string(t) + ", set " + std::to_string(k) +
                                 ": sup over hull " + format_double(sh) + " vs sup over set " + format_double(sxk));
      }
      if (ex > tol + 1e-12) {
        ++bad[k];
        rep.violations.push_back("trial " + std::to_string(t) + ", set " + std::to_string(k) + ": sup over hull " +
                                 format_double(sh) + " exceeds sup over limit plus " + format_double(lip * dk[k]));
      }
    }
  }
  for (std::size_t k = 0; k < xks.size(); ++k) {
    rep.rows.push_back({std::to_string(k), format_double(dk[k]), format_double(hulls[k].mesh), format_double(gap[k]),
                        format_double(excess[k]), std::to_string(bad[k])});
  }
  return rep;
}

template <class T>
std::vector<std::pair<double, double>> first_coordinate(const PolyCurve<T>& c) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(to_double(c.point(i)[0]), to_double(c.point(i)[1]));
  return out;
}

std::vector<std::pair<double, double>> first_coordinate(const CompactSample<double>& s) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.emplace_back(s.point(i)[0], s.point(i)[1]);
  return out;
}

std::string render_svg(const std::vector<SvgLayer>& layers, const std::string& title) {
  constexpr double size = 600, margin = 30, legend = 20;
  double lo[2] = {0, 0}, hi[2] = {0, 0};
  bool first = true;
  for (const auto& l : layers) {
    for (auto [x, y] : l.points) {
      if (first) {
        lo[0] = hi[0] = x;
        lo[1] = hi[1] = y;
        first = false;
      }
      lo[0] = std::min(lo[0], x);
      hi[0] = std::max(hi[0], x);
      lo[1] = std::min(lo[1], y);
      hi[1] = std::max(hi[1], y);
    }
  }
  const double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-12});
  const double scale = (size - 2 * margin) / span;
  auto px = [&](double x) { return margin + (x - lo[0]) * scale; };
  auto py = [&](double y) { return size - margin - (y - lo[1]) * scale; };
  auto f3 = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };

  std::ostringstream os;
  const double height = size + legend * static_cast<double>(layers.size() + 2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f3(size) << "\" height=\"" << f3(height)
     << "\" viewBox=\"0 0 " << f3(size) << " " << f3(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& l : layers) {
    if (l.dots) {
      os << "<g fill=\"" << l.color << "\">\n";
      for (auto [x, y] : l.points) os << "<circle cx=\"" << f3(px(x)) << "\" cy=\"" << f3(py(y)) << "\" r=\"0.8\"/>\n";
      os << "</g>\n";
      continue;
    }
    os << "<" << (l.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << l.color
       << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < l.points.size(); ++i)
      os << (i ? " " : "") << f3(px(l.points[i].first)) << "," << f3(py(l.points[i].second));
    os << "\"/>\n";
  }
  double y = size + legend;
  os << "<text x=\"10\" y=\"" << f3(y) << "\" font-family=\"monospace\" font-size=\"12\">" << title
     << " (projection to the first complex coordinate)</text>\n";
  for (const auto& l : layers) {
    y += legend;
    os << "<rect x=\"10\" y=\"" << f3(y - 10) << "\" width=\"10\" height=\"10\" fill=\"" << l.color << "\"/>\n";
    os << "<text x=\"26\" y=\"" << f3(y) << "\" font-family=\"monospace\" font-size=\"12\">" << l.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

#define PCONVEX_INSTANTIATE(T)                                                            \
  template double max_segment_length<T>(const PolyCurve<T>&);                             \
  template struct SlitAnnulus<T>;                                                         \
  template SlitAnnulus<T> slit_annulus_family<T>(std::size_t, std::size_t);               \
  template GraphFamily<T> graph_family<T>(std::size_t, std::size_t);                      \
  template std::vector<std::pair<double, double>> first_coordinate<T>(const PolyCurve<T>&);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
