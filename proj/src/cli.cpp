#include "pconvex/cli.hpp"

#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "pconvex/closing.hpp"
#include "pconvex/embed.hpp"
#include "pconvex/errors.hpp"
#include "pconvex/hull_lab.hpp"
#include "pconvex/io.hpp"
#include "pconvex/perturb.hpp"
#include "pconvex/shapes.hpp"

namespace pconvex {

namespace {

using Q = Rational;

struct RunConfig {
  std::string mode = "rational";
  std::uint64_t seed = 0;
  double tol = kDefaultTau;
  std::string out = ".";
};

Json length_json(double x) { return x; }
Json length_json(const Surd& x) { return Json{{"exact", x.to_string()}, {"value", x.to_double()}}; }

template <class T>
Json certificate_json(const Certificate<T>& c) {
  Json j{{"form", form_to_json(c.form)},
         {"integral", complex_to_json(c.integral)},
         {"per_two_pi_i", c.per_two_pi_i},
         {"verdict", verdict_name(c.verdict)},
         {"curve_digest", c.curve_digest}};
  j["digest"] = json_digest(j);
  return j;
}

Ball ball_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("radius"))
    throw InvalidInput("ball: expected an object with \"center\" and \"radius\"");
  return Ball(point_from_json<Q>(j.at("center"), "ball.center"), scalar_from_json<Q>(j.at("radius"), "ball.radius"));
}

Json ball_to_json(const Ball& b) {
  return Json{{"center", point_to_json<Q>(b.center)}, {"radius", scalar_to_json(b.radius)}};
}

Tube tube_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("core") || !j.contains("radius"))
    throw InvalidInput("tube: expected an object with \"core\" and \"radius\"");
  return Tube(curve_from_json<Q>(j.at("core")), scalar_from_json<Q>(j.at("radius"), "tube.radius"));
}

template <class T>
CompactSample<T> sample_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw InvalidInput("sample: expected an object with \"dim\" and \"points\"");
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<T> coords;
  for (std::size_t i = 0; i < j.at("points").size(); ++i) {
    const auto where = "points[" + std::to_string(i) + "]";
    const auto p = point_from_json<T>(j.at("points")[i], where);
    if (p.size() != dim) throw InvalidInput(where + ": expected " + std::to_string(dim) + " coordinates");
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return CompactSample<T>(dim, std::move(coords));
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  Json header(const std::string& command, const Json& inputs) const {
    return Json{{"command", command}, {"mode", cfg_.mode}, {"seed", cfg_.seed}, {"tol", cfg_.tol}, {"inputs", inputs}};
  }

  Json load(const std::string& path, Json& inputs, const std::string& key) const {
    Json j = read_json_file(path);
    inputs[key] = json_digest(j);
    return j;
  }

  std::string emit(const std::string& name, const std::string& content) const {
    std::filesystem::create_directories(cfg_.out);
    const auto path = (std::filesystem::path(cfg_.out) / name).string();
    write_file_atomic(path, content);
    out_ << "wrote " << path << "\n";
    return path;
  }
  void emit_json(const std::string& name, const Json& j) const { emit(name, j.dump(2) + "\n"); }

  Tolerance tol() const { return Tolerance{cfg_.tol}; }
  bool exact() const { return parse_mode(cfg_.mode) == NumericMode::rational; }

  const RunConfig& cfg_;
  std::ostream& out_;
};

template <class T>
void run_certify(const Runner& r, const std::string& curve_path, const std::string& form_path) {
  Json inputs;
  auto c = curve_from_json<T>(r.load(curve_path, inputs, "curve"));
  auto f = form_from_json<T>(r.load(form_path, inputs, "form"));
  auto cert = certify(c, f, r.tol());
  Json j = r.header("certify", inputs);
  j["certificate"] = certificate_json(cert);
  r.emit_json("certify.json", j);
  r.out_ << "verdict: " << verdict_name(cert.verdict) << "\n";
}

template <class T>
void run_search(const Runner& r, const std::string& curve_path, unsigned degree) {
  Json inputs;
  auto c = curve_from_json<T>(r.load(curve_path, inputs, "curve"));
  auto cert = certificate_search(c, degree, r.tol());
  Json j = r.header("search", inputs);
  j["max_degree"] = degree;
  j["certificate"] = cert ? certificate_json(*cert) : Json(nullptr);
  r.emit_json("search.json", j);
  r.out_ << (cert ? std::string("found: ") + verdict_name(cert->verdict) : std::string("no certificate up to degree ") +
                                                                                std::to_string(degree))
         << "\n";
}

Json perturb_json(const PerturbResult& p) {
  return Json{{"curve", curve_to_json(p.curve)},
              {"side", side_name(p.side)},
              {"certificate", certificate_json(p.certificate)},
              {"bv_distance", length_json(p.bv_distance)},
              {"sigma_integral", complex_to_json(p.sigma_integral)},
              {"plus_integral", complex_to_json(p.plus_integral)},
              {"minus_integral", complex_to_json(p.minus_integral)},
              {"p", point_to_json<Q>(p.p)},
              {"small_radius", scalar_to_json(p.small_radius)},
              {"replaced_length", length_json(p.replaced_length)},
              {"sup_distance", length_json(p.sup_distance)},
              {"variation_distance", length_json(p.variation_distance)},
              {"first_order_deviation", p.first_order_deviation},
              {"attempts", p.attempts}};
}

// Perturbation is exact; f64 input is converted exactly.
PolyCurve<Q> exact_curve(const Runner& r, const Json& j) {
  return r.exact() ? curve_from_json<Q>(j) : curve_from_json<double>(j).convert<Q>();
}

void run_perturb(const Runner& r, const std::string& curve_path, const std::string& ball_path, const std::string& eps_text,
                 bool smooth, const std::string& amplitude) {
  Json inputs;
  auto c = exact_curve(r, r.load(curve_path, inputs, "curve"));
  const Ball b = ball_from_json(r.load(ball_path, inputs, "ball"));
  const Q eps = parse_rational(eps_text);
  PerturbResult p;
  if (smooth) {
    SmoothOptions opts;
    opts.tol = r.tol();
    if (!amplitude.empty()) opts.amplitude = parse_rational(amplitude);
    p = perturb_smooth(c, eps, b, r.cfg_.seed, opts);
  } else {
    p = perturb_rectifiable(c, eps, b, r.cfg_.seed);
  }
  const std::string check = verify_perturbation(c, eps, b, p, !smooth);
  if (!check.empty()) throw std::logic_error("perturbation failed re-verification: " + check);
  Json j = r.header(smooth ? "perturb-smooth" : "perturb", inputs);
  j["eps"] = scalar_to_json(eps);
  j["ball"] = ball_to_json(b);
  j["result"] = perturb_json(p);
  j["verified"] = true;
  r.emit_json(smooth ? "perturb-smooth.json" : "perturb.json", j);
  r.out_ << "side: " << side_name(p.side) << ", verdict: " << verdict_name(p.certificate.verdict) << "\n";
}

void run_close(const Runner& r, const std::string& arc_path, const std::string& tube_path) {
  Json inputs;
  auto arc = exact_curve(r, r.load(arc_path, inputs, "arc"));
  const Tube t = tube_from_json(r.load(tube_path, inputs, "tube"));
  auto ca = close_arc(arc, t, r.cfg_.seed);
  Json j = r.header("close", inputs);
  j["curve"] = curve_to_json(ca.curve);
  j["curve_digest"] = curve_digest(ca.curve);
  j["short_connector"] = ca.short_connector;
  j["attempts"] = ca.attempts;
  r.emit_json("close.json", j);
  r.out_ << "closed curve with " << ca.curve.size() << " vertices\n";
}

void run_contain(const Runner& r, const std::string& arc_path, const std::string& tube_path, const std::string& eps_text) {
  Json inputs;
  auto arc = exact_curve(r, r.load(arc_path, inputs, "arc"));
  const Tube t = tube_from_json(r.load(tube_path, inputs, "tube"));
  const Q eps = parse_rational(eps_text);
  auto res = contain_in_pc_curve(arc, t, eps, r.cfg_.seed);
  Json j = r.header("contain", inputs);
  j["eps"] = scalar_to_json(eps);
  j["ball"] = ball_to_json(res.ball);
  j["closed_curve"] = curve_to_json(res.closed.curve);
  j["curve"] = curve_to_json(res.curve());
  j["certificate"] = certificate_json(res.certificate());
  r.emit_json("contain.json", j);
  r.out_ << "verdict: " << verdict_name(res.certificate().verdict) << "\n";
}

template <class T>
void run_embed(const Runner& r, const std::string& map_path, const std::string& eps_text) {
  Json inputs;
  auto g = bvmap_from_json<T>(r.load(map_path, inputs, "map"));
  T eps;
  if constexpr (NumTraits<T>::exact) eps = parse_rational(eps_text);
  else {
    const Q q = parse_rational(eps_text);
    eps = q.get_num().get_d() / q.get_den().get_d();
  }
  auto res = make_injective(g, eps, r.cfg_.seed, r.tol());
  Json stages = Json::array();
  for (const auto& s : res.stages) {
    stages.push_back(Json{{"v", point_to_json<T>(s.v)},
                          {"deviation", length_json(s.deviation)},
                          {"svd_deviation", s.svd_deviation},
                          {"trial", s.trial}});
  }
  Json j = r.header("embed", inputs);
  j["eps"] = scalar_to_json(eps);
  j["map"] = bvmap_to_json(res.map);
  j["unchanged"] = res.unchanged;
  j["stages"] = stages;
  j["bv_distance"] = length_json(res.bv_distance);
  j["budget_ok"] = res.budget_ok;
  r.emit_json("embed.json", j);
  r.out_ << (res.unchanged ? "input already injective" : "injective map written") << "\n";
}

template <class T>
void run_hausdorff(const Runner& r, const std::string& a_path, const std::string& b_path, double h) {
  Json inputs;
  const Json ja = r.load(a_path, inputs, "a"), jb = r.load(b_path, inputs, "b");
  Json j = r.header("hausdorff", inputs);
  const bool curves = ja.contains("closed") && jb.contains("closed");
  if (curves) {
    auto a = curve_from_json<T>(ja), b = curve_from_json<T>(jb);
    if (!(h > 0)) h = std::min(mesh_size(a), mesh_size(b)) / 4;
    T ht;
    if constexpr (NumTraits<T>::exact) ht = snap(h, 40);
    else ht = h;
    if (sign_of(ht) <= 0) ht = T(1) / T(1024);
    j["kind"] = "polylines";
    j["h"] = scalar_to_json(ht);
    j["distance"] = length_json(hausdorff_polylines(a, b, ht));
  } else {
    auto a = ja.contains("closed") ? CompactSample<T>::from_curve(curve_from_json<T>(ja)) : sample_from_json<T>(ja);
    auto b = jb.contains("closed") ? CompactSample<T>::from_curve(curve_from_json<T>(jb)) : sample_from_json<T>(jb);
    j["kind"] = "samples";
    j["distance"] = length_json(hausdorff_points(a, b));
  }
  r.emit_json("hausdorff.json", j);
  r.out_ << "distance: " << j["distance"].dump() << "\n";
}

std::string provenance(const RunConfig& cfg, const std::string& what) {
  return "pconvex " + what + " mode=" + cfg.mode + " seed=" + std::to_string(cfg.seed);
}

void emit_demo(const Runner& r, const std::string& name, const std::string& prov, ConvergenceReport rep,
               const std::vector<SvgLayer>& layers) {
  const std::string digest = sha256_hex(rep.to_csv());
  r.emit(name + ".csv", "# " + prov + " sha256=" + digest + "\n" + rep.to_csv());
  std::string svg = render_svg(layers, name);
  svg.insert(svg.find('\n') + 1, "<!-- " + prov + " -->\n");
  r.emit(name + ".svg", svg);
  for (const auto& v : rep.violations) r.out_ << "violation: " << v << "\n";
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

void demo_slit(const Runner& r, const std::vector<std::size_t>& ks, std::size_t n) {
  ConvergenceReport rep;
  rep.columns = {"k", "n", "mesh", "hausdorff_curve_circle", "bound", "winding_about_0", "distance_0_to_hull", "ok"};
  const auto circle = regular_polygon<double>(4096);
  std::vector<SvgLayer> layers{{"unit circle", "#000000", first_coordinate(circle), true, false}};
  std::size_t color = 0;
  for (std::size_t k : ks) {
    auto s = slit_annulus_family<Q>(k, n);
    const double mesh = max_segment_length(s.curve);
    const auto cf = s.curve.convert<double>();
    const double d = hausdorff_polylines(cf, circle, mesh / 4);
    const long w = winding_number(s.curve, CPolynomial<Q>::variable(1, 0));
    const double origin[2] = {0, 0};
    const double d0 = s.hull.distance(origin);
    const double bound = 1.0 / static_cast<double>(k) + mesh;
    const bool ok = d <= bound && w == 0 && d0 >= 1 - mesh;
    rep.rows.push_back({std::to_string(k), std::to_string(n), format_double(mesh), format_double(d), format_double(bound),
                        std::to_string(w), format_double(d0), ok ? "1" : "0"});
    if (!ok) rep.violations.push_back("k=" + std::to_string(k));
    layers.push_back({"gamma_" + std::to_string(k), kPalette[color++ % 8], first_coordinate(cf), true, false});
  }
  emit_demo(r, "demo-slit", provenance(r.cfg_, "demo slit n=" + std::to_string(n)), rep, layers);
}

void demo_graph(const Runner& r, const std::vector<std::size_t>& ks, std::size_t n, unsigned degree) {
  ConvergenceReport rep;
  rep.columns = {"k", "n", "mesh", "hausdorff_sigma_k_sigma", "bound", "sigma_integral_im", "sigma_k_max_abs_integral",
                 "sigma_k_certificate", "ok"};
  std::vector<SvgLayer> layers;
  std::size_t color = 0;
  for (std::size_t k : ks) {
    auto g = graph_family<Q>(k, n);
    auto cert = certify(g.sigma, OneForm<Q>::monomial({0, 1}, 0));
    auto ints = monomial_integrals(g.sigma_k, degree);
    double worst = 0;
    for (const auto& v : ints) worst = std::max(worst, std::hypot(v.re.get_d(), v.im.get_d()));
    auto found = certificate_search(g.sigma_k, degree);
    const auto sk = g.sigma_k_polyline.convert<double>();
    const auto s = g.sigma.convert<double>();
    const double mesh = std::max(max_segment_length(sk), max_segment_length(s));
    const double d = hausdorff_polylines(sk, s, mesh / 4);
    const double bound = 3.0 / static_cast<double>(k) + mesh;
    const bool ok = d <= bound && !found && worst == 0 && cert.certified();
    rep.rows.push_back({std::to_string(k), std::to_string(n), format_double(mesh), format_double(d), format_double(bound),
                        format_double(cert.integral_value().second), format_double(worst), found ? "found" : "none",
                        ok ? "1" : "0"});
    if (!ok) rep.violations.push_back("k=" + std::to_string(k));
    if (layers.empty()) layers.push_back({"sigma", "#000000", first_coordinate(s), true, false});
    layers.push_back({"sigma_" + std::to_string(k), kPalette[color++ % 8], first_coordinate(sk), true, false});
  }
  emit_demo(r, "demo-graph", provenance(r.cfg_, "demo graph n=" + std::to_string(n)), rep, layers);
}

void demo_kallin(const Runner& r, const std::vector<std::size_t>& ks, std::size_t m, unsigned degree, std::size_t trials) {
  ConvergenceReport rep;
  rep.columns = {"k", "m", "limit_gap", "witness_distance", "length_xk", "length_bound", "uniform_distance",
                 "hull_violations"};
  std::vector<CompactSample<double>> xs;
  std::vector<HullModel> hulls;
  CompactSample<double> x;
  std::vector<KallinData> data;
  for (std::size_t k : ks) {
    data.push_back(kallin_example(k, m));
    xs.push_back(data.back().xk);
    hulls.push_back(data.back().xk_hull_model);
    x = data.back().x;
  }
  auto ineq = hull_limit_inequality(xs, hulls, x, degree, trials, r.cfg_.seed);
  std::vector<SvgLayer> layers;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto& d = data[i];
    rep.rows.push_back({std::to_string(ks[i]), std::to_string(m), format_double(d.limit_gap),
                        format_double(d.witness_distance), format_double(d.length_xk), format_double(d.length_bound),
                        format_double(d.uniform_distance), ineq.rows[i].back()});
  }
  rep.violations = ineq.violations;
  if (!data.empty()) {
    layers.push_back({"hull of X (sample)", "#bbbbbb", first_coordinate(data.front().x_hull), false, true});
    layers.push_back({"X_" + std::to_string(ks.front()), kPalette[0], first_coordinate(data.front().xk), false, true});
  }
  emit_demo(r, "demo-kallin", provenance(r.cfg_, "demo kallin m=" + std::to_string(m)), rep, layers);
}

void demo_tangent(const Runner& r, const std::vector<std::size_t>& ks, std::size_t circles, std::size_t m) {
  ConvergenceReport rep;
  rep.columns = {"k", "circles", "m", "mesh", "uniform_distance", "length_x", "length_xk"};
  std::vector<SvgLayer> layers;
  for (std::size_t k : ks) {
    auto t = tangent_circles(k, circles, m);
    rep.rows.push_back({std::to_string(k), std::to_string(circles), std::to_string(m), format_double(t.mesh),
                        format_double(t.uniform_distance), format_double(t.length_x), format_double(t.length_xk)});
    if (std::abs(t.length_x - t.length_xk) > t.mesh) rep.violations.push_back("lengths differ at k=" + std::to_string(k));
    if (layers.empty()) layers.push_back({"X", "#000000", first_coordinate(t.x), false, true});
  }
  emit_demo(r, "demo-tangent", provenance(r.cfg_, "demo tangent m=" + std::to_string(m)), rep, layers);
}

const char* kCsvHelp =
    "CSV columns:\n"
    "  demo slit:    k,n,mesh,hausdorff_curve_circle,bound,winding_about_0,distance_0_to_hull,ok\n"
    "  demo graph:   k,n,mesh,hausdorff_sigma_k_sigma,bound,sigma_integral_im,sigma_k_max_abs_integral,"
    "sigma_k_certificate,ok\n"
    "  demo kallin:  k,m,limit_gap,witness_distance,length_xk,length_bound,uniform_distance,hull_violations\n"
    "  demo tangent: k,circles,m,mesh,uniform_distance,length_x,length_xk\n"
    "Each CSV starts with a '#' line recording the parameters, mode, seed and a digest of the table.\n"
    "Exit status: 0 success, 1 malformed input, 2 domain error, 3 retry limit exhausted.";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Polynomial convexity experiments for curves in C^n"};
  app.footer(kCsvHelp);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--mode", cfg.mode, "Numeric mode")->check(CLI::IsMember({"rational", "f64"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Float-mode tolerance")->capture_default_str();
  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();

  std::string curve, form, ball, eps = "1/10", amplitude, arc, tube, map, a, b;
  unsigned degree = 3;
  double h = 0;
  auto* c_certify = app.add_subcommand("certify", "Integrate a one-form over a closed curve");
  c_certify->add_option("--curve", curve)->required();
  c_certify->add_option("--form", form)->required();
  auto* c_search = app.add_subcommand("search", "Search monomial one-forms by degree");
  c_search->add_option("--curve", curve)->required();
  c_search->add_option("--degree", degree)->capture_default_str();
  auto* c_perturb = app.add_subcommand("perturb", "Perturb a closed polyline into a certified one");
  auto* c_smooth = app.add_subcommand("perturb-smooth", "Bump-function perturbation");
  for (auto* sc : {c_perturb, c_smooth}) {
    sc->add_option("--curve", curve)->required();
    sc->add_option("--ball", ball)->required();
    sc->add_option("--eps", eps)->capture_default_str();
  }
  c_smooth->add_option("--amplitude", amplitude, "Bump height (default eps/4)");
  auto* c_close = app.add_subcommand("close", "Close an arc inside a tube");
  auto* c_contain = app.add_subcommand("contain", "Certified closed curve containing an arc");
  for (auto* sc : {c_close, c_contain}) {
    sc->add_option("--arc", arc)->required();
    sc->add_option("--tube", tube)->required();
  }
  c_contain->add_option("--eps", eps)->capture_default_str();
  auto* c_embed = app.add_subcommand("embed", "Injective map close in bv norm");
  c_embed->add_option("--map", map)->required();
  c_embed->add_option("--eps", eps)->capture_default_str();
  auto* c_haus = app.add_subcommand("hausdorff", "Hausdorff distance of curves or samples");
  c_haus->add_option("--a", a)->required();
  c_haus->add_option("--b", b)->required();
  c_haus->add_option("--step", h, "Refinement mesh for polylines (default: quarter of the finer mesh)");

  auto* c_demo = app.add_subcommand("demo", "Convergence demonstrations (CSV + SVG)");
  c_demo->require_subcommand(1);
  std::vector<std::size_t> ks{2, 4, 8, 16};
  std::size_t n = 512, m = 512, circles = 8, trials = 50;
  auto* d_slit = c_demo->add_subcommand("slit", "Curves in slit annuli around the unit circle");
  auto* d_graph = c_demo->add_subcommand("graph", "Images under z -> (z, 1/z)");
  auto* d_kallin = c_demo->add_subcommand("kallin", "Two circles lifted to C^2");
  auto* d_tangent = c_demo->add_subcommand("tangent", "Circle with tangent circles in C^2");
  for (auto* sc : {d_slit, d_graph, d_kallin, d_tangent}) sc->add_option("--k", ks, "Values of k")->capture_default_str();
  for (auto* sc : {d_slit, d_graph}) sc->add_option("--n", n, "Vertices per curve")->capture_default_str();
  for (auto* sc : {d_kallin, d_tangent}) sc->add_option("--m", m, "Samples per component")->capture_default_str();
  d_graph->add_option("--degree", degree)->capture_default_str();
  d_kallin->add_option("--degree", degree)->capture_default_str();
  d_kallin->add_option("--trials", trials)->capture_default_str();
  d_tangent->add_option("--circles", circles)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_malformed;
  }

  Runner r(cfg, out);
  const bool exact = parse_mode(cfg.mode) == NumericMode::rational;
  try {
    if (c_certify->parsed()) {
      exact ? run_certify<Q>(r, curve, form) : run_certify<double>(r, curve, form);
    } else if (c_search->parsed()) {
      exact ? run_search<Q>(r, curve, degree) : run_search<double>(r, curve, degree);
    } else if (c_perturb->parsed() || c_smooth->parsed()) {
      run_perturb(r, curve, ball, eps, c_smooth->parsed(), amplitude);
    } else if (c_close->parsed()) {
      run_close(r, arc, tube);
    } else if (c_contain->parsed()) {
      run_contain(r, arc, tube, eps);
    } else if (c_embed->parsed()) {
      exact ? run_embed<Q>(r, map, eps) : run_embed<double>(r, map, eps);
    } else if (c_haus->parsed()) {
      exact ? run_hausdorff<Q>(r, a, b, h) : run_hausdorff<double>(r, a, b, h);
    } else if (d_slit->parsed()) {
      demo_slit(r, ks, n);
    } else if (d_graph->parsed()) {
      demo_graph(r, ks, n, degree);
    } else if (d_kallin->parsed()) {
      demo_kallin(r, ks, m, degree, trials);
    } else if (d_tangent->parsed()) {
      demo_tangent(r, ks, circles, m);
    }
  } catch (const InvalidInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return exit_malformed;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return exit_malformed;
  } catch (const RetryExhausted& e) {
    err << "retry limit exhausted: " << e.what() << "\n";
    return exit_retry;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_ok;
}

}  // namespace pconvex
