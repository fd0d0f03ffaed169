#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "hardy/basis_lab.hpp"
#include "hardy/carleson.hpp"
#include "hardy/classical.hpp"
#include "hardy/drury.hpp"
#include "hardy/io.hpp"
#include "hardy/kernels.hpp"
#include "hardy/parallel.hpp"
#include "hardy/peak.hpp"
#include "hardy/pick.hpp"

namespace hardy::cli {

namespace {

using io::json;

struct Flags {
  std::string config;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::string out;
  std::string grid = "200x720";
  std::optional<double> m;
  std::optional<double> budget;
};

struct Grid {
  std::size_t radial = 200;
  std::size_t angular = 720;
};

struct Context {
  const Flags& flags;
  json config;  // null when no --config was given
  Grid grid;
  CertifyOptions certify;
};

struct Report {
  json outputs = json::object();
  json certificates = json::array();
  std::string verdict = "PASS";
  json error = nullptr;

  void certify(const CertifiedBound& b, const std::string& tag) { certificates.push_back(io::bound_json(b, tag)); }
  void require(bool ok) {
    if (!ok) verdict = "FAIL";
  }
};

using Handler = std::function<void(const Context&, Report&)>;

// ---- config helpers ----

json load_config(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    text = s.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io::InputError("", "cannot read config file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::InputError("", std::string("malformed JSON: ") + e.what());
  }
}

const json& need_config(const Context& ctx) {
  if (ctx.config.is_null()) throw io::InputError("", "this subcommand needs --config");
  if (!ctx.config.is_object()) throw io::InputError("", "config must be a JSON object");
  return ctx.config;
}

double number_or(const json& obj, const std::string& key, double fallback) {
  return io::has(obj, key) ? io::read_number(obj[key], "/" + key) : fallback;
}

long long integer_or(const json& obj, const std::string& key, long long fallback) {
  return io::has(obj, key) ? io::read_integer(obj[key], "/" + key) : fallback;
}

Rational rational_at(const json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
      throw io::InputError(pointer, e.what());
    }
  }
  throw io::InputError(pointer, "expected an exact number: an integer or a string like \"3/4\" or \"0.25\"");
}

NodeSequence nodes_at(const json& obj, const std::string& key) {
  const auto zs = io::read_complex_list(io::member(obj, key, ""), "/" + key);
  for (std::size_t i = 0; i < zs.size(); ++i) io::at(io::child("/" + key, i), [&] { return InteriorPoint(zs[i]); });
  return io::at("/" + key, [&] { return NodeSequence(zs); });
}

Grid parse_grid(const std::string& text) {
  const auto x = text.find('x');
  Grid g;
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    g.radial = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    g.angular = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw io::InputError("", "--grid must look like <n_r>x<n_theta>, got '" + text + "'");
  }
  if (g.radial == 0 || g.angular == 0) throw io::InputError("", "--grid sizes must be positive");
  return g;
}

json doubles(const std::vector<double>& v) {
  json a = json::array();
  for (const double x : v) a.push_back(io::number_json(x));
  return a;
}

json fn_list(const std::vector<AnalyticFn>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(io::fn_to_json(f));
  return a;
}

json vector_json(const Eigen::VectorXcd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(io::complex_json(v(i)));
  return a;
}

std::string rational_text(const Rational& r) { return r.str(); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::InputError("", "cannot write '" + path + "'");
  f << text;
}

// boundary CSV of sum |f| on n points
std::string boundary_csv(std::span<const AnalyticFn> fns, std::size_t n) {
  std::vector<cplx> pts(n);
  for (std::size_t k = 0; k < n; ++k) pts[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  std::vector<double> vals(n);
  kernels::sum_abs_grid(fns, pts, vals, ExecPolicy::parallel);
  std::ostringstream csv;
  csv << std::setprecision(17) << "re,im,value\n";
  for (std::size_t k = 0; k < n; ++k) csv << pts[k].real() << ',' << pts[k].imag() << ',' << vals[k] << '\n';
  return csv.str();
}

// ---- subcommands ----

void carleson_check(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const NodeSequence nodes = nodes_at(cfg, "nodes");
  if (nodes.empty()) throw io::InputError("/nodes", "need at least one node");
  const CarlesonReport c = carleson_constant(nodes);
  r.outputs["constant"] = c.constant;
  r.outputs["worst_index"] = c.worst_index;
  r.outputs["per_index"] = doubles(c.per_index);
  r.outputs["method"] = "exact";
  const std::optional<double> m = ctx.flags.m ? ctx.flags.m
                                  : io::has(cfg, "m") ? std::optional<double>(io::read_number(cfg["m"], "/m"))
                                                      : std::nullopt;
  r.outputs["m"] = m ? json(*m) : json(nullptr);
  if (m) r.require(c.constant > *m);
  const bool duals = io::has(cfg, "duals") && cfg["duals"].is_boolean() && cfg["duals"].get<bool>();
  r.outputs["duals"] = nullptr;
  if (duals) {
    const DualSystem ds = dual_functions(nodes, ctx.certify);
    r.outputs["duals"] = {{"functions", fn_list(ds.functions)},
                          {"max_residual", ds.max_residual},
                          {"blaschke_at_node", io::complex_list_json(ds.blaschke_at_node)}};
    r.certify(ds.bound.bound, "sup sum |g_k|");
  }
}

void radii_search_cmd(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const json& raw = io::member(cfg, "anchors", "");
  if (!raw.is_array() || raw.empty()) throw io::InputError("/anchors", "anchors must be a nonempty array");
  std::vector<cplx> anchors;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string p = io::child("/anchors", i);
    const cplx a = raw[i].is_number() ? std::polar(1.0, raw[i].get<double>()) : io::read_complex(raw[i], p);
    io::at(p, [&] { return BoundaryPoint(a); });
    anchors.push_back(a);
  }
  const double m = ctx.flags.m ? *ctx.flags.m : io::read_number(io::member(cfg, "m", ""), "/m");
  std::vector<double> eps;
  if (ctx.flags.budget) eps.assign(anchors.size(), *ctx.flags.budget);
  else if (io::has(cfg, "budgets")) eps = io::read_number_list(cfg["budgets"], "/budgets");
  else eps.assign(anchors.size(), 0.5 * m / static_cast<double>(anchors.size()));
  RadiiOptions ro;
  ro.boundary_samples = static_cast<int>(integer_or(cfg, "boundary_samples", ro.boundary_samples));
  const RadiiResult res = io::at("", [&] { return radii_search(anchors, m, eps, ro); });
  const auto trials = static_cast<std::size_t>(integer_or(cfg, "trials", 10000));
  const RadiiValidation v = validate_radii(anchors, res.tau, m, trials, ctx.flags.seed);
  r.outputs["m"] = m;
  r.outputs["budgets"] = doubles(eps);
  r.outputs["d"] = doubles(res.d);
  r.outputs["tau"] = doubles(res.tau);
  r.outputs["tau_method"] = "heuristic";
  r.outputs["eta"] = doubles(res.eta);
  r.outputs["eta_method"] = "certified";
  r.outputs["sampled_products"] = doubles(res.certified_products);
  r.outputs["validation"] = {{"trials", v.trials},
                             {"failures", v.failures},
                             {"min_constant", v.min_constant},
                             {"method", "empirical"}};
  r.require(v.failures == 0);
}

PickProblem pick_problem(const json& cfg) {
  const NodeSequence nodes = nodes_at(cfg, "nodes");
  auto targets = io::read_complex_list(io::member(cfg, "targets", ""), "/targets");
  std::optional<double> cap;
  if (io::has(cfg, "cap") && !cfg["cap"].is_null()) cap = io::read_number(cfg["cap"], "/cap");
  return io::at("", [&] { return PickProblem(nodes, std::move(targets), cap); });
}

void pick_solve(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const PickProblem problem = pick_problem(cfg);
  const double slack = number_or(cfg, "slack", 1.01);
  const double mstar = minimal_norm(problem);
  r.outputs["minimal_norm"] = mstar;
  r.outputs["minimal_norm_method"] = "bisection on the smallest Pick eigenvalue";
  r.outputs["feasibility"] = nullptr;
  r.outputs["interpolant"] = nullptr;
  r.outputs["M"] = nullptr;
  r.outputs["residual"] = nullptr;
  if (problem.cap) {
    const Feasibility f = pick_feasible(problem);
    r.outputs["feasibility"] = {{"feasible", f.feasible},
                                {"min_eigenvalue", f.min_eigenvalue},
                                {"threshold", f.threshold},
                                {"certificate", vector_json(f.certificate)}};
    if (!f.feasible) {
      r.verdict = "FAIL";
      r.error = {{"type", "infeasible"},
                 {"message", "Pick matrix at the cap is not positive semidefinite"},
                 {"min_eigenvalue", f.min_eigenvalue}};
      return;
    }
  }
  const PickSolution sol = solve_and_certify(problem, problem.cap, slack, ctx.certify);
  r.outputs["interpolant"] = io::fn_to_json(sol.f);
  r.outputs["M"] = sol.M;
  r.outputs["residual"] = sol.residual;
  r.certify(sol.sup, "sup |f|");
  r.require(sol.residual < kInterpolationTolerance && sol.within_bound);
}

void drury_construct(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const NodeSequence nodes = nodes_at(cfg, "nodes");
  const double slack = number_or(cfg, "slack", 1.01);
  const DruryOutput out = construct_beta(nodes, slack, ctx.certify);
  std::mt19937_64 rng(ctx.flags.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double plancherel = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const cplx z = std::polar(std::sqrt(u(rng)), kTwoPi * u(rng));
    plancherel = std::max(plancherel, plancherel_residual(out, ClosedPoint(z)));
  }
  r.outputs["nodes"] = io::complex_list_json(std::vector<cplx>(nodes.values().begin(), nodes.values().end()));
  r.outputs["slack"] = out.slack;
  r.outputs["minimal_norms"] = doubles(out.minimal_norms);
  r.outputs["M_used"] = out.M_used;
  r.outputs["v"] = fn_list(out.v);
  r.outputs["phi"] = fn_list(out.phi);
  r.outputs["beta"] = fn_list(out.beta);
  r.outputs["biorthogonality_residual"] = out.biorthogonality_residual;
  r.outputs["bound_limit"] = out.M_used * out.M_used * slack * slack;
  r.outputs["plancherel_max_residual"] = plancherel;
  r.outputs["plancherel_points"] = 1000;
  r.outputs["csv"] = ctx.flags.out.empty() ? json(nullptr) : json(ctx.flags.out);
  r.certify(out.bound.bound, "sup sum |beta_j|");
  if (!ctx.flags.out.empty()) write_text(ctx.flags.out, boundary_csv(out.beta, ctx.grid.angular));
  r.require(out.biorthogonality_residual < kBiorthogonalityTolerance && plancherel < 1e-9);
}

PeakSystem peak_from(const Context& ctx, const json& cfg) {
  const ArcSystem spec = io::arc_system_from_json(cfg);
  const auto n = io::has(cfg, "truncation") ? static_cast<std::size_t>(io::read_integer(cfg["truncation"], "/truncation"))
                                            : spec.size();
  if (n == 0 || n > spec.size()) throw io::InputError("/truncation", "truncation must lie in 1..number of arcs");
  return build_system(spec, n, ctx.certify);
}

void peak_build(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const PeakSystem sys = peak_from(ctx, cfg);
  r.outputs["arc_system"] = io::arc_system_json(sys.arc_system);
  r.outputs["truncation"] = sys.truncation;
  r.outputs["exponents"] = sys.exponents;
  r.outputs["functions"] = fn_list(sys.functions);
  r.outputs["tail_budget"] = sys.tail_budget;
  r.outputs["argmax"] = io::complex_json(sys.bound.argmax);
  r.certify(sys.bound.bound, "M = sup sum |g_n|");
  for (std::size_t n = 0; n < sys.off_region.size(); ++n)
    r.certify(sys.off_region[n], "sup |g_" + std::to_string(n) + "| off its chord region");
  r.outputs["synthesis"] = nullptr;
  if (io::has(cfg, "c")) {
    const auto c = io::read_complex_list(cfg["c"], "/c");
    if (c.size() != sys.truncation) throw io::InputError("/c", "c must have one entry per function");
    const SynthesisCheck sc = check_synthesis(sys, c, ctx.certify);
    r.outputs["synthesis"] = {{"c_norm", sc.c_norm}, {"lower_ok", sc.lower_ok}, {"upper_ok", sc.upper_ok}};
    r.certify(sc.norm, "sup |sum c_n g_n|");
    r.require(sc.lower_ok && sc.upper_ok);
  }
  r.require(sys.bound.bound.upper() <= 1.0 + sys.arc_system.epsilon);
}

void heatmap(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  std::vector<AnalyticFn> fns;
  std::string source;
  if (io::has(cfg, "arcs")) {
    fns = peak_from(ctx, cfg).functions;
    source = "peak system";
  } else if (io::has(cfg, "functions")) {
    const json& fs = cfg["functions"];
    if (!fs.is_array()) throw io::InputError("/functions", "functions must be an array");
    for (std::size_t i = 0; i < fs.size(); ++i) fns.push_back(io::fn_from_json(fs[i], io::child("/functions", i)));
    source = "functions";
  } else if (io::has(cfg, "nodes")) {
    fns = dual_function_trees(nodes_at(cfg, "nodes"));
    source = "carleson duals";
  } else {
    throw io::InputError("", "config needs one of 'arcs', 'functions' or 'nodes'");
  }
  const Grid g = ctx.grid;
  std::vector<cplx> pts;
  pts.reserve(g.radial * g.angular);
  for (std::size_t i = 0; i < g.radial; ++i)
    for (std::size_t k = 0; k < g.angular; ++k)
      pts.push_back(std::polar(static_cast<double>(i + 1) / static_cast<double>(g.radial),
                               kTwoPi * static_cast<double>(k) / static_cast<double>(g.angular)));
  std::vector<double> vals(pts.size());
  kernels::sum_abs_grid(fns, pts, vals, ExecPolicy::parallel);
  std::ostringstream csv;
  csv << std::setprecision(17) << "re,im,value\n";
  double top = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    csv << pts[i].real() << ',' << pts[i].imag() << ',' << vals[i] << '\n';
    top = std::max(top, vals[i]);
  }
  const std::string path = ctx.flags.out.empty() ? "heatmap.csv" : ctx.flags.out;
  write_text(path, csv.str());
  r.outputs["source"] = source;
  r.outputs["functions"] = fns.size();
  r.outputs["csv"] = path;
  r.outputs["grid"] = {{"n_r", g.radial}, {"n_theta", g.angular}};
  r.outputs["rows"] = pts.size();
  r.outputs["grid_max"] = top;
  r.outputs["grid_max_method"] = "grid";
}

FiniteSystem system_at(const json& cfg, const std::string& key) {
  if (io::has(cfg, key)) return io::system_from_json(cfg[key], "/" + key);
  return io::system_from_json(cfg, "");
}

double ambient(const json& cfg) {
  const double q = number_or(cfg, "q", 1.0);
  if (!(q >= 1.0)) throw io::InputError("/q", "q must be >= 1 or \"inf\"");
  return q;
}

void pw_margin(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const FiniteSystem s = system_at(cfg, "system");
  const double q = ambient(cfg);
  const double theta = number_or(cfg, "theta", 0.01);
  const MarginReport m = io::at("", [&] { return paley_wiener_margin(s, q, theta); });
  r.outputs["q"] = io::number_json(q);
  r.outputs["nu"] = m.nu;
  r.outputs["eta"] = m.eta;
  r.outputs["theta"] = m.theta;
  r.outputs["method"] = m.method;
  r.outputs["witness"] = vector_json(m.witness);
}

void perturb_check(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const FiniteSystem base = io::system_from_json(io::member(cfg, "base", ""), "/base");
  const FiniteSystem moved = io::system_from_json(io::member(cfg, "perturbed", ""), "/perturbed");
  const double q = ambient(cfg);
  const PerturbationVerdict v = io::at("", [&] { return perturb_and_check(base, moved, q); });
  r.outputs["q"] = io::number_json(q);
  r.outputs["lambda_hat"] = v.lambda_hat;
  r.outputs["lambda_upper"] = v.lambda_upper;
  r.outputs["pass"] = v.pass;
  r.outputs["inverse_bound"] = io::number_json(v.inverse_bound);
  r.outputs["method"] = v.method;
  r.require(v.pass);
}

json constants_json(const ConstantsReport& c) {
  return {{"hilbertian", c.hilbertian},
          {"besselian", c.besselian},
          {"hilbertian_upper", io::number_json(c.hilbertian_upper)},
          {"besselian_lower", c.besselian_lower},
          {"hilbertian_method", c.hilbertian_method},
          {"besselian_method", c.besselian_method},
          {"method", c.method},
          {"hilbertian_witness", vector_json(c.hilbertian_witness)},
          {"besselian_witness", vector_json(c.besselian_witness)}};
}

void riesz_example_cmd(const Context& ctx, Report& r) {
  const json cfg = ctx.config.is_null() ? json::object() : need_config(ctx);
  const long long N = integer_or(cfg, "N", 3);
  if (N < 1) throw io::InputError("/N", "N must be at least 1");
  const double p = number_or(cfg, "p", 2.0);
  const FiniteSystem s = io::at("/p", [&] { return riesz_example(static_cast<std::size_t>(N), p); });
  ConstantsOptions co;
  co.seed = ctx.flags.seed;
  const ConstantsReport c = constants(s, co);
  r.outputs["N"] = N;
  r.outputs["p"] = p;
  r.outputs["system"] = io::system_json(s);
  r.outputs["biorthogonality_error"] = s.biorthogonality_error();
  r.outputs["rho"] = riesz_rho(static_cast<std::size_t>(N), p);
  r.outputs["witness_ratio"] = riesz_witness_ratio(s);
  r.outputs["constants"] = constants_json(c);
  r.outputs["blocks"] = nullptr;
  if (io::has(cfg, "interleaved_depth")) {
    const long long depth = io::read_integer(cfg["interleaved_depth"], "/interleaved_depth");
    if (depth < 2) throw io::InputError("/interleaved_depth", "depth must be at least 2");
    const FiniteSystem il = interleaved_example(static_cast<std::size_t>(depth), p);
    json blocks = json::array();
    for (const auto& b : block_witness_ratios(il, static_cast<std::size_t>(depth)))
      blocks.push_back({{"N", b.N}, {"primal", b.primal}, {"ratio", b.ratio}, {"expected", b.expected}});
    r.outputs["blocks"] = blocks;
  }
}

void sidon_check(const Context& ctx, Report& r) {
  const json cfg = ctx.config.is_null() ? json::object() : need_config(ctx);
  const Rational q = io::has(cfg, "q") ? rational_at(cfg["q"], "/q") : Rational(2);
  const auto qn = boost::multiprecision::numerator(q), qd = boost::multiprecision::denominator(q);
  if (q <= 1 || qn > std::numeric_limits<std::int64_t>::max() || qd > std::numeric_limits<std::int64_t>::max())
    throw io::InputError("/q", "q must be a rational number above 1");
  const long long count = integer_or(cfg, "count", 8);
  const long long first = integer_or(cfg, "first", 1);
  if (count < 1) throw io::InputError("/count", "count must be positive");
  if (first < 1) throw io::InputError("/first", "first must be positive");
  const auto trials = static_cast<std::size_t>(integer_or(cfg, "trials", 500));
  const auto grid = static_cast<std::size_t>(integer_or(cfg, "grid", 4096));
  const LacunarySet set = io::at("/count", [&] {
    return lacunary_set(static_cast<std::int64_t>(qn), static_cast<std::int64_t>(qd), static_cast<std::size_t>(count), first);
  });
  r.outputs["q"] = rational_text(q);
  r.outputs["frequencies"] = set.frequencies;
  r.outputs["ratio_condition"] = ratio_condition_holds(set);
  r.outputs["alpha_ratio"] = nullptr;
  if (io::has(cfg, "alpha")) {
    const auto alpha = io::read_complex_list(cfg["alpha"], "/alpha");
    if (alpha.size() != set.frequencies.size()) throw io::InputError("/alpha", "alpha must match the set length");
    r.outputs["alpha_ratio"] = io::at("/alpha", [&] { return sidon_ratio(set, alpha, grid); });
  }
  const SidonEstimate e = empirical_sidon_constant(set, trials, ctx.flags.seed, grid);
  r.outputs["empirical_constant"] = e.value;
  r.outputs["witness"] = io::complex_list_json(e.witness);
  r.outputs["trials"] = e.trials;
  r.outputs["method"] = "empirical";
  r.require(ratio_condition_holds(set));
}

void cantor_gen(const Context& ctx, Report& r) {
  const json& cfg = need_config(ctx);
  const Rational alpha = rational_at(io::member(cfg, "alpha", ""), "/alpha");
  const Rational beta = rational_at(io::member(cfg, "beta", ""), "/beta");
  std::vector<Rational> rho;
  if (io::has(cfg, "rho")) {
    const json& a = cfg["rho"];
    if (!a.is_array()) throw io::InputError("/rho", "rho must be an array");
    for (std::size_t i = 0; i < a.size(); ++i) rho.push_back(rational_at(a[i], io::child("/rho", i)));
  } else {
    const long long depth = io::read_integer(io::member(cfg, "depth", ""), "/depth");
    if (depth < 1 || depth > 20) throw io::InputError("/depth", "depth must lie in 1..20");
    rho = geometric_schedule(beta - alpha, static_cast<std::size_t>(depth));
  }
  const Rational offset = io::has(cfg, "offset") ? rational_at(cfg["offset"], "/offset") : Rational(1, 2);
  const CantorSpec s = io::at("", [&] { return cantor_sequence(alpha, beta, rho, offset); });
  json intervals = json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "n,x_n,separation\n";
  for (const auto& iv : s.intervals) {
    intervals.push_back({{"n", iv.n},
                         {"level", iv.level},
                         {"b", rational_text(iv.b)},
                         {"c", rational_text(iv.c)},
                         {"x", rational_text(iv.x)},
                         {"separation", rational_text(iv.separation)}});
    csv << iv.n << ',' << static_cast<double>(iv.x) << ',' << static_cast<double>(iv.separation) << '\n';
  }
  json rhos = json::array();
  for (const auto& x : s.rho) rhos.push_back(rational_text(x));
  r.outputs["alpha"] = rational_text(s.alpha);
  r.outputs["beta"] = rational_text(s.beta);
  r.outputs["rho"] = rhos;
  r.outputs["depth"] = s.depth;
  r.outputs["offset"] = rational_text(s.offset);
  r.outputs["intervals"] = intervals;
  r.outputs["residual"] = rational_text(s.residual);
  r.outputs["residual_value"] = static_cast<double>(s.residual);
  r.outputs["min_separation"] = rational_text(s.min_separation);
  r.outputs["min_pairwise"] = rational_text(s.min_pairwise);
  r.outputs["boundary_sequence"] = io::complex_list_json(s.boundary_sequence());
  r.outputs["method"] = "exact";
  r.outputs["csv"] = ctx.flags.out.empty() ? json(nullptr) : json(ctx.flags.out);
  if (!ctx.flags.out.empty()) write_text(ctx.flags.out, csv.str());
  r.require(s.residual > 0 && s.min_separation > 0);
}

void selftest(const Context& ctx, Report& r, std::ostream& err) {
  acceptance::SuiteOptions options;
  if (ctx.flags.seed != 1) options.seed = ctx.flags.seed;
  json criteria = json::array();
  bool all = true;
  acceptance::run_suite(options, [&](const acceptance::CriterionResult& c) {
    err << c.summary_line() << std::endl;
    json checks = json::array();
    for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
    criteria.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"seconds", c.seconds}, {"checks", checks}});
    all = all && c.pass();
  });
  r.outputs["suite_seed"] = options.seed;
  r.outputs["criteria"] = criteria;
  r.require(all);
}

std::string flag_digest_text(const Flags& f, const json& config) {
  std::ostringstream s;
  s << std::setprecision(17) << config.dump() << "|seed=" << f.seed << "|tol=" << f.tol << "|grid=" << f.grid
    << "|m=" << (f.m ? std::to_string(*f.m) : "-") << "|budget=" << (f.budget ? std::to_string(*f.budget) : "-");
  return s.str();
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_cap_from_env();
  Flags flags;
  CLI::App app{"Finite constructions in the Hardy space H^infinity with certified bounds"};
  app.require_subcommand(1);

  std::ostringstream selftest_log;
  const std::map<std::string, std::pair<std::string, Handler>> commands{
      {"carleson-check", {"Carleson constant of a node sequence, optionally its dual functions", carleson_check}},
      {"radii-search", {"perturbation radii around boundary anchors for a Carleson constant above m", radii_search_cmd}},
      {"pick-solve", {"Nevanlinna-Pick interpolation: minimal norm, Schur interpolant, certified sup", pick_solve}},
      {"drury-construct", {"roots-of-unity averaging: v_k, phi_j, beta_j with the M^2 bound", drury_construct}},
      {"peak-build", {"peak-function system over disjoint arcs with certified M <= 1 + eps", peak_build}},
      {"heatmap", {"CSV of sum |f_n| on a polar grid", heatmap}},
      {"pw-margin", {"perturbation margin eta of a finite system", pw_margin}},
      {"perturb-check", {"compare a perturbed system against its base", perturb_check}},
      {"riesz-example", {"the C^{N+1} basis with its dual and constants", riesz_example_cmd}},
      {"sidon-check", {"lacunary set and empirical Sidon constant", sidon_check}},
      {"cantor-gen", {"Cantor-type boundary sequence in exact arithmetic", cantor_gen}},
      {"selftest", {"run the acceptance suite", [&](const Context& c, Report& r) { selftest(c, r, err); }}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    CLI::App* sc = app.add_subcommand(name, entry.first);
    sc->add_option("--config", flags.config, "JSON config file, - for stdin");
    sc->add_option("--seed", flags.seed, "random seed");
    sc->add_option("--tol", flags.tol, "certification tolerance")->check(CLI::PositiveNumber);
    sc->add_option("--out", flags.out, "CSV output path");
    sc->add_option("--grid", flags.grid, "polar grid <n_r>x<n_theta>");
    sc->add_option("--m", flags.m, "Carleson threshold m");
    sc->add_option("--budget", flags.budget, "per-anchor kernel budget eps_n");
    subs[name] = sc;
  }

  std::vector<std::string> storage(args);
  if (storage.empty()) storage.push_back("hardy");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  json report{{"subcommand", nullptr}, {"input_digest", nullptr}, {"seed", flags.seed}, {"outputs", json::object()},
              {"certificates", json::array()}, {"wall_time", 0.0}, {"verdict", "ERROR"}, {"error", nullptr}};
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    report["error"] = {{"type", "usage"}, {"message", e.what()}, {"pointer", nullptr}};
    out << report.dump(2) << '\n';
    return kExitInput;
  }

  std::string name;
  for (const auto& [n, sc] : subs)
    if (sc->parsed()) name = n;
  report["subcommand"] = name;
  report["seed"] = flags.seed;

  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    report["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << report.dump(2) << '\n';
    return code;
  };

  Report r;
  try {
    json config = flags.config.empty() ? json(nullptr) : load_config(flags.config);
    report["input_digest"] = fnv1a_hex(flag_digest_text(flags, config));
    CertifyOptions co;
    co.tol = flags.tol;
    const Context ctx{flags, std::move(config), parse_grid(flags.grid), co};
    commands.at(name).second(ctx, r);
  } catch (const io::InputError& e) {
    report["verdict"] = "ERROR";
    report["error"] = {{"type", "input"}, {"message", e.what()}, {"pointer", e.pointer().empty() ? "/" : e.pointer()}};
    err << "input error: " << e.what() << '\n';
    return finish(kExitInput);
  } catch (const InfeasibleError& e) {
    report["outputs"] = r.outputs;
    report["verdict"] = "FAIL";
    report["error"] = {{"type", "infeasible"}, {"message", e.what()}, {"min_eigenvalue", e.min_eigenvalue()}};
    err << "infeasible: " << e.what() << '\n';
    return finish(kExitClaim);
  } catch (const ClaimViolation& e) {
    report["outputs"] = r.outputs;
    report["verdict"] = "FAIL";
    report["error"] = {{"type", "claim"}, {"message", e.what()}};
    err << "claim violated: " << e.what() << '\n';
    return finish(kExitClaim);
  } catch (const CertificationError& e) {
    report["outputs"] = r.outputs;
    report["verdict"] = "FAIL";
    report["error"] = {{"type", "certification"}, {"message", e.what()}};
    err << "certification failed: " << e.what() << '\n';
    return finish(kExitClaim);
  } catch (const DomainError& e) {
    report["verdict"] = "ERROR";
    report["error"] = {{"type", "input"}, {"message", e.what()}, {"pointer", "/"}};
    err << "input error: " << e.what() << '\n';
    return finish(kExitInput);
  }

  report["outputs"] = r.outputs;
  report["certificates"] = r.certificates;
  report["verdict"] = r.verdict;
  if (r.verdict != "PASS") {
    report["error"] = r.error.is_null() ? json{{"type", "verdict"}, {"message", "a checked claim did not hold"}} : r.error;
    return finish(kExitClaim);
  }
  return finish(kExitOk);
}

}  // namespace hardy::cli
