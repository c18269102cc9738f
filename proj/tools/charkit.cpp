// charkit: command-line front end to the library.
//
// Exit codes: 0 ok, 1 usage, 2 bad data (including domain and capacity
// errors), 3 invariant violation or a failed verification suite.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "charkit/charkit.hpp"
#include "charkit/io/json.hpp"
#include "charkit/verify/suites.hpp"

using namespace charkit;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string action;
  std::string input;
  std::string output;
  std::optional<std::uint32_t> p, d, l;
  std::uint64_t seed = 42;
  double tolerance = kDefaultTolerance;
  bool exhaustive = false;
  std::optional<std::size_t> suite_size;
  std::string format = "json";
  std::string form = "plain";

  bool inverse = false;
  bool oracle = false;
  std::string kind = "rational";
  std::string subspace;
  std::string x;
  std::string v;
  std::string center;
  std::uint32_t radius = 1;
  std::string pair_prefix;
};

// A report plus the exit code it should produce.
struct Result {
  Json report;
  int code = 0;
};

Json read_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError(cfg.command + " needs an input file (--input FILE, or - for stdin)");
  if (cfg.input == "-") {
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_json_text(text, "stdin");
  }
  return read_json_file(cfg.input);
}

Ambient ambient_from_flags(const RunConfig& cfg) {
  if (!cfg.p || !cfg.d) throw UsageError(cfg.command + " " + cfg.action + " needs --p and --d");
  return Ambient::ring(*cfg.p, cfg.l.value_or(1), *cfg.d);
}

Point point_arg(const std::string& text, const Ambient& amb, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  const std::string wrapped = text.front() == '[' ? text : "[" + text + "]";
  return point_from_json(parse_json_text(wrapped, flag), amb);
}

Subspace subspace_arg(const std::string& text, const Ambient& amb) {
  if (text.empty() || text == "full") return Subspace::full(amb);
  const Json j = parse_json_text(text, "--subspace");
  if (!j.is_array()) throw DataError("--subspace expects a JSON list of points, e.g. [[1,1]]");
  std::vector<Point> gens;
  for (const Json& g : j) gens.push_back(point_from_json(g, amb));
  return Subspace::span(amb, gens);
}

RationalGrid read_rational(const RunConfig& cfg) {
  AnyGrid g = function_from_json(read_input(cfg));
  if (auto* f = std::get_if<RationalGrid>(&g)) return std::move(*f);
  throw DataError(cfg.command + " " + cfg.action + " needs a rational function file");
}

Json basis_json(const Subspace& v) {
  Json b = Json::array();
  for (const Point& x : v.basis()) b.push_back(to_json(x));
  return b;
}

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const Point& x : pts) out.push_back(to_json(x));
  return out;
}

Result cmd_transform(const RunConfig& cfg) {
  const AnyGrid g = function_from_json(read_input(cfg));
  if (cfg.oracle) {
    if (cfg.inverse) throw UsageError("--oracle checks the forward transform; drop --inverse");
    return std::visit(
        [&](const auto& f) -> Result {
          if constexpr (std::is_same_v<std::decay_t<decltype(f)>, ComplexGrid>) {
            const double diff = max_abs_diff(forward(f), naive_forward(f));
            const bool ok = diff <= cfg.tolerance;
            return {{{"match", ok ? "tolerance" : "mismatch"}, {"max_abs_diff", diff}, {"points", f.size()}}, ok ? 0 : 3};
          } else {
            const bool ok = forward(f) == naive_forward(f);
            return {{{"match", ok ? "exact" : "mismatch"}, {"points", f.size()}}, ok ? 0 : 3};
          }
        },
        g);
  }
  if (cfg.inverse) {
    if (const auto* s = std::get_if<ComplexGrid>(&g)) return {function_to_json(inverse(*s))};
    const CyclotomicGrid spec = std::holds_alternative<RationalGrid>(g) ? to_cyclotomic(std::get<RationalGrid>(g))
                                                                          : std::get<CyclotomicGrid>(g);
    const CyclotomicGrid f = inverse(spec);
    if (auto q = demote_rational(f)) return {function_to_json(*q)};
    return {function_to_json(f)};
  }
  return {std::visit([](const auto& f) { return function_to_json(forward(f)); }, g)};
}

Result cmd_bandwidth(const RunConfig& cfg) {
  const AnyGrid g = function_from_json(read_input(cfg));
  return {std::visit(
      [&](const auto& f) {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, ComplexGrid>) return bandwidth_to_json(bandwidth(f, cfg.tolerance));
        else return bandwidth_to_json(bandwidth(f));
      },
      g)};
}

Result cmd_decompose(const RunConfig& cfg) {
  const WaveletForm form = parse_wavelet_form(cfg.form);
  const AnyGrid g = function_from_json(read_input(cfg));
  return {std::visit([&](const auto& f) { return decomposition_to_json(decompose(f, form, cfg.tolerance)); }, g)};
}

Result cmd_tomography(const RunConfig& cfg) {
  if (cfg.action == "project") {
    const AnyGrid g = function_from_json(read_input(cfg));
    return {std::visit([](const auto& f) { return mass_table_to_json(mass_table(f)); }, g)};
  }
  return {function_to_json(reconstruct_from_masses(mass_table_from_json(read_input(cfg))))};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << text;
}

Json pair_function(const EigenPair& e, bool plus) {
  if (e.plus_exact) return function_to_json(plus ? *e.plus_exact : *e.minus_exact);
  return function_to_json(plus ? e.plus : e.minus);
}

Result cmd_eigen(const RunConfig& cfg) {
  if (cfg.action == "classify") {
    const RationalGrid f = read_rational(cfg);
    if (!is_indicator(f)) throw DataError("eigen classify needs an indicator (0/1 values)");
    const SelfDualReport r = self_dual_classify(f.ambient(), indicator_support(f));
    Json j = {{"kind", to_string(r.kind)}};
    if (r.lagrangian) j["subspace"] = basis_json(*r.lagrangian);
    if (r.lambda) j["lambda"] = format_rational(*r.lambda);
    return {j};
  }
  if (cfg.action == "lagrangian") {
    const Ambient amb = ambient_from_flags(cfg);
    Json list = Json::array();
    for (const Subspace& v : enumerate_lagrangian(amb)) list.push_back(basis_json(v));
    return {{{"count", list.size()}, {"subspaces", std::move(list)}}};
  }
  if (cfg.action == "pair") {
    const Ambient amb = ambient_from_flags(cfg);
    const Subspace v = subspace_arg(cfg.subspace, amb);
    const EigenPair e = cfg.x.empty() ? eigenfunction_pair(v) : affine_eigenfunction_pair(v, point_arg(cfg.x, amb, "--x"));
    Json meta = eigen_metadata_to_json(e);
    meta["residual"] = eigen_residual(e);
    if (!cfg.pair_prefix.empty()) {
      write_text(cfg.pair_prefix + ".plus.json", dump(pair_function(e, true)));
      write_text(cfg.pair_prefix + ".minus.json", dump(pair_function(e, false)));
      return {meta};
    }
    return {{{"metadata", std::move(meta)}, {"plus", pair_function(e, true)}, {"minus", pair_function(e, false)}}};
  }
  // expand
  const AnyGrid g = function_from_json(read_input(cfg));
  const EigenExpansion ex = std::visit(
      [&](const auto& f) -> EigenExpansion {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, CyclotomicGrid>)
          throw DataError("eigen expand takes rational or complex functions");
        else return eigen_expand(f, cfg.tolerance);
      },
      g);
  Json terms = Json::array();
  for (const EigenTerm& t : ex.terms) {
    const EigenPair& e = ex.pairs[t.pair];
    Json j = {{"sign", t.plus ? "+" : "-"}, {"subspace", basis_json(e.v)}, {"x", to_json(e.x)}, {"coefficient", to_json(t.coefficient)}};
    if (t.exact) j["exact"] = format_rational(*t.exact);
    terms.push_back(std::move(j));
  }
  const ComplexGrid back = evaluate(ex);
  const ComplexGrid original = std::visit([](const auto& f) { return to_complex(f); }, g);
  const double err = max_abs_diff(back, original);
  Json j = {{"terms", std::move(terms)}, {"max_abs_error", err}};
  if (auto exact = evaluate_exact(ex); exact && std::holds_alternative<RationalGrid>(g)) j["exact_match"] = *exact == to_cyclotomic(std::get<RationalGrid>(g));
  if (err > cfg.tolerance) throw InvariantViolation("eigen expansion does not reproduce the input");
  return {j};
}

Result cmd_variety(const RunConfig& cfg) {
  const std::string& a = cfg.action;
  if (a == "paraboloid" || a == "sphere" || a == "cone") {
    const Ambient amb = ambient_from_flags(cfg);
    const VarietyPoints v = a == "paraboloid" ? paraboloid(amb) : a == "sphere" ? sphere(amb, cfg.radius) : isotropic_cone(amb);
    Json j = {{"variety", a}, {"p", amb.p()}, {"d", amb.d()}};
    if (a == "sphere") j["radius"] = cfg.radius;
    j["count"] = v.points.size();
    j["points"] = points_json(v.points);
    return {j};
  }
  const RationalGrid f = read_rational(cfg);
  if (a == "check-paraboloid") {
    const ParaboloidReport r = check_paraboloid_theorem(f);
    if (!r.hypothesis_met) throw DataError("hypothesis not met: spectrum is nonzero on the paraboloid away from 0");
    Json bad = Json::array();
    for (const auto& [x, y] : r.violations) bad.push_back({x, y});
    if (!r.conclusion_holds()) throw InvariantViolation("slice differences that are not good: " + bad.dump());
    return {{{"hypothesis_met", true}, {"conclusion_holds", true}, {"pairs_checked", f.ambient().p() * (f.ambient().p() - 1) / 2}}};
  }
  if (a == "two-circle") {
    const std::uint32_t p = f.ambient().p();
    const TwoCircleReport r = two_circle_analysis(f, smallest_of_class(p, QuadraticClass::residue),
                                                  smallest_of_class(p, QuadraticClass::non_residue));
    Json j = {{"outcome", to_string(r.outcome)}, {"support_in_cone", r.support_in_cone}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    return {j};
  }
  // sphere-masses
  const Point c = cfg.center.empty() ? f.ambient().zero() : point_arg(cfg.center, f.ambient(), "--center");
  const SphereReport r = sphere_equidistribution_check(f, c);
  Json masses = Json::array();
  for (const Rational& m : r.masses) masses.push_back(format_rational(m));
  return {{{"center", to_json(r.center)}, {"masses", std::move(masses)}, {"common_mass", format_rational(*r.common_mass)}}};
}

Result cmd_zpl(const RunConfig& cfg) {
  const std::string& a = cfg.action;
  if (a == "hyperplane" || a == "line") {
    const Ambient amb = ambient_from_flags(cfg);
    const Point v = point_arg(cfg.v, amb, "--v");
    const ValuedVector vv = valued(amb, v);
    Json j = {{"v", to_json(v)}, {"valuation", vv.valuation}, {"norm", format_rational(vv.norm)}};
    if (a == "hyperplane") {
      const std::vector<Point> h = hyperplane_mod(amb, v);
      j["size"] = h.size();
      j["points"] = points_json(h);
    } else {
      const LevelLine line = level_line(amb, v);
      j["generator"] = to_json(line.generator);
      j["level"] = line.level;
      const std::vector<Point> pts = line_points(amb, line);
      j["size"] = pts.size();
      j["points"] = points_json(pts);
    }
    return {j};
  }
  const AnyGrid g = function_from_json(read_input(cfg));
  return {std::visit(
      [&](const auto& f) -> Json {
        using G = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<G, ComplexGrid>) {
          throw DataError("zpl " + a + " needs an exact (rational or cyclotomic) function");
        } else if (a == "decompose") {
          return multiscale_to_json(multiscale_decompose(f));
        } else {
          const std::optional<LevelWaveletMatch> m = is_level_l_wavelet(f);
          Json j = {{"level_l_wavelet", m.has_value()}};
          if (m) {
            j["degenerate"] = m->degenerate;
            if (m->line) j["line"] = {{"generator", to_json(m->line->generator)}, {"anchor", to_json(m->line->anchor)}, {"level", m->line->level}};
            Json c = Json::array();
            for (const Cyclotomic& z : m->coeffs) c.push_back(to_json(z));
            j["coeffs"] = std::move(c);
          }
          return j;
        }
      },
      g)};
}

Result cmd_verify(const RunConfig& cfg) {
  SuiteConfig sc;
  sc.p = cfg.p;
  sc.d = cfg.d;
  sc.l = cfg.l;
  sc.seed = cfg.seed;
  sc.exhaustive = cfg.exhaustive;
  sc.size = cfg.suite_size;
  sc.tolerance = cfg.tolerance;
  const std::vector<SuiteResult> results = run_suite(cfg.action, sc);
  Json suites = Json::array();
  bool ok = true;
  for (const SuiteResult& r : results) {
    std::cerr << (r.ok() ? "PASS " : "FAIL ") << r.suite << " " << r.outcome.passed << "/" << r.outcome.checks << "\n";
    ok = ok && r.ok();
    suites.push_back(to_json(r));
  }
  return {{{"seed", cfg.seed}, {"ok", ok}, {"suites", std::move(suites)}}, ok ? 0 : 3};
}

Result cmd_random(const RunConfig& cfg) {
  const Ambient amb = ambient_from_flags(cfg);
  Corpus rng(cfg.seed);
  if (cfg.kind == "rational") return {function_to_json(rng.rational_function(amb))};
  if (cfg.kind == "indicator") return {function_to_json(rng.random_indicator(amb))};
  if (cfg.kind == "cyclotomic") return {function_to_json(rng.cyclotomic_function(amb))};
  return {function_to_json(rng.complex_function(amb))};
}

void emit(const RunConfig& cfg, const Json& report) {
  const std::string text = cfg.format == "table" ? to_table(report) : dump(report);
  if (cfg.output.empty() || cfg.output == "-") std::cout << text;
  else write_text(cfg.output, text);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "prime p");
  sub->add_option("--d", cfg.d, "dimension d");
  sub->add_option("--l", cfg.l, "modulus exponent l (ring Z_{p^l})");
  sub->add_option("--input,-i", cfg.input, "input JSON file, - for stdin");
  sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
  sub->add_option("--seed", cfg.seed, "seed for randomized suites and generators");
  sub->add_option("--tolerance", cfg.tolerance, "complex-path tolerance")->check(CLI::PositiveNumber);
  sub->add_flag("--exhaustive", cfg.exhaustive, "enumerate every subset instead of sampling");
  sub->add_option("--suite-size", cfg.suite_size, "number of random items per suite");
  sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--form", cfg.form, "wavelet form: plain, reduced or massless")
      ->check(CLI::IsMember({"plain", "reduced", "massless"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier analysis on Z_p^d and Z_{p^l}^d"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* transform = app.add_subcommand("transform", "forward or inverse transform of a function file");
  transform->add_flag("--inverse", cfg.inverse, "read a spectrum file and invert it");
  transform->add_flag("--oracle", cfg.oracle, "compare the axis-pass transform with the naive sum");
  auto* bw = app.add_subcommand("bandwidth", "cbw, bw, bwd and the active lines");
  auto* dec = app.add_subcommand("decompose", "hyperplane wavelet decomposition");
  auto* tomo = app.add_subcommand("tomography", "project a function to its hyperplane masses, or reconstruct");
  tomo->add_option("action", cfg.action, "project | reconstruct")->required()->check(CLI::IsMember({"project", "reconstruct"}));
  auto* eigen = app.add_subcommand("eigen", "self-dual sets and transform eigenfunctions");
  eigen->add_option("action", cfg.action, "classify | pair | lagrangian | expand")
      ->required()
      ->check(CLI::IsMember({"classify", "pair", "lagrangian", "expand"}));
  eigen->add_option("--subspace", cfg.subspace, "spanning points as JSON, e.g. [[1,1]]; default the full space");
  eigen->add_option("--x", cfg.x, "translation point for the conjugate pair, e.g. [0,1]");
  eigen->add_option("--pair-prefix", cfg.pair_prefix, "write PREFIX.plus.json and PREFIX.minus.json");
  auto* variety = app.add_subcommand("variety", "quadratic varieties and the theorems about them");
  variety->add_option("action", cfg.action, "paraboloid | sphere | cone | check-paraboloid | two-circle | sphere-masses")
      ->required()
      ->check(CLI::IsMember({"paraboloid", "sphere", "cone", "check-paraboloid", "two-circle", "sphere-masses"}));
  variety->add_option("--radius", cfg.radius, "sphere radius r (x.x = r)");
  variety->add_option("--center", cfg.center, "sphere center, e.g. [1,2]");
  auto* zpl = app.add_subcommand("zpl", "analysis over Z_{p^l}");
  zpl->add_option("action", cfg.action, "decompose | wavelet | hyperplane | line")
      ->required()
      ->check(CLI::IsMember({"decompose", "wavelet", "hyperplane", "line"}));
  zpl->add_option("--v", cfg.v, "vector, e.g. [2,1]");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suite_names = {"all"};
  for (const auto& [name, fn] : suite_registry()) suite_names.push_back(name);
  verify->add_option("suite", cfg.action, "suite name or all")->required()->check(CLI::IsMember(suite_names));
  auto* random = app.add_subcommand("random", "seeded random function file");
  random->add_option("--kind", cfg.kind, "rational | indicator | cyclotomic | complex")
      ->check(CLI::IsMember({"rational", "indicator", "cyclotomic", "complex"}));

  for (CLI::App* sub : {transform, bw, dec, tomo, eigen, variety, zpl, verify, random}) {
    add_common(sub, cfg);
    // Positional input file after the action, as an alternative to --input.
    sub->add_option("file", cfg.input, "input JSON file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    Result r;
    if (cfg.command == "transform") r = cmd_transform(cfg);
    else if (cfg.command == "bandwidth") r = cmd_bandwidth(cfg);
    else if (cfg.command == "decompose") r = cmd_decompose(cfg);
    else if (cfg.command == "tomography") r = cmd_tomography(cfg);
    else if (cfg.command == "eigen") r = cmd_eigen(cfg);
    else if (cfg.command == "variety") r = cmd_variety(cfg);
    else if (cfg.command == "zpl") r = cmd_zpl(cfg);
    else if (cfg.command == "verify") r = cmd_verify(cfg);
    else r = cmd_random(cfg);
    emit(cfg, r.report);
    return r.code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
