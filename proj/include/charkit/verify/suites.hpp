#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charkit/core/geometry.hpp"
#include "charkit/core/residues.hpp"
#include "charkit/eigen/eigen.hpp"
#include "charkit/io/json.hpp"
#include "charkit/spectrum/theorems.hpp"
#include "charkit/varieties/varieties.hpp"
#include "charkit/verify/corpus.hpp"
#include "charkit/verify/parallel.hpp"
#include "charkit/wavelets/tomography.hpp"
#include "charkit/zmodpl/zmodpl.hpp"

namespace charkit {

// p, d, l and size replace a suite's built-in plan when set.
struct SuiteConfig {
  std::optional<std::uint32_t> p, d, l;
  std::uint64_t seed = 42;
  bool exhaustive = false;
  std::optional<std::size_t> size;
  double tolerance = kDefaultTolerance;
};

// Checks made by one work item, or merged over a suite.
struct Outcome {
  std::uint64_t checks = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures;

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checks;
    if (ok) ++passed;
    else failures.push_back(describe());
    return ok;
  }

  bool expect(bool ok, const char* what) {
    return expect(ok, [&] { return std::string(what); });
  }

  void merge(Outcome o) {
    checks += o.checks;
    passed += o.passed;
    for (std::string& f : o.failures) failures.push_back(std::move(f));
  }
};

struct SuiteResult {
  std::string suite;
  Outcome outcome;
  Json facts = Json::object();

  bool ok() const { return outcome.checks == outcome.passed; }
};

inline constexpr std::size_t kFailureDump = 20;

inline Json to_json(const SuiteResult& r) {
  Json failures = Json::array();
  for (std::size_t i = 0; i < r.outcome.failures.size() && i < kFailureDump; ++i) failures.push_back(r.outcome.failures[i]);
  return {{"suite", r.suite},
          {"ok", r.ok()},
          {"checks", r.outcome.checks},
          {"passed", r.outcome.passed},
          {"failures", std::move(failures)},
          {"facts", r.facts}};
}

namespace detail {

// splitmix64, so every work item gets an independent stream whatever the
// thread count.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Corpus item_rng(const SuiteConfig& cfg, std::uint64_t stream, std::uint64_t i) {
  return Corpus(mix(mix(cfg.seed ^ mix(stream)) + i));
}

// Runs fn over n items in parallel; library errors become failures.
template <class Fn>
Outcome run_items(std::size_t n, Fn&& fn) {
  std::vector<Outcome> parts = parallel_map<Outcome>(n, [&](std::size_t i) {
    Outcome o;
    try {
      fn(i, o);
    } catch (const InvariantViolation& e) {
      o.expect(false, [&] { return "item " + std::to_string(i) + ": invariant violation: " + e.what(); });
    } catch (const Error& e) {
      o.expect(false, [&] { return "item " + std::to_string(i) + ": " + e.what(); });
    }
    return o;
  });
  Outcome total;
  for (Outcome& o : parts) total.merge(std::move(o));
  return total;
}

using Shape = std::pair<std::uint32_t, std::uint32_t>;

inline std::vector<Shape> shapes_or(const SuiteConfig& cfg, std::vector<Shape> defaults) {
  if (!cfg.p && !cfg.d) return defaults;
  return {{cfg.p.value_or(defaults.front().first), cfg.d.value_or(defaults.front().second)}};
}

inline std::string shape_name(const Ambient& amb) {
  std::string s = "p=" + std::to_string(amb.p());
  if (amb.exponent() > 1) s += ",l=" + std::to_string(amb.exponent());
  return s + ",d=" + std::to_string(amb.d());
}

inline constexpr std::size_t kMaxExhaustivePoints = 20;

inline std::uint64_t subset_count(const Ambient& amb) {
  if (amb.size() > kMaxExhaustivePoints)
    throw CapacityError("exhaustive enumeration over " + std::to_string(amb.size()) + " points exceeds the limit of " +
                        std::to_string(kMaxExhaustivePoints));
  return std::uint64_t{1} << amb.size();
}

inline std::vector<Point> subset_points(const Ambient& amb, std::uint64_t bits) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < amb.size(); ++i)
    if ((bits >> i) & 1) out.push_back(amb.point(i));
  return out;
}

inline std::vector<Point> mask_points(const Ambient& amb, const std::vector<bool>& mask) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (mask[i]) out.push_back(amb.point(i));
  return out;
}

// The rational function whose spectrum is dc at 0 and random seeds on the
// chosen lines (each kept with probability 1/2).
inline RationalGrid seeded_function(Corpus& rng, const Ambient& amb, const std::vector<ProjectiveLine>& lines) {
  std::map<ProjectiveLine, Cyclotomic> seeds;
  for (const ProjectiveLine& l : lines)
    if (rng.coin()) seeds.emplace(l, rng.cyclotomic(amb.p()));
  return inverse_phi(amb, rng.small_rational(), seeds);
}

}  // namespace detail

// E = {(x, y) : x + y >= p} in Z_p^2.
inline std::vector<Point> staircase_set(std::uint32_t p) {
  std::vector<Point> e;
  for (Residue x = 0; x < p; ++x)
    for (Residue y = 0; y < p; ++y)
      if (x + y >= p) e.push_back(Point{{x, y}});
  return e;
}

// cbw 3 on the lines through (0,1), (1,0), (1,1), and reduced form
// sum_i (i/p)(1_{x=i} + 1_{y=i} - 1_{x+y=i}).
inline SuiteResult suite_example(const SuiteConfig& cfg) {
  SuiteResult r{"example", {}, Json::object()};
  std::vector<std::uint32_t> primes = {3, 5, 7};
  if (cfg.p) primes = {*cfg.p};
  for (std::uint32_t p : primes) {
    const Ambient amb(p, 2);
    Outcome& o = r.outcome;
    const RationalGrid f = indicator(amb, staircase_set(p));
    const BandwidthReport bw = bandwidth(f);
    const std::vector<ProjectiveLine> expected_lines = {{Point{{0, 1}}}, {Point{{1, 0}}}, {Point{{1, 1}}}};
    o.expect(bw.cbw == 3, [&] { return "p=" + std::to_string(p) + ": cbw " + std::to_string(bw.cbw) + ", expected 3"; });
    o.expect(bw.lines == expected_lines, [&] { return "p=" + std::to_string(p) + ": wrong active lines"; });

    const Decomposition<Rational> dec = decompose(f, WaveletForm::reduced);
    bool formula = sgn(dec.constant) == 0 && dec.parts.size() == 3;
    for (std::size_t k = 0; formula && k < 3; ++k) {
      formula = dec.parts[k].direction == expected_lines[k];
      const Rational sign = k == 2 ? -1 : 1;
      for (Residue i = 0; i < p && formula; ++i) formula = dec.parts[k].coeffs[i] == sign * make_rational(i, p);
    }
    o.expect(formula, [&] { return "p=" + std::to_string(p) + ": reduced decomposition differs from the closed form"; });

    RationalGrid closed = RationalGrid::zeros(amb);
    for (std::size_t n = 0; n < amb.size(); ++n) {
      const Point x = amb.point(n);
      for (Residue i = 1; i < p; ++i)
        closed[n] += make_rational(i, p) *
                     Rational((x[0] == i) + (x[1] == i) - ((x[0] + x[1]) % p == i));
    }
    o.expect(closed == f, [&] { return "p=" + std::to_string(p) + ": closed form does not evaluate to 1_E"; });
    o.expect(evaluate(dec) == f, [&] { return "p=" + std::to_string(p) + ": decomposition does not re-evaluate to 1_E"; });
    r.facts["p=" + std::to_string(p)] = bandwidth_to_json(bw);
  }
  return r;
}

// inverse(forward f) = f exactly; the axis-pass transform matches the naive
// sum on the first 100 functions.
inline SuiteResult suite_transform(const SuiteConfig& cfg) {
  SuiteResult r{"transform", {}, Json::object()};
  std::vector<detail::Shape> shapes;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t d : {1u, 2u, 3u}) shapes.emplace_back(p, d);
  shapes = detail::shapes_or(cfg, shapes);
  const std::uint32_t l = cfg.l.value_or(1);
  const std::size_t n = cfg.size.value_or(300);
  const std::size_t oracle = std::min<std::size_t>(n, 100);
  r.outcome = detail::run_items(n, [&](std::size_t i, Outcome& o) {
    const auto [p, d] = shapes[i % shapes.size()];
    const Ambient amb = Ambient::ring(p, l, d);
    Corpus rng = detail::item_rng(cfg, 2, i);
    const RationalGrid f = rng.rational_function(amb);
    const Spectrum s = forward(f);
    o.expect(inverse(s) == to_cyclotomic(f), [&] { return "round trip failed at " + detail::shape_name(amb) + ", item " + std::to_string(i); });
    if (i < oracle)
      o.expect(s == naive_forward(f), [&] { return "naive oracle mismatch at " + detail::shape_name(amb) + ", item " + std::to_string(i); });
  });
  r.facts = {{"functions", n}, {"oracle_checked", oracle}, {"shapes", shapes.size()}};
  return r;
}

// f-hat(r m) = g_r(f-hat(m)) for every nonzero m and unit r.
inline SuiteResult suite_galois(const SuiteConfig& cfg) {
  SuiteResult r{"galois", {}, Json::object()};
  const std::vector<detail::Shape> shapes = detail::shapes_or(cfg, {{3, 2}, {5, 2}, {7, 2}});
  const std::size_t n = cfg.size.value_or(200);
  r.outcome = detail::run_items(n, [&](std::size_t i, Outcome& o) {
    const auto [p, d] = shapes[i % shapes.size()];
    const Ambient amb(p, d);
    Corpus rng = detail::item_rng(cfg, 3, i);
    const RationalGrid f = rng.rational_function(amb);
    const Spectrum s = forward(f);
    bool ok = true;
    std::string where;
    for (std::size_t k = 1; k < amb.size() && ok; ++k)
      for (Residue g = 1; g < p && ok; ++g)
        if (s.at(amb.scale(g, amb.point(k))) != s[k].galois(g)) {
          ok = false;
          where = "m=" + to_string(amb.point(k)) + ", r=" + std::to_string(g);
        }
    o.expect(ok, [&] { return "equivariance fails at " + detail::shape_name(amb) + ", " + where; });
  });
  r.facts = {{"functions", n}};
  return r;
}

// All three decomposition forms re-evaluate exactly.
inline SuiteResult suite_wavelet(const SuiteConfig& cfg) {
  SuiteResult r{"wavelet", {}, Json::object()};
  const std::vector<detail::Shape> shapes = detail::shapes_or(cfg, {{3, 2}, {5, 2}, {2, 3}, {3, 3}});
  const std::size_t n = cfg.size.value_or(100);
  r.outcome = detail::run_items(n, [&](std::size_t i, Outcome& o) {
    const auto [p, d] = shapes[i % shapes.size()];
    const Ambient amb(p, d);
    Corpus rng = detail::item_rng(cfg, 4, i);
    const RationalGrid f = i % 2 ? rng.random_indicator(amb) : rng.rational_function(amb);
    for (WaveletForm form : {WaveletForm::plain, WaveletForm::reduced, WaveletForm::massless}) {
      const Decomposition<Rational> dec = decompose(f, form);
      o.expect(evaluate(dec) == f, [&] { return to_string(form) + " form fails at " + detail::shape_name(amb) + ", item " + std::to_string(i); });
      o.expect(dec.parts.size() == bandwidth(f).cbw, [&] { return "part count differs from cbw, item " + std::to_string(i); });
    }
  });
  r.facts = {{"functions", n}};
  return r;
}

// reconstruct(project f) = f, and any single corrupted entry is rejected
// as inconsistent.
inline SuiteResult suite_tomography(const SuiteConfig& cfg) {
  SuiteResult r{"tomography", {}, Json::object()};
  const std::vector<detail::Shape> shapes = detail::shapes_or(cfg, {{3, 2}, {5, 2}, {2, 3}, {3, 3}});
  const std::size_t n = cfg.size.value_or(100);

  auto corrupt_all = [](const MassTable<Rational>& mt, Outcome& o, const std::string& label) {
    for (const auto& [line, m] : mt.masses)
      for (std::size_t t = 0; t < m.size(); ++t) {
        MassTable<Rational> bad = mt;
        bad.masses.at(line)[t] += 1;
        bool rejected = false;
        try {
          reconstruct_from_masses(bad);
        } catch (const DataError& e) {
          rejected = std::string(e.what()).find("inconsistent") != std::string::npos;
        }
        o.expect(rejected, [&] { return label + ": corrupting m[" + to_string(line.rep) + "][" + std::to_string(t) + "] went undetected"; });
      }
  };

  r.outcome = detail::run_items(n, [&](std::size_t i, Outcome& o) {
    const auto [p, d] = shapes[i % shapes.size()];
    const Ambient amb(p, d);
    Corpus rng = detail::item_rng(cfg, 5, i);
    const RationalGrid f = i % 2 ? rng.random_indicator(amb) : rng.rational_function(amb);
    const MassTable<Rational> mt = mass_table(f);
    o.expect(reconstruct_from_masses(mt) == f, [&] { return "round trip fails at " + detail::shape_name(amb) + ", item " + std::to_string(i); });
    if (i < 10 && amb.d() >= 2) {
      auto it = mt.masses.begin();
      std::advance(it, rng.below(mt.masses.size()));
      MassTable<Rational> bad = mt;
      bad.masses.at(it->first)[rng.below(p)] += rng.coin() ? 1 : -1;
      bool rejected = false;
      try {
        reconstruct_from_masses(bad);
      } catch (const DataError&) {
        rejected = true;
      }
      o.expect(rejected, [&] { return "corrupted sinogram accepted, item " + std::to_string(i); });
    }
  });
  if (!cfg.p && !cfg.d) {
    for (std::uint32_t p : {3u, 5u}) {
      const Ambient amb(p, 2);
      const RationalGrid f = indicator(amb, staircase_set(p));
      const MassTable<Rational> mt = mass_table(f);
      r.outcome.expect(reconstruct_from_masses(mt) == f, [&] { return "staircase round trip fails at p=" + std::to_string(p); });
      corrupt_all(mt, r.outcome, "staircase p=" + std::to_string(p));
    }
  }
  r.facts = {{"functions", n}};
  return r;
}

// ((p-1) cbw + 1)|E| >= p^d over every nonempty E, or over random E.
inline SuiteResult suite_uncertainty(const SuiteConfig& cfg) {
  SuiteResult r{"uncertainty", {}, Json::object()};
  struct Plan {
    detail::Shape shape;
    bool exhaustive;
    std::size_t samples;
  };
  std::vector<Plan> plans;
  if (cfg.p || cfg.d) {
    const detail::Shape s{cfg.p.value_or(2), cfg.d.value_or(2)};
    plans.push_back({s, cfg.exhaustive, cfg.size.value_or(1000)});
  } else {
    plans = {{{2, 2}, true, 0}, {{2, 3}, true, 0}, {{3, 3}, false, cfg.size.value_or(1000)}};
  }
  for (const Plan& plan : plans) {
    const Ambient amb(plan.shape.first, plan.shape.second);
    const std::size_t n = plan.exhaustive ? detail::subset_count(amb) - 1 : plan.samples;
    std::vector<std::uint64_t> sharp(n, 0);
    Outcome o = detail::run_items(n, [&](std::size_t i, Outcome& out) {
      std::vector<Point> e;
      if (plan.exhaustive) e = detail::subset_points(amb, i + 1);
      else {
        Corpus rng = detail::item_rng(cfg, 6, i);
        e = detail::mask_points(amb, rng.nonempty_subset_mask(amb));
      }
      const UncertaintyReport u = uncertainty_check(amb, e);
      sharp[i] = u.lhs == u.rhs;
      out.expect(u.holds && u.dimension_form_holds, [&] {
        return detail::shape_name(amb) + ": |E|=" + std::to_string(e.size()) + ", cbw=" + std::to_string(u.cbw) +
               " gives " + std::to_string(u.lhs) + " < " + std::to_string(u.rhs);
      });
    });
    std::uint64_t sharp_count = 0;
    for (std::uint64_t s : sharp) sharp_count += s;
    r.facts[detail::shape_name(amb)] = {{"sets", n}, {"exhaustive", plan.exhaustive}, {"passed", o.passed}, {"sharp", sharp_count}};
    r.outcome.merge(std::move(o));
  }
  return r;
}

// Every E is a union of parallel lines or has cbw > d.
inline SuiteResult suite_dichotomy(const SuiteConfig& cfg) {
  SuiteResult r{"dichotomy", {}, Json::object()};
  std::vector<detail::Shape> shapes = detail::shapes_or(cfg, {{2, 2}, {2, 3}});
  for (const detail::Shape& s : shapes) {
    const Ambient amb(s.first, s.second);
    const bool exhaustive = cfg.exhaustive || (!cfg.p && !cfg.d);
    const std::size_t n = exhaustive ? detail::subset_count(amb) : cfg.size.value_or(500);
    std::vector<int> kind(n, 0);
    Outcome o = detail::run_items(n, [&](std::size_t i, Outcome& out) {
      std::vector<Point> e;
      if (exhaustive) e = detail::subset_points(amb, i);
      else {
        Corpus rng = detail::item_rng(cfg, 7, i);
        e = detail::mask_points(amb, rng.subset_mask(amb));
      }
      const SmallBandwidthClass c = classify_small_cbw_set(amb, e);
      kind[i] = c.cbw_exceeds_d() ? 2 : 1;
      out.expect(true, "");
    });
    std::uint64_t unions = 0, wide = 0;
    for (int k : kind) (k == 1 ? unions : wide) += k != 0;
    r.facts[detail::shape_name(amb)] = {{"sets", n}, {"union_of_lines", unions}, {"cbw_exceeds_d", wide}};
    r.outcome.merge(std::move(o));
  }
  return r;
}

// Masses on the cosets of V^perp are equal iff the spectrum vanishes on
// V \ {0}; vanishing indicators have |E| divisible by p^dim V.
inline SuiteResult suite_equidist(const SuiteConfig& cfg) {
  SuiteResult r{"equidist", {}, Json::object()};
  const std::vector<detail::Shape> shapes =
      detail::shapes_or(cfg, {{2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {5, 2}});
  const std::size_t n = cfg.size.value_or(500);
  std::vector<int> vanished(n, 0);
  r.outcome = detail::run_items(n, [&](std::size_t i, Outcome& o) {
    const auto [p, d] = shapes[i % shapes.size()];
    const Ambient amb(p, d);
    Corpus rng = detail::item_rng(cfg, 8, i);
    const Subspace v = rng.subspace(amb, static_cast<std::uint32_t>(1 + rng.below(d)));
    const Subspace w = perp(v);
    RationalGrid f = RationalGrid::zeros(amb);
    const bool indicator_input = i % 2 == 1;
    const bool constructed = i % 3 == 0;
    if (constructed && indicator_input) {
      // Union of cosets of U with U + V^perp everything, so U^perp meets V in 0.
      auto transversal = [&](const Subspace& u) {
        std::vector<Point> g = u.basis();
        g.insert(g.end(), w.basis().begin(), w.basis().end());
        return Subspace::span(amb, g).dim() == d;
      };
      Subspace u = rng.subspace(amb, static_cast<std::uint32_t>(v.dim()));
      while (!transversal(u)) u = rng.subspace(amb, static_cast<std::uint32_t>(v.dim()));
      for (const Point& a : coset_anchors(u))
        if (rng.coin())
          for (const Point& x : AffineSubspace(u, a).points()) f.at(x) = 1;
    } else if (constructed) {
      std::vector<ProjectiveLine> off;
      for (const ProjectiveLine& l : enumerate_lines(amb))
        if (!v.contains(l.rep)) off.push_back(l);
      f = detail::seeded_function(rng, amb, off);
    } else {
      f = indicator_input ? rng.random_indicator(amb) : rng.rational_function(amb);
    }

    const std::vector<Rational> masses = coset_masses(f, w);
    bool equal = true;
    for (const Rational& m : masses) equal = equal && m == masses.front();
    const Spectrum s = forward(f);
    bool vanishes = true;
    for (const Point& m : v.points()) vanishes = vanishes && (m.is_zero() || s.at(m).is_zero());
    vanished[i] = vanishes;
    o.expect(equal == vanishes, [&] {
      return detail::shape_name(amb) + ", item " + std::to_string(i) + ": masses " + (equal ? "equal" : "unequal") +
             " but spectrum " + (vanishes ? "vanishes" : "does not vanish");
    });
    if (constructed) o.expect(vanishes, [&] { return "constructed function does not vanish on V, item " + std::to_string(i); });
    const EquidistributionResult<Rational> res = equidistribution_check(f, v);
    o.expect(res.equidistributed == equal, "equidistribution_check disagrees with the direct mass comparison");
    if (indicator_input && vanishes) {
      const std::uint64_t size = support_indices(f).size();
      o.expect(size % ipow(p, v.dim()) == 0, [&] {
        return "|E| = " + std::to_string(size) + " is not divisible by p^" + std::to_string(v.dim());
      });
    }
  });
  std::uint64_t count = 0;
  for (int x : vanished) count += x;
  r.facts = {{"pairs", n}, {"vanishing", count}};
  return r;
}

// 1_E-hat = lambda 1_E only for E empty or a Lagrangian subspace.
inline SuiteResult suite_selfdual(const SuiteConfig& cfg) {
  SuiteResult r{"selfdual", {}, Json::object()};
  const std::vector<detail::Shape> shapes = detail::shapes_or(cfg, {{2, 2}, {3, 2}, {2, 3}});
  for (const detail::Shape& sh : shapes) {
    const Ambient amb(sh.first, sh.second);
    const bool exhaustive = cfg.exhaustive || (!cfg.p && !cfg.d);
    const std::size_t n = exhaustive ? detail::subset_count(amb) : cfg.size.value_or(500);
    std::vector<std::optional<SelfDualReport>> found(n);
    Outcome o = detail::run_items(n, [&](std::size_t i, Outcome& out) {
      std::vector<Point> e;
      if (exhaustive) e = detail::subset_points(amb, i);
      else {
        Corpus rng = detail::item_rng(cfg, 9, i);
        e = detail::mask_points(amb, rng.subset_mask(amb));
      }
      const SelfDualReport rep = self_dual_classify(amb, e);
      // Oracle: the naive transform of 1_E is a multiple of 1_E.
      const RationalGrid one_e = indicator(amb, e);
      const Spectrum s = naive_forward(one_e);
      bool proportional = true;
      for (std::size_t k = 0; k < amb.size(); ++k) proportional = proportional && s[k] == s[0] * one_e[k];
      const bool self_dual = rep.kind != SelfDualKind::not_self_dual;
      out.expect(self_dual == proportional, [&] { return detail::shape_name(amb) + ": classifier disagrees with the oracle on subset " + std::to_string(i); });
      if (self_dual) found[i] = rep;
    });

    Json sets = Json::array();
    std::vector<Subspace> lagrangians;
    for (const auto& rep : found) {
      if (!rep) continue;
      if (rep->kind == SelfDualKind::empty) {
        sets.push_back({{"kind", "empty"}});
        continue;
      }
      lagrangians.push_back(*rep->lagrangian);
      Json basis = Json::array();
      for (const Point& b : rep->lagrangian->basis()) basis.push_back(to_json(b));
      sets.push_back({{"kind", "lagrangian"}, {"basis", std::move(basis)}, {"lambda", format_rational(*rep->lambda)}});
      o.expect(*rep->lambda * *rep->lambda == 1 / rational_of(amb.size()), "lambda^2 != p^-d");
    }
    if (exhaustive) {
      const std::vector<Subspace> expected = enumerate_lagrangian(amb);
      bool same = lagrangians.size() == expected.size();
      for (const Subspace& l : expected) same = same && std::find(lagrangians.begin(), lagrangians.end(), l) != lagrangians.end();
      o.expect(same, [&] { return detail::shape_name(amb) + ": self-dual sets are not exactly the Lagrangian subspaces"; });
    }
    r.facts[detail::shape_name(amb)] = {{"subsets", n}, {"exhaustive", exhaustive}, {"self_dual", std::move(sets)}};
    r.outcome.merge(std::move(o));
  }
  return r;
}

// Plain pairs for every subspace and random affine pairs satisfy their
// eigen equations, exactly when d is even.
inline SuiteResult suite_eigen(const SuiteConfig& cfg) {
  SuiteResult r{"eigen", {}, Json::object()};
  const std::vector<detail::Shape> shapes = detail::shapes_or(cfg, {{2, 2}, {3, 2}, {2, 3}});
  const std::size_t affine = cfg.size.value_or(20);
  for (const detail::Shape& sh : shapes) {
    const Ambient amb(sh.first, sh.second);
    const std::vector<Subspace> all = enumerate_all_subspaces(amb);
    std::vector<double> residual(all.size() + affine, 0);
    Outcome o = detail::run_items(all.size() + affine, [&](std::size_t i, Outcome& out) {
      EigenPair e = [&] {
        if (i < all.size()) return eigenfunction_pair(all[i]);
        Corpus rng = detail::item_rng(cfg, 10, i);
        const Subspace v = rng.subspace(amb, static_cast<std::uint32_t>(rng.below(amb.d() + 1)));
        return affine_eigenfunction_pair(v, rng.point(amb));
      }();
      residual[i] = eigen_residual(e);
      out.expect(residual[i] < cfg.tolerance, [&] {
        return detail::shape_name(amb) + ": " + to_string(e.kind) + " residual " + std::to_string(residual[i]) + " for x=" + to_string(e.x);
      });
      if (amb.d() % 2 == 0)
        out.expect(eigen_exact_holds(e) == true, [&] { return detail::shape_name(amb) + ": exact eigen equation fails for x=" + to_string(e.x); });
    });
    r.facts[detail::shape_name(amb)] = {{"subspaces", all.size()},
                                        {"affine_cases", affine},
                                        {"max_residual", *std::max_element(residual.begin(), residual.end())},
                                        {"exact", amb.d() % 2 == 0}};
    r.outcome.merge(std::move(o));
  }
  return r;
}

// Spectra seeded only on lines that miss the paraboloid off the origin give
// good slice differences.
inline SuiteResult suite_paraboloid(const SuiteConfig& cfg) {
  SuiteResult r{"paraboloid", {}, Json::object()};
  const std::vector<detail::Shape> shapes = detail::shapes_or(cfg, {{5, 3}});
  const std::size_t n = cfg.size.value_or(100);
  r.outcome = detail::run_items(n, [&](std::size_t i, Outcome& o) {
    const auto [p, d] = shapes[i % shapes.size()];
    const Ambient amb(p, d);
    std::vector<ProjectiveLine> off;
    for (const ProjectiveLine& l : enumerate_lines(amb))
      if (classify_direction_paraboloid(amb, l.rep) != ParaboloidDirection::covered) off.push_back(l);
    Corpus rng = detail::item_rng(cfg, 11, i);
    const ParaboloidReport rep = check_paraboloid_theorem(detail::seeded_function(rng, amb, off));
    o.expect(rep.hypothesis_met, [&] { return "constructed function misses the hypothesis, item " + std::to_string(i); });
    o.expect(rep.conclusion_holds(), [&] {
      return "slice difference f_" + std::to_string(rep.violations.front().first) + " - f_" +
             std::to_string(rep.violations.front().second) + " is not good, item " + std::to_string(i);
    });
  });
  r.facts = {{"functions", n}};
  return r;
}

// Nonzero-radius spheres are equinumerous; two-circle-vanishing functions
// are equidistributed on spheres about random centers; indicators at
// p = 1 mod 4 are unions of lines parallel to L+ or L-.
inline SuiteResult suite_spheres(const SuiteConfig& cfg) {
  SuiteResult r{"spheres", {}, Json::object()};
  std::vector<std::uint32_t> primes = {3, 5};
  if (cfg.p) primes = {*cfg.p};
  const std::uint32_t d = cfg.d.value_or(2);
  const std::size_t n = cfg.size.value_or(10);
  for (std::uint32_t p : primes) {
    const Ambient amb(p, d);
    Json counts = Json::array();
    std::vector<std::uint64_t> c;
    for (Residue rad = 1; rad < p; ++rad) c.push_back(sphere(amb, rad).points.size());
    for (std::uint64_t x : c) counts.push_back(x);
    r.outcome.expect(std::all_of(c.begin(), c.end(), [&](std::uint64_t x) { return x == c.front(); }),
                     [&] { return detail::shape_name(amb) + ": sphere counts differ " + counts.dump(); });

    std::vector<ProjectiveLine> cone;
    for (const ProjectiveLine& l : enumerate_lines(amb))
      if (norm_squared(amb, l.rep) == 0) cone.push_back(l);
    Outcome o = detail::run_items(n, [&](std::size_t i, Outcome& out) {
      Corpus rng = detail::item_rng(cfg, 12, i * 7 + p);
      const RationalGrid f = detail::seeded_function(rng, amb, cone);
      for (int c2 = 0; c2 < 5; ++c2) {
        const SphereReport s = sphere_equidistribution_check(f, rng.point(amb));
        out.expect(s.common_mass.has_value(), "sphere masses differ");
      }
    });
    r.outcome.merge(std::move(o));

    Json facts = {{"sphere_counts", std::move(counts)}, {"cone_lines", cone.size()}};
    if (d == 2 && p % 4 == 1) {
      const Residue i = sqrt_minus_one(p);
      const Residue a = smallest_of_class(p, QuadraticClass::residue);
      const Residue b = smallest_of_class(p, QuadraticClass::non_residue);
      Outcome ind = detail::run_items(n, [&](std::size_t k, Outcome& out) {
        Corpus rng = detail::item_rng(cfg, 13, k);
        const bool plus = k % 2 == 0;
        const Point u{{1, plus ? i : p - i}};
        const Subspace line = Subspace::span(amb, {u});
        RationalGrid f = RationalGrid::zeros(amb);
        bool any = false, all = true;
        for (const Point& anchor : coset_anchors(line)) {
          const bool take = rng.coin();
          any = any || take;
          all = all && take;
          if (take)
            for (const Point& x : AffineSubspace(line, anchor).points()) f.at(x) = 1;
        }
        const TwoCircleReport rep = two_circle_analysis(f, a, b);
        const TwoCircleOutcome want =
            !any || all ? TwoCircleOutcome::constant : plus ? TwoCircleOutcome::lplus_union : TwoCircleOutcome::lminus_union;
        out.expect(rep.outcome == want, [&] {
          return std::string("indicator classified as ") + to_string(rep.outcome) + ", expected " + to_string(want);
        });
      });
      facts["indicator_cases"] = n;
      r.outcome.merge(std::move(ind));
    }
    r.facts[detail::shape_name(amb)] = std::move(facts);
  }
  return r;
}

// Units, hyperplane and line cardinalities over Z_{p^l}, and exact
// multiscale round trips.
inline SuiteResult suite_zpl(const SuiteConfig& cfg) {
  SuiteResult r{"zpl", {}, Json::object()};
  const std::uint32_t p = cfg.p.value_or(2), l = cfg.l.value_or(2), d = cfg.d.value_or(2);
  const Ambient amb = Ambient::ring(p, l, d);
  Outcome& o = r.outcome;

  std::uint64_t units = 0;
  for (std::uint64_t m = 0; m < amb.modulus(); ++m) units += valuation(m, p, l) == 0;
  o.expect(units == ipow(p, l) - ipow(p, l - 1), [&] { return "unit count " + std::to_string(units); });

  std::uint64_t directions = 0;
  for (std::size_t i = 1; i < amb.size(); ++i) {
    const Point v = amb.point(i);
    ++directions;
    std::uint64_t h = 0;
    for (std::size_t k = 0; k < amb.size(); ++k) h += amb.dot(v, amb.point(k)) == 0;
    const std::uint32_t nu = valuation(amb, v);
    o.expect(h == ipow(p, std::uint64_t{l} * (d - 1) + nu), [&] { return "|H_v| = " + std::to_string(h) + " for v=" + to_string(v); });
    std::vector<bool> seen(amb.size(), false);
    std::uint64_t line = 0;
    for (std::uint64_t a = 0; a < amb.modulus(); ++a) {
      const std::size_t k = amb.index(amb.scale(a, v));
      line += !seen[k];
      seen[k] = true;
    }
    o.expect(line == ipow(p, l - nu), [&] { return "|l_v| = " + std::to_string(line) + " for v=" + to_string(v); });
  }

  const std::size_t n = cfg.size.value_or(100);
  std::vector<std::size_t> parts(n, 0);
  o.merge(detail::run_items(n, [&](std::size_t i, Outcome& out) {
    Corpus rng = detail::item_rng(cfg, 14, i);
    const RationalGrid f = rng.rational_function(amb);
    const MultiscaleDecomposition<Rational> dec = multiscale_decompose(f);
    parts[i] = dec.parts.size();
    out.expect(evaluate(dec) == f, [&] { return "multiscale round trip fails, item " + std::to_string(i); });
  }));
  r.facts = {{"shape", detail::shape_name(amb)},
             {"units", units},
             {"nonzero_directions", directions},
             {"functions", n},
             {"max_parts", n ? *std::max_element(parts.begin(), parts.end()) : 0}};
  return r;
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> registry = {
      {"example", suite_example},       {"transform", suite_transform}, {"galois", suite_galois},
      {"wavelet", suite_wavelet},       {"tomography", suite_tomography}, {"equidist", suite_equidist},
      {"uncertainty", suite_uncertainty}, {"dichotomy", suite_dichotomy}, {"paraboloid", suite_paraboloid},
      {"spheres", suite_spheres},       {"selfdual", suite_selfdual},   {"eigen", suite_eigen},
      {"zpl", suite_zpl}};
  return registry;
}

inline std::vector<SuiteResult> run_suite(const std::string& name, const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : suite_registry())
    if (name == "all" || name == n) out.push_back(fn(cfg));
  if (out.empty()) {
    std::string names;
    for (const auto& [n, fn] : suite_registry()) names += n + ", ";
    throw DomainError("unknown suite \"" + name + "\" (" + names + "all)");
  }
  return out;
}

}  // namespace charkit
