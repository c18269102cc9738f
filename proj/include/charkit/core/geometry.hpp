#pragma once

#include <set>
#include <vector>

#include "charkit/core/ambient.hpp"
#include "charkit/core/lines.hpp"
#include "charkit/core/subspace.hpp"

namespace charkit {

// H_{s,t} = {x : x.s = t}; works over Z_p and Z_{p^l}.
inline std::vector<Point> hyperplane_points(const Ambient& amb, const Point& s, Residue t) {
  amb.check(s);
  if (s.is_zero()) throw DomainError("hyperplane direction must be nonzero");
  t %= amb.modulus();
  std::vector<Point> out;
  for (std::size_t i = 0; i < amb.size(); ++i) {
    Point x = amb.point(i);
    if (amb.dot(x, s) == t) out.push_back(std::move(x));
  }
  return out;
}

// True iff every point of Z_p^d is a scalar multiple of a member of A,
// i.e. A meets every line through the origin. Empty A is never compass.
inline bool is_compass_set(const std::vector<Point>& a, const Ambient& amb) {
  amb.require_field("is_compass_set");
  if (a.empty()) return false;
  const LineIndex index(amb);
  std::vector<bool> hit(index.count(), false);
  std::size_t covered = 0;
  for (const Point& y : a) {
    const std::int64_t k = index.ordinal_of(y);
    if (k >= 0 && !hit[static_cast<std::size_t>(k)]) {
      hit[static_cast<std::size_t>(k)] = true;
      ++covered;
    }
  }
  return covered == index.count();
}

// A (k+1)-dimensional subspace whose nonzero points avoid every line of S.
// Grows V_1 < V_2 < ... < V_{k+1}; each step tries the extensions of V_j by
// the lines of the quotient Z_p^d / V_j in lexicographic order and keeps the
// first whose new points avoid S.
inline Subspace avoid_lines_subspace(const std::vector<ProjectiveLine>& s, std::uint32_t k, const Ambient& amb) {
  amb.require_field("avoid_lines_subspace");
  if (k >= amb.d()) throw DomainError("avoid_lines_subspace requires k < d");
  const std::set<ProjectiveLine> avoid(s.begin(), s.end());
  const std::uint64_t bound = line_count(amb.p(), amb.d() - k);
  if (avoid.size() >= bound)
    throw DomainError("avoid_lines_subspace precondition violated: |S| = " + std::to_string(avoid.size()) +
                      " is not below (p^(d-k)-1)/(p-1) = " + std::to_string(bound));

  auto avoids = [&](const Subspace& candidate, const Subspace& base) {
    for (const Point& x : candidate.points()) {
      if (x.is_zero() || base.contains(x)) continue;
      if (avoid.count(ProjectiveLine::through(amb, x))) return false;
    }
    return true;
  };

  Subspace current = Subspace::zero(amb);
  for (std::uint32_t step = 0; step <= k; ++step) {
    bool extended = false;
    for (std::size_t i = 1; i < amb.size() && !extended; ++i) {
      const Point w = amb.point(i);
      if (!is_canonical_line_rep(w) || current.reduce(w) != w) continue;
      std::vector<Point> gens = current.basis();
      gens.push_back(w);
      Subspace candidate = Subspace::span(amb, gens);
      if (avoids(candidate, current)) {
        current = std::move(candidate);
        extended = true;
      }
    }
    if (!extended) throw InvariantViolation("avoid_lines_subspace: no admissible extension found");
  }
  return current;
}

}  // namespace charkit
