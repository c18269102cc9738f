#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charkit/core/ambient.hpp"

namespace charkit {

// A line through the origin of Z_p^d, identified by its canonical
// representative: the nonzero point whose first nonzero coordinate is 1.
struct ProjectiveLine {
  Point rep;

  // Line through a nonzero point.
  static ProjectiveLine through(const Ambient& amb, const Point& x) {
    amb.require_field("ProjectiveLine");
    amb.check(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) return ProjectiveLine{amb.scale(mod_inverse(x[i], amb.p()), x)};
    }
    throw DomainError("the zero vector does not span a line");
  }

  // The p - 1 nonzero points t * rep, t = 1..p-1, in order of t.
  std::vector<Point> punctured_points(const Ambient& amb) const {
    std::vector<Point> out;
    out.reserve(amb.p() - 1);
    for (std::uint32_t t = 1; t < amb.p(); ++t) out.push_back(amb.scale(t, rep));
    return out;
  }

  bool contains(const Ambient& amb, const Point& x) const {
    return !x.is_zero() && through(amb, x).rep == rep;
  }

  friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;
  friend auto operator<=>(const ProjectiveLine&, const ProjectiveLine&) = default;
};

inline bool is_canonical_line_rep(const Point& x) {
  for (Residue c : x.coords)
    if (c != 0) return c == 1;
  return false;
}

// (p^d - 1) / (p - 1) for a prime field ambient.
inline std::uint64_t line_count(std::uint32_t p, std::uint32_t d) { return (ipow(p, d) - 1) / (p - 1); }
inline std::uint64_t line_count(const Ambient& amb) { return line_count(amb.p(), amb.d()); }

// All lines through the origin, ordered lexicographically by representative.
inline std::vector<ProjectiveLine> enumerate_lines(const Ambient& amb, std::size_t limit = kMaxEnumeration) {
  amb.require_field("enumerate_lines");
  const std::uint64_t count = line_count(amb);
  if (count > limit)
    throw CapacityError(std::to_string(count) + " lines exceed the enumeration limit " + std::to_string(limit));
  std::vector<ProjectiveLine> lines;
  lines.reserve(count);
  for (std::size_t i = 1; i < amb.size(); ++i) {
    Point x = amb.point(i);
    if (is_canonical_line_rep(x)) lines.push_back(ProjectiveLine{std::move(x)});
  }
  return lines;
}

// Lookup table from point index to the ordinal of its line in
// enumerate_lines order (-1 for the origin).
class LineIndex {
 public:
  explicit LineIndex(const Ambient& amb) : amb_(amb), lines_(enumerate_lines(amb)), ordinal_(amb.size(), -1) {
    for (std::size_t k = 0; k < lines_.size(); ++k) {
      for (const Point& x : lines_[k].punctured_points(amb_)) ordinal_[amb_.index(x)] = static_cast<std::int64_t>(k);
    }
  }

  const Ambient& ambient() const { return amb_; }
  const std::vector<ProjectiveLine>& lines() const { return lines_; }
  std::size_t count() const { return lines_.size(); }
  std::int64_t ordinal_of_index(std::size_t point_index) const { return ordinal_[point_index]; }
  std::int64_t ordinal_of(const Point& x) const { return ordinal_[amb_.index(x)]; }
  std::size_t ordinal_of(const ProjectiveLine& line) const {
    return static_cast<std::size_t>(ordinal_[amb_.index(line.rep)]);
  }

 private:
  Ambient amb_;
  std::vector<ProjectiveLine> lines_;
  std::vector<std::int64_t> ordinal_;
};

}  // namespace charkit
