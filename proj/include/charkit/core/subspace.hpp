#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "charkit/core/ambient.hpp"
#include "charkit/core/lines.hpp"

namespace charkit {

// A linear subspace of Z_p^d held as a basis in reduced row echelon form.
// Two subspaces are equal iff their echelon bases are identical.
class Subspace {
 public:
  static Subspace zero(const Ambient& amb) { return Subspace(amb, {}); }

  static Subspace full(const Ambient& amb) {
    std::vector<Point> rows;
    for (std::uint32_t i = 0; i < amb.d(); ++i) {
      Point e = amb.zero();
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    return span(amb, rows);
  }

  // Span of arbitrary (possibly dependent) vectors.
  static Subspace span(const Ambient& amb, const std::vector<Point>& vectors) {
    amb.require_field("Subspace");
    for (const Point& v : vectors) amb.check(v);
    return Subspace(amb, echelonize(amb, vectors));
  }

  static Subspace line(const Ambient& amb, const ProjectiveLine& l) { return span(amb, {l.rep}); }

  const Ambient& ambient() const { return amb_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Point>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::uint64_t size() const { return ipow(amb_.p(), dim()); }

  // Residue of x modulo the subspace: zero exactly at pivot columns.
  Point reduce(const Point& x) const {
    Point r = x;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Residue c = r[pivots_[i]];
      if (c != 0) r = amb_.sub(r, amb_.scale(c, basis_[i]));
    }
    return r;
  }

  bool contains(const Point& x) const { return reduce(x).is_zero(); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Point& v) { return contains(v); });
  }

  // All p^k points, ordered by coefficient vector.
  std::vector<Point> points() const {
    const std::uint64_t count = size();
    if (count > kMaxGridPoints) throw CapacityError("subspace too large to enumerate");
    std::vector<Point> out;
    out.reserve(count);
    std::vector<std::uint32_t> coef(dim(), 0);
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t m = n;
      for (std::size_t i = dim(); i-- > 0;) {
        coef[i] = static_cast<std::uint32_t>(m % amb_.p());
        m /= amb_.p();
      }
      Point x = amb_.zero();
      for (std::size_t i = 0; i < dim(); ++i) x = amb_.add(x, amb_.scale(coef[i], basis_[i]));
      out.push_back(std::move(x));
    }
    return out;
  }

  // Lines through the origin contained in the subspace.
  std::vector<ProjectiveLine> lines() const {
    std::vector<ProjectiveLine> out;
    for (Point& x : points())
      if (is_canonical_line_rep(x)) out.push_back(ProjectiveLine{std::move(x)});
    std::sort(out.begin(), out.end());
    return out;
  }

  // Membership mask over point indices of the ambient.
  std::vector<bool> mask() const {
    std::vector<bool> m(amb_.size(), false);
    for (const Point& x : points()) m[amb_.index(x)] = true;
    return m;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.amb_ == b.amb_ && a.basis_ == b.basis_; }

 private:
  Subspace(const Ambient& amb, std::vector<Point> rref) : amb_(amb), basis_(std::move(rref)) {
    for (const Point& row : basis_) {
      std::size_t c = 0;
      while (row[c] == 0) ++c;
      pivots_.push_back(c);
    }
  }

  static std::vector<Point> echelonize(const Ambient& amb, std::vector<Point> rows) {
    const std::uint32_t p = amb.p();
    std::size_t r = 0;
    for (std::size_t col = 0; col < amb.d() && r < rows.size(); ++col) {
      std::size_t sel = r;
      while (sel < rows.size() && rows[sel][col] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[r], rows[sel]);
      rows[r] = amb.scale(mod_inverse(rows[r][col], p), rows[r]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != r && rows[i][col] != 0) rows[i] = amb.sub(rows[i], amb.scale(rows[i][col], rows[r]));
      }
      ++r;
    }
    rows.resize(r);
    return rows;
  }

  Ambient amb_;
  std::vector<Point> basis_;
  std::vector<std::size_t> pivots_;
};

// Dot-product orthocomplement {x : x.v = 0 for all v in V}.
inline Subspace perp(const Subspace& v) {
  const Ambient& amb = v.ambient();
  const std::uint32_t p = amb.p();
  std::vector<bool> is_pivot(amb.d(), false);
  for (std::size_t c : v.pivots()) is_pivot[c] = true;
  std::vector<Point> kernel;
  for (std::size_t f = 0; f < amb.d(); ++f) {
    if (is_pivot[f]) continue;
    Point w = amb.zero();
    w[f] = 1;
    for (std::size_t i = 0; i < v.dim(); ++i) w[v.pivots()[i]] = (p - v.basis()[i][f]) % p;
    kernel.push_back(std::move(w));
  }
  return Subspace::span(amb, kernel);
}

// A coset x + V, with the anchor reduced against V's echelon basis so that
// equal cosets compare equal.
struct AffineSubspace {
  Subspace direction;
  Point anchor;

  AffineSubspace(const Subspace& v, const Point& x) : direction(v), anchor(v.reduce(x)) {}

  bool contains(const Point& y) const { return direction.contains(direction.ambient().sub(y, anchor)); }

  std::vector<Point> points() const {
    std::vector<Point> out = direction.points();
    for (Point& x : out) x = direction.ambient().add(x, anchor);
    return out;
  }

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
};

// The p^(d-k) canonical anchors of the cosets of V.
inline std::vector<Point> coset_anchors(const Subspace& v) {
  const Ambient& amb = v.ambient();
  std::vector<bool> is_pivot(amb.d(), false);
  for (std::size_t c : v.pivots()) is_pivot[c] = true;
  std::vector<Point> out;
  for (std::size_t i = 0; i < amb.size(); ++i) {
    Point x = amb.point(i);
    bool ok = true;
    for (std::size_t c = 0; c < amb.d() && ok; ++c) ok = !(is_pivot[c] && x[c] != 0);
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

// Number of k-dimensional subspaces of Z_p^d (Gaussian binomial).
inline std::uint64_t subspace_count(std::uint32_t p, std::uint32_t d, std::uint32_t k) {
  if (k > d) return 0;
  // Product formula; intermediate values stay small at enumerable sizes.
  unsigned __int128 num = 1, den = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num *= (static_cast<unsigned __int128>(ipow(p, d - i)) - 1);
    den *= (static_cast<unsigned __int128>(ipow(p, i + 1)) - 1);
  }
  return static_cast<std::uint64_t>(num / den);
}

// All k-dimensional subspaces, generated as echelon forms: pivot sets in
// lexicographic order, free entries in odometer order.
inline std::vector<Subspace> enumerate_subspaces(const Ambient& amb, std::uint32_t k,
                                                 std::size_t limit = kMaxEnumeration) {
  amb.require_field("enumerate_subspaces");
  if (k > amb.d()) return {};
  const std::uint64_t count = subspace_count(amb.p(), amb.d(), k);
  if (count > limit)
    throw CapacityError(std::to_string(count) + " subspaces exceed the enumeration limit " + std::to_string(limit));
  std::vector<Subspace> out;
  out.reserve(count);
  const std::uint32_t d = amb.d();
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = piv[i] + 1; c < d; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(i, c);
    const std::uint64_t fills = ipow(amb.p(), free_cells.size());
    for (std::uint64_t n = 0; n < fills; ++n) {
      std::vector<Point> rows(k, amb.zero());
      for (std::size_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
      std::uint64_t m = n;
      for (std::size_t j = free_cells.size(); j-- > 0;) {
        rows[free_cells[j].first][free_cells[j].second] = static_cast<Residue>(m % amb.p());
        m /= amb.p();
      }
      out.push_back(Subspace::span(amb, rows));
    }
    // Next pivot combination.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == d - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

inline std::vector<Subspace> enumerate_all_subspaces(const Ambient& amb, std::size_t limit = kMaxEnumeration) {
  std::vector<Subspace> out;
  for (std::uint32_t k = 0; k <= amb.d(); ++k) {
    auto layer = enumerate_subspaces(amb, k, limit);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace charkit
