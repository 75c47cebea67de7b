#include "kproper/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kproper/errors.hpp"

namespace kproper {

namespace {

struct Constraint {
  RatVector normal;
  Rational rhs;
};

bool satisfies(const std::vector<Halfspace>& hrep, const std::vector<Hyperplane>& eqs,
               std::span<const Rational> x) {
  for (const auto& h : hrep)
    if (dot(x, h.normal) < h.offset) return false;
  for (const auto& e : eqs)
    if (dot(x, e.normal) != e.rhs) return false;
  return true;
}

// Every vertex is the unique solution of the equalities together with some
// set of tight inequalities; enumerate those sets directly.
std::vector<RatVector> enumerate_vertices(std::size_t n, const std::vector<Halfspace>& hrep,
                                          const std::vector<Hyperplane>& eqs) {
  std::vector<Constraint> rows;
  for (const auto& e : eqs) rows.push_back({e.normal, e.rhs});
  std::set<RatVector> found;

  const std::size_t m = hrep.size();
  const std::size_t need = n;  // total rank needed, at most n tight inequalities
  std::vector<std::size_t> pick;
  auto try_system = [&](const std::vector<std::size_t>& chosen) {
    RatMatrix a(rows.size() + chosen.size(), n);
    RatVector b(rows.size() + chosen.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i].normal[j];
      b[i] = rows[i].rhs;
    }
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const auto& h = hrep[chosen[k]];
      for (std::size_t j = 0; j < n; ++j) a(rows.size() + k, j) = Rational(h.normal[j]);
      b[rows.size() + k] = h.offset;
    }
    auto x = solve_system(a, b);
    if (x && satisfies(hrep, eqs, *x)) found.insert(std::move(*x));
  };

  // Recursive combinations of size 0..need; a system with redundant picks is
  // simply non-unique or duplicates an earlier vertex.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    try_system(pick);
    if (pick.size() == need) return;
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return {found.begin(), found.end()};
}

// The recession cone {d : A d >= 0, E d = 0} is trivial iff none of the 2n
// normalized slices {s d_j = 1, |d| <= 1} is nonempty.
bool recession_cone_trivial(std::size_t n, const std::vector<Halfspace>& hrep,
                            const std::vector<Hyperplane>& eqs) {
  std::vector<Halfspace> cone;
  for (const auto& h : hrep) cone.push_back({h.normal, Rational(0)});
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0);
    e[j] = 1;
    cone.push_back({e, Rational(-1)});
    e[j] = -1;
    cone.push_back({e, Rational(-1)});
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (int s : {1, -1}) {
      std::vector<Hyperplane> slice;
      for (const auto& e : eqs) slice.push_back({e.normal, Rational(0)});
      RatVector unit(n, Rational(0));
      unit[j] = Rational(s);
      slice.push_back({unit, Rational(1)});
      if (!enumerate_vertices(n, cone, slice).empty()) return false;
    }
  }
  return true;
}

int affine_rank(const std::vector<RatVector>& pts) {
  if (pts.empty()) return -1;
  const std::size_t n = pts.front().size();
  RatMatrix diffs(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = pts[i][j] - pts[0][j];
  return pts.size() == 1 ? 0 : static_cast<int>(rank(diffs));
}

RatVector average(const std::vector<RatVector>& pts) {
  RatVector c(pts.front().size(), Rational(0));
  for (const auto& p : pts) c = c + p;
  return Rational(1) / Rational(static_cast<std::int64_t>(pts.size())) * c;
}

// Sorts 2D points counterclockwise around an interior point.
void sort_ccw(std::vector<RatVector>& pts, const RatVector& center) {
  auto half = [](const Rational& x, const Rational& y) {
    return (y.sign() < 0 || (y.is_zero() && x.sign() < 0)) ? 1 : 0;
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
    const Rational ax = a[0] - center[0], ay = a[1] - center[1];
    const Rational bx = b[0] - center[0], by = b[1] - center[1];
    const int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return (ax * by - ay * bx).sign() > 0;
  });
}

Rational det3(const RatVector& a, const RatVector& b, const RatVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

struct Simplex {
  Rational volume;
  RatVector centroid;
};

// Triangulation of a full-dimensional polytope into simplices.
std::vector<Simplex> triangulate(const Polytope& p) {
  const auto& verts = p.vertices();
  std::vector<Simplex> out;
  if (p.affine_dimension() != static_cast<int>(p.dim()) || verts.empty()) return out;
  const std::size_t n = p.dim();
  if (n == 1) {
    out.push_back({verts.back()[0] - verts.front()[0],
                   {(verts.back()[0] + verts.front()[0]) / Rational(2)}});
    return out;
  }
  const RatVector c = average(verts);
  if (n == 2) {
    auto ring = verts;
    sort_ccw(ring, c);
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const auto& a = ring[k];
      const auto& b = ring[(k + 1) % ring.size()];
      const Rational area =
          ((a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0])) / Rational(2);
      out.push_back({area, Rational(1, 3) * (a + b + c)});
    }
    return out;
  }
  if (n != 3) throw UnsupportedError("triangulation supports dimension <= 3");
  std::set<std::vector<std::size_t>> seen;
  for (const auto& h : p.hrep()) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(verts[i], h.normal) == h.offset) on.push_back(i);
    if (on.size() < 3 || !seen.insert(on).second) continue;
    std::vector<RatVector> face;
    for (auto i : on) face.push_back(verts[i]);
    if (affine_rank(face) != 2) continue;
    std::size_t drop = 0;
    while (h.normal[drop] == 0) ++drop;
    auto project = [&](const RatVector& v) {
      RatVector q;
      for (std::size_t j = 0; j < 3; ++j)
        if (j != drop) q.push_back(v[j]);
      return q;
    };
    std::vector<RatVector> projected;
    for (const auto& v : face) projected.push_back(project(v));
    const RatVector pc = average(projected);
    std::vector<std::size_t> order(face.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<RatVector> sorted = projected;
    sort_ccw(sorted, pc);
    for (std::size_t k = 0; k < sorted.size(); ++k)
      for (std::size_t i = 0; i < face.size(); ++i)
        if (projected[i] == sorted[k]) order[k] = i;
    const RatVector& f0 = face[order[0]];
    for (std::size_t k = 1; k + 1 < order.size(); ++k) {
      const RatVector& f1 = face[order[k]];
      const RatVector& f2 = face[order[k + 1]];
      const Rational vol = det3(f0 - c, f1 - c, f2 - c).abs() / Rational(6);
      out.push_back({vol, Rational(1, 4) * (c + f0 + f1 + f2)});
    }
  }
  return out;
}

}  // namespace

Polytope::Polytope(std::size_t dim, std::vector<Halfspace> hrep, std::vector<Hyperplane> equalities)
    : dim_(dim), hrep_(std::move(hrep)), equalities_(std::move(equalities)) {
  for (auto& h : hrep_) {
    if (h.normal.size() != dim_) throw DomainError("halfspace normal has wrong dimension");
    std::int64_t g = 0;
    for (auto x : h.normal) g = std::gcd(g, x);
    if (g == 0) throw DomainError("halfspace normal is zero");
    if (g != 1) {
      h.normal = primitive(h.normal);
      h.offset /= Rational(g);
    }
  }
  for (const auto& e : equalities_)
    if (e.normal.size() != dim_) throw DomainError("equality normal has wrong dimension");
  if (dim_ <= 3) {
    vertices_ = std::make_shared<const std::vector<RatVector>>(enumerate_vertices(dim_, hrep_, equalities_));
    bounded_ = recession_cone_trivial(dim_, hrep_, equalities_);
  }
}

bool Polytope::contains(std::span<const Rational> point) const {
  return point.size() == dim_ && satisfies(hrep_, equalities_, point);
}

const std::vector<RatVector>& Polytope::vertices() const {
  if (!vertices_) throw UnsupportedError("vertex enumeration supports dimension <= 3");
  return *vertices_;
}

bool Polytope::bounded() const {
  if (!vertices_) throw UnsupportedError("boundedness test supports dimension <= 3");
  return bounded_;
}

int Polytope::affine_dimension() const { return affine_rank(vertices()); }

bool same_vertices(const Polytope& a, const Polytope& b) {
  return a.dim() == b.dim() && a.vertices() == b.vertices();
}

const std::vector<RatVector>& vertices(const Polytope& p) { return p.vertices(); }

Rational volume(const Polytope& p) {
  Rational v(0);
  for (const auto& s : triangulate(p)) v += s.volume;
  return v;
}

std::vector<RatVector> ccw_polygon(const Polytope& p) {
  if (p.dim() != 2) throw UnsupportedError("polygon ordering requires dimension 2");
  if (p.affine_dimension() != 2) throw DomainError("polygon is not full-dimensional");
  auto ring = p.vertices();
  sort_ccw(ring, average(ring));
  return ring;
}

Rational lattice_length(std::span<const Rational> a, std::span<const Rational> b) {
  BigInt l(1);
  std::vector<Rational> d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d.push_back(b[i] - a[i]);
    l = boost::multiprecision::lcm(l, d.back().denominator());
  }
  BigInt g(0);
  for (const auto& x : d) {
    const BigInt scaled = x.numerator() * (l / x.denominator());
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(scaled));
  }
  if (g.is_zero()) throw DomainError("lattice length of a degenerate segment");
  return Rational(g, l);
}

Rational boundary_measure(const Polytope& p) {
  if (p.dim() != 2) throw UnsupportedError("boundary measure is implemented for polygons only");
  const auto ring = ccw_polygon(p);
  Rational total(0);
  for (std::size_t k = 0; k < ring.size(); ++k) total += lattice_length(ring[k], ring[(k + 1) % ring.size()]);
  return total;
}

RatVector barycenter(const Polytope& p) {
  const auto simplices = triangulate(p);
  Rational vol(0);
  RatVector moment(p.dim(), Rational(0));
  for (const auto& s : simplices) {
    vol += s.volume;
    moment = moment + s.volume * s.centroid;
  }
  if (vol.is_zero()) throw DomainError("barycenter of a polytope with zero volume");
  return vol.inverse() * moment;
}

Polytope translate(const Polytope& p, std::span<const Rational> shift) {
  auto hrep = p.hrep();
  for (auto& h : hrep) h.offset += dot(shift, h.normal);
  auto eqs = p.equalities();
  for (auto& e : eqs) e.rhs += dot(e.normal, shift);
  return Polytope(p.dim(), std::move(hrep), std::move(eqs));
}

Polytope dilate(const Polytope& p, const Rational& factor) {
  if (factor.sign() <= 0) throw DomainError("dilation factor must be positive");
  auto hrep = p.hrep();
  for (auto& h : hrep) h.offset *= factor;
  auto eqs = p.equalities();
  for (auto& e : eqs) e.rhs *= factor;
  return Polytope(p.dim(), std::move(hrep), std::move(eqs));
}

Polytope fixed_subpolytope(const Polytope& p, const std::vector<IntMatrix>& group) {
  const auto& verts = p.vertices();
  const std::set<RatVector> vset(verts.begin(), verts.end());
  auto eqs = p.equalities();
  for (const auto& g : group) {
    if (g.rows() != p.dim() || g.cols() != p.dim()) throw DomainError("group element has wrong size");
    if (!is_unimodular(g)) throw DomainError("group element is not unimodular");
    const IntMatrix gt = g.transpose();
    for (const auto& v : verts)
      if (!vset.contains(matvec(gt, v))) throw DomainError("group does not preserve polytope");
    for (std::size_t i = 0; i < p.dim(); ++i) {
      RatVector row(p.dim());
      bool zero = true;
      for (std::size_t j = 0; j < p.dim(); ++j) {
        row[j] = Rational(gt(i, j) - (i == j ? 1 : 0));
        zero = zero && row[j].is_zero();
      }
      if (!zero) eqs.push_back({row, Rational(0)});
    }
  }
  return Polytope(p.dim(), p.hrep(), std::move(eqs));
}

std::vector<RatVector> lattice_points(const Polytope& p, int k) {
  if (k < 1) throw DomainError("lattice_points requires k >= 1");
  if (!p.bounded()) throw DomainError("lattice points of an unbounded polytope");
  const auto& verts = p.vertices();
  std::vector<RatVector> out;
  if (verts.empty()) return out;
  const std::size_t n = p.dim();
  const Rational kk(k);
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = verts.front()[j], mx = verts.front()[j];
    for (const auto& v : verts) {
      mn = min(mn, v[j]);
      mx = max(mx, v[j]);
    }
    lo[j] = ceil_to_int(mn * kk);
    hi[j] = floor_to_int(mx * kk);
    if (lo[j] > hi[j]) return out;
  }
  std::vector<std::int64_t> m(lo);
  while (true) {
    RatVector pt(n);
    for (std::size_t j = 0; j < n; ++j) pt[j] = Rational(m[j]) / kk;
    if (p.contains(pt)) out.push_back(std::move(pt));
    std::size_t j = 0;
    while (j < n && m[j] == hi[j]) {
      m[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++m[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kproper
