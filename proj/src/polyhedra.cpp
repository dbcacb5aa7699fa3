#include "flagdegen/polyhedra.hpp"

#include "flagdegen/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <type_traits>
#include <unordered_set>

namespace flagdegen {

using Bits = boost::dynamic_bitset<>;

// ---------------------------------------------------------------- points

LatticePointSet::LatticePointSet(int d, std::vector<IntPoint> pts) : dim(d), points(std::move(pts)) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool LatticePointSet::contains(const IntPoint& p) const { return std::binary_search(points.begin(), points.end(), p); }

LatticePointSet minkowski_points(const LatticePointSet& A, const LatticePointSet& B) {
  if (A.dim != B.dim) throw DomainError("Minkowski sum of point sets in different dimensions");
  std::vector<IntPoint> out;
  out.reserve(A.size() * B.size());
  for (const auto& a : A.points)
    for (const auto& b : B.points) out.push_back(a + b);
  return LatticePointSet(A.dim, std::move(out));
}

// ---------------------------------------------------------------- cones

namespace {

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

std::vector<IntVec> nullspace(const IntMat& B) {
  const Eigen::Index cols = B.cols();
  RatMat a = cast_matrix<Rational>(B);
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(r));
    Rational lead = a(r, c);
    a.row(r) /= lead;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<IntVec> out;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    RatVec v = RatVec::Zero(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(static_cast<Eigen::Index>(k), free);
    out.push_back(primitive(clear_denominators(v)));
  }
  return out;
}

RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace

ConeGenerators double_description(const IntMat& B) {
  const Eigen::Index D = B.cols();
  const std::size_t m = static_cast<std::size_t>(B.rows());
  ConeGenerators out;
  out.lineality = nullspace(B);

  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < m; ++i) rows.push_back(B.row(static_cast<Eigen::Index>(i)).transpose());
  for (const auto& l : out.lineality) {
    rows.push_back(l);
    rows.push_back(-l);
  }
  const std::size_t M = rows.size();

  IncrementalBasis<Rational> basis(D);
  std::vector<std::size_t> initial;
  for (std::size_t i = 0; i < M && static_cast<Eigen::Index>(initial.size()) < D; ++i)
    if (basis.insert(to_rational(rows[i]))) initial.push_back(i);
  if (static_cast<Eigen::Index>(initial.size()) < D) return out;

  RatMat BI(D, D);
  for (Eigen::Index k = 0; k < D; ++k) BI.row(k) = to_rational(rows[initial[k]]).transpose();
  RatMat inv = *inverse_of(BI);

  struct Ray {
    IntVec v;
    Bits zero;
  };
  std::vector<Ray> rays;
  for (Eigen::Index j = 0; j < D; ++j) {
    Ray r{primitive(clear_denominators(inv.col(j))), Bits(M)};
    for (Eigen::Index k = 0; k < D; ++k)
      if (k != j) r.zero.set(initial[k]);
    rays.push_back(std::move(r));
  }

  Bits done(M);
  for (auto i : initial) done.set(i);
  for (std::size_t i = 0; i < M; ++i) {
    if (done.test(i)) continue;
    done.set(i);
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(rows[i], rays[k].v);
      if (s[k] > 0) pos.push_back(k);
      else if (s[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (s[k] == 0) rays[k].zero.set(i);
      continue;
    }
    std::vector<Ray> next;
    for (auto p : pos)
      for (auto n : neg) {
        Bits common = rays[p].zero & rays[n].zero;
        if (static_cast<Eigen::Index>(common.count()) < D - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != n && common.is_subset_of(rays[k].zero)) adjacent = false;
        if (!adjacent) continue;
        IntVec v = s[p] * rays[n].v - s[n] * rays[p].v;
        common.set(i);
        next.push_back(Ray{primitive(std::move(v)), std::move(common)});
      }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k] < 0) continue;
      if (s[k] == 0) rays[k].zero.set(i);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }

  for (auto& r : rays) {
    r.zero.resize(m);
    out.rays.push_back(std::move(r.v));
    out.tight.push_back(std::move(r.zero));
  }
  return out;
}

// ---------------------------------------------------------------- polytope

struct RationalPolytope::Cache {
  std::once_flag vertices_once;
  std::vector<RatVec> vertices;
  std::vector<Bits> incidence;
  std::optional<IntVec> unbounded_ray;
  std::once_flag facets_once;
  std::vector<std::size_t> facets;
  int affine_dim = -1;
};

RationalPolytope::RationalPolytope(int dim, std::vector<IntVec> ineqs)
    : dim_(dim), ineqs_(std::move(ineqs)), cache_(std::make_shared<Cache>()) {
  for (const auto& row : ineqs_)
    if (row.size() != dim_ + 1) throw DomainError("inequality length does not match the dimension");
}

RationalPolytope RationalPolytope::from_rational(int dim, const std::vector<RatVec>& rows) {
  std::vector<IntVec> ineqs;
  for (const auto& r : rows) ineqs.push_back(primitive(clear_denominators(r)));
  return RationalPolytope(dim, std::move(ineqs));
}

RationalPolytope RationalPolytope::from_vertices(int dim, const std::vector<RatVec>& points) {
  if (points.empty()) {
    IntVec infeasible = IntVec::Zero(dim + 1);
    infeasible[0] = -1;
    return RationalPolytope(dim, {infeasible});
  }
  IntMat B(static_cast<Eigen::Index>(points.size()), dim + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatVec h(dim + 1);
    h[0] = 1;
    h.tail(dim) = points[i];
    B.row(static_cast<Eigen::Index>(i)) = clear_denominators(h).transpose();
  }
  ConeGenerators g = double_description(B);
  std::vector<IntVec> ineqs;
  for (const auto& r : g.rays)
    if (!r.tail(dim).isZero()) ineqs.push_back(r);
  for (const auto& l : g.lineality) {
    ineqs.push_back(l);
    ineqs.push_back(-l);
  }
  return RationalPolytope(dim, std::move(ineqs));
}

RationalPolytope RationalPolytope::dilate(const Integer& k) const {
  auto rows = ineqs_;
  for (auto& r : rows) r[0] *= k;
  return RationalPolytope(dim_, std::move(rows));
}

RationalPolytope RationalPolytope::intersect(const RationalPolytope& other) const {
  if (other.dim_ != dim_) throw DomainError("intersection of polytopes in different dimensions");
  auto rows = ineqs_;
  rows.insert(rows.end(), other.ineqs_.begin(), other.ineqs_.end());
  return RationalPolytope(dim_, std::move(rows));
}

RationalPolytope RationalPolytope::translate(const IntPoint& shift) const {
  auto rows = ineqs_;
  for (auto& r : rows)
    for (int i = 0; i < dim_; ++i) r[0] -= r[i + 1] * shift[i];
  return RationalPolytope(dim_, std::move(rows));
}

void RationalPolytope::compute_vertices() const {
  const Eigen::Index n = static_cast<Eigen::Index>(ineqs_.size());
  IntMat B(n + 1, dim_ + 1);
  for (Eigen::Index i = 0; i < n; ++i) B.row(i) = ineqs_[i].transpose();
  B.row(n) = IntVec::Zero(dim_ + 1).transpose();
  B(n, 0) = 1;
  ConeGenerators g = double_description(B);
  std::optional<IntVec> recession;
  for (std::size_t k = 0; k < g.rays.size(); ++k) {
    const IntVec& r = g.rays[k];
    if (r[0] == 0) {
      recession = r.tail(dim_);
      continue;
    }
    RatVec v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = Rational(r[i + 1], r[0]);
    Bits tight = g.tight[k];
    tight.resize(static_cast<std::size_t>(n));
    cache_->vertices.push_back(std::move(v));
    cache_->incidence.push_back(std::move(tight));
  }
  if (!g.lineality.empty()) recession = g.lineality.front().tail(dim_);
  if (!cache_->vertices.empty() && recession) cache_->unbounded_ray = recession;
  // deterministic order
  std::vector<std::size_t> order(cache_->vertices.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const auto &u = cache_->vertices[a], &v = cache_->vertices[b];
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<RatVec> vs;
  std::vector<Bits> inc;
  for (auto k : order) {
    vs.push_back(cache_->vertices[k]);
    inc.push_back(cache_->incidence[k]);
  }
  cache_->vertices = std::move(vs);
  cache_->incidence = std::move(inc);
}

const std::vector<RatVec>& RationalPolytope::vertices() const {
  std::call_once(cache_->vertices_once, [this] { compute_vertices(); });
  if (cache_->unbounded_ray) throw UnboundedError("polyhedron is unbounded", *cache_->unbounded_ray);
  return cache_->vertices;
}

const std::vector<Bits>& RationalPolytope::incidence() const {
  vertices();
  return cache_->incidence;
}

namespace {

int affine_rank(const std::vector<RatVec>& vs, const Bits& subset) {
  std::optional<std::size_t> base;
  IncrementalBasis<Rational> basis(vs.empty() ? 0 : vs.front().size());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (!subset.test(k)) continue;
    if (!base) {
      base = k;
      continue;
    }
    basis.insert(vs[k] - vs[*base]);
  }
  return base ? static_cast<int>(basis.rank()) : -1;
}

Bits all_of(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

// Vertex sets on each inequality.
std::vector<Bits> vertex_sets(const RationalPolytope& P) {
  const auto& inc = P.incidence();
  std::vector<Bits> out(P.inequalities().size(), Bits(inc.size()));
  for (std::size_t v = 0; v < inc.size(); ++v)
    for (std::size_t i = 0; i < out.size(); ++i)
      if (inc[v].test(i)) out[i].set(v);
  return out;
}

}  // namespace

void RationalPolytope::compute_facets() const {
  const auto& vs = vertices();
  cache_->affine_dim = affine_rank(vs, all_of(vs.size()));
  if (cache_->affine_dim <= 0) return;
  std::set<Bits> seen;
  auto sets = vertex_sets(*this);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Bits& z = sets[i];
    if (z.count() == vs.size() || z.none() || seen.count(z)) continue;
    if (affine_rank(vs, z) != cache_->affine_dim - 1) continue;
    seen.insert(z);
    cache_->facets.push_back(i);
  }
}

const std::vector<std::size_t>& RationalPolytope::facets() const {
  std::call_once(cache_->facets_once, [this] { compute_facets(); });
  return cache_->facets;
}

int RationalPolytope::affine_dim() const {
  facets();
  return cache_->affine_dim;
}

bool contains(const RationalPolytope& P, const RatVec& x) {
  if (x.size() != P.dim()) throw DomainError("point dimension does not match the polytope");
  for (const auto& r : P.inequalities()) {
    Rational s = r[0];
    for (int i = 0; i < P.dim(); ++i)
      if (r[i + 1] != 0) s += r[i + 1] * x[i];
    if (s < 0) return false;
  }
  return true;
}

bool contains(const RationalPolytope& P, const IntPoint& x) {
  if (static_cast<int>(x.size()) != P.dim()) throw DomainError("point dimension does not match the polytope");
  for (const auto& r : P.inequalities()) {
    Integer s = r[0];
    for (int i = 0; i < P.dim(); ++i)
      if (r[i + 1] != 0) s += r[i + 1] * x[i];
    if (s < 0) return false;
  }
  return true;
}

std::vector<RatVec> vertices(const RationalPolytope& P) { return P.vertices(); }

std::vector<IntPoint> lattice_vertices(const RationalPolytope& P) {
  std::vector<IntPoint> out;
  for (const auto& v : P.vertices()) {
    IntPoint p(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      Rational q = v[i];
      if (denominator(q) != 1) throw DomainError("polytope has a non-integral vertex");
      p[i] = to_int64(numerator(q));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::int64_t> f_vector(const RationalPolytope& P) {
  const auto& vs = P.vertices();
  const int d = P.affine_dim();
  if (d < 0) return {};
  std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);
  f[d] = 1;
  if (d == 0) return f;
  auto sets = vertex_sets(P);
  std::vector<Bits> facet_sets;
  for (auto i : P.facets()) facet_sets.push_back(sets[i]);
  std::set<Bits> faces(facet_sets.begin(), facet_sets.end());
  std::vector<Bits> queue(facet_sets.begin(), facet_sets.end());
  while (!queue.empty()) {
    Bits F = std::move(queue.back());
    queue.pop_back();
    for (const auto& G : facet_sets) {
      Bits H = F & G;
      if (H.none() || H == F) continue;
      if (faces.insert(H).second) queue.push_back(std::move(H));
    }
  }
  for (const auto& F : faces) ++f[affine_rank(vs, F)];
  return f;
}

// ---------------------------------------------------------------- lattice points

namespace {

struct Row {
  IntVec a;   // a₀, a₁, …, a_d
  Bits used;  // original inequalities combined into this row
};

// Keeps one row per direction, the tightest.
std::vector<Row> tighten(std::vector<Row> rows, int d, bool& infeasible) {
  std::map<std::vector<Integer>, std::pair<Rational, Row>> best;
  for (auto& r : rows) {
    IntVec dir = r.a.tail(d);
    Integer g = gcd_of(dir);
    if (g == 0) {
      if (r.a[0] < 0) infeasible = true;
      continue;
    }
    std::vector<Integer> key(dir.begin(), dir.end());
    for (auto& k : key) k /= g;
    Rational offset(r.a[0], g);
    auto it = best.find(key);
    if (it == best.end()) best.emplace(std::move(key), std::pair{offset, std::move(r)});
    else if (offset < it->second.first) it->second = {offset, std::move(r)};
  }
  std::vector<Row> out;
  for (auto& [key, entry] : best) {
    Row r = std::move(entry.second);
    r.a = primitive(std::move(r.a));
    out.push_back(std::move(r));
  }
  return out;
}

// levels[k]: rows of the projection onto x₁…x_{k+1} that involve x_{k+1}.
struct Projections {
  std::vector<std::vector<IntVec>> levels;
  bool empty = false;
};

Projections fourier_motzkin(const RationalPolytope& P) {
  const int d = P.dim();
  const std::size_t n = P.inequalities().size();
  Projections out;
  out.levels.resize(d);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Bits used(n);
    used.set(i);
    rows.push_back(Row{P.inequalities()[i], std::move(used)});
  }
  rows = tighten(std::move(rows), d, out.empty);
  for (int k = d - 1; k >= 0 && !out.empty; --k) {
    const std::size_t eliminated = static_cast<std::size_t>(d - k);
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      const int sign = r.a[k + 1].sign();
      if (sign != 0) out.levels[k].push_back(r.a);
      if (sign > 0) pos.push_back(std::move(r));
      else if (sign < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Bits used = p.used | q.used;
        if (used.count() > eliminated + 1) continue;
        IntVec a = (-q.a[k + 1]) * p.a + p.a[k + 1] * q.a;
        next.push_back(Row{std::move(a), std::move(used)});
      }
    rows = tighten(std::move(next), d, out.empty);
  }
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <class T>
struct Limits;

template <>
struct Limits<Integer> {
  using Acc = Integer;
  static std::int64_t narrow(const Acc& v) { return to_int64(v); }
};

template <>
struct Limits<std::int64_t> {
  using Acc = __int128;
  static std::int64_t narrow(Acc v) {
    if (v > INT64_MAX || v < INT64_MIN) throw ResourceError("coordinate exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
  }
};

template <class T>
class Enumerator {
 public:
  using Acc = typename Limits<T>::Acc;

  Enumerator(const Projections& proj, int d) : d_(d), levels_(d) {
    for (int k = 0; k < d; ++k)
      for (const auto& r : proj.levels[k]) {
        std::vector<T> row(k + 2);
        for (int i = 0; i <= k + 1; ++i) row[i] = convert(r[i]);
        levels_[k].push_back(std::move(row));
      }
  }

  void run(const std::function<void(const IntPoint&)>& visit) {
    IntPoint x(d_, 0);
    if (d_ == 0) {
      visit(x);
      return;
    }
    descend(0, x, visit);
  }

 private:
  static T convert(const Integer& z) {
    if constexpr (std::is_same_v<T, Integer>) return z;
    else return z.convert_to<std::int64_t>();
  }

  void descend(int k, IntPoint& x, const std::function<void(const IntPoint&)>& visit) {
    std::optional<Acc> lo, hi;
    for (const auto& row : levels_[k]) {
      Acc r = Acc(row[0]);
      for (int i = 0; i < k; ++i) r += Acc(row[i + 1]) * Acc(x[i]);
      Acc c = Acc(row[k + 1]);
      if (c > 0) {
        Acc b = -floor_div(Acc(r), Acc(c));
        if (!lo || b > *lo) lo = b;
      } else {
        Acc b = floor_div(Acc(r), Acc(-c));
        if (!hi || b < *hi) hi = b;
      }
    }
    if (!lo || !hi) throw DomainError("coordinate unbounded during enumeration");
    if (*lo > *hi) return;
    const std::int64_t a = Limits<T>::narrow(*lo), b = Limits<T>::narrow(*hi);
    for (std::int64_t v = a; v <= b; ++v) {
      x[k] = v;
      if (k + 1 == d_) visit(x);
      else descend(k + 1, x, visit);
    }
  }

  int d_;
  std::vector<std::vector<std::vector<T>>> levels_;
};

bool fits_small(const Projections& proj) {
  const Integer cap = Integer(1) << 30;
  for (const auto& level : proj.levels)
    for (const auto& r : level)
      for (const auto& c : r)
        if (abs(c) > cap) return false;
  return true;
}

void enumerate(const RationalPolytope& P, const Budget& budget, const std::function<void(const IntPoint&)>& visit) {
  if (P.is_empty()) return;
  Projections proj = fourier_motzkin(P);
  if (proj.empty) return;
  std::int64_t seen = 0;
  auto guarded = [&](const IntPoint& x) {
    if (++seen > budget.max_lattice_points)
      throw ResourceError("lattice point budget exceeded (" + std::to_string(budget.max_lattice_points) + ")");
    visit(x);
  };
  if (fits_small(proj)) Enumerator<std::int64_t>(proj, P.dim()).run(guarded);
  else Enumerator<Integer>(proj, P.dim()).run(guarded);
}

}  // namespace

LatticePointSet lattice_points(const RationalPolytope& P, const Budget& budget) {
  std::vector<IntPoint> pts;
  enumerate(P, budget, [&](const IntPoint& x) { pts.push_back(x); });
  LatticePointSet out;
  out.dim = P.dim();
  out.points = std::move(pts);
  return out;
}

std::int64_t count_lattice_points(const RationalPolytope& P, const Budget& budget) {
  std::int64_t n = 0;
  enumerate(P, budget, [&](const IntPoint&) { ++n; });
  return n;
}

// ---------------------------------------------------------------- Ehrhart

std::vector<Rational> interpolate(const std::vector<Integer>& values, std::int64_t first_k) {
  const std::size_t n = values.size();
  std::vector<Rational> poly(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis polynomial for node first_k + i
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    const Rational xi = first_k + static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational xj = first_k + static_cast<std::int64_t>(j);
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= xj * basis[t];
      }
      basis = std::move(next);
      denom *= xi - xj;
    }
    for (std::size_t t = 0; t < n; ++t) poly[t] += Rational(values[i]) * basis[t] / denom;
  }
  return poly;
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& k) {
  Rational s = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) s = s * k + *it;
  return s;
}

PolytopeInvariants polytope_invariants(const RationalPolytope& P, int max_dilate) {
  PolytopeInvariants inv;
  inv.vertex_count = P.vertices().size();
  inv.affine_dim = P.affine_dim();
  inv.f_vector = f_vector(P);
  const int needed = std::max(max_dilate, inv.affine_dim + 1);
  std::vector<Integer> counts;
  for (int k = 1; k <= needed; ++k) counts.push_back(count_lattice_points(P.dilate(k)));
  for (int k = 1; k <= max_dilate; ++k) inv.dilate_counts.push_back(counts[k - 1].convert_to<std::int64_t>());
  if (inv.affine_dim >= 0) {
    counts.resize(static_cast<std::size_t>(inv.affine_dim) + 1);
    inv.ehrhart = interpolate(counts, 1);
    Rational factorial = 1;
    for (int i = 2; i <= inv.affine_dim; ++i) factorial *= i;
    inv.normalized_volume = inv.ehrhart.back() * factorial;
  }
  return inv;
}

// ---------------------------------------------------------------- normality

NormalityResult is_normal_up_to(const RationalPolytope& P, int L) {
  LatticePointSet base = lattice_points(P);
  if (base.size() == 0) throw DomainError("normality check needs a lattice point");
  LatticePointSet sums = base;
  for (int k = 2; k <= L; ++k) {
    sums = minkowski_points(sums, base);
    LatticePointSet target = lattice_points(P.dilate(k));
    for (const auto& x : target.points)
      if (!sums.contains(x)) return NormalityResult{false, x, k};
  }
  return NormalityResult{true, std::nullopt, L};
}

// ---------------------------------------------------------------- equivalence

IntPoint AffineMap::operator()(const IntPoint& x) const {
  IntPoint out(static_cast<std::size_t>(shift.size()));
  for (Eigen::Index i = 0; i < shift.size(); ++i) {
    Integer s = shift[i];
    for (Eigen::Index j = 0; j < linear.cols(); ++j) s += linear(i, j) * x[j];
    out[i] = to_int64(s);
  }
  return out;
}

std::string to_string(EquivalenceResult::Verdict v) {
  switch (v) {
    case EquivalenceResult::Verdict::equivalent: return "equivalent";
    case EquivalenceResult::Verdict::not_equivalent: return "not_equivalent";
    case EquivalenceResult::Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::vector<std::vector<std::size_t>> vertex_graph(const RationalPolytope& P) {
  const auto& inc = P.incidence();
  const auto& facets = P.facets();
  const std::size_t n = inc.size();
  std::vector<Bits> on(n, Bits(facets.size()));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (inc[v].test(facets[f])) on[v].set(f);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      Bits common = on[u] & on[v];
      bool edge = true;
      for (std::size_t w = 0; w < n && edge; ++w)
        if (w != u && w != v && common.is_subset_of(on[w])) edge = false;
      if (edge) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  return adj;
}

IntVec difference(const IntPoint& a, const IntPoint& b) {
  IntVec out(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<Eigen::Index>(i)] = a[i] - b[i];
  return out;
}

std::optional<AffineMap> search_map(const RationalPolytope& P, const RationalPolytope& Q) {
  const int d = P.dim();
  auto pv = lattice_vertices(P), qv = lattice_vertices(Q);
  auto padj = vertex_graph(P), qadj = vertex_graph(Q);
  std::set<IntPoint> qset(qv.begin(), qv.end());

  std::size_t v0 = 0;
  for (std::size_t v = 1; v < pv.size(); ++v)
    if (padj[v].size() < padj[v0].size()) v0 = v;
  std::vector<std::size_t> frame;
  IncrementalBasis<Rational> basis(d);
  for (auto u : padj[v0])
    if (basis.insert(to_rational(difference(pv[u], pv[v0])))) frame.push_back(u);
  if (static_cast<int>(frame.size()) != d) return std::nullopt;

  RatMat V(d, d);
  for (int j = 0; j < d; ++j) V.col(j) = to_rational(difference(pv[frame[j]], pv[v0]));
  const RatMat Vinv = *inverse_of(V);

  for (std::size_t w0 = 0; w0 < qv.size(); ++w0) {
    if (qadj[w0].size() != padj[v0].size()) continue;
    const auto& nbrs = qadj[w0];
    std::vector<std::size_t> choice;
    std::vector<bool> used(nbrs.size(), false);
    std::optional<AffineMap> found;
    std::function<void()> extend = [&] {
      if (found) return;
      if (static_cast<int>(choice.size()) == d) {
        RatMat W(d, d);
        for (int j = 0; j < d; ++j) W.col(j) = to_rational(difference(qv[choice[j]], qv[w0]));
        RatMat A = W * Vinv;
        IntMat Ai(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            Rational a = A(i, j);
            if (denominator(a) != 1) return;
            Ai(i, j) = numerator(a);
          }
        if (abs(determinant_of(A)) != 1) return;
        IntVec t(d);
        for (int i = 0; i < d; ++i) {
          Integer s = qv[w0][i];
          for (int j = 0; j < d; ++j) s -= Ai(i, j) * pv[v0][j];
          t[i] = s;
        }
        AffineMap map{Ai, t};
        for (const auto& v : pv)
          if (!qset.count(map(v))) return;
        found = std::move(map);
        return;
      }
      for (std::size_t c = 0; c < nbrs.size() && !found; ++c) {
        if (used[c]) continue;
        used[c] = true;
        choice.push_back(nbrs[c]);
        extend();
        choice.pop_back();
        used[c] = false;
      }
    };
    extend();
    if (found) return found;
  }
  return std::nullopt;
}

template <class T>
std::string show(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

EquivalenceResult unimodular_equivalent(const RationalPolytope& P, const RationalPolytope& Q) {
  using V = EquivalenceResult::Verdict;
  lattice_vertices(P);
  lattice_vertices(Q);
  if (P.dim() != Q.dim()) return {V::not_equivalent, "ambient dimension", std::nullopt};
  if (P.affine_dim() != Q.affine_dim())
    return {V::not_equivalent,
            "dimension " + std::to_string(P.affine_dim()) + " vs " + std::to_string(Q.affine_dim()), std::nullopt};
  if (P.vertices().size() != Q.vertices().size())
    return {V::not_equivalent,
            "vertex count " + std::to_string(P.vertices().size()) + " vs " + std::to_string(Q.vertices().size()),
            std::nullopt};
  auto fp = f_vector(P), fq = f_vector(Q);
  if (fp != fq) return {V::not_equivalent, "f-vector " + show(fp) + " vs " + show(fq), std::nullopt};
  auto ip = polytope_invariants(P, 3), iq = polytope_invariants(Q, 3);
  if (ip.dilate_counts != iq.dilate_counts)
    return {V::not_equivalent, "dilate counts " + show(ip.dilate_counts) + " vs " + show(iq.dilate_counts),
            std::nullopt};
  if (ip.normalized_volume != iq.normalized_volume)
    return {V::not_equivalent,
            "normalized volume " + to_string(ip.normalized_volume) + " vs " + to_string(iq.normalized_volume),
            std::nullopt};
  if (P.affine_dim() != P.dim()) return {V::inconclusive, "invariants agree; polytopes not full-dimensional", std::nullopt};
  if (P.vertices().size() > 40) return {V::inconclusive, "invariants agree; more than 40 vertices", std::nullopt};
  if (P.affine_dim() == 0) {
    auto p = lattice_vertices(P).front(), q = lattice_vertices(Q).front();
    return {V::equivalent, "translation", AffineMap{IntMat::Identity(P.dim(), P.dim()), difference(q, p)}};
  }
  if (auto map = search_map(P, Q)) return {V::equivalent, "lattice map found", std::move(map)};
  return {V::not_equivalent, "search exhausted", std::nullopt};
}

}  // namespace flagdegen
