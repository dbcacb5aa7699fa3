#pragma once

#include "flagdegen/core.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <optional>

namespace flagdegen {

/// Sorted, duplicate-free set of integer points.
struct LatticePointSet {
  int dim = 0;
  std::vector<IntPoint> points;

  LatticePointSet() = default;
  LatticePointSet(int d, std::vector<IntPoint> pts);

  std::size_t size() const { return points.size(); }
  bool contains(const IntPoint& p) const;
  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;
};

/// Extreme rays and lineality of {y : B y ≥ 0}, with the rows tight at each ray.
struct ConeGenerators {
  std::vector<IntVec> rays;
  std::vector<boost::dynamic_bitset<>> tight;
  std::vector<IntVec> lineality;
};

ConeGenerators double_description(const IntMat& rows);

/// {x ∈ ℝ^d : a₀ + Σ aᵢxᵢ ≥ 0 for every row (a₀, …, a_d)}. Immutable; derived
/// data is computed once on first use and shared between copies.
class RationalPolytope {
 public:
  RationalPolytope(int dim, std::vector<IntVec> ineqs);
  static RationalPolytope from_rational(int dim, const std::vector<RatVec>& rows);
  /// H-representation of the convex hull of finitely many points.
  static RationalPolytope from_vertices(int dim, const std::vector<RatVec>& points);

  int dim() const { return dim_; }
  const std::vector<IntVec>& inequalities() const { return ineqs_; }

  RationalPolytope dilate(const Integer& k) const;
  RationalPolytope intersect(const RationalPolytope& other) const;
  RationalPolytope translate(const IntPoint& shift) const;

  /// Vertices; throws UnboundedError with a recession ray if unbounded.
  const std::vector<RatVec>& vertices() const;
  /// For each vertex, the inequalities it satisfies with equality.
  const std::vector<boost::dynamic_bitset<>>& incidence() const;
  /// Indices of a minimal set of inequalities defining the facets.
  const std::vector<std::size_t>& facets() const;
  int affine_dim() const;
  bool is_empty() const { return vertices().empty(); }

 private:
  struct Cache;
  void compute_vertices() const;
  void compute_facets() const;

  int dim_;
  std::vector<IntVec> ineqs_;
  std::shared_ptr<Cache> cache_;
};

bool contains(const RationalPolytope& P, const RatVec& x);
bool contains(const RationalPolytope& P, const IntPoint& x);

LatticePointSet lattice_points(const RationalPolytope& P, const Budget& budget = Budget::from_env());
std::int64_t count_lattice_points(const RationalPolytope& P, const Budget& budget = Budget::from_env());
std::vector<RatVec> vertices(const RationalPolytope& P);
/// Vertices as integer points; DomainError if some vertex is not integral.
std::vector<IntPoint> lattice_vertices(const RationalPolytope& P);

/// f₀, …, f_{dim P}; the last entry is the polytope itself.
std::vector<std::int64_t> f_vector(const RationalPolytope& P);

struct PolytopeInvariants {
  int affine_dim = -1;
  std::size_t vertex_count = 0;
  std::vector<std::int64_t> f_vector;
  std::vector<std::int64_t> dilate_counts;  // k = 1, …, max_dilate
  std::vector<Rational> ehrhart;            // coefficients, constant term first
  Rational normalized_volume;
};

PolytopeInvariants polytope_invariants(const RationalPolytope& P, int max_dilate);

/// Coefficients (constant first) of the polynomial of degree < values.size()
/// taking values[i] at first_k + i.
std::vector<Rational> interpolate(const std::vector<Integer>& values, std::int64_t first_k = 1);
Rational evaluate(const std::vector<Rational>& poly, const Rational& k);

LatticePointSet minkowski_points(const LatticePointSet& A, const LatticePointSet& B);

struct NormalityResult {
  bool normal = true;
  std::optional<IntPoint> witness;
  std::int64_t degree = 0;
};

NormalityResult is_normal_up_to(const RationalPolytope& P, int L);

/// x ↦ A x + t.
struct AffineMap {
  IntMat linear;
  IntVec shift;

  IntPoint operator()(const IntPoint& x) const;
};

struct EquivalenceResult {
  enum class Verdict { equivalent, not_equivalent, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  std::optional<AffineMap> certificate;
};

std::string to_string(EquivalenceResult::Verdict v);

EquivalenceResult unimodular_equivalent(const RationalPolytope& P, const RationalPolytope& Q);

}  // namespace flagdegen
