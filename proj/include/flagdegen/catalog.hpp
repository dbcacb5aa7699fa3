#pragma once

#include "flagdegen/polyhedra.hpp"
#include "flagdegen/rootdata.hpp"

namespace flagdegen {

/// Position (i, j) of a Gelfand–Tsetlin coordinate x_{i,j}; row 0 is fixed by λ.
struct GTCoordinate {
  int row;
  int col;
  friend bool operator==(const GTCoordinate&, const GTCoordinate&) = default;
};

/// Free coordinates of GT(λ) for SL_n in polytope order: rows 1, …, n−1, left to right.
std::vector<GTCoordinate> gt_coordinates(int n);

/// GT(λ) with the top row substituted; ambient dimension n(n−1)/2.
RationalPolytope gt_polytope(int n, const Weight& lambda);

/// α_{p,q} = α_p + … + α_q.
struct RootInterval {
  int p;
  int q;
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct DyckPath {
  std::vector<RootInterval> roots;
  RootInterval start() const { return roots.front(); }
  RootInterval end() const { return roots.back(); }
};

std::vector<DyckPath> dyck_paths(int n);

/// Positive roots of A_{n−1} as intervals in reference order.
std::vector<RootInterval> interval_roots(int n);
/// Reference indices of α_{1,1}, α_{1,2}, α_{2,2}, α_{1,3}, … (sorted by end, then start).
std::vector<int> fflv_display_order(int n);

/// FFLV polytope in ℝ^{Φ⁺}, coordinates in reference order.
RationalPolytope fflv_polytope(int n, const Weight& lambda);

/// String cone of a reduced word for w₀ in type A_{n−1}; a cone through 0.
RationalPolytope string_cone_sln(int n, const WeylWord& word);

/// Cone cut by m_k ≤ ⟨λ, α_{i_k}∨⟩ − Σ_{ℓ>k} ⟨α_{i_ℓ}, α_{i_k}∨⟩ m_ℓ.
RationalPolytope string_polytope(const RationalPolytope& cone, const RootDatum& rd, const WeylWord& word,
                                 const Weight& lambda);

/// The three rank-two symplectic polytopes, inequalities taken literally.
struct Sp4Polytopes {
  RationalPolytope sp4;
  RationalPolytope q;
  RationalPolytope string_1212;
};

Sp4Polytopes sp4_polytopes(const Weight& lambda);

/// Word of a face of GT(λ) cut out by dual Kogan equalities x_{i,j} = x_{i+1,j−1}.
WeylWord kogan_face_word(int n, const std::vector<GTCoordinate>& equalities);
/// Whether the face degenerates the Schubert variety X_w, i.e. w(F) = w·w₀.
bool kogan_face_matches(const RootDatum& rd, const WeylWord& face_word, const WeylWord& w);

/// Closure of {x ≥ 0, Σ x_j ≤ a} in ℝ^N.
RationalPolytope gromov_simplex(int N, const Rational& a);

}  // namespace flagdegen
