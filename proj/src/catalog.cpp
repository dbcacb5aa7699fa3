#include "flagdegen/catalog.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace flagdegen {

namespace {

void require_sln_weight(int n, const Weight& lambda) {
  if (n < 2) throw DomainError("SL_n needs n >= 2");
  if (lambda.rank() != n - 1)
    throw DomainError("weight has " + std::to_string(lambda.rank()) + " coordinates, SL_" + std::to_string(n) +
                      " needs " + std::to_string(n - 1));
  if (!lambda.is_dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
}

// Row builder for a₀ + Σ aᵢxᵢ ≥ 0.
struct RowBuilder {
  explicit RowBuilder(int d) : row(IntVec::Zero(d + 1)) {}
  RowBuilder& constant(const Integer& c) {
    row[0] += c;
    return *this;
  }
  RowBuilder& add(int coord, const Integer& c) {
    row[coord + 1] += c;
    return *this;
  }
  IntVec row;
};

std::vector<IntVec> nonnegative(int d) {
  std::vector<IntVec> rows;
  for (int k = 0; k < d; ++k) rows.push_back(RowBuilder(d).add(k, 1).row);
  return rows;
}

}  // namespace

std::vector<GTCoordinate> gt_coordinates(int n) {
  std::vector<GTCoordinate> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - i; ++j) out.push_back({i, j});
  return out;
}

RationalPolytope gt_polytope(int n, const Weight& lambda) {
  require_sln_weight(n, lambda);
  const auto coords = gt_coordinates(n);
  const int d = static_cast<int>(coords.size());
  std::vector<Integer> top(n + 2, 0);
  for (int j = n; j >= 1; --j) top[j] = top[j + 1] + (j <= n - 1 ? lambda[j - 1] : 0);
  auto index = [&](int i, int j) {
    return static_cast<int>(std::find(coords.begin(), coords.end(), GTCoordinate{i, j}) - coords.begin());
  };
  // adds ±x_{i,j}; row 0 contributes a constant
  auto term = [&](RowBuilder& b, int i, int j, int sign) {
    if (i == 0) b.constant(sign * top[j]);
    else b.add(index(i, j), sign);
  };
  std::vector<IntVec> rows;
  for (const auto& [i, j] : coords) {
    RowBuilder upper(d), lower(d);
    term(upper, i - 1, j, 1);
    term(upper, i, j, -1);
    term(lower, i, j, 1);
    term(lower, i - 1, j + 1, -1);
    rows.push_back(upper.row);
    rows.push_back(lower.row);
  }
  return RationalPolytope(d, std::move(rows));
}

std::vector<DyckPath> dyck_paths(int n) {
  if (n < 2) throw DomainError("Dyck paths need n >= 2");
  std::vector<DyckPath> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      DyckPath path;
      auto walk = [&](auto& self, RootInterval cur) -> void {
        path.roots.push_back(cur);
        if (cur == RootInterval{j, j}) out.push_back(path);
        else {
          if (cur.p + 1 <= cur.q && cur.p + 1 <= j) self(self, RootInterval{cur.p + 1, cur.q});
          if (cur.q + 1 <= j) self(self, RootInterval{cur.p, cur.q + 1});
        }
        path.roots.pop_back();
      };
      walk(walk, RootInterval{i, i});
    }
  return out;
}

std::vector<RootInterval> interval_roots(int n) {
  auto rd = build_root_system('A', n - 1);
  std::vector<RootInterval> out;
  for (const auto& c : rd.positive_roots()) {
    int p = 0, q = 0;
    for (int k = 0; k < c.size(); ++k)
      if (c[k]) {
        if (!p) p = k + 1;
        q = k + 1;
      }
    out.push_back({p, q});
  }
  return out;
}

std::vector<int> fflv_display_order(int n) {
  auto roots = interval_roots(n);
  std::vector<int> out;
  for (int q = 1; q <= n - 1; ++q)
    for (int p = 1; p <= q; ++p)
      out.push_back(static_cast<int>(std::find(roots.begin(), roots.end(), RootInterval{p, q}) - roots.begin()));
  return out;
}

RationalPolytope fflv_polytope(int n, const Weight& lambda) {
  require_sln_weight(n, lambda);
  const auto roots = interval_roots(n);
  const int d = static_cast<int>(roots.size());
  auto rows = nonnegative(d);
  for (const auto& path : dyck_paths(n)) {
    RowBuilder b(d);
    for (int k = path.start().p; k <= path.end().q; ++k) b.constant(lambda[k - 1]);
    for (const auto& r : path.roots)
      b.add(static_cast<int>(std::find(roots.begin(), roots.end(), r) - roots.begin()), -1);
    rows.push_back(b.row);
  }
  return RationalPolytope(d, std::move(rows));
}

RationalPolytope string_cone_sln(int n, const WeylWord& word) {
  if (n < 2) throw DomainError("SL_n needs n >= 2");
  auto rd = build_root_system('A', n - 1);
  const int N = rd.num_positive_roots();
  for (int letter : word.letters)
    if (letter < 1 || letter > n - 1) throw DomainError("letter out of range in " + to_string(word));
  if (static_cast<int>(word.length()) != N || !rd.is_reduced(word))
    throw DomainError("word " + to_string(word) + " is not a reduced word for w0");

  const Eigen::MatrixXi& cartan = rd.cartan();
  std::set<std::vector<Integer>> seen;
  auto rows = nonnegative(N);
  for (const auto& r : rows) seen.insert(std::vector<Integer>(r.begin(), r.end()));

  for (int i = 1; i <= n - 1; ++i) {
    // minimal representative of W_i s_i w₀
    WeylElement target = rd.compose(rd.simple_reflection(i), rd.longest_element());
    for (bool reduced = true; reduced;) {
      reduced = false;
      for (int j = 1; j <= n - 1; ++j)
        if (j != i && rd.is_left_descent(target, j)) {
          target = rd.compose(rd.simple_reflection(j), target);
          reduced = true;
        }
    }
    const int len = rd.length(target);
    for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
      if (std::popcount(mask) != len) continue;
      WeylWord sub;
      for (int k = 0; k < N; ++k)
        if (mask >> k & 1) sub.letters.push_back(word.letters[k]);
      if (rd.element(sub) != target) continue;
      // coefficient of x_k: ⟨ω_i, s_{i_{k(1)}}⋯s_{i_{k(j)}}(α_{i_k}∨)⟩ over the subword letters before k
      IntVec row = IntVec::Zero(N + 1);
      for (int k = 0; k < N; ++k) {
        if (mask >> k & 1) continue;
        Eigen::VectorXi c = Eigen::VectorXi::Zero(n - 1);
        c[word.letters[k] - 1] = 1;
        for (int t = k - 1; t >= 0; --t) {
          if (!(mask >> t & 1)) continue;
          const int j = word.letters[t] - 1;
          int pairing = 0;
          for (int m = 0; m < n - 1; ++m) pairing += c[m] * cartan(j, m);
          c[j] -= pairing;
        }
        row[k + 1] = c[i - 1];
      }
      row = primitive(row);
      if (row.tail(N).isZero()) continue;
      if (seen.insert(std::vector<Integer>(row.begin(), row.end())).second) rows.push_back(row);
    }
  }
  return RationalPolytope(N, std::move(rows));
}

RationalPolytope string_polytope(const RationalPolytope& cone, const RootDatum& rd, const WeylWord& word,
                                 const Weight& lambda) {
  const int N = static_cast<int>(word.length());
  if (cone.dim() != N) throw DomainError("cone dimension does not match the word length");
  if (lambda.rank() != rd.rank()) throw DomainError("weight rank does not match the root system");
  if (!lambda.is_dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  auto rows = cone.inequalities();
  const Eigen::MatrixXi& cartan = rd.cartan();
  for (int k = 0; k < N; ++k) {
    const int ik = word.letters[k] - 1;
    RowBuilder b(N);
    b.constant(lambda[ik]).add(k, -1);
    for (int l = k + 1; l < N; ++l) b.add(l, -cartan(word.letters[l] - 1, ik));
    rows.push_back(b.row);
  }
  return RationalPolytope(N, std::move(rows));
}

Sp4Polytopes sp4_polytopes(const Weight& lambda) {
  if (lambda.rank() != 2 || !lambda.is_dominant())
    throw DomainError("sp4 polytopes need a dominant weight m1*w1 + m2*w2");
  const Integer m1 = lambda[0], m2 = lambda[1];
  auto upper = [](const Integer& bound, std::initializer_list<std::pair<int, int>> terms) {
    RowBuilder b(4);
    b.constant(bound);
    for (auto [k, c] : terms) b.add(k - 1, -c);
    return b.row;
  };
  auto sp4 = nonnegative(4);
  sp4.push_back(upper(m1, {{1, 1}}));
  sp4.push_back(upper(2 * (m1 + m2), {{1, 2}, {2, 1}, {3, 2}, {4, 2}}));
  sp4.push_back(upper(m2, {{4, 1}}));
  sp4.push_back(upper(m1 + 2 * m2, {{1, 1}, {2, 1}, {3, 1}, {4, 2}}));

  auto q = nonnegative(4);
  q.push_back(upper(m1, {{1, 1}}));
  q.push_back(upper(m1 + m2, {{1, 1}, {2, 1}, {3, 1}}));
  q.push_back(upper(m2, {{3, 1}}));
  q.push_back(upper(m1 + m2, {{1, 1}, {2, 1}, {4, 1}}));

  auto s = nonnegative(4);
  s.push_back(RowBuilder(4).add(1, 2).add(2, -1).row);  // 2x₂ ≥ x₃
  s.push_back(RowBuilder(4).add(2, 1).add(3, -2).row);  // x₃ ≥ 2x₄
  s.push_back(upper(m2, {{4, 1}}));
  s.push_back(upper(m1 + 2 * m2, {{3, 1}}));
  s.push_back(upper(m1 - m2, {{2, 1}}));
  s.push_back(upper(4 * m1 - m2, {{1, 1}}));

  return {RationalPolytope(4, std::move(sp4)), RationalPolytope(4, std::move(q)), RationalPolytope(4, std::move(s))};
}

WeylWord kogan_face_word(int n, const std::vector<GTCoordinate>& equalities) {
  std::vector<GTCoordinate> sorted = equalities;
  for (const auto& [i, j] : sorted)
    if (i < 0 || i > n - 2 || j < 2 || j > n - i)
      throw DomainError("x_{" + std::to_string(i) + "," + std::to_string(j) + "} = x_{" + std::to_string(i + 1) + "," +
                        std::to_string(j - 1) + "} is not a dual Kogan facet");
  // bottom to top, right to left
  std::sort(sorted.begin(), sorted.end(),
            [](const GTCoordinate& a, const GTCoordinate& b) { return a.row != b.row ? a.row > b.row : a.col > b.col; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  WeylWord w;
  for (const auto& e : sorted) w.letters.push_back(n + 1 - e.col);
  return w;
}

bool kogan_face_matches(const RootDatum& rd, const WeylWord& face_word, const WeylWord& w) {
  return rd.element(face_word) == rd.compose(rd.element(w), rd.longest_element());
}

RationalPolytope gromov_simplex(int N, const Rational& a) {
  if (a <= 0) throw DomainError("simplex size must be positive");
  if (N < 1) throw DomainError("simplex dimension must be positive");
  auto rows = nonnegative(N);
  IntVec top(N + 1);
  top[0] = numerator(a);
  for (int k = 1; k <= N; ++k) top[k] = -Integer(denominator(a));
  rows.push_back(top);
  return RationalPolytope(N, std::move(rows));
}

}  // namespace flagdegen
