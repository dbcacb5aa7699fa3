#include "flagdegen/essmonoid.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>
#include <tuple>

namespace flagdegen {

WeightFunction::WeightFunction(std::vector<std::int64_t> c) : coeffs(std::move(c)) {
  for (auto x : coeffs)
    if (x < 0) throw ConfigurationError("weight function coefficients must be nonnegative");
}

WeightFunction WeightFunction::homogeneous(std::size_t n) { return WeightFunction(std::vector<std::int64_t>(n, 1)); }

WeightFunction WeightFunction::height(const RootDatum& rd, const BirationalSequence& seq) {
  std::vector<std::int64_t> c;
  for (int k : seq.roots) c.push_back(rd.height(k));
  return WeightFunction(std::move(c));
}

std::int64_t WeightFunction::operator()(const MultiExponent& m) const {
  if (m.size() != coeffs.size()) throw DomainError("exponent length does not match the weight function");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += coeffs[i] * m[i];
  return s;
}

bool WeightFunction::strictly_positive() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x > 0; });
}

WeightFunction WeightFunction::scaled(std::int64_t k) const {
  if (k <= 0) throw ConfigurationError("scale must be positive");
  auto c = coeffs;
  for (auto& x : c) x *= k;
  return WeightFunction(std::move(c));
}

std::string to_string(Tiebreak t) {
  switch (t) {
    case Tiebreak::lex: return "lex";
    case Tiebreak::rlex: return "rlex";
    case Tiebreak::opp_lex: return "opp-lex";
    case Tiebreak::opp_rlex: return "opp-rlex";
  }
  return "?";
}

Tiebreak parse_tiebreak(const std::string& name) {
  for (auto t : {Tiebreak::lex, Tiebreak::rlex, Tiebreak::opp_lex, Tiebreak::opp_rlex})
    if (to_string(t) == name) return t;
  throw ConfigurationError("unknown order variant '" + name + "' (lex, rlex, opp-lex, opp-rlex)");
}

namespace {

bool opposite(Tiebreak t) { return t == Tiebreak::opp_lex || t == Tiebreak::opp_rlex; }
bool from_right(Tiebreak t) { return t == Tiebreak::rlex || t == Tiebreak::opp_rlex; }

bool is_zero(const MultiExponent& m) {
  return std::all_of(m.begin(), m.end(), [](auto x) { return x == 0; });
}

}  // namespace

void MonomialOrder::validate() const {
  if (opposite(tiebreak) && !weight.strictly_positive())
    throw ConfigurationError("the " + to_string(tiebreak) + " order needs Ψ(m) > 0 for every nonzero m");
}

std::strong_ordering MonomialOrder::compare(const MultiExponent& a, const MultiExponent& b) const {
  if (a.size() != b.size()) throw DomainError("exponents of different lengths");
  const auto pa = weight(a), pb = weight(b);
  if (opposite(tiebreak) && ((pa == 0 && !is_zero(a)) || (pb == 0 && !is_zero(b))))
    throw ConfigurationError("the " + to_string(tiebreak) + " order needs Ψ(m) > 0 for every nonzero m");
  if (pa != pb) return pa <=> pb;
  const auto n = a.size();
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t i = from_right(tiebreak) ? n - 1 - t : t;
    if (a[i] != b[i]) return opposite(tiebreak) ? b[i] <=> a[i] : a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const MonomialOrder& order, const MultiExponent& a, const MultiExponent& b) {
  return order.compare(a, b);
}

std::vector<MultiExponent> exponents_of_depth(const RootDatum& rd, const BirationalSequence& seq, const Depth& nu,
                                              std::int64_t cap) {
  const int n = static_cast<int>(seq.size());
  const int r = rd.rank();
  // reachable[i][j]: some root at position ≥ i has a positive j-th coordinate
  std::vector<std::vector<char>> reachable(n + 1, std::vector<char>(r, 0));
  for (int i = n - 1; i >= 0; --i)
    for (int j = 0; j < r; ++j) reachable[i][j] = reachable[i + 1][j] || rd.root(seq.roots[i])[j] > 0;

  std::vector<MultiExponent> out;
  MultiExponent m(n, 0);
  Depth rest = nu;
  auto walk = [&](auto& self, int i) -> void {
    for (int j = 0; j < r; ++j)
      if (rest[j] > 0 && !reachable[i][j]) return;
    if (i == n) {
      if (static_cast<std::int64_t>(out.size()) >= cap)
        throw ResourceError("more than " + std::to_string(cap) + " exponents of one weight");
      out.push_back(m);
      return;
    }
    const auto& beta = rd.root(seq.roots[i]);
    std::int64_t most = std::numeric_limits<std::int64_t>::max();
    for (int j = 0; j < r; ++j)
      if (beta[j] > 0) most = std::min<std::int64_t>(most, rest[j] / beta[j]);
    for (std::int64_t t = most; t >= 0; --t) {
      m[i] = t;
      for (int j = 0; j < r; ++j) rest[j] -= static_cast<int>(t) * beta[j];
      self(self, i + 1);
      for (int j = 0; j < r; ++j) rest[j] += static_cast<int>(t) * beta[j];
    }
    m[i] = 0;
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end());
  return out;
}

EssentialSet essential_set(HWModule& M, const BirationalSequence& seq, const MonomialOrder& order,
                           const Budget& budget) {
  const RootDatum& rd = M.root_datum();
  const Weight& lambda = M.highest_weight();
  if (lambda.rank() != rd.rank()) throw DomainError("weight rank does not match the root system");
  if (!lambda.is_dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  if (order.weight.size() != seq.size()) throw ConfigurationError("weight function length does not match the sequence");
  order.validate();
  for (int k : seq.roots)
    if (k < 0 || k >= rd.num_positive_roots()) throw DomainError("sequence entry is not a positive root");
  if (weyl_dim(rd, lambda) > budget.max_weyl_dim)
    throw ResourceError("dim V(" + to_string(lambda) + ") exceeds the budget of " +
                        std::to_string(budget.max_weyl_dim));

  std::vector<IntPoint> points;
  for (const Depth& nu : M.irreducible().support()) {
    auto candidates = exponents_of_depth(rd, seq, nu, budget.max_monomials_per_weight);
    std::sort(candidates.begin(), candidates.end(),
              [&](const MultiExponent& a, const MultiExponent& b) { return order.less(a, b); });
    const auto target = M.dim(nu);
    GramRankTracker tracker(M, nu);
    for (const auto& m : candidates) {
      if (tracker.rank() == target) break;
      if (tracker.offer(M.image(seq, m))) points.push_back(m);
    }
    if (tracker.rank() < target) throw DomainError("the sequence does not span a weight space of V(" + to_string(lambda) + ")");
  }
  return {lambda, LatticePointSet(static_cast<int>(seq.size()), std::move(points))};
}

EssentialSet essential_set(const RootDatum& rd, const Weight& lambda, const BirationalSequence& seq,
                           const MonomialOrder& order, const Budget& budget) {
  if (lambda.rank() != rd.rank()) throw DomainError("weight rank does not match the root system");
  if (!lambda.is_dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  if (weyl_dim(rd, lambda) > budget.max_weyl_dim)
    throw ResourceError("dim V(" + to_string(lambda) + ") exceeds the budget of " +
                        std::to_string(budget.max_weyl_dim));
  HWModule M(rd, lambda);
  return essential_set(M, seq, order, budget);
}

EssentialLevel essential_polytope_level(const RootDatum& rd, const Weight& lambda, const BirationalSequence& seq,
                                        const MonomialOrder& order, int level, const Budget& budget) {
  if (level < 1) throw DomainError("level must be positive");
  EssentialLevel out{level, essential_set(rd, level * lambda, seq, order, budget), {}};
  for (const auto& p : out.set.points.points) {
    RatVec v(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<Eigen::Index>(i)] = Rational(p[i], level);
    out.scaled.push_back(v);
  }
  return out;
}

Setup fflv_setup(int n) {
  if (n < 2) throw DomainError("SL_n needs n >= 2");
  auto rd = build_root_system('A', n - 1);
  BirationalSequence seq;
  for (int k = rd.num_positive_roots() - 1; k >= 0; --k) seq.roots.push_back(k);
  return {rd, seq, {WeightFunction::homogeneous(seq.size()), Tiebreak::opp_rlex}};
}

Setup string_setup(const RootDatum& rd, const WeylWord& word) {
  if (!rd.is_reduced(word) || static_cast<int>(word.length()) != rd.num_positive_roots())
    throw DomainError("word " + to_string(word) + " is not a reduced word for w0");
  BirationalSequence seq;
  for (int letter : word.letters) seq.roots.push_back(rd.simple_root_index(letter - 1));
  return {rd, seq, {WeightFunction::height(rd, seq), Tiebreak::opp_lex}};
}

Setup lusztig_setup(const RootDatum& rd, const WeylWord& word) {
  if (!rd.is_reduced(word) || static_cast<int>(word.length()) != rd.num_positive_roots())
    throw DomainError("word " + to_string(word) + " is not a reduced word for w0");
  auto seq = sequence_from_word(rd, word);
  return {rd, seq, {WeightFunction::height(rd, seq), Tiebreak::opp_rlex}};
}

EssentialSet lusztig_essential(const RootDatum& rd, const Weight& lambda, const WeylWord& word, const Budget& budget) {
  auto s = lusztig_setup(rd, word);
  return essential_set(rd, lambda, s.sequence, s.order, budget);
}

namespace {

// Rank-two root (a·short + b·long) in simple-root coordinates.
Eigen::VectorXi rank2_root(const RootDatum& rd, int a, int b) {
  const int s = rd.root_length(0) <= rd.root_length(1) ? 0 : 1;
  Eigen::VectorXi c(2);
  c[s] = a;
  c[1 - s] = b;
  return c;
}

Eigen::VectorXi interval(int n, int p, int q) {
  Eigen::VectorXi c = Eigen::VectorXi::Zero(n - 1);
  for (int k = p; k <= q; ++k) c[k - 1] = 1;
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"gr24-pbw",  "gr24-string",   "gr24-lusztig",    "gr24-qpbw", "g2-homogeneous",
          "g2-nonsaturated", "g2-nonsaturated-mirror", "sp4-sp", "sp4-q", "sp4-string"};
}

Setup preset(const std::string& name) {
  if (name.rfind("gr24-", 0) == 0) {
    auto rd = build_root_system('A', 3);
    auto seq_of = [&](std::initializer_list<std::pair<int, int>> roots) {
      std::vector<Eigen::VectorXi> c;
      for (auto [p, q] : roots) c.push_back(interval(4, p, q));
      return sequence_from_coords(rd, c);
    };
    if (name == "gr24-pbw") {
      auto seq = seq_of({{1, 3}, {1, 2}, {2, 3}, {1, 1}, {2, 2}, {3, 3}});
      return {rd, seq, {WeightFunction::homogeneous(6), Tiebreak::opp_rlex}};
    }
    if (name == "gr24-string") return string_setup(rd, WeylWord{1, 2, 1, 3, 2, 1});
    if (name == "gr24-lusztig") return lusztig_setup(rd, WeylWord{3, 2, 1, 3, 2, 3});
    if (name == "gr24-qpbw") {
      auto seq = seq_of({{1, 3}, {2, 2}, {2, 3}, {1, 1}, {1, 2}, {3, 3}});
      return {rd, seq, {WeightFunction({3, 2, 2, 3, 4, 1}), Tiebreak::lex}};
    }
  }
  if (name.rfind("g2-", 0) == 0) {
    auto rd = build_root_system('G', 2);
    auto seq_of = [&](std::initializer_list<std::pair<int, int>> roots) {
      std::vector<Eigen::VectorXi> c;
      for (auto [a, b] : roots) c.push_back(rank2_root(rd, a, b));
      return sequence_from_coords(rd, c);
    };
    if (name == "g2-homogeneous") {
      auto seq = seq_of({{3, 2}, {3, 1}, {2, 1}, {1, 1}, {1, 0}, {0, 1}});
      return {rd, seq, {WeightFunction::homogeneous(6), Tiebreak::lex}};
    }
    if (name == "g2-nonsaturated") {
      auto seq = seq_of({{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1}});
      return {rd, seq, {WeightFunction({2, 1, 3, 1, 3, 1}), Tiebreak::lex}};
    }
    if (name == "g2-nonsaturated-mirror") {
      auto seq = seq_of({{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1}});
      return {rd, seq, {WeightFunction({1, 3, 1, 3, 1, 2}), Tiebreak::lex}};
    }
  }
  if (name.rfind("sp4-", 0) == 0) {
    auto rd = build_root_system('C', 2);
    auto seq_of = [&](std::initializer_list<std::pair<int, int>> roots) {
      std::vector<Eigen::VectorXi> c;
      for (auto [a, b] : roots) c.push_back(rank2_root(rd, a, b));
      return sequence_from_coords(rd, c);
    };
    if (name == "sp4-sp") {
      auto seq = seq_of({{1, 0}, {1, 1}, {2, 1}, {0, 1}});
      return {rd, seq, {WeightFunction({1, 1, 1, 2}), Tiebreak::lex}};
    }
    if (name == "sp4-q") {
      auto seq = seq_of({{2, 1}, {1, 1}, {1, 0}, {0, 1}});
      return {rd, seq, {WeightFunction::homogeneous(4), Tiebreak::opp_rlex}};
    }
    if (name == "sp4-string") return string_setup(rd, WeylWord{1, 2, 1, 2});
  }
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown preset '" + name + "' (" + known + ")");
}

GradedMonoid::GradedMonoid(Setup setup, Budget budget) : setup_(std::move(setup)), budget_(budget) {
  if (setup_.order.weight.size() != setup_.sequence.size())
    throw ConfigurationError("weight function length does not match the sequence");
  setup_.order.validate();
}

const EssentialSet& GradedMonoid::compute(const Weight& lambda) {
  if (auto it = levels_.find(lambda); it != levels_.end()) return it->second;
  auto es = essential_set(setup_.rd, lambda, setup_.sequence, setup_.order, budget_);
  return levels_.emplace(lambda, std::move(es)).first->second;
}

void GradedMonoid::compute_ray(const Weight& lambda, int levels, int threads) {
  std::vector<Weight> todo;
  for (int k = 1; k <= levels; ++k)
    if (!has(k * lambda)) todo.push_back(k * lambda);
  threads = std::max(1, threads);
  for (std::size_t start = 0; start < todo.size(); start += static_cast<std::size_t>(threads)) {
    std::vector<std::future<EssentialSet>> jobs;
    for (std::size_t i = start; i < std::min(todo.size(), start + static_cast<std::size_t>(threads)); ++i)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [this, w = todo[i]] {
        return essential_set(setup_.rd, w, setup_.sequence, setup_.order, budget_);
      }));
    for (auto& j : jobs) {
      auto es = j.get();
      levels_.emplace(es.lambda, std::move(es));
    }
  }
}

const EssentialSet& GradedMonoid::at(const Weight& lambda) const {
  auto it = levels_.find(lambda);
  if (it == levels_.end()) throw DomainError("level " + to_string(lambda) + " has not been computed");
  return it->second;
}

ClosureReport monoid_closure_check(const GradedMonoid& gamma, const std::vector<std::pair<Weight, Weight>>& pairs) {
  ClosureReport report;
  for (const auto& [lambda, mu] : pairs) {
    const auto& a = gamma.at(lambda);
    const auto& b = gamma.at(mu);
    const auto& c = gamma.at(lambda + mu);
    for (const auto& p : a.points.points)
      for (const auto& q : b.points.points) {
        ++report.sums_checked;
        if (!c.points.contains(p + q)) report.violations.push_back({lambda, mu, p, q});
      }
  }
  return report;
}

namespace {

// Integer lattice spanned by a family of vectors, kept in echelon form.
class LatticeSpan {
 public:
  explicit LatticeSpan(int dim) : dim_(dim) {}

  void add(IntVec v) {
    for (std::size_t k = 0; k < rows_.size() && pivot(v) < dim_; ++k) {
      const int p = pivot(rows_[k]), q = pivot(v);
      if (q < p) std::swap(rows_[k], v);
      else if (q == p) combine(rows_[k], v, p);
    }
    if (pivot(v) < dim_) rows_.push_back(std::move(v));
  }

  bool contains(IntVec v) const {
    for (const auto& row : rows_) {
      const int p = pivot(row);
      if (v[p] == 0) continue;
      if (v[p] % row[p] != 0) return false;
      v -= Integer(v[p] / row[p]) * row;
    }
    return v.isZero();
  }

 private:
  int pivot(const IntVec& v) const {
    for (int i = 0; i < dim_; ++i)
      if (v[i] != 0) return i;
    return dim_;
  }

  // Unimodular row operation leaving the gcd of the pivot entries in row and 0 in v.
  static void combine(IntVec& row, IntVec& v, int p) {
    Integer a = row[p], b = v[p];
    Integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Integer q = a / b;
      std::tie(a, b) = std::make_tuple(b, Integer(a - q * b));
      std::tie(x0, x1) = std::make_tuple(x1, Integer(x0 - q * x1));
      std::tie(y0, y1) = std::make_tuple(y1, Integer(y0 - q * y1));
    }
    IntVec g = x0 * row + y0 * v;
    v = IntVec(x1 * row + y1 * v);
    row = std::move(g);
  }

  int dim_;
  std::vector<IntVec> rows_;
};

IntVec lifted(int level, const IntPoint& p) {
  IntVec v(static_cast<Eigen::Index>(p.size()) + 1);
  v[0] = level;
  for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<Eigen::Index>(i) + 1] = p[i];
  return v;
}

}  // namespace

SaturationReport saturation_check(const GradedMonoid& gamma, const Weight& lambda, int generators_from, int test_to) {
  if (generators_from < 1 || test_to < 1) throw DomainError("levels must be positive");
  std::vector<const LatticePointSet*> level(static_cast<std::size_t>(test_to) + 1, nullptr);
  for (int k = 1; k <= test_to; ++k) level[k] = &gamma.at(k * lambda).points;
  const int n = level[1]->dim;
  SaturationReport report{lambda, generators_from, test_to, {}, {}};

  // sums of generators from levels ≤ generators_from
  std::vector<std::set<IntPoint>> reach(static_cast<std::size_t>(test_to) + 1);
  for (int k = 1; k <= test_to; ++k) {
    if (k <= generators_from) reach[k].insert(level[k]->points.begin(), level[k]->points.end());
    for (int j = 1; j <= std::min(generators_from, k - 1); ++j)
      for (const auto& g : level[j]->points)
        for (const auto& s : reach[k - j]) reach[k].insert(g + s);
    for (const auto& p : level[k]->points)
      if (!reach[k].count(p)) report.not_generated.push_back({k, p});
  }

  // lattice points of the cone over all computed levels
  LatticeSpan lattice(n + 1);
  std::vector<RatVec> hull;
  for (int k = 1; k <= test_to; ++k)
    for (const auto& p : level[k]->points) {
      lattice.add(lifted(k, p));
      RatVec v(n);
      for (int i = 0; i < n; ++i) v[i] = Rational(p[i], k);
      hull.push_back(v);
    }
  const auto body = RationalPolytope::from_vertices(n, hull);
  for (int k = 1; k <= test_to; ++k)
    for (const auto& p : lattice_points(body.dilate(k)).points)
      if (!level[k]->contains(p) && lattice.contains(lifted(k, p))) report.not_saturated.push_back({k, p});
  return report;
}

GlobalSaturationReport global_saturation_check(const GradedMonoid& gamma, const std::vector<Weight>& weights) {
  const auto& levels = gamma.levels();
  if (levels.empty()) throw DomainError("no levels have been computed");
  const int r = gamma.setup().rd.rank();
  const int n = static_cast<int>(gamma.setup().sequence.size());
  std::vector<IntVec> gens;
  LatticeSpan lattice(r + n);
  auto lift = [&](const Weight& w, const IntPoint& p) {
    IntVec v(r + n);
    for (int i = 0; i < r; ++i) v[i] = w[i];
    for (int i = 0; i < n; ++i) v[r + i] = p[i];
    return v;
  };
  for (const auto& [w, es] : levels)
    for (const auto& p : es.points.points) {
      gens.push_back(lift(w, p));
      lattice.add(gens.back());
    }
  IntMat G(static_cast<Eigen::Index>(gens.size()), r + n);
  for (std::size_t i = 0; i < gens.size(); ++i) G.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  // facets of the cone over Γ are the extreme rays of its dual
  auto dual = double_description(G);
  std::vector<IntVec> facets = dual.rays;
  for (const auto& l : dual.lineality) {
    facets.push_back(l);
    facets.push_back(IntVec(-l));
  }
  GlobalSaturationReport report;
  report.facets = facets.size();
  for (const auto& w : weights) {
    const auto& es = gamma.at(w);
    std::vector<IntVec> rows;
    for (const auto& f : facets) {
      IntVec row(n + 1);
      row[0] = 0;
      for (int i = 0; i < r; ++i) row[0] += f[i] * w[i];
      row.tail(n) = f.tail(n);
      rows.push_back(row);
    }
    for (const auto& p : lattice_points(RationalPolytope(n, std::move(rows))).points)
      if (!es.points.contains(p) && lattice.contains(lift(w, p))) report.missing.push_back({w, p});
  }
  return report;
}

}  // namespace flagdegen
