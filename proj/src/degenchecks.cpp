#include "flagdegen/degenchecks.hpp"

#include "flagdegen/catalog.hpp"

#include <algorithm>
#include <set>

namespace flagdegen {

Rational gromov_width(const RootDatum& rd, const Weight& lambda) {
  if (lambda.rank() != rd.rank()) throw DomainError("weight rank mismatch");
  int best = 0;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    const int p = std::abs(rd.pairing(lambda, k));
    if (p != 0 && (best == 0 || p < best)) best = p;
  }
  return Rational(best);
}

bool simplex_fits(const RationalPolytope& P, const Rational& k) {
  if (k < 0) throw DomainError("simplex size must be nonnegative");
  const int N = P.dim();
  RatVec v = RatVec::Zero(N);
  if (!contains(P, v)) return false;
  for (int j = 0; j < N; ++j) {
    v[j] = k;
    if (!contains(P, v)) return false;
    v[j] = 0;
  }
  return true;
}

std::int64_t PlueckerWeighting::degree(const TabIndex& i) const { return order.weight(at(i).exponent); }

const PlueckerEntry& PlueckerWeighting::at(const TabIndex& i) const {
  auto it = entries.find(i);
  if (it == entries.end()) throw DomainError("Plücker coordinate " + to_string(i) + " has no weight");
  return it->second;
}

Weight plucker_weight(const TabIndex& i) {
  Eigen::VectorXi c = Eigen::VectorXi::Zero(i.n - 1);
  for (int v : i.entries) {
    if (v <= i.n - 1) c[v - 1] += 1;
    if (v >= 2) c[v - 2] -= 1;
  }
  return Weight(c);
}

PlueckerWeighting plucker_weighting(const Setup& setup, const EssentialSet& es) {
  const auto& rd = setup.rd;
  if (rd.type_label()[0] != 'A') throw DomainError("Plücker weightings need type A");
  const int n = rd.rank() + 1;
  int d = 0;
  for (int i = 0; i < rd.rank(); ++i) {
    if (es.lambda[i] == 0) continue;
    if (es.lambda[i] != 1 || d != 0) throw DomainError("weight must be fundamental");
    d = i + 1;
  }
  if (d == 0) throw DomainError("weight must be fundamental");
  std::map<Weight, TabIndex> by_weight;
  for (const auto& i : tab_indices(d, n)) by_weight.emplace(plucker_weight(i), i);
  PlueckerWeighting w{setup.order, {}};
  for (const auto& m : es.points.points) {
    Weight mu = es.lambda;
    for (std::size_t k = 0; k < m.size(); ++k) mu = mu - static_cast<int>(m[k]) * rd.root_weight(setup.sequence.roots[k]);
    auto it = by_weight.find(mu);
    if (it == by_weight.end()) throw DomainError("essential point of weight " + to_string(mu) + " has no coordinate");
    if (!w.entries.emplace(it->second, PlueckerEntry{1, m}).second) throw DomainError("two points of one weight");
  }
  return w;
}

PlueckerWeighting plucker_weighting(const Setup& setup, int d, const Budget& budget) {
  const int r = setup.rd.rank();
  if (d < 1 || d > r) throw DomainError("need 1 ≤ d < n");
  return plucker_weighting(setup, essential_set(setup.rd, setup.rd.fundamental_weight(d - 1), setup.sequence, setup.order, budget));
}

PlueckerWeighting gr24_weighting(const std::string& preset_name) {
  auto w = plucker_weighting(preset(preset_name), 2);
  std::vector<std::vector<int>> negative;
  if (preset_name == "gr24-pbw") negative = {{2, 3}, {2, 4}, {3, 4}};
  if (preset_name == "gr24-lusztig") negative = {{2, 3}, {2, 4}};
  for (const auto& e : negative) w.entries.at(TabIndex(4, e)).sign = -1;
  return w;
}

bool QuadraticForm::has_term(const TabIndex& a, const TabIndex& b) const {
  return std::any_of(terms.begin(), terms.end(),
                     [&](const QuadraticTerm& t) { return (t.a == a && t.b == b) || (t.a == b && t.b == a); });
}

std::string to_string(const QuadraticForm& f) {
  if (f.terms.empty()) return "0";
  const int s = f.terms.front().coeff > 0 ? 1 : -1;
  std::string out;
  for (std::size_t k = 0; k < f.terms.size(); ++k) {
    const int c = s * f.terms[k].coeff;
    if (k > 0) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "p" + to_string(f.terms[k].a) + "p" + to_string(f.terms[k].b);
  }
  return out;
}

namespace {

QuadraticTerm term(int coeff, TabIndex a, TabIndex b) {
  if (b < a) std::swap(a, b);
  return QuadraticTerm{coeff, std::move(a), std::move(b), 0, {}};
}

void sort_terms(QuadraticForm& f) {
  std::sort(f.terms.begin(), f.terms.end(),
            [](const QuadraticTerm& x, const QuadraticTerm& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
}

void weigh(const PlueckerWeighting& w, QuadraticTerm& t) {
  const auto& ea = w.at(t.a).exponent;
  const auto& eb = w.at(t.b).exponent;
  t.exponent = ea + eb;
  t.degree = w.order.weight(t.exponent);
}

}  // namespace

QuadraticForm gr24_relation() {
  auto p = [](int i, int j) { return TabIndex(4, {i, j}); };
  QuadraticForm f{{term(1, p(1, 4), p(2, 3)), term(-1, p(1, 3), p(2, 4)), term(1, p(1, 2), p(3, 4))}};
  sort_terms(f);
  return f;
}

QuadraticForm plucker_initial_form(const PlueckerWeighting& w) {
  QuadraticForm rel = gr24_relation();
  for (auto& t : rel.terms) weigh(w, t);
  auto lower = [&](const QuadraticTerm& x, const QuadraticTerm& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return w.order.less(x.exponent, y.exponent);
  };
  const auto least = *std::min_element(rel.terms.begin(), rel.terms.end(), lower);
  QuadraticForm out;
  for (const auto& t : rel.terms)
    if (!lower(least, t)) out.terms.push_back(t);
  return out;
}

std::vector<Binomial> degree2_binomials(const EssentialSet& es) {
  const auto& g = es.points.points;
  std::map<MultiExponent, std::vector<std::pair<int, int>>> sums;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a; b < g.size(); ++b) sums[g[a] + g[b]].push_back({static_cast<int>(a), static_cast<int>(b)});
  std::vector<Binomial> out;
  for (const auto& [s, pairs] : sums)
    for (std::size_t k = 1; k < pairs.size(); ++k) out.push_back({pairs.front(), pairs[k], s});
  return out;
}

QuadraticForm binomial_form(const PlueckerWeighting& w, const EssentialSet& es, const Binomial& b) {
  std::map<MultiExponent, TabIndex> name;
  for (const auto& [i, e] : w.entries) name.emplace(e.exponent, i);
  auto of = [&](int k) {
    auto it = name.find(es.points.points.at(k));
    if (it == name.end()) throw DomainError("generator without a Plücker name");
    return it->second;
  };
  QuadraticForm f{{term(1, of(b.left.first), of(b.left.second)), term(-1, of(b.right.first), of(b.right.second))}};
  for (auto& t : f.terms) weigh(w, t);
  sort_terms(f);
  return f;
}

std::optional<std::map<TabIndex, TabIndex>> find_relabeling(const std::vector<QuadraticForm>& first,
                                                             const std::vector<QuadraticForm>& second) {
  if (first.size() != second.size()) return std::nullopt;
  if (first.empty()) return std::map<TabIndex, TabIndex>{};
  const auto& probe = first.front().terms.front().a;
  auto vars = tab_indices(probe.d(), probe.n);
  using Shape = std::set<std::set<TabIndex>>;
  auto shape = [](const QuadraticForm& f, const auto& rename) {
    Shape s;
    for (const auto& t : f.terms) s.insert({rename(t.a), rename(t.b)});
    return s;
  };
  std::set<Shape> target;
  for (const auto& f : second) target.insert(shape(f, [](const TabIndex& i) { return i; }));
  std::vector<int> perm(vars.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  do {
    std::map<TabIndex, TabIndex> sigma;
    for (std::size_t k = 0; k < vars.size(); ++k) sigma.emplace(vars[k], vars[perm[k]]);
    std::set<Shape> image;
    for (const auto& f : first) image.insert(shape(f, [&](const TabIndex& i) { return sigma.at(i); }));
    if (image == target) return sigma;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace flagdegen
