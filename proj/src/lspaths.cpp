#include "flagdegen/lspaths.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flagdegen {

TabIndex::TabIndex(int n_, std::vector<int> e) : n(n_), entries(std::move(e)) {
  if (entries.empty() || static_cast<int>(entries.size()) > n) throw DomainError("index size must lie in [1, n]");
  for (std::size_t t = 0; t < entries.size(); ++t) {
    if (entries[t] < 1 || entries[t] > n) throw DomainError("index entry out of range");
    if (t > 0 && entries[t] <= entries[t - 1]) throw DomainError("index entries must increase");
  }
}

std::string to_string(const TabIndex& i) {
  std::string out = "[";
  for (std::size_t t = 0; t < i.entries.size(); ++t) {
    if (t > 0 && i.n > 9) out += ",";
    out += std::to_string(i.entries[t]);
  }
  return out + "]";
}

std::vector<TabIndex> tab_indices(int d, int n) {
  if (d < 1 || d > n) throw DomainError("need 1 ≤ d ≤ n");
  std::vector<TabIndex> out;
  std::vector<int> cur;
  auto walk = [&](auto& self, int next) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.emplace_back(n, cur);
      return;
    }
    for (int v = next; v <= n - (d - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  walk(walk, 1);
  return out;
}

bool tab_leq(const TabIndex& a, const TabIndex& b) {
  if (a.n != b.n || a.d() != b.d()) throw DomainError("indices of different shapes");
  for (int t = 0; t < a.d(); ++t)
    if (a.entries[t] > b.entries[t]) return false;
  return true;
}

bool comparable(const TabIndex& a, const TabIndex& b) { return tab_leq(a, b) || tab_leq(b, a); }

std::vector<std::vector<TabIndex>> maximal_chains(int d, int n) {
  auto all = tab_indices(d, n);
  auto rank = [](const TabIndex& i) {
    int s = 0;
    for (int v : i.entries) s += v;
    return s;
  };
  std::vector<std::vector<int>> up(all.size());
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      if (rank(all[b]) == rank(all[a]) + 1 && tab_leq(all[a], all[b])) up[a].push_back(static_cast<int>(b));
  std::vector<std::vector<TabIndex>> out;
  std::vector<TabIndex> cur{all.front()};
  auto walk = [&](auto& self, int a) -> void {
    if (up[a].empty()) {
      out.push_back(cur);
      return;
    }
    for (int b : up[a]) {
      cur.push_back(all[b]);
      self(self, b);
      cur.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

PlueckerMonomial::PlueckerMonomial(std::vector<TabIndex> f) : factors(std::move(f)) {
  for (std::size_t t = 1; t < factors.size(); ++t)
    if (factors[t].n != factors[0].n || factors[t].d() != factors[0].d())
      throw DomainError("Plücker factors of different shapes");
  std::sort(factors.begin(), factors.end(), std::greater<>());
}

bool PlueckerMonomial::is_standard() const {
  for (std::size_t t = 1; t < factors.size(); ++t)
    if (!tab_leq(factors[t], factors[t - 1])) return false;
  return true;
}

std::string to_string(const PlueckerMonomial& m) {
  if (m.factors.empty()) return "1";
  std::string out;
  for (const auto& f : m.factors) out += "p" + to_string(f);
  return out;
}

std::vector<PlueckerMonomial> standard_monomials(int d, int n, int r) {
  if (r < 0) throw DomainError("degree must be nonnegative");
  auto all = tab_indices(d, n);
  std::vector<PlueckerMonomial> out;
  std::vector<TabIndex> cur;
  auto walk = [&](auto& self) -> void {
    if (static_cast<int>(cur.size()) == r) {
      PlueckerMonomial m;
      m.factors = cur;
      out.push_back(std::move(m));
      return;
    }
    for (const auto& i : all)
      if (cur.empty() || tab_leq(i, cur.back())) {
        cur.push_back(i);
        self(self);
        cur.pop_back();
      }
  };
  walk(walk);
  return out;
}

std::optional<PlueckerMonomial> hodge_product(const PlueckerMonomial& a, const PlueckerMonomial& b) {
  std::vector<TabIndex> f = a.factors;
  f.insert(f.end(), b.factors.begin(), b.factors.end());
  PlueckerMonomial m(std::move(f));
  if (!m.is_standard()) return std::nullopt;
  return m;
}

namespace {

void require_dominant(const RootDatum& rd, const Weight& lambda) {
  if (lambda.rank() != rd.rank()) throw DomainError("weight rank mismatch");
  if (!lambda.is_dominant()) throw DomainError("weight must be dominant");
}

// Length of the minimal coset representative w with w(λ) = μ.
int coset_length(const RootDatum& rd, const Weight& mu) {
  int l = 0;
  for (int k = 0; k < rd.num_positive_roots(); ++k)
    if (rd.pairing(mu, k) < 0) ++l;
  return l;
}

struct Cover {
  Weight below;
  int pairing;
};

// W/W_λ as the orbit of λ with its Bruhat covers.
struct CosetPoset {
  Weight lambda;
  std::vector<Weight> points;
  std::map<Weight, int> length;
  std::map<Weight, std::vector<Cover>> down;

  CosetPoset(const RootDatum& rd, const Weight& lam) : lambda(lam) {
    std::set<Weight> seen{lam};
    std::vector<Weight> todo{lam};
    while (!todo.empty()) {
      Weight mu = todo.back();
      todo.pop_back();
      points.push_back(mu);
      for (int i = 1; i <= rd.rank(); ++i) {
        Weight nu = rd.reflect(i, mu);
        if (seen.insert(nu).second) todo.push_back(nu);
      }
    }
    for (const auto& mu : points) length[mu] = coset_length(rd, mu);
    for (const auto& mu : points) {
      auto& d = down[mu];
      for (int k = 0; k < rd.num_positive_roots(); ++k) {
        const int p = rd.pairing(mu, k);
        if (p >= 0) continue;
        Weight nu = rd.reflect_root(k, mu);
        if (length[nu] == length[mu] - 1) d.push_back({nu, -p});
      }
    }
  }
};

bool integral(const Rational& a, int p) {
  Rational x = a * p;
  return denominator(x) == 1;
}

}  // namespace

Weight LSPath::endpoint() const {
  const int r = lambda.rank();
  std::vector<Rational> acc(r, Rational(0));
  Rational prev = 0;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (int j = 0; j < r; ++j) acc[j] += (breaks[i] - prev) * directions[i][j];
    prev = breaks[i];
  }
  Eigen::VectorXi c(r);
  for (int j = 0; j < r; ++j) {
    if (denominator(acc[j]) != 1) throw DomainError("path endpoint is not integral");
    c[j] = numerator(acc[j]).convert_to<int>();
  }
  return Weight(c);
}

WeylWord coset_word(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  require_dominant(rd, lambda);
  std::vector<int> letters;
  Weight cur = mu;
  while (!cur.is_dominant()) {
    int i = 0;
    while (cur[i] >= 0) ++i;
    letters.push_back(i + 1);
    cur = rd.reflect(i + 1, cur);
  }
  if (!(cur == lambda)) throw DomainError("weight is not in the orbit of λ");
  return WeylWord(letters);
}

bool coset_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu, const Weight& nu) {
  return bruhat_leq(rd, coset_word(rd, lambda, mu), coset_word(rd, lambda, nu));
}

std::vector<LSPath> ls_paths(const RootDatum& rd, const Weight& lambda, const Budget& budget) {
  require_dominant(rd, lambda);
  if (weyl_dim(rd, lambda) > budget.max_weyl_dim) throw ResourceError("dim V(λ) exceeds the budget");
  CosetPoset poset(rd, lambda);

  int top = 1;
  for (int k = 0; k < rd.num_positive_roots(); ++k) top = std::max(top, rd.pairing(lambda, k));
  std::set<Rational> cand;
  for (int q = 2; q <= top; ++q)
    for (int p = 1; p < q; ++p) cand.insert(Rational(p, q));

  std::map<std::pair<Weight, Rational>, std::set<Weight>> reach_memo;
  auto reach = [&](const Weight& tau, const Rational& a) -> const std::set<Weight>& {
    auto key = std::make_pair(tau, a);
    auto it = reach_memo.find(key);
    if (it != reach_memo.end()) return it->second;
    std::set<Weight> out;
    std::vector<Weight> todo{tau};
    while (!todo.empty()) {
      Weight mu = todo.back();
      todo.pop_back();
      for (const auto& c : poset.down.at(mu))
        if (integral(a, c.pairing) && out.insert(c.below).second) todo.push_back(c.below);
    }
    return reach_memo.emplace(key, std::move(out)).first->second;
  };

  std::vector<LSPath> out;
  LSPath cur{lambda, {}, {}};
  auto walk = [&](auto& self, const Weight& tau, const Rational& last) -> void {
    cur.directions.push_back(tau);
    cur.breaks.push_back(Rational(1));
    out.push_back(cur);
    if (static_cast<std::int64_t>(out.size()) > budget.max_weyl_dim) throw ResourceError("too many LS-paths");
    cur.breaks.pop_back();
    for (auto it = cand.upper_bound(last); it != cand.end(); ++it) {
      cur.breaks.push_back(*it);
      for (const auto& sigma : reach(tau, *it)) self(self, sigma, *it);
      cur.breaks.pop_back();
    }
    cur.directions.pop_back();
  };
  for (const auto& tau : poset.points) walk(walk, tau, Rational(0));
  return out;
}

LSPath path_of_chain(const RootDatum& rd, const Weight& lambda, const LSChain& c) {
  require_dominant(rd, lambda);
  CosetPoset poset(rd, lambda);
  const std::size_t N = c.chain.size();
  if (N == 0 || c.a.size() != N) throw DomainError("chain and rationals must have the same length");
  std::vector<Weight> pts;
  for (const auto& w : c.chain) pts.push_back(rd.act(w, lambda));
  if (!(pts.back() == lambda)) throw DomainError("chain must end at the identity coset");
  int maxlen = 0;
  for (const auto& [mu, l] : poset.length) maxlen = std::max(maxlen, l);
  if (poset.length.at(pts.front()) != maxlen) throw DomainError("chain must start at the longest coset");
  if (c.a.back() != 1) throw DomainError("last rational must be 1");
  Rational prev = 0;
  for (const auto& a : c.a) {
    if (a < prev) throw DomainError("rationals must increase weakly from 0");
    prev = a;
  }
  for (std::size_t j = 1; j < N; ++j) {
    const auto& covers = poset.down.at(pts[j - 1]);
    auto it = std::find_if(covers.begin(), covers.end(), [&](const Cover& cv) { return cv.below == pts[j]; });
    if (it == covers.end()) throw DomainError("consecutive chain entries must be Bruhat covers");
    if (!integral(c.a[j - 1], it->pairing)) throw DomainError("integrality condition fails");
  }
  LSPath p{lambda, {}, {}};
  prev = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (c.a[i] > prev) {
      p.directions.push_back(pts[i]);
      p.breaks.push_back(c.a[i]);
    }
    prev = c.a[i];
  }
  return p;
}

bool is_standard_path_monomial(const RootDatum& rd, const std::vector<LSPath>& paths) {
  for (std::size_t j = 1; j < paths.size(); ++j)
    if (!(paths[j].lambda == paths[0].lambda)) throw DomainError("paths of different shapes");
  for (std::size_t j = 1; j < paths.size(); ++j)
    if (!coset_leq(rd, paths[0].lambda, paths[j].initial_direction(), paths[j - 1].final_direction())) return false;
  return true;
}

}  // namespace flagdegen
