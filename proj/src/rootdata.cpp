#include "flagdegen/rootdata.hpp"

#include "flagdegen/linalg.hpp"
#include "flagdegen/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace flagdegen {

Weight::Weight(std::initializer_list<int> c) : coords(static_cast<Eigen::Index>(c.size())) {
  Eigen::Index i = 0;
  for (int x : c) coords[i++] = x;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords.data(), a.coords.data() + a.coords.size(), b.coords.data(),
                                      b.coords.data() + b.coords.size());
}

std::string to_string(const Weight& w) {
  std::ostringstream out;
  for (int i = 0; i < w.rank(); ++i) out << (i ? "," : "") << w[i];
  return out.str();
}

WeylWord WeylWord::parse(const std::string& text) {
  WeylWord w;
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
      if (!item.empty()) w.letters.push_back(std::stoi(item));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw DomainError("bad letter in word '" + text + "'");
      w.letters.push_back(c - '0');
    }
  }
  return w;
}

std::string to_string(const WeylWord& w) {
  std::string out;
  for (int l : w.letters) out += std::to_string(l);
  return out;
}

namespace {

using Key = std::vector<int>;

Key key_of(const Eigen::VectorXi& v) { return Key(v.data(), v.data() + v.size()); }

Eigen::MatrixXi cartan_for(char type, int rank) {
  if (type == 'A' && rank >= 1) {
    Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(rank, rank);
    for (int i = 0; i + 1 < rank; ++i) c(i, i + 1) = c(i + 1, i) = -1;
    return c;
  }
  if (type == 'C' && rank == 2) return (Eigen::MatrixXi(2, 2) << 2, -1, -2, 2).finished();
  if (type == 'G' && rank == 2) return (Eigen::MatrixXi(2, 2) << 2, -1, -3, 2).finished();
  throw ConfigurationError(std::string("unsupported root system ") + type + std::to_string(rank));
}

int coroot_pairing(const Eigen::MatrixXi& cartan, const Eigen::VectorXi& root, int i) {
  int v = 0;
  for (Eigen::Index j = 0; j < root.size(); ++j) v += root[j] * cartan(j, i);
  return v;
}

std::vector<int> symmetrizer(const Eigen::MatrixXi& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * cartan(j, i) / cartan(i, j);
      stack.push_back(j);
    }
  }
  Integer l = 1;
  for (const auto& q : d) {
    if (q == 0) throw ConfigurationError("Cartan matrix is not indecomposable");
    l = boost::multiprecision::lcm(l, denominator(q));
  }
  std::vector<Integer> scaled(n);
  Integer g = 0;
  for (int i = 0; i < n; ++i) {
    Rational v = d[i] * l;
    scaled[i] = numerator(v);
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    Integer v = scaled[i] / g;
    out[i] = v.convert_to<int>();
  }
  return out;
}

RatMat commutator(const RatMat& a, const RatMat& b) { return a * b - b * a; }

// Scalar c with a = c·b, if it exists.
std::optional<Rational> ratio(const RatMat& a, const RatMat& b) {
  Eigen::Index r = -1, c = -1;
  for (Eigen::Index i = 0; i < b.rows() && r < 0; ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) {
        r = i;
        c = j;
        break;
      }
  if (r < 0) return std::nullopt;
  Rational s = a(r, c) / b(r, c);
  if (a != RatMat(s * b)) return std::nullopt;
  return s;
}

int integral(const Rational& q) {
  if (denominator(q) != 1) throw std::logic_error("structure constant is not an integer");
  return numerator(q).convert_to<int>();
}

}  // namespace

RootDatum RootDatum::build(char type, int rank) {
  return from_cartan(std::string(1, type) + std::to_string(rank), cartan_for(type, rank));
}

RootDatum RootDatum::from_cartan(std::string label, Eigen::MatrixXi cartan) {
  auto data = std::make_shared<Data>();
  const int n = static_cast<int>(cartan.rows());
  if (n < 1 || cartan.cols() != n) throw ConfigurationError("Cartan matrix must be square and nonempty");
  data->label = std::move(label);
  data->cartan = cartan;
  data->lengths = symmetrizer(cartan);
  data->form.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) data->form(i, j) = cartan(i, j) * data->lengths[j];
  if (data->form != data->form.transpose()) throw ConfigurationError("Cartan matrix is not symmetrizable");

  // Positive roots by α_i-strings, height by height.
  std::map<Key, int> seen;
  std::vector<Eigen::VectorXi> found;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e[i] = 1;
    seen[key_of(e)] = static_cast<int>(found.size());
    found.push_back(e);
  }
  for (std::size_t pos = 0; pos < found.size(); ++pos) {
    if (found.size() > 10000) throw ConfigurationError("Cartan matrix is not of finite type");
    const Eigen::VectorXi beta = found[pos];
    for (int i = 0; i < n; ++i) {
      int q = 0;
      Eigen::VectorXi down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(key_of(down))) break;
        ++q;
      }
      int p = q - coroot_pairing(cartan, beta, i);
      if (p <= 0) continue;
      Eigen::VectorXi up = beta;
      up[i] += 1;
      if (seen.emplace(key_of(up), static_cast<int>(found.size())).second) found.push_back(up);
    }
  }
  std::sort(found.begin(), found.end(), [](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });
  data->roots = found;
  const int N = static_cast<int>(found.size());
  std::map<Key, int> index;
  for (int k = 0; k < N; ++k) index[key_of(found[k])] = k;
  auto lookup = [&](const Eigen::VectorXi& v) -> int {
    auto it = index.find(key_of(v));
    if (it != index.end()) return it->second;
    it = index.find(key_of(-v));
    if (it != index.end()) return N + it->second;
    return -1;
  };

  data->simple_index.resize(n);
  for (int i = 0; i < n; ++i) data->simple_index[i] = lookup(Eigen::VectorXi::Unit(n, i));

  for (const auto& beta : found) {
    int twice_len = beta.dot(data->form * beta);
    Eigen::VectorXi co(n);
    for (int j = 0; j < n; ++j) {
      int num = 2 * beta[j] * data->lengths[j];
      if (num % twice_len != 0) throw std::logic_error("non-integral coroot");
      co[j] = num / twice_len;
    }
    data->coroots.push_back(co);
  }

  data->sum_table.assign(N, std::vector<int>(N, -1));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int s = lookup(found[a] + found[b]);
      if (s >= 0 && s < N) data->sum_table[a][b] = s;
    }

  for (int i = 0; i < n; ++i) {
    WeylElement s;
    s.perm.resize(2 * N);
    for (int x = 0; x < 2 * N; ++x) {
      Eigen::VectorXi v = x < N ? found[x] : Eigen::VectorXi(-found[x - N]);
      v[i] -= coroot_pairing(cartan, v, i);
      s.perm[x] = lookup(v);
    }
    data->reflections.push_back(std::move(s));
  }

  // Chevalley basis realized in the smallest fundamental representation.
  RootDatum partial{data};
  int best = 0;
  Integer best_dim = -1;
  for (int i = 0; i < n; ++i) {
    Integer d = weyl_dim(partial, partial.fundamental_weight(i));
    if (best_dim < 0 || d < best_dim) {
      best_dim = d;
      best = i;
    }
  }
  IrreducibleModule module(cartan, Eigen::VectorXi::Unit(n, best));
  std::vector<Depth> support = module.support();
  std::map<Depth, Eigen::Index> offset;
  Eigen::Index dim = 0;
  for (const auto& nu : support) {
    offset[nu] = dim;
    dim += module.dim(nu);
  }
  std::vector<RatMat> E(n, RatMat::Zero(dim, dim)), F(n, RatMat::Zero(dim, dim)), H(n, RatMat::Zero(dim, dim));
  for (const auto& nu : support) {
    Eigen::Index d0 = module.dim(nu), o0 = offset[nu];
    for (int i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < d0; ++k) H[i](o0 + k, o0 + k) = module.coroot_pairing(nu, i);
      auto up = offset.find(shifted(nu, i, 1));
      if (up != offset.end()) F[i].block(up->second, o0, module.dim(up->first), d0) = module.f_block(i, nu);
      if (nu[i] > 0) {
        auto down = offset.find(shifted(nu, i, -1));
        if (down != offset.end())
          E[i].block(down->second, o0, module.dim(down->first), d0) = module.e_block(i, nu);
      }
    }
  }

  std::vector<RatMat> f(N), e(N);
  data->extraspecial.resize(N);
  for (int k = 0; k < N; ++k) {
    int simple_letter = -1;
    for (int i = 0; i < n; ++i)
      if (data->simple_index[i] == k) simple_letter = i;
    if (simple_letter >= 0) {
      f[k] = F[simple_letter];
      e[k] = E[simple_letter];
      data->extraspecial[k] = {simple_letter, -1, 1};
    } else {
      // the first simple root in reference order that splits off
      int chosen = -1, rest = -1;
      for (int s = 0; s < N && chosen < 0; ++s) {
        if (found[s].sum() != 1) continue;
        int i = 0;
        while (found[s][i] == 0) ++i;
        int r = lookup(found[k] - found[s]);
        if (r >= 0 && r < N) {
          chosen = i;
          rest = r;
        }
      }
      int p = 0;
      Eigen::VectorXi down = found[rest];
      while (true) {
        down[chosen] -= 1;
        int r = lookup(down);
        if (r < 0 || r >= N) break;
        ++p;
      }
      data->extraspecial[k] = {chosen, rest, p + 1};
      f[k] = commutator(F[chosen], f[rest]) / Rational(p + 1);
      e[k] = commutator(e[rest], E[chosen]) / Rational(p + 1);
    }
    RatMat h = RatMat::Zero(dim, dim);
    for (int j = 0; j < n; ++j) h += Rational(data->coroots[k][j]) * H[j];
    if (commutator(e[k], f[k]) != h) throw std::logic_error("Chevalley normalization failed");
  }

  data->f_bracket.assign(N, std::vector<int>(N, 0));
  data->ef_bracket.assign(N, std::vector<RaisingBracket>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int s = data->sum_table[a][b];
      RatMat ff = commutator(f[a], f[b]);
      if (s >= 0) {
        auto c = ratio(ff, f[s]);
        if (!c) throw std::logic_error("bracket of root vectors is not a root vector");
        data->f_bracket[a][b] = integral(*c);
      } else if (!ff.isZero()) {
        throw std::logic_error("root vectors fail to commute");
      }
      if (a == b) continue;
      RatMat ef = commutator(e[a], f[b]);
      RaisingBracket& out = data->ef_bracket[a][b];
      int down = lookup(found[b] - found[a]);
      if (down >= 0 && down < N) {
        out = {RaisingBracket::Kind::lowering, down, integral(*ratio(ef, f[down]))};
      } else if (down >= N) {
        out = {RaisingBracket::Kind::raising, down - N, integral(*ratio(ef, e[down - N]))};
      } else if (!ef.isZero()) {
        throw std::logic_error("unexpected nonzero bracket");
      }
    }
  return RootDatum(std::move(data));
}

RootDatum build_root_system(char type, int rank) { return RootDatum::build(type, rank); }

std::optional<int> RootDatum::root_index(const Eigen::VectorXi& coords) const {
  for (int k = 0; k < num_positive_roots(); ++k)
    if (data_->roots[k] == coords) return k;
  return std::nullopt;
}

std::optional<int> RootDatum::sum_index(int a, int b) const {
  int s = data_->sum_table[a][b];
  if (s < 0) return std::nullopt;
  return s;
}

Weight RootDatum::fundamental_weight(int i) const { return Weight(Eigen::VectorXi::Unit(rank(), i)); }

Weight RootDatum::rho() const { return Weight(Eigen::VectorXi::Ones(rank())); }

Weight RootDatum::root_weight(int k) const { return Weight(cartan().transpose() * root(k)); }

int RootDatum::pairing(const Weight& lambda, int k) const { return lambda.coords.dot(coroot(k)); }

WeylElement RootDatum::identity() const {
  WeylElement w;
  w.perm.resize(2 * num_positive_roots());
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylElement RootDatum::compose(const WeylElement& u, const WeylElement& v) const {
  WeylElement w;
  w.perm.resize(v.perm.size());
  for (std::size_t x = 0; x < v.perm.size(); ++x) w.perm[x] = u.perm[v.perm[x]];
  return w;
}

WeylElement RootDatum::inverse(const WeylElement& w) const {
  WeylElement inv;
  inv.perm.resize(w.perm.size());
  for (std::size_t x = 0; x < w.perm.size(); ++x) inv.perm[w.perm[x]] = static_cast<int>(x);
  return inv;
}

WeylElement RootDatum::element(const WeylWord& word) const {
  WeylElement w = identity();
  for (int letter : word.letters) {
    if (letter < 1 || letter > rank()) throw DomainError("letter " + std::to_string(letter) + " out of range");
    w = compose(w, simple_reflection(letter));
  }
  return w;
}

int RootDatum::length(const WeylElement& w) const {
  const int N = num_positive_roots();
  int l = 0;
  for (int k = 0; k < N; ++k) l += w.perm[k] >= N;
  return l;
}

bool RootDatum::is_right_descent(const WeylElement& w, int letter) const {
  return w.perm[simple_root_index(letter - 1)] >= num_positive_roots();
}

bool RootDatum::is_left_descent(const WeylElement& w, int letter) const {
  return is_right_descent(inverse(w), letter);
}

WeylElement RootDatum::longest_element() const {
  WeylElement w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= rank(); ++i)
      if (!is_right_descent(w, i)) {
        w = compose(w, simple_reflection(i));
        grew = true;
      }
  }
  return w;
}

WeylWord RootDatum::canonical_word(const WeylElement& start) const {
  WeylWord out;
  WeylElement w = start;
  while (length(w) > 0) {
    for (int i = 1; i <= rank(); ++i)
      if (is_left_descent(w, i)) {
        out.letters.push_back(i);
        w = compose(simple_reflection(i), w);
        break;
      }
  }
  return out;
}

Weight RootDatum::reflect(int letter, const Weight& mu) const {
  const int i = letter - 1;
  return Weight(mu.coords - mu[i] * Eigen::VectorXi(cartan().row(i).transpose()));
}

Weight RootDatum::reflect_root(int k, const Weight& mu) const {
  return Weight(mu.coords - pairing(mu, k) * root_weight(k).coords);
}

Weight RootDatum::act(const WeylWord& w, const Weight& mu) const {
  Weight out = mu;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect(*it, out);
  return out;
}

Integer weyl_dim(const RootDatum& rd, const Weight& lambda) {
  if (lambda.rank() != rd.rank()) throw DomainError("weight has wrong rank");
  if (!lambda.is_dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  Rational d = 1;
  const Weight shifted = lambda + rd.rho();
  for (int k = 0; k < rd.num_positive_roots(); ++k) d *= Rational(rd.pairing(shifted, k), rd.pairing(rd.rho(), k));
  return numerator(d);
}

std::vector<WeylWord> reduced_words(const RootDatum& rd, const WeylWord& w) {
  std::map<WeylElement, std::vector<WeylWord>> memo;
  auto words = [&](auto&& self, const WeylElement& x) -> const std::vector<WeylWord>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<WeylWord> out;
    if (rd.length(x) == 0) {
      out.push_back(WeylWord{});
    } else {
      for (int i = 1; i <= rd.rank(); ++i) {
        if (!rd.is_right_descent(x, i)) continue;
        for (WeylWord u : self(self, rd.compose(x, rd.simple_reflection(i)))) {
          u.letters.push_back(i);
          out.push_back(std::move(u));
        }
      }
      std::sort(out.begin(), out.end());
    }
    return memo.emplace(x, std::move(out)).first->second;
  };
  return words(words, rd.element(w));
}

bool bruhat_leq(const RootDatum& rd, const WeylElement& u, const WeylElement& v) {
  std::map<std::pair<WeylElement, WeylElement>, bool> memo;
  auto leq = [&](auto&& self, const WeylElement& x, const WeylElement& y) -> bool {
    const int lx = rd.length(x), ly = rd.length(y);
    if (lx > ly) return false;
    if (ly == 0) return lx == 0;
    if (lx == 0) return true;
    auto key = std::make_pair(x, y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int s = 1;
    while (!rd.is_left_descent(y, s)) ++s;
    const WeylElement& refl = rd.simple_reflection(s);
    bool result = rd.is_left_descent(x, s) ? self(self, rd.compose(refl, x), rd.compose(refl, y))
                                           : self(self, x, rd.compose(refl, y));
    memo[key] = result;
    return result;
  };
  return leq(leq, u, v);
}

bool bruhat_leq(const RootDatum& rd, const WeylWord& u, const WeylWord& v) {
  return bruhat_leq(rd, rd.element(u), rd.element(v));
}

int root_from_word(const RootDatum& rd, const WeylWord& word, int k) {
  if (!rd.is_reduced(word)) throw DomainError("word " + to_string(word) + " is not reduced");
  if (k < 1 || k > static_cast<int>(word.length())) throw DomainError("root position out of range");
  const int N = rd.num_positive_roots();
  int x = rd.simple_root_index(word.letters[k - 1] - 1);
  for (int j = k - 2; j >= 0; --j) x = rd.simple_reflection(word.letters[j]).perm[x];
  if (x >= N) throw std::logic_error("reduced word produced a negative root");
  return x;
}

std::vector<int> roots_of_word(const RootDatum& rd, const WeylWord& word) {
  std::vector<int> out;
  for (int k = 1; k <= static_cast<int>(word.length()); ++k) out.push_back(root_from_word(rd, word, k));
  return out;
}

std::string describe(const RootDatum& rd) { return rd.type_label(); }

}  // namespace flagdegen
