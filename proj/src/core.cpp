#include "flagdegen/core.hpp"

#include <cstdlib>
#include <limits>

namespace flagdegen {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("FLAGDEGEN_BUDGET")) {
    char* end = nullptr;
    long long cap = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || cap <= 0)
      throw ConfigurationError("FLAGDEGEN_BUDGET must be a positive integer");
    double scale = static_cast<double>(cap) / static_cast<double>(b.max_weyl_dim);
    b.max_weyl_dim = cap;
    b.max_monomials_per_weight = std::max<std::int64_t>(1, static_cast<std::int64_t>(b.max_monomials_per_weight * scale));
    b.max_lattice_points = std::max<std::int64_t>(1, static_cast<std::int64_t>(b.max_lattice_points * scale));
  }
  return b;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

Integer gcd_of(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

IntVec primitive(IntVec v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVec clear_denominators(const RatVec& v) {
  Integer l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator(q));
  IntVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (l / denominator(v[i]));
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("integer value exceeds 64-bit range");
  return z.convert_to<std::int64_t>();
}

}  // namespace flagdegen
