#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagdegen {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVec = Vec<Integer>;
using RatVec = Vec<Rational>;
using IntMat = Mat<Integer>;
using RatMat = Mat<Rational>;

// Lattice points and multi-exponents share one representation.
using IntPoint = std::vector<std::int64_t>;
using MultiExponent = IntPoint;

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by enumeration on an unbounded polyhedron; carries a recession direction.
class UnboundedError : public DomainError {
 public:
  UnboundedError(const std::string& what, IntVec ray) : DomainError(what), ray_(std::move(ray)) {}
  const IntVec& ray() const { return ray_; }

 private:
  IntVec ray_;
};

/// Enumeration caps. FLAGDEGEN_BUDGET sets the dimension cap and scales the rest.
struct Budget {
  std::int64_t max_weyl_dim = 5000;
  std::int64_t max_monomials_per_weight = 200000;
  std::int64_t max_lattice_points = 2000000;

  static Budget from_env();
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

Integer gcd_of(const IntVec& v);
IntVec primitive(IntVec v);

/// Smallest positive integer multiple of v with integer entries, as integers.
IntVec clear_denominators(const RatVec& v);

std::int64_t to_int64(const Integer& z);

struct PointHash {
  std::size_t operator()(const IntPoint& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : p) h = (h ^ std::hash<std::int64_t>{}(x)) * 0x100000001b3ull;
    return h;
  }
};

inline IntPoint operator+(const IntPoint& a, const IntPoint& b) {
  IntPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace flagdegen
