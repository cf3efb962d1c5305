#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exrel {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Int>;
using IntMatrix = Matrix<Int>;

/// Integer vector in the basis of fundamental weights.
using Weight = IntVector;
/// Integer vector in the basis of simple roots.
using RootCoords = IntVector;

enum class ErrorKind {
  UnsupportedType,
  IndexOutOfRange,
  NotAdjacent,
  InvalidWord,
  WrongFamily,
  NotInPi,
  NonIntegral,
  InternalInvariantViolation,
  NoConeFound,
  NotExchangeable,
  NoSolution,
  MultipleSolutions,
  LimitExceeded,
  InconsistentRelation,
  InexactDivision,
  BoundExceeded,
  MissingVariable,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Hash for integer Eigen vectors, so weights can key unordered containers.
struct VectorHash {
  template <typename Derived>
  std::size_t operator()(const Eigen::MatrixBase<Derived>& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
      h ^= std::hash<Int>{}(static_cast<Int>(v(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct VectorEqual {
  template <typename A, typename B>
  bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    return a.size() == b.size() && a == b;
  }
};

/// Lexicographic order on integer vectors.
struct VectorLess {
  template <typename A, typename B>
  bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
  }
};

inline IntVector make_vector(std::initializer_list<Int> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Int x : values) v(i++) = x;
  return v;
}

inline IntVector unit_vector(Eigen::Index n, Eigen::Index i) { return IntVector::Unit(n, i); }

inline std::vector<Int> to_std(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

inline IntVector from_std(const std::vector<Int>& v) {
  return Eigen::Map<const IntVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::string format_vector(const IntVector& v);

}  // namespace exrel
