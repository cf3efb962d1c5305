#include "exrel/linalg.hpp"

#include <sstream>

namespace exrel {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::NotInPi: return "NotInPi";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::NoConeFound: return "NoConeFound";
    case ErrorKind::NotExchangeable: return "NotExchangeable";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::MultipleSolutions: return "MultipleSolutions";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::InconsistentRelation: return "InconsistentRelation";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::MissingVariable: return "MissingVariable";
  }
  return "Unknown";
}

std::string format_vector(const IntVector& v) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v(i);
  out << ']';
  return out.str();
}

IntVector primitive_integer(const Vector<Rational>& v) {
  BigInt lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const BigInt d = boost::multiprecision::denominator(v(i));
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> scaled(static_cast<std::size_t>(v.size()));
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational s = v(i) * Rational(lcm_den);
    scaled[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(s);
    g = boost::multiprecision::gcd(g, scaled[static_cast<std::size_t>(i)]);
  }
  IntVector out = IntVector::Zero(v.size());
  if (g == 0) return out;
  int sign = 0;
  for (const auto& s : scaled) {
    if (s != 0) {
      sign = s > 0 ? 1 : -1;
      break;
    }
  }
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = static_cast<Int>(scaled[static_cast<std::size_t>(i)] / g) * sign;
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  Matrix<Rational> r = to_rational(m);
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<IntVector> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Rational> v = Vector<Rational>::Zero(m.cols());
    v(free) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v(pivots[k]) = -r(static_cast<Eigen::Index>(k), free);
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::optional<Vector<Rational>> solve_exact(const IntMatrix& m, const IntVector& b) {
  const Eigen::Index n = m.rows();
  Matrix<Rational> aug(n, m.cols() + 1);
  aug.leftCols(m.cols()) = to_rational(m);
  aug.rightCols(1) = to_rational(b);
  const auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != m.cols()) return std::nullopt;
  for (auto p : pivots)
    if (p == m.cols()) return std::nullopt;
  Vector<Rational> x(m.cols());
  for (Eigen::Index k = 0; k < m.cols(); ++k) x(k) = aug(k, m.cols());
  return x;
}

namespace {

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::InternalInvariantViolation, "integer overflow in elimination");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorKind::InternalInvariantViolation, "integer overflow in elimination");
  return r;
}

void add_row_multiple(IntMatrix& m, Eigen::Index target, Eigen::Index source, Int factor) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    m(target, j) = checked_sub(m(target, j), checked_mul(factor, m(source, j)));
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  IntMatrix aug(n, 2 * n);
  aug << m, IntMatrix::Identity(n, n);

  for (Eigen::Index col = 0; col < n; ++col) {
    // Euclid on the column below the diagonal until a single nonzero remains.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index r = col; r < n; ++r) {
        if (aug(r, col) != 0 && (best < 0 || std::abs(aug(r, col)) < std::abs(aug(best, col))))
          best = r;
      }
      if (best < 0) throw Error(ErrorKind::InternalInvariantViolation, "singular g-vector matrix");
      bool reduced = true;
      for (Eigen::Index r = col; r < n; ++r) {
        if (r == best || aug(r, col) == 0) continue;
        add_row_multiple(aug, r, best, aug(r, col) / aug(best, col));
        if (aug(r, col) != 0) reduced = false;
      }
      if (reduced) {
        aug.row(best).swap(aug.row(col));
        break;
      }
    }
    if (std::abs(aug(col, col)) != 1)
      throw Error(ErrorKind::InternalInvariantViolation, "matrix is not unimodular");
    if (aug(col, col) < 0) aug.row(col) *= -1;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r != col && aug(r, col) != 0) add_row_multiple(aug, r, col, aug(r, col));
    }
  }
  return aug.rightCols(n);
}

Rational determinant(const IntMatrix& m) {
  Matrix<Rational> r = to_rational(m);
  const Eigen::Index n = r.rows();
  Rational det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && r(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      r.row(p).swap(r.row(col));
      det = -det;
    }
    det *= r(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (r(row, col) == 0) continue;
      const Rational f = r(row, col) / r(col, col);
      r.row(row) -= f * r.row(col);
    }
  }
  return det;
}

}  // namespace exrel
