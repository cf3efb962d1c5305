#pragma once

// Sparse Laurent polynomials in x_1..x_n, y_1..y_n with integer coefficients,
// and literal verification of exchange relations on computed cluster variables.

#include "exrel/oracle.hpp"

#include <map>

namespace exrel {

class LaurentPoly {
public:
  /// Exponents of x_1..x_n followed by y_1..y_n.
  using Exponent = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly constant(int rank, const BigInt& c);
  static LaurentPoly monomial(int rank, Exponent e, const BigInt& c = 1);
  static LaurentPoly x(int rank, int i, int power = 1);
  static LaurentPoly y(int rank, int j, int power = 1);

  int rank() const { return rank_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(Int e) const;
  /// Sets every y_j to 1.
  LaurentPoly drop_coefficients() const;
  /// Canonical text: terms in decreasing lexicographic exponent order, each
  /// variable present with an explicit exponent, e.g. "x1^1*x2^-1 - 2*y1^1".
  std::string to_string() const;

private:
  void add_term(const Exponent& e, const BigInt& c);

  int rank_ = 0;
  std::map<Exponent, BigInt> terms_;
};

/// r with r * q == p; throws InexactDivision otherwise.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Weight degree of a homogeneous polynomial under deg x_i = omega_i,
/// deg y_j = -(column j of B_c); nullopt if not homogeneous.
std::optional<Weight> homogeneous_degree(const LaurentPoly& p, const IntMatrix& bc);

using VariableTable = std::unordered_map<Weight, LaurentPoly, VectorHash, VectorEqual>;

/// Cluster variables keyed by g-vector, built by mutating along the exchange
/// graph. With coefficient_free the y's are omitted (all set to 1).
VariableTable compute_variables(const IntMatrix& bc, const ExchangeGraph& graph, std::size_t bound = 200,
                                bool coefficient_free = false);

/// x_w for an arbitrary weight: the cluster monomial on its cone.
LaurentPoly cluster_monomial(const VariableTable& table, const ClusterSet& clusters, const Weight& w);

/// Checks x_lambda x_mu == x_{lambda+mu} + y^alpha x_{uplus} literally.
bool symbolic_verify(const ExchangeRelation& r, const VariableTable& table, const ClusterSet& clusters);

/// Checks x_lambda x_mu == x_{lambda+mu} + x_{uplus} on coefficient-free variables.
bool coefficient_free_verify(const ExchangeRelation& r, const VariableTable& table, const ClusterSet& clusters);

}  // namespace exrel
