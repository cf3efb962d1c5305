#pragma once

// The g-vector fan of the cluster algebra with principal coefficients at B_c:
// the set Pi(c) of cluster-variable g-vectors, the permutation tau_c and its
// piecewise-linear extension, compatibility degrees and the clusters.

#include "exrel/coxeter.hpp"

#include <map>
#include <unordered_map>

namespace exrel {

class PiSet {
public:
  PiSet(const RootSystem& rs, const CoxeterWord& word);

  const RootSystem& root_system() const { return *rs_; }
  const CoxeterWord& word() const { return word_; }
  int rank() const { return rs_->rank(); }

  /// Elements in lexicographic order.
  const std::vector<Weight>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Weight& operator[](std::size_t k) const { return elements_[k]; }

  std::optional<std::size_t> find(const Weight& w) const;
  /// Like find, but throws NotInPi.
  std::size_t index_of(const Weight& w) const;

  std::size_t tau_next(std::size_t k) const { return next_[k]; }
  std::size_t tau_prev(std::size_t k) const { return prev_[k]; }
  /// tau^power applied to an element index.
  std::size_t tau_index(std::size_t k, int power) const;

  const std::vector<std::vector<std::size_t>>& cycles() const { return cycles_; }
  /// Order N of the permutation tau_c.
  int order() const { return order_; }
  /// h(i;c) per node.
  const std::vector<int>& heights() const { return heights_; }
  /// Element index of omega_i.
  std::size_t fundamental(int i) const { return fundamental_[static_cast<std::size_t>(i)]; }

  /// (lambda || mu)_c on element indices.
  int degree(std::size_t lambda, std::size_t mu) const {
    return degrees_[lambda * elements_.size() + mu];
  }
  /// Evaluates the initial-condition formula directly from a fundamental
  /// weight omega_i, bypassing the tau normalization.
  int initial_degree(int i, std::size_t mu) const;

private:
  const RootSystem* rs_;
  CoxeterWord word_;
  std::vector<Weight> elements_;
  std::unordered_map<Weight, std::size_t, VectorHash, VectorEqual> index_;
  std::vector<std::size_t> next_, prev_;
  std::vector<std::vector<std::size_t>> cycles_;
  int order_ = 1;
  std::vector<int> heights_;
  std::vector<std::size_t> fundamental_;
  /// Root coordinates of (c^{-1} - id) lambda for every element.
  std::vector<RootCoords> shift_;
  std::vector<int> degrees_;
};

PiSet build_pi(const RootSystem& rs, const CoxeterWord& word);

Weight tau(const PiSet& pi, const Weight& w, int power);
int compatibility_degree(const PiSet& pi, const Weight& lambda, const Weight& mu);
bool is_compatible(const PiSet& pi, const Weight& lambda, const Weight& mu);
bool is_exchangeable(const PiSet& pi, const Weight& lambda, const Weight& mu);

/// A cluster monomial: element indices of Pi(c) with positive exponents.
using Monomial = std::vector<std::pair<std::size_t, Int>>;

struct ConeDecomposition {
  std::size_t cluster;
  IntVector coords;  ///< nonnegative, aligned with the cluster's element order
};

class ClusterSet {
public:
  explicit ClusterSet(const PiSet& pi);

  const PiSet& pi() const { return *pi_; }
  std::size_t size() const { return clusters_.size(); }
  /// Sorted element indices of each cluster.
  const std::vector<std::vector<std::size_t>>& clusters() const { return clusters_; }
  const std::vector<std::size_t>& cluster(std::size_t c) const { return clusters_[c]; }
  /// Columns are the g-vectors of the cluster, in cluster order.
  const IntMatrix& g_matrix(std::size_t c) const { return g_[c]; }
  const IntMatrix& g_inverse(std::size_t c) const { return g_inv_[c]; }

  std::optional<std::size_t> find(const std::vector<std::size_t>& sorted_elements) const;
  /// Cluster across the facet opposite position pos.
  std::size_t neighbor(std::size_t c, std::size_t pos) const { return neighbors_[c][pos]; }
  /// Image of cluster c under tau_c.
  std::size_t tau_cluster(std::size_t c) const { return tau_[c]; }
  std::size_t initial_cluster() const { return initial_; }

  ConeDecomposition decompose(const Weight& w) const;
  Monomial monomial(const Weight& w) const;
  /// Every cone containing w, by linear scan; for cross-checking the walk.
  std::vector<ConeDecomposition> all_decompositions(const Weight& w) const;

private:
  const PiSet* pi_;
  std::vector<std::vector<std::size_t>> clusters_;
  std::vector<IntMatrix> g_, g_inv_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> tau_;
  std::size_t initial_ = 0;
  std::map<std::vector<std::size_t>, std::size_t> lookup_;
};

ClusterSet enumerate_clusters(const PiSet& pi);

ConeDecomposition decompose(const ClusterSet& clusters, const Weight& w);

/// Piecewise-linear extension of tau_c to the weight lattice.
Weight tau_pl(const ClusterSet& clusters, const Weight& w, int power);

Weight monomial_weight(const PiSet& pi, const Monomial& m);

}  // namespace exrel
