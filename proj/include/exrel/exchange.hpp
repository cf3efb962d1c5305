#pragma once

// Closed-form exchange relations
//
//   x_lambda x_mu = x_{lambda+mu} + y^alpha x_{lambda uplus mu}
//
// where alpha is the unique positive root with -B_c alpha = lambda + mu -
// (lambda uplus mu) and <lambda, alpha^vee><mu, alpha^vee> = -1.

#include "exrel/gfan.hpp"

#include <unordered_map>

namespace exrel {

/// One exchange relation, oriented so lambda < mu lexicographically.
struct ExchangeRelation {
  Weight lambda;
  Weight mu;
  Weight sum;
  Weight uplus;
  Root alpha;

  friend bool operator==(const ExchangeRelation& a, const ExchangeRelation& b) {
    return a.lambda == b.lambda && a.mu == b.mu && a.sum == b.sum && a.uplus == b.uplus &&
           a.alpha.root == b.alpha.root && a.alpha.coroot == b.alpha.coroot;
  }
};

bool relation_less(const ExchangeRelation& a, const ExchangeRelation& b);

/// A relation realized by one edge of the exchange graph; shared holds the
/// n-1 common g-vectors of the two clusters, sorted.
struct RelationInstance {
  ExchangeRelation relation;
  std::vector<Weight> shared;
};

bool instance_less(const RelationInstance& a, const RelationInstance& b);
bool instance_equal(const RelationInstance& a, const RelationInstance& b);

/// Data for a failed uniqueness check.
struct Counterexample {
  std::string type;
  std::string word;
  Weight lambda, mu, uplus;
  std::vector<RootCoords> candidates;
};

class TheoremViolation : public Error {
public:
  TheoremViolation(ErrorKind kind, Counterexample ce);
  const Counterexample& counterexample() const { return ce_; }

private:
  Counterexample ce_;
};

struct RootSolution {
  Root alpha;
  /// Positive roots satisfying the homogeneity equation alone.
  std::size_t eq1_solutions = 0;
};

/// Solves both defining equations by scanning the positive roots.
RootSolution solve_exchange_root(const RootSystem& rs, const IntMatrix& bc, const Weight& lambda, const Weight& mu,
                                 const Weight& uplus_value);

/// Per-configuration engine with caches for the tau-orbit sums and the
/// root lookup. Holds references to pi and clusters.
class RelationBuilder {
public:
  RelationBuilder(const ClusterSet& clusters, const IntMatrix& bc);

  const PiSet& pi() const { return *pi_; }
  const ClusterSet& clusters() const { return *clusters_; }
  const IntMatrix& bc() const { return bc_; }

  /// lambda uplus mu on element indices.
  Weight uplus(std::size_t lambda, std::size_t mu);
  /// The homogeneity-equation candidates for a right-hand side, as indices
  /// into the positive roots.
  const std::vector<std::size_t>& eq1_candidates(const Weight& rhs) const;
  RootSolution solve(const Weight& lambda, const Weight& mu, const Weight& uplus_value) const;

  ExchangeRelation relation(std::size_t lambda, std::size_t mu);
  /// One instance per exchange-graph edge. With `violations` set, pairs that
  /// raise TheoremViolation are recorded there (once per pair) and skipped
  /// instead of aborting.
  std::vector<RelationInstance> all_relations(std::vector<Counterexample>* violations = nullptr);
  /// Edges of the exchange graph, n * #clusters / 2.
  std::size_t edge_count() const;

  /// Number of distinct exchangeable pairs with two homogeneity solutions.
  std::size_t eq1_multisolution_pairs() const { return multi_pairs_; }
  /// Number of distinct pairs whose tau-orbit sums collapse to one weight.
  std::size_t singleton_pairs() const { return singleton_pairs_; }
  std::size_t distinct_pairs() const { return relations_.size(); }

private:
  const Monomial& sum_monomial(std::size_t a, std::size_t b);

  const PiSet* pi_;
  const ClusterSet* clusters_;
  IntMatrix bc_;
  std::unordered_map<Weight, std::vector<std::size_t>, VectorHash, VectorEqual> roots_by_image_;
  std::unordered_map<std::uint64_t, Monomial> sums_;
  std::unordered_map<std::uint64_t, ExchangeRelation> relations_;
  std::size_t multi_pairs_ = 0;
  std::size_t singleton_pairs_ = 0;
};

Weight uplus(const ClusterSet& clusters, const Weight& lambda, const Weight& mu);

ExchangeRelation exchange_relation(const ClusterSet& clusters, const IntMatrix& bc, const Weight& lambda,
                                   const Weight& mu);

std::vector<RelationInstance> all_relations(const ClusterSet& clusters, const IntMatrix& bc);

/// Shared facet g-vectors that do not pair to zero with alpha^vee.
std::size_t wall_violations(const RelationInstance& r);

}  // namespace exrel
