#pragma once

// Ground truth by brute force: principal-coefficient seed mutation over the
// whole exchange graph, tracking exchange matrix, c-vectors and g-vectors.

#include "exrel/exchange.hpp"

namespace exrel {

struct LabeledSeed {
  IntMatrix b;
  IntMatrix c;  ///< c-vectors as columns, simple-root coordinates
  IntMatrix g;  ///< g-vectors as columns, fundamental-weight coordinates
  std::vector<int> path;
};

LabeledSeed initial_seed(const IntMatrix& bc);

/// Matrix mutation of the extended matrix [b; c] and the sign-coherent
/// g-vector recurrence. Mutating twice in the same direction is the identity.
LabeledSeed mutate_seed(const LabeledSeed& seed, int k);

struct ExchangeEdge {
  std::size_t from;
  int direction;
  std::size_t to;
};

struct ExchangeGraph {
  std::vector<LabeledSeed> seeds;  ///< canonical: g columns sorted lexicographically
  std::vector<ExchangeEdge> edges; ///< every (seed, direction) pair once
};

/// Sorts g columns lexicographically and permutes b and c to match.
LabeledSeed canonical_seed(const LabeledSeed& seed);

/// Checks sign-coherence, that c columns are roots and the duality
/// <g_i, c_j^vee> = delta_ij; returns a description of the first failure.
std::optional<std::string> check_seed(const RootSystem& rs, const LabeledSeed& seed);

/// Breadth-first enumeration from the initial seed. Every visited seed is
/// checked with check_seed. Throws LimitExceeded past `limit` seeds.
ExchangeGraph enumerate_exchange_graph(const RootSystem& rs, const IntMatrix& bc, std::size_t limit);

/// Cluster count of each finite type, independent of both engines.
std::size_t expected_cluster_count(Family family, int rank);

/// One relation per undirected edge, read off the mutation data. Throws
/// InconsistentRelation if two edges exchanging the same pair disagree.
std::vector<RelationInstance> oracle_relations(const RootSystem& rs, const ExchangeGraph& graph);

std::vector<ExchangeRelation> distinct_relations(const std::vector<RelationInstance>& instances);

struct CrossReport {
  std::size_t formula_edges = 0;
  std::size_t oracle_edges = 0;
  std::size_t distinct_pairs = 0;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::vector<std::string> discrepancies;
  bool ok() const { return mismatched == 0 && formula_edges == oracle_edges; }
};

/// Exact multiset comparison of per-edge relations (all five fields and the
/// shared facet), plus the distinct-pair relation sets.
CrossReport cross_verify(std::vector<RelationInstance> formula, std::vector<RelationInstance> oracle);

}  // namespace exrel
