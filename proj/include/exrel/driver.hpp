#pragma once

// Per-configuration computation drivers shared by the command-line tool and
// the acceptance suite.

#include "exrel/laurent.hpp"

#include <json.hpp>

#include <memory>

namespace exrel {

/// Everything derived from one (type, Coxeter word) configuration. Pinned in
/// memory: the cluster set and relation builder refer to the members before them.
class Configuration {
public:
  Configuration(const RootSystem& rs, CoxeterWord word);
  Configuration(const Configuration&) = delete;
  Configuration& operator=(const Configuration&) = delete;

  const RootSystem& rs;
  const CoxeterWord word;
  const IntMatrix bc;
  const PiSet pi;
  const ClusterSet clusters;
  RelationBuilder builder;
};

enum class Level { None, Structural, Symbolic };
enum class Format { Json, Text };

struct JobConfig {
  Family family = Family::A;
  int rank = 1;
  std::string coxeter = "all";  ///< "1,2,3" | "all" | "sample:k"
  std::uint64_t seed = 1;
  Format format = Format::Json;
  Level level = Level::Structural;
  std::string out;
  std::size_t limit = 0;  ///< 0: twice the known cluster count
  int jobs = 1;
};

/// Parses the Coxeter-word selector; 1-based explicit words.
std::vector<CoxeterWord> resolve_words(const RootSystem& rs, const JobConfig& config);

/// tau-machinery checks over all pairs of Pi(c).
struct TauReport {
  std::size_t degree_invariance_failures = 0;
  std::size_t zero_symmetry_failures = 0;
  std::size_t well_definedness_failures = 0;
  std::size_t tau_period_failures = 0;
  std::size_t tau_pl_period_failures = 0;
  std::size_t tau_pl_checks = 0;
  bool ok() const {
    return degree_invariance_failures + zero_symmetry_failures + well_definedness_failures + tau_period_failures +
               tau_pl_period_failures ==
           0;
  }
};

TauReport check_tau_machinery(const Configuration& cfg);

struct WordVerification {
  std::string word;
  int rank = 0;
  std::size_t pi_size = 0;
  std::size_t expected_pi_size = 0;
  std::size_t clusters = 0;
  std::size_t oracle_seeds = 0;
  std::size_t expected_clusters = 0;
  std::size_t exchange_edges = 0;  ///< facets shared by two clusters
  std::size_t formula_edges = 0;   ///< edges for which the formula produced a relation
  std::size_t distinct_pairs = 0;
  /// False at Level::None: no mutation oracle, so nothing to compare against.
  bool oracle_run = false;
  CrossReport cross;
  bool cluster_sets_equal = false;
  bool oracle_g_vectors_cover_pi = false;
  std::size_t eq1_multisolution_pairs = 0;
  /// Pairs where the two defining equations leave no root or several roots.
  std::size_t theorem_violations = 0;
  std::size_t no_solution_pairs = 0;
  std::size_t multi_solution_pairs = 0;
  /// Oracle-side diagnostics: pairs with several survivors, and pairs whose
  /// true root fails one of the equations.
  std::size_t ambiguous_pairs = 0;
  std::size_t oracle_root_rejected = 0;
  std::size_t singleton_pairs = 0;
  std::size_t wall_checks = 0;
  std::size_t wall_violations = 0;
  /// Type D: pairs whose two homogeneity solutions do not differ by the
  /// predicted alpha_{n-1} +- alpha_n.
  std::size_t d_structure_violations = 0;
  std::size_t d_structure_other_kernel = 0;
  TauReport tau;
  bool tau_checked = false;

  bool symbolic_run = false;
  std::size_t symbolic_checked = 0;
  std::size_t symbolic_failed = 0;
  std::size_t coefficient_free_failed = 0;
  std::size_t specialization_failed = 0;
  std::size_t homogeneity_failed = 0;

  std::optional<Counterexample> counterexample;
  std::vector<std::string> errors;

  bool counts_ok() const {
    return pi_size == expected_pi_size && (!oracle_run || clusters == oracle_seeds) &&
           clusters == expected_clusters && 2 * exchange_edges == static_cast<std::size_t>(rank) * clusters;
  }
  bool ok() const;
};

struct VerifyOptions {
  Level level = Level::Structural;
  std::size_t limit = 0;
  bool tau_checks = true;
  std::size_t symbolic_bound = 200;
};

WordVerification verify_word(const RootSystem& rs, const CoxeterWord& word, const VerifyOptions& options);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// JSON payloads; weights in fundamental-weight coordinates, roots in
// simple-root coordinates, node order 1..n.
nlohmann::json to_json(const IntVector& v);
nlohmann::json relation_json(const ExchangeRelation& r);
nlohmann::json pi_json(const Configuration& cfg);
nlohmann::json clusters_json(const Configuration& cfg);
nlohmann::json kernel_json(const Configuration& cfg);
nlohmann::json decompose_json(const Configuration& cfg, const Weight& w);
nlohmann::json verification_json(const WordVerification& v);
nlohmann::json counterexample_json(const Counterexample& ce);

std::string relation_text(const ExchangeRelation& r);

}  // namespace exrel
