#include "exrel/driver.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace exrel {

Configuration::Configuration(const RootSystem& root_system, CoxeterWord w)
    : rs(root_system),
      word(std::move(w)),
      bc(build_bc(rs, word)),
      pi(rs, word),
      clusters(pi),
      builder(clusters, bc) {}

std::vector<CoxeterWord> resolve_words(const RootSystem& rs, const JobConfig& config) {
  const std::string& selector = config.coxeter;
  if (selector == "all") return all_words(rs);
  if (selector.rfind("sample:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(selector.substr(7));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidWord, "bad sample count in '" + selector + "'");
    }
    return sample_words(rs, k, config.seed);
  }
  std::vector<int> letters;
  std::stringstream in(selector);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      letters.push_back(v - 1);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidWord, "bad Coxeter word entry '" + item + "'");
    }
  }
  return {CoxeterWord(rs, letters)};
}

TauReport check_tau_machinery(const Configuration& cfg) {
  const PiSet& pi = cfg.pi;
  const std::size_t size = pi.size();
  const int order = pi.order();
  TauReport r;

  for (std::size_t e = 0; e < size; ++e) {
    std::size_t at = e;
    for (int s = 0; s < order; ++s) at = pi.tau_next(at);
    if (at != e) ++r.tau_period_failures;
  }
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      if (pi.degree(pi.tau_next(a), pi.tau_next(b)) != pi.degree(a, b)) ++r.degree_invariance_failures;
      if ((pi.degree(a, b) == 0) != (pi.degree(b, a) == 0)) ++r.zero_symmetry_failures;
    }

  // Any two fundamental weights on one tau-orbit must give the same degrees.
  for (int i = 0; i < pi.rank(); ++i) {
    std::size_t at = pi.fundamental(i);
    for (int k = 1; k < order; ++k) {
      at = pi.tau_next(at);
      for (int j = 0; j < pi.rank(); ++j) {
        if (pi.fundamental(j) != at) continue;
        for (std::size_t mu = 0; mu < size; ++mu)
          if (pi.initial_degree(i, mu) != pi.initial_degree(j, pi.tau_index(mu, k))) ++r.well_definedness_failures;
      }
    }
  }

  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a; b < size; ++b) {
      const Weight w = pi[a] + pi[b];
      ++r.tau_pl_checks;
      if (tau_pl(cfg.clusters, w, order) != w) ++r.tau_pl_period_failures;
    }
  return r;
}

bool WordVerification::ok() const {
  bool good = counts_ok() && wall_violations == 0 && !counterexample && errors.empty();
  if (oracle_run) good = good && cross.ok() && cluster_sets_equal && oracle_g_vectors_cover_pi;
  if (tau_checked) good = good && tau.ok();
  if (symbolic_run)
    good = good && symbolic_failed == 0 && coefficient_free_failed == 0 && specialization_failed == 0 &&
           homogeneity_failed == 0;
  return good;
}

namespace {

void check_d_structure(const Configuration& cfg, const std::vector<ExchangeRelation>& relations,
                       WordVerification& v) {
  const RootSystem& rs = cfg.rs;
  if (rs.family() != Family::D) return;
  const int n = rs.rank();
  const auto report = kernel_structure_report(rs, cfg.word, cfg.bc);
  RootCoords expected = RootCoords::Zero(n);
  expected(n - 2) = 1;
  expected(n - 1) = report.predicts_plus ? 1 : -1;
  for (const auto& r : relations) {
    const auto& candidates = cfg.builder.eq1_candidates(r.sum - r.uplus);
    if (candidates.size() < 2) continue;
    if (candidates.size() > 2) {
      ++v.d_structure_violations;
      continue;
    }
    const RootCoords diff =
        rs.positive_roots()[candidates[0]].root - rs.positive_roots()[candidates[1]].root;
    if (diff == expected || diff == -expected) continue;
    if ((cfg.bc * diff).isZero())
      ++v.d_structure_other_kernel;
    else
      ++v.d_structure_violations;
  }
}

}  // namespace

WordVerification verify_word(const RootSystem& rs, const CoxeterWord& word, const VerifyOptions& options) {
  WordVerification v;
  v.word = word.to_string();
  v.rank = rs.rank();
  v.expected_pi_size = rs.positive_roots().size() + static_cast<std::size_t>(rs.rank());
  v.expected_clusters = expected_cluster_count(rs.family(), rs.rank());
  try {
    Configuration cfg(rs, word);
    v.pi_size = cfg.pi.size();
    v.clusters = cfg.clusters.size();
    v.exchange_edges = cfg.builder.edge_count();

    std::vector<Counterexample> violations;
    const auto formula = cfg.builder.all_relations(&violations);
    v.theorem_violations = violations.size();
    for (const auto& ce : violations) {
      if (ce.candidates.empty())
        ++v.no_solution_pairs;
      else
        ++v.multi_solution_pairs;
    }
    if (!violations.empty()) v.counterexample = violations.front();
    v.formula_edges = formula.size();
    v.distinct_pairs = cfg.builder.distinct_pairs();
    v.eq1_multisolution_pairs = cfg.builder.eq1_multisolution_pairs();
    v.singleton_pairs = cfg.builder.singleton_pairs();
    for (const auto& inst : formula) {
      ++v.wall_checks;
      if (wall_violations(inst) != 0) ++v.wall_violations;
    }
    std::vector<ExchangeRelation> relations = distinct_relations(formula);

    if (options.level != Level::None) {
      const std::size_t limit = options.limit ? options.limit : 2 * v.expected_clusters;
      const ExchangeGraph graph = enumerate_exchange_graph(rs, cfg.bc, limit);
      v.oracle_seeds = graph.seeds.size();
      v.oracle_run = true;
      const auto oracle = oracle_relations(rs, graph);
      v.cross = cross_verify(formula, oracle);

      // Where the formula gives up, check that the true root is among the
      // survivors of both equations.
      const auto truth = distinct_relations(oracle);
      for (const auto& r : truth) {
        std::size_t survivors = 0;
        bool contains_truth = false;
        for (auto idx : cfg.builder.eq1_candidates(r.sum - r.uplus)) {
          const Root& root = rs.positive_roots()[idx];
          if (pair(r.lambda, root) * pair(r.mu, root) != -1) continue;
          ++survivors;
          if (root.root == r.alpha.root) contains_truth = true;
        }
        if (!contains_truth) ++v.oracle_root_rejected;
        if (survivors > 1) ++v.ambiguous_pairs;
      }
      relations = truth;

      std::set<std::vector<std::size_t>> oracle_clusters;
      std::vector<bool> covered(cfg.pi.size(), false);
      bool all_in_pi = true;
      for (const auto& seed : graph.seeds) {
        std::vector<std::size_t> members;
        for (Eigen::Index k = 0; k < seed.g.cols(); ++k) {
          const auto idx = cfg.pi.find(seed.g.col(k));
          if (!idx) {
            all_in_pi = false;
            continue;
          }
          covered[*idx] = true;
          members.push_back(*idx);
        }
        std::sort(members.begin(), members.end());
        oracle_clusters.insert(std::move(members));
      }
      v.oracle_g_vectors_cover_pi = all_in_pi && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
      const std::set<std::vector<std::size_t>> fan_clusters(cfg.clusters.clusters().begin(),
                                                            cfg.clusters.clusters().end());
      v.cluster_sets_equal = oracle_clusters == fan_clusters;

      if (options.level == Level::Symbolic && graph.seeds.size() <= options.symbolic_bound) {
        v.symbolic_run = true;
        const auto principal = compute_variables(cfg.bc, graph, options.symbolic_bound, false);
        const auto plain = compute_variables(cfg.bc, graph, options.symbolic_bound, true);
        for (const auto& r : distinct_relations(formula)) {
          ++v.symbolic_checked;
          if (!symbolic_verify(r, principal, cfg.clusters)) ++v.symbolic_failed;
          if (!coefficient_free_verify(r, plain, cfg.clusters)) ++v.coefficient_free_failed;
        }
        for (const auto& [g, poly] : principal) {
          auto it = plain.find(g);
          if (it == plain.end() || !(it->second == poly.drop_coefficients())) ++v.specialization_failed;
          const auto degree = homogeneous_degree(poly, cfg.bc);
          if (!degree || *degree != g) ++v.homogeneity_failed;
        }
      }
    }
    check_d_structure(cfg, relations, v);

    if (options.tau_checks) {
      v.tau = check_tau_machinery(cfg);
      v.tau_checked = true;
    }
  } catch (const Error& e) {
    v.errors.push_back(e.what());
  }
  return v;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(workers, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

nlohmann::json to_json(const IntVector& v) { return to_std(v); }

nlohmann::json relation_json(const ExchangeRelation& r) {
  return {{"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)},
          {"sum", to_json(r.sum)},       {"uplus", to_json(r.uplus)},
          {"alpha_root", to_json(r.alpha.root)}, {"alpha_coroot", to_json(r.alpha.coroot)}};
}

nlohmann::json pi_json(const Configuration& cfg) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& w : cfg.pi.elements()) elements.push_back(to_json(w));
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& cycle : cfg.pi.cycles()) {
    nlohmann::json orbit = nlohmann::json::array();
    for (auto e : cycle) orbit.push_back(to_json(cfg.pi[e]));
    orbits.push_back(std::move(orbit));
  }
  return {{"word", cfg.word.to_string()},
          {"size", cfg.pi.size()},
          {"positive_roots", cfg.rs.positive_roots().size()},
          {"heights", cfg.pi.heights()},
          {"tau_order", cfg.pi.order()},
          {"elements", std::move(elements)},
          {"tau_orbits", std::move(orbits)}};
}

nlohmann::json clusters_json(const Configuration& cfg) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : cfg.clusters.clusters()) {
    nlohmann::json cluster = nlohmann::json::array();
    for (auto e : c) cluster.push_back(to_json(cfg.pi[e]));
    list.push_back(std::move(cluster));
  }
  return {{"word", cfg.word.to_string()}, {"count", cfg.clusters.size()}, {"clusters", std::move(list)}};
}

nlohmann::json kernel_json(const Configuration& cfg) {
  const auto basis = bc_kernel(cfg.bc);
  nlohmann::json out{{"word", cfg.word.to_string()}, {"bc", nlohmann::json::array()}};
  for (Eigen::Index i = 0; i < cfg.bc.rows(); ++i) out["bc"].push_back(to_std(IntVector(cfg.bc.row(i).transpose())));
  out["dimension"] = basis.size();
  out["basis"] = nlohmann::json::array();
  out["support_components"] = nlohmann::json::array();
  for (const auto& b : basis) {
    out["basis"].push_back(to_json(b));
    out["support_components"].push_back(support_components(cfg.rs, b));
  }
  const Family f = cfg.rs.family();
  if (f == Family::A || f == Family::B || f == Family::C || f == Family::D) {
    const auto r = kernel_structure_report(cfg.rs, cfg.word, cfg.bc);
    if (r.odd_rank_abc) {
      out["odd_rank"] = {{"support_is_odd_nodes", r.support_is_odd_nodes},
                         {"expected_components", r.expected_components},
                         {"literal_formula_in_kernel", r.literal_formula_in_kernel},
                         {"negated_formula_in_kernel", r.negated_formula_in_kernel},
                         {"chained_formula_in_kernel", r.chained_formula_in_kernel}};
    }
    if (r.type_d) {
      out["type_d"] = {{"plus_in_kernel", r.plus_in_kernel},
                       {"minus_in_kernel", r.minus_in_kernel},
                       {"predicted", r.predicts_plus ? "alpha_{n-1}+alpha_n" : "alpha_{n-1}-alpha_n"}};
    }
  }
  return out;
}

nlohmann::json decompose_json(const Configuration& cfg, const Weight& w) {
  const auto d = cfg.clusters.decompose(w);
  nlohmann::json cluster = nlohmann::json::array();
  for (auto e : cfg.clusters.cluster(d.cluster)) cluster.push_back(to_json(cfg.pi[e]));
  nlohmann::json monomial = nlohmann::json::array();
  for (const auto& [e, mult] : cfg.clusters.monomial(w))
    monomial.push_back({{"g_vector", to_json(cfg.pi[e])}, {"exponent", mult}});
  return {{"weight", to_json(w)}, {"cluster", std::move(cluster)}, {"coords", to_json(d.coords)},
          {"monomial", std::move(monomial)}};
}

nlohmann::json counterexample_json(const Counterexample& ce) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : ce.candidates) candidates.push_back(to_json(c));
  return {{"type", ce.type},           {"word", ce.word},           {"lambda", to_json(ce.lambda)},
          {"mu", to_json(ce.mu)},      {"uplus", to_json(ce.uplus)}, {"candidates", std::move(candidates)}};
}

nlohmann::json verification_json(const WordVerification& v) {
  nlohmann::json out{{"word", v.word},
                     {"ok", v.ok()},
                     {"pi_size", v.pi_size},
                     {"clusters", v.clusters},
                     {"oracle_seeds", v.oracle_seeds},
                     {"expected_clusters", v.expected_clusters},
                     {"exchange_edges", v.exchange_edges},
                     {"relations", v.formula_edges},
                     {"distinct_pairs", v.distinct_pairs},
                     {"matched", v.cross.matched},
                     {"mismatched", v.cross.mismatched},
                     {"oracle_run", v.oracle_run},
                     {"cluster_sets_equal", v.cluster_sets_equal},
                     {"eq1_multisolution_count", v.eq1_multisolution_pairs},
                     {"theorem_violations", v.theorem_violations},
                     {"no_solution_pairs", v.no_solution_pairs},
                     {"multiple_solution_pairs", v.multi_solution_pairs},
                     {"ambiguous_pairs", v.ambiguous_pairs},
                     {"oracle_root_rejected", v.oracle_root_rejected},
                     {"singleton_uplus_pairs", v.singleton_pairs},
                     {"wall_violations", v.wall_violations},
                     {"d_structure_violations", v.d_structure_violations},
                     {"d_structure_other_kernel", v.d_structure_other_kernel}};
  if (v.tau_checked)
    out["tau"] = {{"ok", v.tau.ok()},
                  {"degree_invariance_failures", v.tau.degree_invariance_failures},
                  {"zero_symmetry_failures", v.tau.zero_symmetry_failures},
                  {"tau_pl_period_failures", v.tau.tau_pl_period_failures}};
  if (v.symbolic_run)
    out["symbolic"] = {{"checked", v.symbolic_checked},
                       {"failed", v.symbolic_failed},
                       {"coefficient_free_failed", v.coefficient_free_failed},
                       {"homogeneity_failed", v.homogeneity_failed}};
  if (!v.cross.discrepancies.empty()) out["discrepancies"] = v.cross.discrepancies;
  if (v.counterexample) out["counterexample"] = counterexample_json(*v.counterexample);
  if (!v.errors.empty()) out["errors"] = v.errors;
  return out;
}

std::string relation_text(const ExchangeRelation& r) {
  std::ostringstream out;
  out << "x" << format_vector(r.lambda) << "·x" << format_vector(r.mu) << " = x" << format_vector(r.sum)
      << " + y^" << format_vector(r.alpha.root) << "·x" << format_vector(r.uplus);
  return out.str();
}

}  // namespace exrel
