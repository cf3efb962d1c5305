#include "exrel/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace exrel {

namespace {

Int sign(Int x) { return (x > 0) - (x < 0); }
Int positive_part(Int x) { return x > 0 ? x : 0; }

// Column sign of a sign-coherent vector; 0 if mixed or zero.
Int column_sign(const IntVector& v) {
  if ((v.array() >= 0).all() && !v.isZero()) return 1;
  if ((v.array() <= 0).all() && !v.isZero()) return -1;
  return 0;
}

struct KeyHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept {
    return VectorHash{}(Eigen::Map<const IntVector>(v.data(), static_cast<Eigen::Index>(v.size())));
  }
};

std::vector<Int> seed_key(const LabeledSeed& canonical) {
  return {canonical.g.data(), canonical.g.data() + canonical.g.size()};
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

LabeledSeed initial_seed(const IntMatrix& bc) {
  const auto n = bc.rows();
  return {bc, IntMatrix::Identity(n, n), IntMatrix::Identity(n, n), {}};
}

LabeledSeed mutate_seed(const LabeledSeed& seed, int k) {
  const auto n = seed.b.rows();
  if (k < 0 || k >= n) throw Error(ErrorKind::IndexOutOfRange, "mutation direction");
  IntMatrix ext(2 * n, n);
  ext << seed.b, seed.c;
  IntMatrix out = ext;
  for (Eigen::Index i = 0; i < 2 * n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -ext(i, j);
      } else {
        out(i, j) = ext(i, j) + sign(ext(i, k)) * positive_part(ext(i, k) * ext(k, j));
      }
    }

  const Int eps = column_sign(seed.c.col(k));
  if (eps == 0) throw Error(ErrorKind::InternalInvariantViolation, "c-vector is not sign-coherent");
  LabeledSeed next;
  next.b = out.topRows(n);
  next.c = out.bottomRows(n);
  next.g = seed.g;
  IntVector gk = -seed.g.col(k);
  for (Eigen::Index i = 0; i < n; ++i) gk += positive_part(-eps * seed.b(i, k)) * seed.g.col(i);
  next.g.col(k) = gk;
  next.path = seed.path;
  if (!next.path.empty() && next.path.back() == k)
    next.path.pop_back();
  else
    next.path.push_back(k);
  return next;
}

LabeledSeed canonical_seed(const LabeledSeed& seed) {
  const auto n = seed.g.cols();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return VectorLess{}(seed.g.col(a), seed.g.col(b)); });
  LabeledSeed out{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n), seed.path};
  for (Eigen::Index p = 0; p < n; ++p) {
    const Eigen::Index src = order[static_cast<std::size_t>(p)];
    out.g.col(p) = seed.g.col(src);
    out.c.col(p) = seed.c.col(src);
    for (Eigen::Index q = 0; q < n; ++q) out.b(p, q) = seed.b(src, order[static_cast<std::size_t>(q)]);
  }
  return out;
}

std::optional<std::string> check_seed(const RootSystem& rs, const LabeledSeed& seed) {
  const auto n = seed.c.cols();
  IntMatrix coroots(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Int s = column_sign(seed.c.col(j));
    if (s == 0) return "c-vector " + format_vector(seed.c.col(j)) + " is not sign-coherent";
    const auto idx = rs.find_positive_root(s * seed.c.col(j));
    if (!idx) return "c-vector " + format_vector(seed.c.col(j)) + " is not a root";
    coroots.col(j) = s * rs.positive_roots()[*idx].coroot;
  }
  if (seed.g.transpose() * coroots != IntMatrix::Identity(n, n)) return std::string("g/c duality fails");
  return std::nullopt;
}

ExchangeGraph enumerate_exchange_graph(const RootSystem& rs, const IntMatrix& bc, std::size_t limit) {
  const int n = static_cast<int>(bc.rows());
  ExchangeGraph graph;
  std::unordered_map<std::vector<Int>, std::size_t, KeyHash> index;

  auto visit = [&](const LabeledSeed& seed) -> std::pair<std::size_t, bool> {
    LabeledSeed canon = canonical_seed(seed);
    auto key = seed_key(canon);
    if (auto it = index.find(key); it != index.end()) return {it->second, false};
    if (graph.seeds.size() >= limit)
      throw Error(ErrorKind::LimitExceeded, "exchange graph exceeds " + std::to_string(limit) + " seeds");
    if (auto problem = check_seed(rs, canon)) throw Error(ErrorKind::InternalInvariantViolation, *problem);
    index.emplace(std::move(key), graph.seeds.size());
    graph.seeds.push_back(std::move(canon));
    return {graph.seeds.size() - 1, true};
  };

  visit(initial_seed(bc));
  for (std::size_t s = 0; s < graph.seeds.size(); ++s) {
    for (int k = 0; k < n; ++k) {
      const auto [t, fresh] = visit(mutate_seed(graph.seeds[s], k));
      (void)fresh;
      graph.edges.push_back({s, k, t});
    }
  }
  return graph;
}

std::size_t expected_cluster_count(Family family, int n) {
  BigInt count;
  switch (family) {
    case Family::A: count = binomial(2 * n + 2, n + 1) / (n + 2); break;
    case Family::B:
    case Family::C: count = binomial(2 * n, n); break;
    case Family::D: count = (3 * n - 2) * binomial(2 * n - 2, n - 1) / n; break;
    case Family::E: count = n == 6 ? 833 : n == 7 ? 4160 : 25080; break;
    case Family::F: count = 105; break;
    case Family::G: count = 8; break;
  }
  return static_cast<std::size_t>(count);
}

std::vector<RelationInstance> oracle_relations(const RootSystem& rs, const ExchangeGraph& graph) {
  std::vector<RelationInstance> out;
  std::map<std::pair<Weight, Weight>, ExchangeRelation, std::function<bool(const std::pair<Weight, Weight>&,
                                                                          const std::pair<Weight, Weight>&)>>
      seen([](const auto& a, const auto& b) {
        if (a.first != b.first) return VectorLess{}(a.first, b.first);
        return VectorLess{}(a.second, b.second);
      });

  for (const auto& edge : graph.edges) {
    if (edge.to < edge.from) continue;  // each undirected edge once
    const LabeledSeed& seed = graph.seeds[edge.from];
    const int k = edge.direction;
    const auto n = seed.g.cols();
    const Int eps = column_sign(seed.c.col(k));
    const LabeledSeed next = mutate_seed(seed, k);

    Weight plain = Weight::Zero(n), with_y = Weight::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      plain += positive_part(-eps * seed.b(i, k)) * seed.g.col(i);
      with_y += positive_part(eps * seed.b(i, k)) * seed.g.col(i);
    }
    ExchangeRelation r;
    r.lambda = seed.g.col(k);
    r.mu = next.g.col(k);
    if (VectorLess{}(r.mu, r.lambda)) std::swap(r.lambda, r.mu);
    r.sum = plain;
    r.uplus = with_y;
    const auto idx = rs.find_positive_root(eps * seed.c.col(k));
    if (!idx) throw Error(ErrorKind::InternalInvariantViolation, "c-vector is not a root");
    r.alpha = rs.positive_roots()[*idx];
    if (r.sum != r.lambda + r.mu)
      throw Error(ErrorKind::InconsistentRelation, "coefficient-free monomial degree is not lambda + mu");

    auto [it, fresh] = seen.emplace(std::make_pair(r.lambda, r.mu), r);
    if (!fresh && !(it->second == r))
      throw Error(ErrorKind::InconsistentRelation,
                  "pair " + format_vector(r.lambda) + ", " + format_vector(r.mu) + " yields different relations");

    RelationInstance inst{std::move(r), {}};
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != k) inst.shared.push_back(seed.g.col(i));
    std::sort(inst.shared.begin(), inst.shared.end(), VectorLess{});
    out.push_back(std::move(inst));
  }
  std::sort(out.begin(), out.end(), instance_less);
  return out;
}

std::vector<ExchangeRelation> distinct_relations(const std::vector<RelationInstance>& instances) {
  std::vector<ExchangeRelation> out;
  for (const auto& i : instances) out.push_back(i.relation);
  std::sort(out.begin(), out.end(), relation_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CrossReport cross_verify(std::vector<RelationInstance> formula, std::vector<RelationInstance> oracle) {
  CrossReport report;
  report.formula_edges = formula.size();
  report.oracle_edges = oracle.size();
  std::sort(formula.begin(), formula.end(), instance_less);
  std::sort(oracle.begin(), oracle.end(), instance_less);

  auto describe = [](const char* side, const RelationInstance& r) {
    return std::string(side) + ": lambda=" + format_vector(r.relation.lambda) + " mu=" +
           format_vector(r.relation.mu) + " sum=" + format_vector(r.relation.sum) +
           " uplus=" + format_vector(r.relation.uplus) + " alpha=" + format_vector(r.relation.alpha.root);
  };
  std::size_t i = 0, j = 0;
  while (i < formula.size() || j < oracle.size()) {
    if (i < formula.size() && j < oracle.size() && instance_equal(formula[i], oracle[j])) {
      ++report.matched;
      ++i;
      ++j;
    } else if (j == oracle.size() || (i < formula.size() && instance_less(formula[i], oracle[j]))) {
      ++report.mismatched;
      if (report.discrepancies.size() < 20) report.discrepancies.push_back(describe("formula only", formula[i]));
      ++i;
    } else {
      ++report.mismatched;
      if (report.discrepancies.size() < 20) report.discrepancies.push_back(describe("oracle only", oracle[j]));
      ++j;
    }
  }

  const auto df = distinct_relations(formula), dof = distinct_relations(oracle);
  report.distinct_pairs = df.size();
  if (df.size() != dof.size() || !std::equal(df.begin(), df.end(), dof.begin())) {
    ++report.mismatched;
    report.discrepancies.push_back("distinct relation sets differ");
  }
  return report;
}

}  // namespace exrel
