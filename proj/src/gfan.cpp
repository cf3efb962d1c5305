#include "exrel/gfan.hpp"

#include "exrel/linalg.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <unordered_set>

namespace exrel {

PiSet::PiSet(const RootSystem& rs, const CoxeterWord& word) : rs_(&rs), word_(word) {
  const int n = rs.rank();
  heights_.resize(static_cast<std::size_t>(n));
  std::vector<Weight> raw;
  for (int i = 0; i < n; ++i) {
    const int h = coxeter_height(rs, word, i);
    heights_[static_cast<std::size_t>(i)] = h;
    Weight v = unit_vector(n, i);
    for (int m = 0; m <= h; ++m) {
      raw.push_back(v);
      v = apply_coxeter(rs, word, v, 1);
    }
  }
  std::sort(raw.begin(), raw.end(), VectorLess{});
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  elements_ = std::move(raw);
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);

  fundamental_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) fundamental_[static_cast<std::size_t>(i)] = index_of(unit_vector(n, i));

  const std::size_t size = elements_.size();
  next_.resize(size);
  prev_.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    const Weight& w = elements_[k];
    std::optional<std::size_t> target;
    for (int i = 0; i < n && !target; ++i)
      if (w == -unit_vector(n, i)) target = fundamental_[static_cast<std::size_t>(i)];
    if (!target) target = find(apply_coxeter(rs, word, w, 1));
    if (!target) throw Error(ErrorKind::InternalInvariantViolation, "tau does not preserve Pi(c)");
    next_[k] = *target;
  }
  std::vector<bool> hit(size, false);
  for (std::size_t k = 0; k < size; ++k) {
    if (hit[next_[k]]) throw Error(ErrorKind::InternalInvariantViolation, "tau is not a bijection");
    hit[next_[k]] = true;
    prev_[next_[k]] = k;
  }

  std::vector<bool> seen(size, false);
  for (std::size_t k = 0; k < size; ++k) {
    if (seen[k]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = k; !seen[j]; j = next_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    order_ = std::lcm(order_, static_cast<int>(cycle.size()));
    cycles_.push_back(std::move(cycle));
  }

  shift_.reserve(size);
  for (const auto& w : elements_) {
    const auto r = weight_to_root_coords(rs, apply_coxeter(rs, word, w, -1) - w);
    if (!r.integral) throw Error(ErrorKind::NonIntegral, "(c^-1 - id) lambda not in the root lattice");
    shift_.push_back(r.integer_coords);
  }

  // Walk lambda forward along tau to a fundamental weight omega_i; then
  // (lambda || mu) = [(c^-1 - id) tau^k mu ; alpha_i]_+.
  std::vector<int> fundamental_of(size, -1);
  for (int i = 0; i < n; ++i) fundamental_of[fundamental_[static_cast<std::size_t>(i)]] = i;
  degrees_.assign(size * size, 0);
  for (std::size_t lambda = 0; lambda < size; ++lambda) {
    int k = 0;
    std::size_t at = lambda;
    while (fundamental_of[at] < 0) {
      at = next_[at];
      if (++k > static_cast<int>(size)) throw Error(ErrorKind::InternalInvariantViolation, "tau orbit avoids omega_i");
    }
    const int i = fundamental_of[at];
    for (std::size_t mu = 0; mu < size; ++mu) {
      const std::size_t shifted = tau_index(mu, k);
      degrees_[lambda * size + mu] = static_cast<int>(std::max<Int>(shift_[shifted](i), 0));
    }
  }
}

std::optional<std::size_t> PiSet::find(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PiSet::index_of(const Weight& w) const {
  auto k = find(w);
  if (!k) throw Error(ErrorKind::NotInPi, format_vector(w) + " is not in Pi(c)");
  return *k;
}

std::size_t PiSet::tau_index(std::size_t k, int power) const {
  power %= order_;
  if (power < 0) power += order_;
  for (int s = 0; s < power; ++s) k = next_[k];
  return k;
}

int PiSet::initial_degree(int i, std::size_t mu) const {
  return static_cast<int>(std::max<Int>(shift_[mu](i), 0));
}

PiSet build_pi(const RootSystem& rs, const CoxeterWord& word) { return PiSet(rs, word); }

Weight tau(const PiSet& pi, const Weight& w, int power) { return pi[pi.tau_index(pi.index_of(w), power)]; }

int compatibility_degree(const PiSet& pi, const Weight& lambda, const Weight& mu) {
  return pi.degree(pi.index_of(lambda), pi.index_of(mu));
}

bool is_compatible(const PiSet& pi, const Weight& lambda, const Weight& mu) {
  const auto a = pi.index_of(lambda), b = pi.index_of(mu);
  return pi.degree(a, b) == 0 || pi.degree(b, a) == 0;
}

bool is_exchangeable(const PiSet& pi, const Weight& lambda, const Weight& mu) {
  const auto a = pi.index_of(lambda), b = pi.index_of(mu);
  return a != b && pi.degree(a, b) == 1 && pi.degree(b, a) == 1;
}

namespace {

constexpr std::size_t kMaxPi = 256;
using Bits = std::bitset<kMaxPi>;

// Bron-Kerbosch with Tomita pivoting.
void maximal_cliques(const std::vector<Bits>& adj, std::vector<std::size_t>& current, Bits candidates, Bits excluded,
                     std::vector<std::vector<std::size_t>>& out) {
  if (candidates.none()) {
    if (excluded.none()) out.push_back(current);
    return;
  }
  std::size_t pivot = 0, best = 0;
  const Bits pool = candidates | excluded;
  for (std::size_t u = pool._Find_first(); u < kMaxPi; u = pool._Find_next(u)) {
    const std::size_t c = (candidates & adj[u]).count();
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  const Bits branch = candidates & ~adj[pivot];
  for (std::size_t v = branch._Find_first(); v < kMaxPi; v = branch._Find_next(v)) {
    current.push_back(v);
    maximal_cliques(adj, current, candidates & adj[v], excluded & adj[v], out);
    current.pop_back();
    candidates.reset(v);
    excluded.set(v);
  }
}

}  // namespace

ClusterSet::ClusterSet(const PiSet& pi) : pi_(&pi) {
  const std::size_t size = pi.size();
  const auto n = static_cast<std::size_t>(pi.rank());
  if (size > kMaxPi) throw Error(ErrorKind::BoundExceeded, "Pi(c) larger than the clique bitset");

  std::vector<Bits> adj(size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (a != b && pi.degree(a, b) == 0) adj[a].set(b);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (adj[a][b] != adj[b][a])
        throw Error(ErrorKind::InternalInvariantViolation, "compatibility degree zero is not symmetric");

  Bits all;
  for (std::size_t a = 0; a < size; ++a) all.set(a);
  std::vector<std::size_t> current;
  maximal_cliques(adj, current, all, Bits{}, clusters_);
  for (auto& c : clusters_) {
    if (c.size() != n)
      throw Error(ErrorKind::InternalInvariantViolation,
                  "maximal compatible set of size " + std::to_string(c.size()));
    std::sort(c.begin(), c.end());
  }
  std::sort(clusters_.begin(), clusters_.end());
  for (std::size_t c = 0; c < clusters_.size(); ++c) lookup_.emplace(clusters_[c], c);

  g_.reserve(clusters_.size());
  g_inv_.reserve(clusters_.size());
  for (const auto& c : clusters_) {
    IntMatrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) g.col(static_cast<Eigen::Index>(k)) = pi[c[k]];
    g_inv_.push_back(unimodular_inverse(g));
    g_.push_back(std::move(g));
  }

  // Each facet is shared by exactly two clusters.
  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t c = 0; c < clusters_.size(); ++c)
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::vector<std::size_t> facet = clusters_[c];
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(pos));
      facets[std::move(facet)].emplace_back(c, pos);
    }
  neighbors_.assign(clusters_.size(), std::vector<std::size_t>(n));
  for (const auto& [facet, sides] : facets) {
    if (sides.size() != 2)
      throw Error(ErrorKind::InternalInvariantViolation, "facet not shared by exactly two clusters");
    neighbors_[sides[0].first][sides[0].second] = sides[1].first;
    neighbors_[sides[1].first][sides[1].second] = sides[0].first;
  }

  tau_.resize(clusters_.size());
  for (std::size_t c = 0; c < clusters_.size(); ++c) {
    std::vector<std::size_t> image;
    for (auto e : clusters_[c]) image.push_back(pi.tau_next(e));
    std::sort(image.begin(), image.end());
    auto t = find(image);
    if (!t) throw Error(ErrorKind::InternalInvariantViolation, "tau does not map clusters to clusters");
    tau_[c] = *t;
  }

  std::vector<std::size_t> initial;
  for (int i = 0; i < pi.rank(); ++i) initial.push_back(pi.fundamental(i));
  std::sort(initial.begin(), initial.end());
  auto init = find(initial);
  if (!init) throw Error(ErrorKind::InternalInvariantViolation, "fundamental weights do not form a cluster");
  initial_ = *init;
}

std::optional<std::size_t> ClusterSet::find(const std::vector<std::size_t>& sorted_elements) const {
  auto it = lookup_.find(sorted_elements);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ConeDecomposition ClusterSet::decompose(const Weight& w) const {
  // Greedy walk across the facet with the most negative coordinate; cycles
  // (possible for non-regular subdivisions) fall back to a linear scan.
  std::unordered_set<std::size_t> visited;
  std::size_t at = initial_;
  for (;;) {
    IntVector coords = g_inv_[at] * w;
    Eigen::Index worst = 0;
    const Int lowest = coords.minCoeff(&worst);
    if (lowest >= 0) return {at, std::move(coords)};
    if (!visited.insert(at).second) break;
    at = neighbors_[at][static_cast<std::size_t>(worst)];
  }
  auto all = all_decompositions(w);
  if (all.empty()) throw Error(ErrorKind::NoConeFound, format_vector(w));
  return std::move(all.front());
}

std::vector<ConeDecomposition> ClusterSet::all_decompositions(const Weight& w) const {
  std::vector<ConeDecomposition> out;
  for (std::size_t c = 0; c < clusters_.size(); ++c) {
    IntVector coords = g_inv_[c] * w;
    if ((coords.array() >= 0).all()) out.push_back({c, std::move(coords)});
  }
  return out;
}

Monomial ClusterSet::monomial(const Weight& w) const {
  const auto d = decompose(w);
  Monomial m;
  for (std::size_t k = 0; k < clusters_[d.cluster].size(); ++k)
    if (d.coords(static_cast<Eigen::Index>(k)) != 0)
      m.emplace_back(clusters_[d.cluster][k], d.coords(static_cast<Eigen::Index>(k)));
  std::sort(m.begin(), m.end());
  return m;
}

ClusterSet enumerate_clusters(const PiSet& pi) { return ClusterSet(pi); }

ConeDecomposition decompose(const ClusterSet& clusters, const Weight& w) { return clusters.decompose(w); }

Weight tau_pl(const ClusterSet& clusters, const Weight& w, int power) {
  const PiSet& pi = clusters.pi();
  Weight v = w;
  for (int step = 0; step < std::abs(power); ++step) {
    const auto d = clusters.decompose(v);
    Weight next = Weight::Zero(v.size());
    const auto& members = clusters.cluster(d.cluster);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::size_t image = power > 0 ? pi.tau_next(members[k]) : pi.tau_prev(members[k]);
      next += d.coords(static_cast<Eigen::Index>(k)) * pi[image];
    }
    v = std::move(next);
  }
  return v;
}

Weight monomial_weight(const PiSet& pi, const Monomial& m) {
  Weight w = Weight::Zero(pi.rank());
  for (const auto& [e, mult] : m) w += mult * pi[e];
  return w;
}

}  // namespace exrel
