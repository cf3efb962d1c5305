#include "exrel/exchange.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace exrel {

namespace {

bool weight_less(const Weight& a, const Weight& b) { return VectorLess{}(a, b); }

std::uint64_t pair_key(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::string describe(const Counterexample& ce) {
  std::string s = ce.type + " c=" + ce.word + " lambda=" + format_vector(ce.lambda) + " mu=" + format_vector(ce.mu) +
                  " uplus=" + format_vector(ce.uplus) + " candidates={";
  for (std::size_t k = 0; k < ce.candidates.size(); ++k) s += (k ? "," : "") + format_vector(ce.candidates[k]);
  return s + "}";
}

RootSolution pick_root(const RootSystem& rs, const std::vector<std::size_t>& candidates, const Weight& lambda,
                       const Weight& mu, const Weight& uplus_value, const std::string& word) {
  const auto& roots = rs.positive_roots();
  std::vector<std::size_t> survivors;
  for (auto k : candidates)
    if (pair(lambda, roots[k]) * pair(mu, roots[k]) == -1) survivors.push_back(k);
  if (survivors.size() != 1) {
    Counterexample ce{rs.name(), word, lambda, mu, uplus_value, {}};
    for (auto k : candidates) ce.candidates.push_back(roots[k].root);
    throw TheoremViolation(survivors.empty() ? ErrorKind::NoSolution : ErrorKind::MultipleSolutions, std::move(ce));
  }
  return {roots[survivors.front()], candidates.size()};
}

}  // namespace

bool relation_less(const ExchangeRelation& a, const ExchangeRelation& b) {
  if (a.lambda != b.lambda) return weight_less(a.lambda, b.lambda);
  if (a.mu != b.mu) return weight_less(a.mu, b.mu);
  if (a.sum != b.sum) return weight_less(a.sum, b.sum);
  if (a.uplus != b.uplus) return weight_less(a.uplus, b.uplus);
  return weight_less(a.alpha.root, b.alpha.root);
}

bool instance_less(const RelationInstance& a, const RelationInstance& b) {
  if (!(a.relation == b.relation)) return relation_less(a.relation, b.relation);
  return std::lexicographical_compare(a.shared.begin(), a.shared.end(), b.shared.begin(), b.shared.end(),
                                      weight_less);
}

bool instance_equal(const RelationInstance& a, const RelationInstance& b) {
  return a.relation == b.relation && a.shared == b.shared;
}

TheoremViolation::TheoremViolation(ErrorKind kind, Counterexample ce)
    : Error(kind, describe(ce)), ce_(std::move(ce)) {}

RootSolution solve_exchange_root(const RootSystem& rs, const IntMatrix& bc, const Weight& lambda, const Weight& mu,
                                 const Weight& uplus_value) {
  const Weight rhs = lambda + mu - uplus_value;
  std::vector<std::size_t> candidates;
  const auto& roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (-(bc * roots[k].root) == rhs) candidates.push_back(k);
  return pick_root(rs, candidates, lambda, mu, uplus_value, "?");
}

RelationBuilder::RelationBuilder(const ClusterSet& clusters, const IntMatrix& bc)
    : pi_(&clusters.pi()), clusters_(&clusters), bc_(bc) {
  const auto& roots = pi_->root_system().positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) roots_by_image_[Weight(-(bc_ * roots[k].root))].push_back(k);
}

const Monomial& RelationBuilder::sum_monomial(std::size_t a, std::size_t b) {
  const auto key = pair_key(a, b);
  auto it = sums_.find(key);
  if (it != sums_.end()) return it->second;
  return sums_.emplace(key, clusters_->monomial((*pi_)[a] + (*pi_)[b])).first->second;
}

Weight RelationBuilder::uplus(std::size_t lambda, std::size_t mu) {
  const PiSet& pi = *pi_;
  if (lambda == mu || pi.degree(lambda, mu) != 1 || pi.degree(mu, lambda) != 1)
    throw Error(ErrorKind::NotExchangeable, format_vector(pi[lambda]) + " and " + format_vector(pi[mu]));

  const Weight sum = pi[lambda] + pi[mu];
  std::set<Weight, VectorLess> values;
  for (int m = 0; m < pi.order(); ++m) {
    const Monomial& shifted = sum_monomial(pi.tau_index(lambda, m), pi.tau_index(mu, m));
    Weight back = Weight::Zero(pi.rank());
    for (const auto& [e, mult] : shifted) back += mult * pi[pi.tau_index(e, -m)];
    values.insert(std::move(back));
  }
  if (!values.count(sum) || values.size() > 2)
    throw Error(ErrorKind::InternalInvariantViolation,
                "tau-orbit sums of " + format_vector(pi[lambda]) + ", " + format_vector(pi[mu]) + " give " +
                    std::to_string(values.size()) + " weights");
  if (values.size() == 1) return sum;
  for (const auto& v : values)
    if (v != sum) return v;
  return sum;
}

const std::vector<std::size_t>& RelationBuilder::eq1_candidates(const Weight& rhs) const {
  static const std::vector<std::size_t> none;
  auto it = roots_by_image_.find(rhs);
  return it == roots_by_image_.end() ? none : it->second;
}

RootSolution RelationBuilder::solve(const Weight& lambda, const Weight& mu, const Weight& uplus_value) const {
  return pick_root(pi_->root_system(), eq1_candidates(lambda + mu - uplus_value), lambda, mu, uplus_value,
                   pi_->word().to_string());
}

ExchangeRelation RelationBuilder::relation(std::size_t lambda, std::size_t mu) {
  if (lambda > mu) std::swap(lambda, mu);
  const auto key = pair_key(lambda, mu);
  if (auto it = relations_.find(key); it != relations_.end()) return it->second;

  const PiSet& pi = *pi_;
  ExchangeRelation r;
  r.lambda = pi[lambda];
  r.mu = pi[mu];
  r.sum = r.lambda + r.mu;
  r.uplus = uplus(lambda, mu);
  if (r.uplus == r.sum) ++singleton_pairs_;
  const auto solution = solve(r.lambda, r.mu, r.uplus);
  if (solution.eq1_solutions > 1) ++multi_pairs_;
  r.alpha = solution.alpha;
  relations_.emplace(key, r);
  return r;
}

std::size_t RelationBuilder::edge_count() const {
  const ClusterSet& cs = *clusters_;
  std::size_t edges = 0;
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (std::size_t pos = 0; pos < cs.cluster(c).size(); ++pos)
      if (cs.neighbor(c, pos) > c) ++edges;
  return edges;
}

std::vector<RelationInstance> RelationBuilder::all_relations(std::vector<Counterexample>* violations) {
  const ClusterSet& cs = *clusters_;
  std::vector<RelationInstance> out;
  std::unordered_set<std::uint64_t> failed;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto& members = cs.cluster(c);
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      const std::size_t other = cs.neighbor(c, pos);
      if (other < c) continue;
      const auto& across = cs.cluster(other);
      std::size_t incoming = across.front();
      for (auto e : across)
        if (!std::binary_search(members.begin(), members.end(), e)) incoming = e;
      RelationInstance inst;
      if (violations) {
        const auto key = pair_key(std::min(members[pos], incoming), std::max(members[pos], incoming));
        if (failed.count(key)) continue;
        try {
          inst.relation = relation(members[pos], incoming);
        } catch (const TheoremViolation& tv) {
          failed.insert(key);
          violations->push_back(tv.counterexample());
          continue;
        }
      } else {
        inst.relation = relation(members[pos], incoming);
      }
      for (auto e : members)
        if (e != members[pos]) inst.shared.push_back((*pi_)[e]);
      out.push_back(std::move(inst));
    }
  }
  std::sort(out.begin(), out.end(), instance_less);
  return out;
}

Weight uplus(const ClusterSet& clusters, const Weight& lambda, const Weight& mu) {
  RelationBuilder builder(clusters, IntMatrix::Zero(clusters.pi().rank(), clusters.pi().rank()));
  return builder.uplus(clusters.pi().index_of(lambda), clusters.pi().index_of(mu));
}

ExchangeRelation exchange_relation(const ClusterSet& clusters, const IntMatrix& bc, const Weight& lambda,
                                   const Weight& mu) {
  RelationBuilder builder(clusters, bc);
  return builder.relation(clusters.pi().index_of(lambda), clusters.pi().index_of(mu));
}

std::vector<RelationInstance> all_relations(const ClusterSet& clusters, const IntMatrix& bc) {
  RelationBuilder builder(clusters, bc);
  return builder.all_relations();
}

std::size_t wall_violations(const RelationInstance& r) {
  std::size_t bad = 0;
  for (const auto& g : r.shared)
    if (pair(g, r.relation.alpha) != 0) ++bad;
  return bad;
}

}  // namespace exrel
