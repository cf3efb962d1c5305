#include "exrel/laurent.hpp"

#include <deque>
#include <sstream>

namespace exrel {

LaurentPoly LaurentPoly::constant(int rank, const BigInt& c) {
  return monomial(rank, Exponent(static_cast<std::size_t>(2 * rank), 0), c);
}

LaurentPoly LaurentPoly::monomial(int rank, Exponent e, const BigInt& c) {
  LaurentPoly p(rank);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::x(int rank, int i, int power) {
  Exponent e(static_cast<std::size_t>(2 * rank), 0);
  e[static_cast<std::size_t>(i)] = power;
  return monomial(rank, std::move(e));
}

LaurentPoly LaurentPoly::y(int rank, int j, int power) {
  Exponent e(static_cast<std::size_t>(2 * rank), 0);
  e[static_cast<std::size_t>(rank + j)] = power;
  return monomial(rank, std::move(e));
}

void LaurentPoly::add_term(const Exponent& e, const BigInt& c) {
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (rank_ == 0) rank_ = o.rank_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (rank_ == 0) rank_ = o.rank_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(std::max(a.rank_, b.rank_));
  LaurentPoly::Exponent e;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::pow(Int e) const {
  LaurentPoly out = constant(rank_, 1);
  for (Int k = 0; k < e; ++k) out = out * *this;
  return out;
}

LaurentPoly LaurentPoly::drop_coefficients() const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t j = static_cast<std::size_t>(rank_); j < f.size(); ++j) f[j] = 0;
    out.add_term(f, c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c;
    if (c < 0) mag = -c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const bool is_x = i < static_cast<std::size_t>(rank_);
      const std::size_t label = (is_x ? i : i - static_cast<std::size_t>(rank_)) + 1;
      factors.push_back((is_x ? "x" : "y") + std::to_string(label) + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    for (std::size_t f = 0; f < factors.size(); ++f) out << (f ? "*" : "") << factors[f];
  }
  return out.str();
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero");
  const int rank = std::max(p.rank(), q.rank());
  LaurentPoly quotient(rank);
  if (p.is_zero()) return quotient;

  // Every quotient exponent lies in the box [min_p - min_q, max_p - max_q].
  const std::size_t vars = p.terms().begin()->first.size();
  std::vector<int> lo(vars), hi(vars);
  for (std::size_t i = 0; i < vars; ++i) {
    int pmin = INT32_MAX, pmax = INT32_MIN, qmin = INT32_MAX, qmax = INT32_MIN;
    for (const auto& [e, c] : p.terms()) pmin = std::min(pmin, e[i]), pmax = std::max(pmax, e[i]);
    for (const auto& [e, c] : q.terms()) qmin = std::min(qmin, e[i]), qmax = std::max(qmax, e[i]);
    lo[i] = pmin - qmin;
    hi[i] = pmax - qmax;
    if (i >= static_cast<std::size_t>(rank)) lo[i] = std::max(lo[i], 0);
  }

  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  LaurentPoly remainder = p;
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    if (rc % lead_c != 0) throw Error(ErrorKind::InexactDivision, "coefficient does not divide");
    LaurentPoly::Exponent te(vars);
    for (std::size_t i = 0; i < vars; ++i) {
      te[i] = re[i] - lead_e[i];
      if (te[i] < lo[i] || te[i] > hi[i]) throw Error(ErrorKind::InexactDivision, "nonzero remainder");
    }
    const LaurentPoly t = LaurentPoly::monomial(rank, te, rc / lead_c);
    quotient += t;
    remainder -= t * q;
  }
  return quotient;
}

std::optional<Weight> homogeneous_degree(const LaurentPoly& p, const IntMatrix& bc) {
  const int n = static_cast<int>(bc.rows());
  std::optional<Weight> degree;
  for (const auto& [e, c] : p.terms()) {
    Weight d = Weight::Zero(n);
    for (int i = 0; i < n; ++i) {
      d(i) += e[static_cast<std::size_t>(i)];
      d -= e[static_cast<std::size_t>(n + i)] * bc.col(i);
    }
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

VariableTable compute_variables(const IntMatrix& bc, const ExchangeGraph& graph, std::size_t bound,
                                bool coefficient_free) {
  if (graph.seeds.size() > bound)
    throw Error(ErrorKind::BoundExceeded, std::to_string(graph.seeds.size()) + " seeds exceed the symbolic bound");
  const int n = static_cast<int>(bc.rows());
  VariableTable table;
  for (int i = 0; i < n; ++i) table.emplace(unit_vector(n, i), LaurentPoly::x(n, i));

  std::vector<std::vector<std::size_t>> outgoing(graph.seeds.size());
  for (std::size_t e = 0; e < graph.edges.size(); ++e) outgoing[graph.edges[e].from].push_back(e);

  std::vector<bool> done(graph.seeds.size(), false);
  std::deque<std::size_t> queue{0};
  done[0] = true;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const LabeledSeed& seed = graph.seeds[s];
    for (auto e : outgoing[s]) {
      const int k = graph.edges[e].direction;
      LaurentPoly plus = LaurentPoly::constant(n, 1), minus = LaurentPoly::constant(n, 1);
      for (int i = 0; i < n; ++i) {
        const Int bik = seed.b(i, k);
        if (bik == 0) continue;
        const LaurentPoly& xi = table.at(seed.g.col(i));
        (bik > 0 ? plus : minus) = (bik > 0 ? plus : minus) * xi.pow(std::abs(bik));
      }
      if (!coefficient_free) {
        for (int j = 0; j < n; ++j) {
          const Int cjk = seed.c(j, k);
          if (cjk > 0) plus = plus * LaurentPoly::y(n, j, static_cast<int>(cjk));
          if (cjk < 0) minus = minus * LaurentPoly::y(n, j, static_cast<int>(-cjk));
        }
      }
      LaurentPoly fresh = exact_div(plus + minus, table.at(seed.g.col(k)));
      const Weight g = mutate_seed(seed, k).g.col(k);
      auto [it, inserted] = table.try_emplace(g, fresh);
      if (!inserted && !(it->second == fresh))
        throw Error(ErrorKind::InternalInvariantViolation, "two mutation paths give different x_" + format_vector(g));
      const std::size_t t = graph.edges[e].to;
      if (!done[t]) {
        done[t] = true;
        queue.push_back(t);
      }
    }
  }
  return table;
}

LaurentPoly cluster_monomial(const VariableTable& table, const ClusterSet& clusters, const Weight& w) {
  const PiSet& pi = clusters.pi();
  LaurentPoly out = LaurentPoly::constant(pi.rank(), 1);
  for (const auto& [e, mult] : clusters.monomial(w)) {
    auto it = table.find(pi[e]);
    if (it == table.end()) throw Error(ErrorKind::MissingVariable, "no cluster variable for " + format_vector(pi[e]));
    out = out * it->second.pow(mult);
  }
  return out;
}

namespace {

LaurentPoly lookup(const VariableTable& table, const Weight& w) {
  auto it = table.find(w);
  if (it == table.end()) throw Error(ErrorKind::MissingVariable, "no cluster variable for " + format_vector(w));
  return it->second;
}

}  // namespace

bool symbolic_verify(const ExchangeRelation& r, const VariableTable& table, const ClusterSet& clusters) {
  const int n = clusters.pi().rank();
  const LaurentPoly lhs = lookup(table, r.lambda) * lookup(table, r.mu);
  LaurentPoly y_alpha = LaurentPoly::constant(n, 1);
  for (int j = 0; j < n; ++j) y_alpha = y_alpha * LaurentPoly::y(n, j, static_cast<int>(r.alpha.root(j)));
  const LaurentPoly rhs = cluster_monomial(table, clusters, r.sum) + y_alpha * cluster_monomial(table, clusters, r.uplus);
  return lhs == rhs;
}

bool coefficient_free_verify(const ExchangeRelation& r, const VariableTable& table, const ClusterSet& clusters) {
  const LaurentPoly lhs = lookup(table, r.lambda) * lookup(table, r.mu);
  const LaurentPoly rhs = cluster_monomial(table, clusters, r.sum) + cluster_monomial(table, clusters, r.uplus);
  return lhs == rhs;
}

}  // namespace exrel
