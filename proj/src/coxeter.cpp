#include "exrel/coxeter.hpp"

#include "exrel/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace exrel {

CoxeterWord::CoxeterWord(const RootSystem& rs, std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = rs.rank();
  positions_.assign(static_cast<std::size_t>(n), -1);
  if (static_cast<int>(letters_.size()) != n)
    throw Error(ErrorKind::InvalidWord, "word length " + std::to_string(letters_.size()) + " != rank");
  for (int p = 0; p < n; ++p) {
    const int i = letters_[static_cast<std::size_t>(p)];
    if (i < 0 || i >= n || positions_[static_cast<std::size_t>(i)] >= 0)
      throw Error(ErrorKind::InvalidWord, "word is not a permutation of the nodes");
    positions_[static_cast<std::size_t>(i)] = p;
  }
}

std::string CoxeterWord::to_string() const {
  std::ostringstream out;
  for (std::size_t p = 0; p < letters_.size(); ++p) out << (p ? "," : "") << letters_[p] + 1;
  return out.str();
}

CoxeterWord identity_word(const RootSystem& rs) {
  std::vector<int> w(static_cast<std::size_t>(rs.rank()));
  std::iota(w.begin(), w.end(), 0);
  return CoxeterWord(rs, std::move(w));
}

std::vector<CoxeterWord> all_words(const RootSystem& rs) {
  std::vector<int> w(static_cast<std::size_t>(rs.rank()));
  std::iota(w.begin(), w.end(), 0);
  std::vector<CoxeterWord> out;
  do {
    out.emplace_back(rs, w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<CoxeterWord> sample_words(const RootSystem& rs, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> w(static_cast<std::size_t>(rs.rank()));
  std::iota(w.begin(), w.end(), 0);
  std::vector<CoxeterWord> out;
  out.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::shuffle(w.begin(), w.end(), rng);
    out.emplace_back(rs, w);
  }
  return out;
}

bool precedes(const RootSystem& rs, const CoxeterWord& word, int i, int j) {
  const int n = rs.rank();
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "node index");
  if (!rs.adjacent(i, j))
    throw Error(ErrorKind::NotAdjacent,
                "nodes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not adjacent");
  return word.position(i) < word.position(j);
}

IntMatrix build_bc(const RootSystem& rs, const CoxeterWord& word) {
  const int n = rs.rank();
  IntMatrix b = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rs.adjacent(i, j)) continue;
      b(i, j) = precedes(rs, word, i, j) ? -rs.cartan()(i, j) : rs.cartan()(i, j);
    }
  return b;
}

Weight apply_coxeter(const RootSystem& rs, const CoxeterWord& word, const Weight& w, int power) {
  Weight v = w;
  const auto& letters = word.letters();
  for (int step = 0; step < std::abs(power); ++step) {
    if (power > 0) {
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = reflect(rs, *it, v);
    } else {
      for (int i : letters) v = reflect(rs, i, v);
    }
  }
  return v;
}

int coxeter_height(const RootSystem& rs, const CoxeterWord& word, int i) {
  if (i < 0 || i >= rs.rank()) throw Error(ErrorKind::IndexOutOfRange, "node index");
  const Weight omega = unit_vector(rs.rank(), i);
  const Weight target = antidominant_image(rs, omega);
  Weight v = omega;
  // Bounded by the Coxeter number; the loop guard only catches bugs.
  for (int m = 1; m <= 4 * rs.rank() + 8; ++m) {
    v = apply_coxeter(rs, word, v, 1);
    if (v == target) return m;
  }
  throw Error(ErrorKind::InternalInvariantViolation, "c^m omega_i never reached w_0 omega_i");
}

std::vector<IntVector> bc_kernel(const IntMatrix& bc) { return kernel_basis(bc); }

int support_components(const RootSystem& rs, const RootCoords& v) {
  const int n = rs.rank();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (v(s) == 0 || label[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    label[static_cast<std::size_t>(s)] = components;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t) {
        if (v(t) != 0 && label[static_cast<std::size_t>(t)] < 0 && rs.adjacent(u, t)) {
          label[static_cast<std::size_t>(t)] = components;
          stack.push_back(t);
        }
      }
    }
    ++components;
  }
  return components;
}

namespace {

bool in_kernel(const IntMatrix& bc, const Vector<Rational>& v) {
  for (Eigen::Index i = 0; i < bc.rows(); ++i) {
    Rational sum = 0;
    for (Eigen::Index j = 0; j < bc.cols(); ++j) sum += Rational(bc(i, j)) * v(j);
    if (sum != 0) return false;
  }
  return true;
}

// Generator alpha_1 + sum_{i odd >= 3} (eps_i / a_{i-1,i}) alpha_i, 1-based i.
// With `chained` the coefficients multiply along the odd nodes and every eps
// is negated, which is what row i-1 of B_c forces.
Vector<Rational> closed_form_generator(const RootSystem& rs, const CoxeterWord& word, bool negate_eps,
                                       bool chained = false) {
  const int n = rs.rank();
  Vector<Rational> v = Vector<Rational>::Zero(n);
  v(0) = 1;
  for (int i = 3; i <= n; i += 2) {
    const int a = i - 3, b = i - 2, c = i - 1;  // 0-based i-2, i-1, i
    const bool chain = (precedes(rs, word, a, b) && precedes(rs, word, b, c)) ||
                       (precedes(rs, word, c, b) && precedes(rs, word, b, a));
    int eps = chain ? 1 : -1;
    if (negate_eps) eps = -eps;
    v(c) = Rational(eps) / Rational(rs.cartan()(b, c));
    if (chained) v(c) *= -Rational(rs.cartan()(b, a)) * v(a);
  }
  return v;
}

}  // namespace

KernelReport kernel_structure_report(const RootSystem& rs, const CoxeterWord& word, const IntMatrix& bc) {
  const Family f = rs.family();
  if (f != Family::A && f != Family::B && f != Family::C && f != Family::D)
    throw Error(ErrorKind::WrongFamily, "kernel structure is classified for A, B, C, D only");
  const int n = rs.rank();

  KernelReport r;
  r.basis = bc_kernel(bc);
  r.dimension = static_cast<int>(r.basis.size());
  for (const auto& v : r.basis) r.basis_components.push_back(support_components(rs, v));

  if (f != Family::D && n % 2 == 1) {
    r.odd_rank_abc = true;
    r.expected_components = (n - 1) / 2 + 1;
    if (r.dimension == 1) {
      bool odd_support = true;
      for (int i = 0; i < n; ++i) odd_support = odd_support && ((r.basis[0](i) != 0) == (i % 2 == 0));
      r.support_is_odd_nodes = odd_support;
    }
    r.literal_formula_in_kernel = in_kernel(bc, closed_form_generator(rs, word, false));
    r.negated_formula_in_kernel = in_kernel(bc, closed_form_generator(rs, word, true));
    r.chained_formula_in_kernel = in_kernel(bc, closed_form_generator(rs, word, true, true));
  }

  if (f == Family::D) {
    r.type_d = true;
    Vector<Rational> plus = Vector<Rational>::Zero(n), minus = Vector<Rational>::Zero(n);
    plus(n - 2) = 1;
    plus(n - 1) = 1;
    minus(n - 2) = 1;
    minus(n - 1) = -1;
    r.plus_in_kernel = in_kernel(bc, plus);
    r.minus_in_kernel = in_kernel(bc, minus);
    const int hub = n - 3, left = n - 2, right = n - 1;
    r.predicts_plus = (precedes(rs, word, left, hub) && precedes(rs, word, hub, right)) ||
                      (precedes(rs, word, right, hub) && precedes(rs, word, hub, left));
  }
  return r;
}

}  // namespace exrel
