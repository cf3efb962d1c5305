#pragma once

// Coxeter elements, the acyclic exchange matrix B_c, and the kernel of B_c.

#include "exrel/rootsys.hpp"

#include <optional>
#include <random>

namespace exrel {

/// c = s_{word[0]} s_{word[1]} ... s_{word[n-1]}, 0-based node indices.
class CoxeterWord {
public:
  CoxeterWord(const RootSystem& rs, std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  /// Position of node i in the word.
  int position(int i) const { return positions_[static_cast<std::size_t>(i)]; }
  /// 1-based rendering, e.g. "1,2,3".
  std::string to_string() const;

  friend bool operator==(const CoxeterWord& a, const CoxeterWord& b) { return a.letters_ == b.letters_; }

private:
  std::vector<int> letters_;
  std::vector<int> positions_;
};

CoxeterWord identity_word(const RootSystem& rs);
std::vector<CoxeterWord> all_words(const RootSystem& rs);
/// k distinct-by-draw words from a seeded shuffle (duplicates possible when k > n!).
std::vector<CoxeterWord> sample_words(const RootSystem& rs, std::size_t k, std::uint64_t seed);

/// i precedes j in every reduced expression of c; i and j must be adjacent.
bool precedes(const RootSystem& rs, const CoxeterWord& word, int i, int j);

IntMatrix build_bc(const RootSystem& rs, const CoxeterWord& word);

/// c^power w; negative powers apply the reversed word.
Weight apply_coxeter(const RootSystem& rs, const CoxeterWord& word, const Weight& w, int power);

/// Least m >= 1 with c^m omega_i = w_0 omega_i.
int coxeter_height(const RootSystem& rs, const CoxeterWord& word, int i);

std::vector<IntVector> bc_kernel(const IntMatrix& bc);

/// Connected components of the subdiagram on the nonzero coordinates of v.
int support_components(const RootSystem& rs, const RootCoords& v);

struct KernelReport {
  int dimension = 0;
  std::vector<IntVector> basis;
  std::vector<int> basis_components;

  // Types A, B, C of odd rank n = 2k+1.
  bool odd_rank_abc = false;
  bool support_is_odd_nodes = false;
  int expected_components = 0;
  /// Whether the closed-form generator with the literal epsilon signs is in the kernel.
  bool literal_formula_in_kernel = false;
  /// Same with every epsilon negated.
  bool negated_formula_in_kernel = false;
  /// Coefficients chained along the odd nodes: v_i = -eps_i a_{i-1,i-2} / a_{i-1,i} * v_{i-2}.
  bool chained_formula_in_kernel = false;

  // Type D.
  bool type_d = false;
  bool plus_in_kernel = false;   ///< alpha_{n-1} + alpha_n
  bool minus_in_kernel = false;  ///< alpha_{n-1} - alpha_n
  /// The generator predicted from the relative order of s_{n-2}, s_{n-1}, s_n.
  bool predicts_plus = false;
};

KernelReport kernel_structure_report(const RootSystem& rs, const CoxeterWord& word, const IntMatrix& bc);

}  // namespace exrel
