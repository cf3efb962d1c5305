#pragma once

// Finite-type Cartan data and the Weyl group action on weights.
//
// Conventions: nodes are 0-based internally and follow the standard labeled
// Dynkin diagrams (B_n: alpha_n short, C_n: alpha_n long, F_4: alpha_1,
// alpha_2 long, G_2: alpha_2 long, E_n: chain 1..n-1 with node n attached
// to node 3). The Cartan matrix satisfies a_ij = <alpha_i^vee, alpha_j>, so
// alpha_j = sum_i a_ij omega_i is column j.

#include "exrel/types.hpp"

#include <optional>
#include <string>

namespace exrel {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(const std::string& s);

struct Root {
  RootCoords root;  ///< simple-root coordinates
  IntVector coroot; ///< simple-coroot coordinates
};

class RootSystem {
public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  const IntMatrix& cartan() const { return cartan_; }
  /// diag(d) * cartan is symmetric; d_i is half the squared length of alpha_i.
  const IntVector& symmetrizers() const { return symmetrizers_; }

  /// Positive roots, lexicographic on root coordinates.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  /// Index of a positive root by its root coordinates.
  std::optional<std::size_t> find_positive_root(const RootCoords& r) const;

  bool adjacent(int i, int j) const { return i != j && cartan_(i, j) != 0; }

private:
  Family family_;
  int rank_;
  IntMatrix cartan_;
  IntVector symmetrizers_;
  std::vector<Root> positive_roots_;
};

RootSystem build_root_system(Family family, int rank);

/// s_i w = w - w_i alpha_i.
Weight reflect(const RootSystem& rs, int i, const Weight& w);

/// Reflects a root given with its coroot; both transform simultaneously.
Root reflect_root(const RootSystem& rs, int i, const Root& r);

/// Simple-root coordinates to fundamental-weight coordinates.
Weight root_to_weight(const RootSystem& rs, const RootCoords& r);

struct RootCoordinateResult {
  Vector<Rational> coords;
  bool integral;
  /// Valid only when integral.
  RootCoords integer_coords;
};

RootCoordinateResult weight_to_root_coords(const RootSystem& rs, const Weight& w);

/// <w, r^vee>
Int pair(const Weight& w, const Root& r);

/// The unique antidominant weight in the W-orbit of w; w_0 omega_i for w = omega_i.
Weight antidominant_image(const RootSystem& rs, const Weight& w);

/// Number of positive roots by classification, used as a cross-check.
std::size_t expected_positive_root_count(Family family, int rank);

}  // namespace exrel
