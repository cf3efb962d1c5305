#include "exrel/rootsys.hpp"

#include "exrel/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace exrel {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw Error(ErrorKind::UnsupportedType, "unknown family '" + s + "'");
}

namespace {

bool rank_supported(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B:
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

void link(IntMatrix& a, int i, int j, Int aij = -1, Int aji = -1) {
  a(i, j) = aij;
  a(j, i) = aji;
}

IntMatrix cartan_matrix(Family f, int n) {
  IntMatrix a = 2 * IntMatrix::Identity(n, n);
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case Family::E:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, 2, n - 1);
      break;
    case Family::F:
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      break;
    case Family::G:
      link(a, 0, 1, -3, -1);
      break;
  }
  return a;
}

IntVector symmetrizers_for(Family f, int n) {
  IntVector d = IntVector::Ones(n);
  switch (f) {
    case Family::B: d.setConstant(2); d(n - 1) = 1; break;
    case Family::C: d(n - 1) = 2; break;
    case Family::F: d << 2, 2, 1, 1; break;
    case Family::G: d << 1, 3; break;
    default: break;
  }
  return d;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  if (!rank_supported(family, rank))
    throw Error(ErrorKind::UnsupportedType,
                std::string(1, family_letter(family)) + std::to_string(rank) + " is not a finite type");
  cartan_ = cartan_matrix(family, rank);
  symmetrizers_ = symmetrizers_for(family, rank);

  std::map<IntVector, IntVector, VectorLess> found;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root simple{unit_vector(rank, i), unit_vector(rank, i)};
    found.emplace(simple.root, simple.coroot);
    queue.push_back(simple);
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Root s = reflect_root(*this, i, r);
      if ((s.root.array() < 0).any()) continue;
      if (found.emplace(s.root, s.coroot).second) queue.push_back(std::move(s));
    }
  }
  positive_roots_.reserve(found.size());
  for (auto& [root, coroot] : found) positive_roots_.push_back({root, coroot});
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

std::optional<std::size_t> RootSystem::find_positive_root(const RootCoords& r) const {
  auto it = std::lower_bound(positive_roots_.begin(), positive_roots_.end(), r,
                             [](const Root& a, const RootCoords& b) { return VectorLess{}(a.root, b); });
  if (it == positive_roots_.end() || it->root != r) return std::nullopt;
  return static_cast<std::size_t>(it - positive_roots_.begin());
}

RootSystem build_root_system(Family family, int rank) { return RootSystem(family, rank); }

Weight reflect(const RootSystem& rs, int i, const Weight& w) {
  if (i < 0 || i >= rs.rank()) throw Error(ErrorKind::IndexOutOfRange, "reflection index " + std::to_string(i));
  return w - w(i) * rs.cartan().col(i);
}

Root reflect_root(const RootSystem& rs, int i, const Root& r) {
  if (i < 0 || i >= rs.rank()) throw Error(ErrorKind::IndexOutOfRange, "reflection index " + std::to_string(i));
  const auto& a = rs.cartan();
  // <alpha, alpha_i^vee> and <alpha_i, beta^vee>
  const Int root_pairing = a.row(i).dot(r.root);
  const Int coroot_pairing = a.col(i).dot(r.coroot);
  Root out = r;
  out.root(i) -= root_pairing;
  out.coroot(i) -= coroot_pairing;
  return out;
}

Weight root_to_weight(const RootSystem& rs, const RootCoords& r) { return rs.cartan() * r; }

RootCoordinateResult weight_to_root_coords(const RootSystem& rs, const Weight& w) {
  auto x = solve_exact(rs.cartan(), w);
  if (!x) throw Error(ErrorKind::InternalInvariantViolation, "singular Cartan matrix");
  RootCoordinateResult out{*x, true, IntVector::Zero(w.size())};
  for (Eigen::Index i = 0; i < x->size(); ++i) {
    if (boost::multiprecision::denominator((*x)(i)) != 1) {
      out.integral = false;
      continue;
    }
    out.integer_coords(i) = static_cast<Int>(boost::multiprecision::numerator((*x)(i)));
  }
  return out;
}

Int pair(const Weight& w, const Root& r) { return w.dot(r.coroot); }

Weight antidominant_image(const RootSystem& rs, const Weight& w) {
  Weight v = w;
  for (;;) {
    int j = 0;
    while (j < rs.rank() && v(j) <= 0) ++j;
    if (j == rs.rank()) return v;
    v = reflect(rs, j, v);
  }
}

std::size_t expected_positive_root_count(Family family, int n) {
  const auto m = static_cast<std::size_t>(n);
  switch (family) {
    case Family::A: return m * (m + 1) / 2;
    case Family::B:
    case Family::C: return m * m;
    case Family::D: return m * (m - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace exrel
