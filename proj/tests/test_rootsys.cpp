#include "exrel/rootsys.hpp"
#include "exrel/linalg.hpp"

#include <doctest.h>

using namespace exrel;

namespace {

Root find_root(const RootSystem& rs, std::initializer_list<Int> coords) {
  const auto idx = rs.find_positive_root(make_vector(coords));
  REQUIRE(idx.has_value());
  return rs.positive_roots()[*idx];
}

}  // namespace

TEST_CASE("cartan matrices") {
  const RootSystem a2(Family::A, 2);
  IntMatrix expected(2, 2);
  expected << 2, -1, -1, 2;
  CHECK(a2.cartan() == expected);
  CHECK(a2.symmetrizers() == make_vector({1, 1}));

  const RootSystem a1(Family::A, 1);
  CHECK(a1.cartan() == IntMatrix::Constant(1, 1, 2));
  CHECK(a1.symmetrizers() == make_vector({1}));

  const RootSystem g2(Family::G, 2);
  CHECK(g2.cartan()(0, 1) * g2.cartan()(1, 0) == 3);
}

TEST_CASE("symmetrized cartan matrix is symmetric positive definite") {
  const std::vector<std::pair<Family, int>> types{{Family::A, 4}, {Family::B, 3}, {Family::C, 4}, {Family::D, 5},
                                                  {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4},
                                                  {Family::G, 2}};
  for (const auto& [family, rank] : types) {
    const RootSystem rs(family, rank);
    CAPTURE(rs.name());
    const IntMatrix sym = rs.symmetrizers().asDiagonal() * rs.cartan();
    CHECK(sym == sym.transpose());
    for (int k = 1; k <= rank; ++k) CHECK(determinant(sym.topLeftCorner(k, k)) > 0);
  }
}

TEST_CASE("unsupported types") {
  CHECK_THROWS_AS(RootSystem(Family::A, 0), Error);
  CHECK_THROWS_AS(RootSystem(Family::B, 1), Error);
  CHECK_THROWS_AS(RootSystem(Family::D, 3), Error);
  CHECK_THROWS_AS(RootSystem(Family::E, 5), Error);
  CHECK_THROWS_AS(RootSystem(Family::E, 9), Error);
  CHECK_THROWS_AS(RootSystem(Family::F, 3), Error);
  CHECK_THROWS_AS(RootSystem(Family::G, 3), Error);
  CHECK_THROWS_AS(parse_family("X"), Error);
  try {
    RootSystem(Family::D, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedType);
  }
}

TEST_CASE("simple reflections on weights") {
  const RootSystem a2(Family::A, 2);
  const Weight w1 = make_vector({1, 0});
  CHECK(reflect(a2, 0, w1) == make_vector({-1, 1}));
  CHECK(reflect(a2, 1, w1) == w1);
  CHECK_THROWS_AS(reflect(a2, 2, w1), Error);

  const RootSystem f4(Family::F, 4);
  const Weight w = make_vector({3, -1, 2, -5});
  for (int i = 0; i < 4; ++i) CHECK(reflect(f4, i, reflect(f4, i, w)) == w);
}

TEST_CASE("weight to root coordinates") {
  const RootSystem a2(Family::A, 2);
  auto r = weight_to_root_coords(a2, make_vector({1, -2}));
  CHECK(r.integral);
  CHECK(r.integer_coords == make_vector({0, -1}));

  r = weight_to_root_coords(a2, make_vector({2, -1}));
  CHECK(r.integral);
  CHECK(r.integer_coords == make_vector({1, 0}));

  r = weight_to_root_coords(a2, make_vector({1, 0}));
  CHECK_FALSE(r.integral);
  CHECK(r.coords(0) == Rational(2, 3));
  CHECK(r.coords(1) == Rational(1, 3));
}

TEST_CASE("positive roots") {
  const RootSystem a2(Family::A, 2);
  REQUIRE(a2.positive_roots().size() == 3);
  CHECK(a2.positive_roots()[0].root == make_vector({0, 1}));
  CHECK(a2.positive_roots()[1].root == make_vector({1, 0}));
  CHECK(a2.positive_roots()[2].root == make_vector({1, 1}));

  CHECK(RootSystem(Family::A, 1).positive_roots().size() == 1);
  CHECK(RootSystem(Family::B, 2).positive_roots().size() == 4);
  CHECK(RootSystem(Family::G, 2).positive_roots().size() == 6);

  const std::vector<std::pair<Family, int>> types{{Family::A, 5}, {Family::B, 4}, {Family::C, 5}, {Family::D, 6},
                                                  {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}};
  for (const auto& [family, rank] : types) {
    const RootSystem rs(family, rank);
    CAPTURE(rs.name());
    CHECK(rs.positive_roots().size() == expected_positive_root_count(family, rank));
  }
}

TEST_CASE("roots and coroots are consistent") {
  for (const auto& [family, rank] :
       std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::C, 3}, {Family::F, 4}, {Family::G, 2}}) {
    const RootSystem rs(family, rank);
    CAPTURE(rs.name());
    for (const auto& r : rs.positive_roots()) {
      CHECK((r.root.array() >= 0).all());
      // <alpha, alpha^vee> = 2
      CHECK(pair(root_to_weight(rs, r.root), r) == 2);
      for (int i = 0; i < rank; ++i) {
        const Root s = reflect_root(rs, i, r);
        const bool positive = (s.root.array() >= 0).all();
        if (positive) CHECK(rs.find_positive_root(s.root).has_value());
        else CHECK(s.root == -unit_vector(rank, i) * 1);
      }
    }
  }
}

TEST_CASE("pairing") {
  const RootSystem a2(Family::A, 2);
  CHECK(pair(make_vector({1, 0}), find_root(a2, {1, 0})) == 1);
  CHECK(pair(make_vector({-1, 1}), find_root(a2, {1, 0})) == -1);
  CHECK(pair(make_vector({0, 1}), find_root(a2, {1, 1})) == 1);
}

TEST_CASE("antidominant image") {
  const RootSystem a2(Family::A, 2);
  CHECK(antidominant_image(a2, make_vector({1, 0})) == make_vector({0, -1}));
  CHECK(antidominant_image(a2, make_vector({0, 0})) == make_vector({0, 0}));
  const RootSystem a1(Family::A, 1);
  CHECK(antidominant_image(a1, make_vector({1})) == make_vector({-1}));

  // w_0 = -1 in type E7, so w_0 omega_i = -omega_i.
  const RootSystem e7(Family::E, 7);
  for (int i = 0; i < 7; ++i) CHECK(antidominant_image(e7, unit_vector(7, i)) == -unit_vector(7, i));
}
