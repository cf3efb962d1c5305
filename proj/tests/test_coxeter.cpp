#include "exrel/coxeter.hpp"

#include <doctest.h>

using namespace exrel;

TEST_CASE("coxeter words") {
  const RootSystem a3(Family::A, 3);
  const CoxeterWord w(a3, {2, 0, 1});
  CHECK(w.to_string() == "3,1,2");
  CHECK(w.position(2) == 0);
  CHECK(w.position(1) == 2);
  CHECK_THROWS_AS(CoxeterWord(a3, {0, 0, 1}), Error);
  CHECK_THROWS_AS(CoxeterWord(a3, {0, 1}), Error);
  CHECK_THROWS_AS(CoxeterWord(a3, {0, 1, 3}), Error);
  CHECK(all_words(a3).size() == 6);
  const auto sample = sample_words(a3, 5, 7);
  CHECK(sample.size() == 5);
  const auto again = sample_words(a3, 5, 7);
  for (std::size_t i = 0; i < sample.size(); ++i) CHECK(sample[i] == again[i]);
}

TEST_CASE("precedes") {
  const RootSystem a2(Family::A, 2);
  CHECK(precedes(a2, CoxeterWord(a2, {0, 1}), 0, 1));
  CHECK_FALSE(precedes(a2, CoxeterWord(a2, {1, 0}), 0, 1));

  const RootSystem a3(Family::A, 3);
  try {
    precedes(a3, identity_word(a3), 0, 2);
    FAIL("expected NotAdjacent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdjacent);
  }
}

TEST_CASE("exchange matrix B_c") {
  const RootSystem a2(Family::A, 2);
  IntMatrix expected(2, 2);
  expected << 0, 1, -1, 0;
  CHECK(build_bc(a2, CoxeterWord(a2, {0, 1})) == expected);
  CHECK(build_bc(a2, CoxeterWord(a2, {1, 0})) == -expected);
  const RootSystem a1(Family::A, 1);
  CHECK(build_bc(a1, identity_word(a1)) == IntMatrix::Zero(1, 1));

  // Skew-symmetrizable by the symmetrizers, for every word.
  const RootSystem b3(Family::B, 3);
  for (const auto& w : all_words(b3)) {
    const IntMatrix bc = build_bc(b3, w);
    const IntMatrix db = b3.symmetrizers().asDiagonal() * bc;
    CHECK(db == -db.transpose());
  }
}

TEST_CASE("coxeter element action") {
  const RootSystem a2(Family::A, 2);
  const CoxeterWord w(a2, {0, 1});
  const Weight w1 = make_vector({1, 0});
  CHECK(apply_coxeter(a2, w, w1, 1) == make_vector({-1, 1}));
  CHECK(apply_coxeter(a2, w, w1, 2) == make_vector({0, -1}));
  CHECK(apply_coxeter(a2, w, w1, 0) == w1);

  const RootSystem e6(Family::E, 6);
  const auto word = sample_words(e6, 1, 3).front();
  const Weight v = make_vector({1, -2, 0, 3, -1, 2});
  for (int m : {1, 2, 5}) CHECK(apply_coxeter(e6, word, apply_coxeter(e6, word, v, m), -m) == v);
  // The Coxeter number of E6 is 12.
  CHECK(apply_coxeter(e6, word, v, 12) == v);
}

TEST_CASE("coxeter heights") {
  const RootSystem a2(Family::A, 2);
  const CoxeterWord w(a2, {0, 1});
  CHECK(coxeter_height(a2, w, 0) == 2);
  CHECK(coxeter_height(a2, w, 1) == 1);
  const RootSystem a1(Family::A, 1);
  CHECK(coxeter_height(a1, identity_word(a1), 0) == 1);
}

TEST_CASE("kernel of B_c") {
  const RootSystem a2(Family::A, 2);
  CHECK(bc_kernel(build_bc(a2, identity_word(a2))).empty());

  const RootSystem a3(Family::A, 3);
  const IntMatrix bc = build_bc(a3, identity_word(a3));
  const auto basis = bc_kernel(bc);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0](0) != 0);
  CHECK(basis[0](1) == 0);
  CHECK(basis[0](2) != 0);
  CHECK((bc * basis[0]).isZero());

  const RootSystem d4(Family::D, 4);
  for (const auto& w : all_words(d4)) CHECK(bc_kernel(build_bc(d4, w)).size() == 2);
}

TEST_CASE("kernel structure report") {
  const RootSystem a3(Family::A, 3);
  const auto word = identity_word(a3);
  const auto report = kernel_structure_report(a3, word, build_bc(a3, word));
  CHECK(report.dimension == 1);
  CHECK(report.odd_rank_abc);
  CHECK(report.support_is_odd_nodes);
  CHECK(report.expected_components == 2);
  REQUIRE(report.basis_components.size() == 1);
  CHECK(report.basis_components[0] == 2);
  CHECK(report.chained_formula_in_kernel);

  const RootSystem a5(Family::A, 5);
  for (const auto& w : all_words(a5)) {
    const auto r = kernel_structure_report(a5, w, build_bc(a5, w));
    CHECK(r.support_is_odd_nodes);
    REQUIRE(r.basis_components.size() == 1);
    CHECK(r.basis_components[0] == 3);
  }

  // s_4 before s_3 before s_5 (1-based): the kernel is spanned by alpha_4 + alpha_5.
  const RootSystem d5(Family::D, 5);
  const CoxeterWord dw(d5, {3, 2, 4, 0, 1});
  const auto d = kernel_structure_report(d5, dw, build_bc(d5, dw));
  CHECK(d.type_d);
  CHECK(d.dimension == 1);
  CHECK(d.predicts_plus);
  CHECK(d.plus_in_kernel);
  CHECK_FALSE(d.minus_in_kernel);
}

TEST_CASE("kernel dimensions") {
  // 0 for even rank outside type D, 1 for odd rank, 2 for D of even rank.
  const std::vector<std::tuple<Family, int, int>> cases{
      {Family::A, 4, 0}, {Family::B, 3, 1}, {Family::C, 4, 0}, {Family::D, 5, 1},
      {Family::D, 6, 2}, {Family::E, 6, 0}, {Family::E, 7, 1}, {Family::F, 4, 0}, {Family::G, 2, 0}};
  for (const auto& [family, rank, dim] : cases) {
    const RootSystem rs(family, rank);
    CAPTURE(rs.name());
    for (const auto& w : sample_words(rs, 10, 5)) CHECK(static_cast<int>(bc_kernel(build_bc(rs, w)).size()) == dim);
  }
}

TEST_CASE("support components") {
  const RootSystem a3(Family::A, 3);
  CHECK(support_components(a3, make_vector({1, 0, 1})) == 2);
  CHECK(support_components(a3, make_vector({1, 1, 1})) == 1);
  CHECK(support_components(a3, make_vector({0, 0, 0})) == 0);
  const RootSystem d4(Family::D, 4);
  CHECK(support_components(d4, make_vector({1, 0, 1, 1})) == 3);
}
