#include "exrel/laurent.hpp"

#include <doctest.h>

using namespace exrel;

namespace {

LaurentPoly x(int i, int p = 1) { return LaurentPoly::x(2, i, p); }
LaurentPoly y(int j, int p = 1) { return LaurentPoly::y(2, j, p); }
LaurentPoly one() { return LaurentPoly::constant(2, 1); }

}  // namespace

TEST_CASE("laurent arithmetic") {
  CHECK(x(0) * x(0, -1) == one());
  CHECK((x(1) + y(0)) * one() == x(1) + y(0));
  CHECK((x(0) * x(1) + x(0)) + (LaurentPoly(2) - x(0)) == x(0) * x(1));
  CHECK((x(0) - x(0)).is_zero());
  CHECK((x(0) + one()).pow(2) == x(0) * x(0) + LaurentPoly::constant(2, 2) * x(0) + one());
  CHECK((x(0) + y(1)).drop_coefficients() == x(0) + one());
  CHECK((x(0, 2) + LaurentPoly::constant(2, -3) * y(1)).to_string() == "x1^2 - 3*y2^1");
}

TEST_CASE("exact division") {
  CHECK(exact_div(x(0) * x(1) + x(0), x(0)) == x(1) + one());
  CHECK(exact_div(x(1) + y(0), x(0)) == x(0, -1) * x(1) + y(0) * x(0, -1));
  CHECK(exact_div((x(1) + y(0)) * (x(0) + one()), x(1) + y(0)) == x(0) + one());
  try {
    exact_div(x(0) + one(), x(1) + one());
    FAIL("expected InexactDivision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InexactDivision);
  }
}

TEST_CASE("cluster variables of A2") {
  const RootSystem a2(Family::A, 2);
  const CoxeterWord word(a2, {0, 1});
  const IntMatrix bc = build_bc(a2, word);
  const auto graph = enumerate_exchange_graph(a2, bc, 100);
  const auto table = compute_variables(bc, graph);
  CHECK(table.size() == 5);
  REQUIRE(table.count(make_vector({-1, 1})));
  CHECK(table.at(make_vector({-1, 1})) == exact_div(x(1) + y(0), x(0)));
  CHECK(table.at(make_vector({1, 0})) == x(0));

  for (const auto& [g, p] : table) {
    const auto deg = homogeneous_degree(p, bc);
    REQUIRE(deg.has_value());
    CHECK(*deg == g);
  }
  CHECK_FALSE(homogeneous_degree(x(0) + x(1), bc).has_value());
}

TEST_CASE("cluster variable of A1") {
  const RootSystem a1(Family::A, 1);
  const IntMatrix bc = build_bc(a1, identity_word(a1));
  const auto table = compute_variables(bc, enumerate_exchange_graph(a1, bc, 10));
  const LaurentPoly expected =
      exact_div(LaurentPoly::constant(1, 1) + LaurentPoly::y(1, 0), LaurentPoly::x(1, 0));
  CHECK(table.at(make_vector({-1})) == expected);
}

TEST_CASE("symbolic verification") {
  const RootSystem a2(Family::A, 2);
  const CoxeterWord word(a2, {0, 1});
  const IntMatrix bc = build_bc(a2, word);
  const PiSet pi(a2, word);
  const ClusterSet clusters(pi);
  const auto table = compute_variables(bc, enumerate_exchange_graph(a2, bc, 100));

  const auto r1 = exchange_relation(clusters, bc, make_vector({1, 0}), make_vector({-1, 1}));
  CHECK(symbolic_verify(r1, table, clusters));
  const auto plain = compute_variables(bc, enumerate_exchange_graph(a2, bc, 100), 200, true);
  CHECK(coefficient_free_verify(r1, plain, clusters));
  const auto r2 = exchange_relation(clusters, bc, make_vector({0, -1}), make_vector({0, 1}));
  CHECK(symbolic_verify(r2, table, clusters));

  auto wrong = r1;
  wrong.alpha = a2.positive_roots()[0];  // alpha_2 instead of alpha_1
  CHECK_FALSE(symbolic_verify(wrong, table, clusters));

  for (const auto& inst : all_relations(clusters, bc)) CHECK(symbolic_verify(inst.relation, table, clusters));
}

TEST_CASE("symbolic verification over small types") {
  for (const auto& [family, rank] :
       std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::G, 2}, {Family::C, 3}}) {
    const RootSystem rs(family, rank);
    const auto word = identity_word(rs);
    const IntMatrix bc = build_bc(rs, word);
    const PiSet pi(rs, word);
    const ClusterSet clusters(pi);
    const auto table = compute_variables(bc, enumerate_exchange_graph(rs, bc, 200));
    CHECK(table.size() == pi.size());
    for (const auto& [g, p] : table) CHECK(homogeneous_degree(p, bc) == g);
    for (const auto& inst : all_relations(clusters, bc)) {
      CHECK(symbolic_verify(inst.relation, table, clusters));
      const auto deg = homogeneous_degree(cluster_monomial(table, clusters, inst.relation.sum), bc);
      CHECK(deg == inst.relation.sum);
    }
  }
}
