#include "exrel/oracle.hpp"

#include <doctest.h>

using namespace exrel;

TEST_CASE("initial seed") {
  const RootSystem a2(Family::A, 2);
  const IntMatrix bc = build_bc(a2, CoxeterWord(a2, {0, 1}));
  const auto seed = initial_seed(bc);
  CHECK(seed.b == bc);
  CHECK(seed.c == IntMatrix::Identity(2, 2));
  CHECK(seed.g == IntMatrix::Identity(2, 2));

  const RootSystem a1(Family::A, 1);
  const auto s1 = initial_seed(build_bc(a1, identity_word(a1)));
  CHECK(s1.b == IntMatrix::Zero(1, 1));
  CHECK(s1.c == IntMatrix::Identity(1, 1));
  CHECK(s1.g == IntMatrix::Identity(1, 1));
}

TEST_CASE("mutation") {
  const RootSystem a2(Family::A, 2);
  const IntMatrix bc = build_bc(a2, CoxeterWord(a2, {0, 1}));
  const auto seed = initial_seed(bc);
  const auto m = mutate_seed(seed, 0);
  IntMatrix b(2, 2);
  b << 0, -1, 1, 0;
  CHECK(m.b == b);
  CHECK(m.c.col(0) == make_vector({-1, 0}));
  CHECK(m.g.col(0) == make_vector({-1, 1}));

  const auto back = mutate_seed(m, 0);
  CHECK(back.b == seed.b);
  CHECK(back.c == seed.c);
  CHECK(back.g == seed.g);

  const RootSystem f4(Family::F, 4);
  auto s = initial_seed(build_bc(f4, identity_word(f4)));
  for (int k : {2, 0, 3, 1, 2, 3}) s = mutate_seed(s, k);
  CHECK_FALSE(check_seed(f4, s).has_value());
  for (int k = 0; k < 4; ++k) {
    const auto twice = mutate_seed(mutate_seed(s, k), k);
    CHECK(twice.b == s.b);
    CHECK(twice.c == s.c);
    CHECK(twice.g == s.g);
  }
}

TEST_CASE("exchange graph sizes") {
  const std::vector<std::tuple<Family, int, std::size_t>> cases{
      {Family::A, 1, 2}, {Family::A, 2, 5}, {Family::A, 3, 14}, {Family::B, 3, 20}, {Family::G, 2, 8}};
  for (const auto& [family, rank, count] : cases) {
    const RootSystem rs(family, rank);
    CAPTURE(rs.name());
    const auto graph = enumerate_exchange_graph(rs, build_bc(rs, identity_word(rs)), 1000);
    CHECK(graph.seeds.size() == count);
    CHECK(count == expected_cluster_count(family, rank));
    CHECK(graph.edges.size() == count * static_cast<std::size_t>(rank));
  }
  const RootSystem a3(Family::A, 3);
  try {
    enumerate_exchange_graph(a3, build_bc(a3, identity_word(a3)), 10);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LimitExceeded);
  }
}

TEST_CASE("oracle relations in A2") {
  const RootSystem a2(Family::A, 2);
  const auto word = CoxeterWord(a2, {0, 1});
  const IntMatrix bc = build_bc(a2, word);
  const auto graph = enumerate_exchange_graph(a2, bc, 100);
  const auto instances = oracle_relations(a2, graph);
  CHECK(instances.size() == 5);
  const auto rels = distinct_relations(instances);
  CHECK(rels.size() == 5);

  bool found = false;
  for (const auto& r : rels)
    if (r.lambda == make_vector({-1, 1}) && r.mu == make_vector({1, 0})) {
      found = true;
      CHECK(r.alpha.root == make_vector({1, 0}));
      CHECK(r.sum == make_vector({0, 1}));
      CHECK(r.uplus == make_vector({0, 0}));
    }
  CHECK(found);

  const PiSet pi(a2, word);
  const ClusterSet clusters(pi);
  const auto report = cross_verify(all_relations(clusters, bc), instances);
  CHECK(report.ok());
  CHECK(report.matched == 5);
  CHECK(report.mismatched == 0);
}

TEST_CASE("oracle relation in A1") {
  const RootSystem a1(Family::A, 1);
  const auto graph = enumerate_exchange_graph(a1, build_bc(a1, identity_word(a1)), 10);
  const auto rels = distinct_relations(oracle_relations(a1, graph));
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].lambda == make_vector({-1}));
  CHECK(rels[0].mu == make_vector({1}));
  CHECK(rels[0].alpha.root == make_vector({1}));
}

TEST_CASE("cross verification detects a perturbed relation") {
  const RootSystem b2(Family::B, 2);
  const IntMatrix bc = build_bc(b2, identity_word(b2));
  const PiSet pi(b2, identity_word(b2));
  const ClusterSet clusters(pi);
  const auto oracle = oracle_relations(b2, enumerate_exchange_graph(b2, bc, 100));
  auto formula = all_relations(clusters, bc);
  CHECK(cross_verify(formula, oracle).ok());
  for (const auto& root : b2.positive_roots())
    if (root.root != formula[0].relation.alpha.root) {
      formula[0].relation.alpha = root;
      break;
    }
  const auto report = cross_verify(formula, oracle);
  CHECK_FALSE(report.ok());
  CHECK(report.mismatched > 0);
}

TEST_CASE("formula agrees with mutation where the root is unique") {
  for (const auto& [family, rank] :
       std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::C, 4}, {Family::G, 2}}) {
    const RootSystem rs(family, rank);
    for (const auto& word : sample_words(rs, 6, 13)) {
      CAPTURE(word.to_string());
      const IntMatrix bc = build_bc(rs, word);
      const PiSet pi(rs, word);
      const ClusterSet clusters(pi);
      const auto graph = enumerate_exchange_graph(rs, bc, 2 * expected_cluster_count(family, rank));
      CHECK(graph.seeds.size() == clusters.size());
      CHECK(cross_verify(all_relations(clusters, bc), oracle_relations(rs, graph)).ok());
    }
  }
}
