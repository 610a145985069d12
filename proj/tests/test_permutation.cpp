#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aec/constructions.hpp"
#include "aec/graph.hpp"
#include "aec/permutation.hpp"

using namespace aec;

TEST_CASE("validation") {
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation({0, 3}));
  CHECK(Permutation::identity(4) == Permutation({0, 1, 2, 3}));
}

TEST_CASE("compose and inverse") {
  Permutation sigma({2, 0, 1});
  CHECK(compose(Permutation::identity(3), sigma) == sigma);
  CHECK(compose(sigma, Permutation::identity(3)) == sigma);

  // inverse of 0->1->2->0 is 0->2->1->0
  Permutation three_cycle({1, 2, 0});
  CHECK(three_cycle.inverse() == Permutation({2, 0, 1}));

  CHECK_THROWS(compose(sigma, Permutation::identity(4)));

  // composition convention: apply the right argument first
  Permutation tau({1, 0, 2});
  CHECK(compose(tau, three_cycle)[0] == tau[three_cycle[0]]);
}

TEST_CASE("group axioms, property-tested") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    Permutation pi(a);
    CHECK(compose(pi, pi.inverse()) == Permutation::identity(n));
    CHECK(compose(pi.inverse(), pi) == Permutation::identity(n));
  }
}

TEST_CASE("cycle type") {
  CHECK(Permutation::identity(5).cycle_type() ==
        std::vector<int>{1, 1, 1, 1, 1});
  CHECK(Permutation::shift(5, 1).cycle_type() == std::vector<int>{5});
  CHECK(Permutation({1, 0, 2, 3}).cycle_type() == std::vector<int>{1, 1, 2});
}

TEST_CASE("sign") {
  CHECK(Permutation::identity(5).sign() == 1);
  CHECK(Permutation({1, 0, 2, 3}).sign() == -1);
  // a single even-length cycle has sign -1
  CHECK(Permutation::shift(4, 1).sign() == -1);
  CHECK(Permutation::shift(6, 1).sign() == -1);
}

TEST_CASE("sign equals inversion parity, full enumeration n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    do {
      Permutation pi(images);
      CHECK(pi.sign() == sign_by_inversions(pi));
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST_CASE("sign is multiplicative") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = b[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation pi(a), sigma(b);
    CHECK(compose(pi, sigma).sign() == pi.sign() * sigma.sign());
  }
}

TEST_CASE("union_is_hamiltonian") {
  CHECK(union_is_hamiltonian(Permutation::identity(2), Permutation::shift(2, 1)));
  CHECK(union_is_hamiltonian(Permutation::identity(3), Permutation::shift(3, 1)));
  // identity vs (01)(23): relative cycle type {2,2}
  CHECK(!union_is_hamiltonian(Permutation::identity(4),
                              Permutation({1, 0, 3, 2})));
  CHECK_THROWS(union_is_hamiltonian(Permutation::identity(3),
                                    Permutation({0, 2, 1})));
}

TEST_CASE("union_is_hamiltonian agrees with the materialized union graph") {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 200) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = b[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation pi(a), sigma(b);
    if (!disjoint(pi, sigma)) continue;
    ++checked;
    Graph u = matching_graph(pi);
    for (int i = 0; i < n; ++i) u.add_edge(i, n + sigma[i]);
    bool single_cycle = u.regular_degree() == 2 && u.is_connected();
    CHECK(union_is_hamiltonian(pi, sigma) == single_cycle);
  }
}

TEST_CASE("lemma1_sign_check preconditions") {
  PerfectMatchingSet odd;
  odd.n = 3;
  for (int i = 0; i < 3; ++i) odd.matchings.push_back(Permutation::shift(3, i));
  CHECK_THROWS(lemma1_sign_check(odd));  // odd n

  PerfectMatchingSet two;
  two.n = 2;
  two.matchings = {Permutation::identity(2), Permutation::shift(2, 1)};
  CHECK_THROWS(lemma1_sign_check(two));  // fewer than three matchings

  PerfectMatchingSet overlapping;
  overlapping.n = 4;
  overlapping.matchings = {Permutation::identity(4), Permutation::identity(4),
                           Permutation::shift(4, 1)};
  CHECK_THROWS(lemma1_sign_check(overlapping));
}

TEST_CASE("lemma1_sign_check on the shift triple, n = 4") {
  PerfectMatchingSet ms;
  ms.n = 4;
  for (int i = 0; i < 3; ++i) ms.matchings.push_back(Permutation::shift(4, i));
  auto v = lemma1_sign_check(ms);
  CHECK(v.kind == Lemma1Verdict::Kind::NonHamiltonianPair);
  // relative shift 2 on Z_4 splits into two 2-cycles
  CHECK(v.i == 0);
  CHECK(v.j == 2);
  CHECK(v.cycle_type_ij == std::vector<int>{2, 2});
  CHECK(!v.explanation.empty());
}

TEST_CASE("exhaustive oracle") {
  CHECK(lemma1_exhaustive_oracle(2));
  CHECK(lemma1_exhaustive_oracle(4));
  CHECK_THROWS(lemma1_exhaustive_oracle(3));
  CHECK_THROWS(lemma1_exhaustive_oracle(8));
}

TEST_CASE("serialization") {
  Permutation pi({2, 0, 1});
  CHECK(serialize_permutation(pi) == "2 0 1");
  CHECK(parse_permutation("2 0 1") == pi);
  CHECK_THROWS(parse_permutation(""));
  CHECK_THROWS(parse_permutation("0 0 1"));
}
