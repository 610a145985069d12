#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aec/bounds.hpp"
#include "aec/constructions.hpp"

using namespace aec;

TEST_CASE("counting_lower_bound") {
  auto k6 = counting_lower_bound(5, 3);
  CHECK(k6.bound == 7);
  CHECK(k6.rule == "theorem1");
  CHECK(k6.lhs == 13);
  CHECK(k6.rhs == 15);
  CHECK(k6.certificate_holds());

  auto k4 = counting_lower_bound(3, 2);
  CHECK(k4.bound == 5);
  CHECK(k4.lhs == 5);
  CHECK(k4.rhs == 6);

  auto k33 = counting_lower_bound(3, 3);  // d > m fails: regular baseline
  CHECK(k33.bound == 4);
  CHECK(k33.rule == "regular-baseline");

  auto matching = counting_lower_bound(1, 4);
  CHECK(matching.bound == 1);
  CHECK(matching.rule == "degenerate");

  CHECK_THROWS(counting_lower_bound(4, 2));  // d >= 2m infeasible
  CHECK_THROWS(counting_lower_bound(0, 3));
}

TEST_CASE("robust_counting_check") {
  auto [ok1, r1] = robust_counting_check(5, 3, 1);
  CHECK(ok1);
  CHECK(r1.lhs == 14);
  CHECK(r1.rhs == 15);
  CHECK(r1.bound == 7);
  CHECK(r1.certificate_holds());

  auto [ok2, r2] = robust_counting_check(5, 3, 2);
  CHECK(!ok2);  // boundary: 15 < 15 fails

  auto [ok3, r3] = robust_counting_check(6, 4, 1);  // cocktail party on 8
  CHECK(ok3);
  CHECK(r3.lhs == 23);
  CHECK(r3.rhs == 24);

  CHECK_THROWS(robust_counting_check(3, 3, 0));
  CHECK_THROWS(robust_counting_check(5, 3, -1));
}

TEST_CASE("remark inequality simplifies to m + x < d") {
  for (int d = 2; d <= 12; ++d)
    for (int m = 1; m < d; ++m)
      for (int x = 0; x <= 2 * d; ++x) {
        bool full = m + static_cast<long>(d) * (m - 1) + x <
                    static_cast<long>(d) * m;
        CHECK(robust_counting_check(d, m, x).first == full);
        CHECK(full == (m + x < d));
      }
}

TEST_CASE("robust check at x = 0 reduces to theorem 1") {
  for (int d = 2; d <= 10; ++d)
    for (int m = 1; m < d; ++m) CHECK(robust_counting_check(d, m, 0).first);
}

TEST_CASE("theorem3_bound") {
  CHECK(theorem3_bound(3).bound == 5);
  CHECK(theorem3_bound(3).rule == "theorem3");
  CHECK(theorem3_bound(1).bound == 1);
  CHECK(theorem3_bound(1).rule == "degenerate");
  auto even = theorem3_bound(4);
  CHECK(even.bound == 5);
  CHECK(even.rule == "regular-baseline");
  CHECK(!even.note.empty());  // annotated: n+2 not always needed for even n
  CHECK_THROWS(theorem3_bound(0));
}

TEST_CASE("bound_for_graph wrapper") {
  CHECK(bound_for_graph(complete_graph(6)).bound == 7);
  CHECK(bound_for_graph(complete_graph(4)).bound == 5);
  CHECK(bound_for_graph(complete_bipartite(3).first).bound == 4);
  CHECK(bound_for_graph(cocktail_party_graph(8)).bound == 8);

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_THROWS(bound_for_graph(path));          // not regular
  CHECK_THROWS(bound_for_graph(cycle_graph(5)));  // odd order
}
