#include "aec/bounds.hpp"

#include <stdexcept>

namespace aec {

bool BoundReport::certificate_holds() const {
  if (rule == "theorem1")
    return lhs == m + static_cast<long>(d) * (m - 1) && rhs == static_cast<long>(d) * m &&
           lhs < rhs;
  if (rule == "remark")
    return lhs == m + static_cast<long>(d) * (m - 1) + x &&
           rhs == static_cast<long>(d) * m;
  return lhs == 0 && rhs == 0;
}

BoundReport counting_lower_bound(int d, int m) {
  if (d < 1 || m < 1)
    throw std::invalid_argument("counting_lower_bound: need d >= 1, m >= 1");
  if (d >= 2 * m)
    throw std::invalid_argument(
        "counting_lower_bound: no simple d-regular graph on 2m vertices with "
        "d >= 2m");
  BoundReport r;
  r.d = d;
  r.m = m;
  if (d == 1) {
    // A 1-regular graph is a perfect matching; one color suffices.
    r.bound = 1;
    r.rule = "degenerate";
    return r;
  }
  if (d > m) {
    // d+1 classes hold at most m + d(m-1) < dm edges, so one more color
    // is forced.
    r.bound = d + 2;
    r.rule = "theorem1";
    r.lhs = m + static_cast<long>(d) * (m - 1);
    r.rhs = static_cast<long>(d) * m;
    return r;
  }
  // With d colors every class would be a perfect matching and any two of
  // them would close a bichromatic cycle, so d+1 is always required.
  r.bound = d + 1;
  r.rule = "regular-baseline";
  return r;
}

std::pair<bool, BoundReport> robust_counting_check(int d, int m, int x) {
  if (d <= m)
    throw std::invalid_argument("robust_counting_check: requires d > m");
  if (x < 0) throw std::invalid_argument("robust_counting_check: x >= 0");
  BoundReport r;
  r.d = d;
  r.m = m;
  r.x = x;
  r.rule = "remark";
  r.lhs = m + static_cast<long>(d) * (m - 1) + x;
  r.rhs = static_cast<long>(d) * m;
  bool holds = r.lhs < r.rhs;
  r.bound = holds ? d + 2 : 0;
  if (!holds) r.note = "inequality fails; no d+2 guarantee after removing x edges";
  return {holds, r};
}

BoundReport theorem3_bound(int n) {
  if (n < 1) throw std::invalid_argument("theorem3_bound: n >= 1");
  BoundReport r;
  r.d = n;
  r.m = n;
  if (n == 1) {
    r.bound = 1;
    r.rule = "degenerate";
    return r;
  }
  if (n % 2 == 1) {
    r.bound = n + 2;
    r.rule = "theorem3";
    return r;
  }
  r.bound = n + 1;
  r.rule = "regular-baseline";
  r.note =
      "n even: n+2 colors are not always needed; a perfect 1-factorization "
      "of K_{n+2,n+2} yields an (n+2)-coloring of larger bipartite graphs "
      "but K_{n,n} itself can meet the n+1 baseline";
  return r;
}

BoundReport bound_for_graph(const Graph& g) {
  auto d = g.regular_degree();
  if (!d) throw std::invalid_argument("bound_for_graph: graph is not regular");
  if (*d == 0) {
    BoundReport r;
    r.rule = "degenerate";
    r.bound = 0;
    return r;
  }
  if (g.num_vertices() % 2 != 0)
    throw std::invalid_argument("bound_for_graph: odd order not covered");
  return counting_lower_bound(*d, g.num_vertices() / 2);
}

}  // namespace aec
