#ifndef AEC_BOUNDS_HPP
#define AEC_BOUNDS_HPP

#include <string>
#include <utility>

#include "aec/graph.hpp"

namespace aec {

/// A certified lower bound on the palette size needed to acyclically edge
/// color a graph with the stated parameters. `lhs < rhs` is the counting
/// inequality instantiated when `rule` is "theorem1" or "remark"; other
/// rules carry no inequality and store lhs = rhs = 0.
struct BoundReport {
  int bound = 0;
  std::string rule;  // "theorem1", "remark", "regular-baseline", "degenerate", "theorem3"
  long lhs = 0;
  long rhs = 0;
  int d = 0;  // degree
  int m = 0;  // half the vertex count (side size for theorem3)
  int x = 0;  // removed edges (remark only)
  std::string note;

  /// Re-evaluates the stored certificate from its parameters.
  bool certificate_holds() const;
};

/// Lower bound for a d-regular graph on 2m vertices: d+2 when d > m via the
/// color-class counting inequality m + d(m-1) < dm, otherwise the regular
/// baseline d+1 (d=1 degenerates to exactly 1). Requires 1 <= d < 2m.
BoundReport counting_lower_bound(int d, int m);

/// True iff m + d(m-1) + x < dm, i.e. a d-regular graph on 2m vertices minus
/// any x edges still needs d+2 colors. Requires d > m, x >= 0.
std::pair<bool, BoundReport> robust_counting_check(int d, int m, int x);

/// Lower bound for K_{n,n}: n+2 when n is odd (n >= 3), the regular baseline
/// n+1 when n is even, and 1 for the single-edge case n = 1. The even case
/// is annotated: the odd-n bound provably does not extend to even n.
BoundReport theorem3_bound(int n);

/// Extracts (d, m) from a regular graph of even order and applies
/// counting_lower_bound. Errors if g is not regular or has odd order.
BoundReport bound_for_graph(const Graph& g);

}  // namespace aec

#endif
