#ifndef AEC_PERMUTATION_HPP
#define AEC_PERMUTATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aec {

/// Bijection on {0..n-1}, stored as an image table. A permutation pi encodes
/// the perfect matching {(a_j, b_{pi(j)})} of the complete bipartite graph
/// with side size n (A-side indices 0..n-1, B-side indices n..2n-1 when the
/// matching is materialized as a graph).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijection

  static Permutation identity(int n);
  static Permutation shift(int n, int amount);  // j -> (j + amount) mod n

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  /// Multiset of cycle lengths, sorted ascending; fixed points count as
  /// length-1 cycles. Lengths sum to size().
  std::vector<int> cycle_type() const;

  /// (-1) raised to the number of even-length cycles.
  int sign() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Applies sigma first, then pi.
Permutation compose(const Permutation& pi, const Permutation& sigma);

/// Parity of the inversion count; an independent route to sign().
int sign_by_inversions(const Permutation& pi);

/// True when the two matchings share no edge: pi[i] != sigma[i] for all i.
bool disjoint(const Permutation& pi, const Permutation& sigma);

/// True iff the union of the two matchings is one Hamiltonian cycle of
/// K_{n,n}, i.e. inverse(pi) * sigma is a single n-cycle.
/// Rejects non-disjoint inputs.
bool union_is_hamiltonian(const Permutation& pi, const Permutation& sigma);

/// Ordered list of pairwise-disjoint perfect matchings of K_{n,n}.
struct PerfectMatchingSet {
  int n = 0;
  std::vector<Permutation> matchings;

  /// Indices of the first pair sharing an edge, or nullopt.
  std::optional<std::pair<int, int>> find_overlap() const;
  bool pairwise_disjoint() const { return !find_overlap().has_value(); }
};

struct Lemma1Verdict {
  enum class Kind {
    NonHamiltonianPair,  // some pair's union is not a Hamiltonian cycle
    SignContradiction,   // all pairs Hamiltonian; signs cannot be consistent
  };
  Kind kind;
  int i = -1, j = -1;               // failing pair (NonHamiltonianPair)
  std::vector<int> cycle_type_ij;   // cycle type of inverse(pi_i) * pi_j
  std::string explanation;
};

/// Certifies why a set of >= 3 disjoint matchings of K_{n,n}, n even, cannot
/// have all pairwise unions Hamiltonian: either a concrete non-Hamiltonian
/// pair, or the pairwise-sign contradiction. Rejects odd n, fewer than 3
/// matchings, and non-disjoint sets.
Lemma1Verdict lemma1_sign_check(const PerfectMatchingSet& ms);

/// Brute-force search: fixes pi_1 = identity and enumerates all (pi_2, pi_3)
/// pairwise disjoint from it and from each other. Returns true iff no triple
/// has all three pairwise unions Hamiltonian. Requires n even, n <= 6.
bool lemma1_exhaustive_oracle(int n);

/// One-line space-separated image list.
Permutation parse_permutation(const std::string& text);
std::string serialize_permutation(const Permutation& pi);

}  // namespace aec

#endif
