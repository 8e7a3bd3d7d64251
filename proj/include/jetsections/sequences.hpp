#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "jetsections/jet.hpp"

namespace jetsections {

/// Weakly increasing finite sequence of naturals (possibly empty).
class SeqA {
 public:
  SeqA() = default;
  explicit SeqA(std::vector<int> entries);
  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  friend auto operator<=>(const SeqA&, const SeqA&) = default;

 private:
  std::vector<int> entries_;
};

/// Strictly increasing finite sequence of naturals (possibly empty).
class SeqB {
 public:
  SeqB() = default;
  explicit SeqB(std::vector<int> entries);
  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  friend auto operator<=>(const SeqB&, const SeqB&) = default;

 private:
  std::vector<int> entries_;
};

/// An N-tuple of weakly increasing sequences; block j (1-based) describes the
/// derivative orders of coordinate j in a monomial.
class TupleAN {
 public:
  explicit TupleAN(std::vector<SeqA> blocks);
  int dimension() const { return static_cast<int>(blocks_.size()); }
  const SeqA& block(int j) const { return blocks_.at(j - 1); }
  const std::vector<SeqA>& blocks() const { return blocks_; }
  friend auto operator<=>(const TupleAN&, const TupleAN&) = default;

 private:
  std::vector<SeqA> blocks_;
};

/// An N-tuple of strictly increasing sequences obeying the staircase: the
/// first entry of block j is at least n_{j+1} + ... + n_N.
///
/// Blocks are stored j = 1..N. The matrices consume them in the order
/// j = N, ..., 1 from left to right.
class TupleBNPlus {
 public:
  explicit TupleBNPlus(std::vector<SeqB> blocks);
  static TupleBNPlus empty(int n);

  int dimension() const { return static_cast<int>(blocks_.size()); }
  const SeqB& block(int j) const { return blocks_.at(j - 1); }
  const std::vector<SeqB>& blocks() const { return blocks_; }
  int length(int j) const { return static_cast<int>(block(j).size()); }
  /// s_j = n_j + ... + n_N for 1 <= j <= N + 1 (s_{N+1} = 0).
  int partial_sum(int j) const;
  /// s_1, the size of the affine determinant matrix.
  int total_length() const { return partial_sum(1); }
  /// Largest entry over all blocks; -1 for the all-empty tuple.
  int max_entry() const;
  bool all_empty() const { return total_length() == 0; }

  std::string to_string() const;
  friend auto operator<=>(const TupleBNPlus&, const TupleBNPlus&) = default;

 private:
  std::vector<SeqB> blocks_;
};

SeqA tau(const SeqB& b);
SeqB tau_inv(const SeqA& a);
TupleAN tau_plus(const TupleBNPlus& t);
TupleBNPlus tau_plus_inv(const TupleAN& a);

/// Sum of (a_i + 1).
int weight(const SeqA& a);
/// weight(tau(b)).
int weight(const SeqB& b);
int weight(const TupleAN& a);
/// weight(tau_plus(t)).
int weight(const TupleBNPlus& t);

/// All tuples of weight p, ordered by total length, then by the entries read
/// in matrix column order, then by the block lengths.
std::vector<TupleBNPlus> enumerate_weight(int n, int p);

/// All tuples with every entry <= d - 1, ordered lexicographically by their
/// decoded words. There are exactly (n + 1)^d of them.
std::vector<TupleBNPlus> enumerate_degree(int n, int d);

/// Word in {0..n}^d -> tuple. Block n collects the positions holding n; those
/// positions are removed, the survivors are relabelled consecutively starting
/// from the number removed so far, and the process repeats for n - 1, ..., 1.
TupleBNPlus encode(const std::vector<int>& word, int n);
/// Inverse of encode; requires max_entry(t) <= d - 1.
std::vector<int> decode(const TupleBNPlus& t, int d);

/// x_0^{(a)}: block j contributes x_{0j}^{(a^j_1)} ... x_{0j}^{(a^j_n)}.
Monomial monomial_of(const TupleAN& a);
/// Inverse of monomial_of for monomials in coordinates 1..n.
TupleAN tuple_of(const Monomial& m, int n);

}  // namespace jetsections
