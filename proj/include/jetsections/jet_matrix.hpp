#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetsections/polynomial.hpp"
#include "jetsections/sequences.hpp"

namespace jetsections {

/// One nonzero matrix cell: coeff * var.
struct JetEntry {
  Scalar coeff;
  JetVar var;
  friend bool operator==(const JetEntry&, const JetEntry&) = default;
};

using JetCell = std::optional<JetEntry>;

enum class MatrixKind { Custom, Delta0, Homogeneous, DeltaJ };

/// Square matrix whose cells are zero or a scalar multiple of one jet variable.
class JetMatrix {
 public:
  JetMatrix(VarSpace space, std::vector<std::vector<JetCell>> rows);

  const VarSpace& space() const { return space_; }
  int size() const { return n_; }
  const JetCell& at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row * n_ + col)];
  }

  MatrixKind kind() const { return kind_; }
  const std::optional<TupleBNPlus>& tuple() const { return tuple_; }
  int chart() const { return chart_; }
  void set_provenance(MatrixKind kind, TupleBNPlus t, int chart = -1);

  /// Cell (row, col) as a polynomial of the matrix space.
  Polynomial entry_polynomial(int row, int col) const;

  friend bool operator==(const JetMatrix& a, const JetMatrix& b) {
    return a.space_ == b.space_ && a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  VarSpace space_;
  int n_ = 0;
  std::vector<JetCell> cells_;
  MatrixKind kind_ = MatrixKind::Custom;
  std::optional<TupleBNPlus> tuple_;
  int chart_ = -1;
};

/// Square matrix of arbitrary polynomials over one space.
class PolyMatrix {
 public:
  PolyMatrix(VarSpace space, int n);
  const VarSpace& space() const { return space_; }
  int size() const { return n_; }
  const Polynomial& at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row * n_ + col)];
  }
  void set(int row, int col, Polynomial p);

 private:
  VarSpace space_;
  int n_ = 0;
  std::vector<Polynomial> cells_;
};

/// The column of type alpha in coordinate `coord`, cut to `length` rows:
/// row l (1-based) holds C(alpha, l - 1) * chi^{(alpha - l + 1)}, empty once
/// the derivative order would be negative.
std::vector<JetCell> column(int alpha, int coord, int length);

/// Affine matrix over chart 0 with columns C_{alpha^j_i}(x_{0j}) for
/// j = N, ..., 1 and i increasing; size s_1.
JetMatrix build_delta0(const TupleBNPlus& t);

/// Homogeneous matrix of size M + 1: the X_N, ..., X_1 columns followed by
/// C_{s_1}(X_0), ..., C_M(X_0).
JetMatrix build_H(const TupleBNPlus& t);

/// build_H with every row and column holding X_j^{(0)} removed, and X_i read
/// as the chart-j coordinate X_i / X_j (X_0 becomes x_{jj}).
JetMatrix build_delta_j(const TupleBNPlus& t, int chart);

/// Exact determinant by Laplace expansion along the last row, memoized on the
/// set of columns still in play. The 0x0 determinant is 1.
Polynomial determinant(const JetMatrix& m);
Polynomial determinant(const PolyMatrix& m);

/// Checks the minimal-diagonal hypotheses (nonzero diagonal; every nonzero
/// cell is strictly smaller than each nonzero cell weakly above and to its
/// right) and returns the diagonal monomial with its coefficient, which is
/// then the smallest monomial of the determinant. Throws InvalidArgument
/// naming the offending cells otherwise.
std::pair<Monomial, Scalar> minth_check(const JetMatrix& m);

/// Aligned text rendering, one row per line.
std::string render_matrix(const JetMatrix& m);

}  // namespace jetsections
