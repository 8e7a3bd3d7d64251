#include "jetsections/jet_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "jetsections/error.hpp"

namespace jetsections {

JetMatrix::JetMatrix(VarSpace space, std::vector<std::vector<JetCell>> rows)
    : space_(space), n_(static_cast<int>(rows.size())) {
  cells_.reserve(static_cast<std::size_t>(n_ * n_));
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw InvalidArgument("JetMatrix: not square");
    for (auto& cell : row) {
      if (cell) {
        if (cell->coeff.is_zero()) {
          cell.reset();
        } else if (!space_.valid_coord(cell->var.coord) || cell->var.order < 0) {
          throw SpaceMismatch("JetMatrix: variable outside " + space_.describe());
        }
      }
      cells_.push_back(std::move(cell));
    }
  }
}

void JetMatrix::set_provenance(MatrixKind kind, TupleBNPlus t, int chart) {
  kind_ = kind;
  tuple_ = std::move(t);
  chart_ = chart;
}

Polynomial JetMatrix::entry_polynomial(int row, int col) const {
  const JetCell& c = at(row, col);
  if (!c) return Polynomial(space_);
  return Polynomial::variable(space_, c->var, c->coeff);
}

PolyMatrix::PolyMatrix(VarSpace space, int n)
    : space_(space), n_(n), cells_(static_cast<std::size_t>(n * n), Polynomial(space)) {}

void PolyMatrix::set(int row, int col, Polynomial p) {
  require_same_space(space_, p.space(), "PolyMatrix::set");
  cells_[static_cast<std::size_t>(row * n_ + col)] = std::move(p);
}

std::vector<JetCell> column(int alpha, int coord, int length) {
  std::vector<JetCell> col(static_cast<std::size_t>(length));
  for (int l = 1; l <= length; ++l) {
    const int order = alpha - l + 1;
    if (order < 0) continue;
    col[static_cast<std::size_t>(l - 1)] = JetEntry{binom(alpha, l - 1), {coord, order}};
  }
  return col;
}

namespace {

struct ColumnSpec {
  int alpha;
  int coord;  // homogeneous index: 1..N, or 0 for X_0
};

std::vector<ColumnSpec> homogeneous_columns(const TupleBNPlus& t) {
  std::vector<ColumnSpec> cols;
  for (int j = t.dimension(); j >= 1; --j) {
    for (int a : t.block(j).entries()) cols.push_back({a, j});
  }
  for (int a = t.total_length(); a <= t.max_entry(); ++a) cols.push_back({a, 0});
  return cols;
}

JetMatrix assemble(VarSpace space, const std::vector<ColumnSpec>& cols, int length,
                   const std::function<int(int)>& coord_map) {
  const int n = static_cast<int>(cols.size());
  if (n != length) throw VerificationError("matrix assembly: non-square shape");
  std::vector<std::vector<JetCell>> rows(static_cast<std::size_t>(n),
                                         std::vector<JetCell>(static_cast<std::size_t>(n)));
  for (int c = 0; c < n; ++c) {
    auto col = column(cols[static_cast<std::size_t>(c)].alpha,
                      coord_map(cols[static_cast<std::size_t>(c)].coord), length);
    for (int r = 0; r < n; ++r) {
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          std::move(col[static_cast<std::size_t>(r)]);
    }
  }
  return JetMatrix(space, std::move(rows));
}

}  // namespace

JetMatrix build_delta0(const TupleBNPlus& t) {
  std::vector<ColumnSpec> cols;
  for (int j = t.dimension(); j >= 1; --j) {
    for (int a : t.block(j).entries()) cols.push_back({a, j});
  }
  JetMatrix m = assemble(VarSpace::affine(t.dimension(), 0), cols, t.total_length(),
                         [](int c) { return c; });
  for (int i = 0; i < m.size(); ++i) {
    if (!m.at(i, i)) {
      throw VerificationError("build_delta0: zero diagonal entry at " + std::to_string(i) +
                              " for " + t.to_string());
    }
  }
  m.set_provenance(MatrixKind::Delta0, t);
  return m;
}

JetMatrix build_H(const TupleBNPlus& t) {
  JetMatrix m = assemble(VarSpace::homogeneous(t.dimension()), homogeneous_columns(t),
                         t.max_entry() + 1, [](int c) { return c; });
  m.set_provenance(MatrixKind::Homogeneous, t);
  return m;
}

JetMatrix build_delta_j(const TupleBNPlus& t, int chart) {
  const int n = t.dimension();
  if (chart < 0 || chart > n) {
    throw InvalidArgument("build_delta_j: chart " + std::to_string(chart) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  const JetMatrix h = build_H(t);
  const int size = h.size();
  std::vector<bool> drop_row(static_cast<std::size_t>(size), false);
  std::vector<bool> drop_col(static_cast<std::size_t>(size), false);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const JetCell& cell = h.at(r, c);
      if (cell && cell->var.coord == chart && cell->var.order == 0) {
        drop_row[static_cast<std::size_t>(r)] = true;
        drop_col[static_cast<std::size_t>(c)] = true;
      }
    }
  }
  // X_i / X_j in chart j: X_0 -> x_{jj}, X_i -> x_{ji} otherwise.
  auto chart_coord = [chart](int homogeneous) { return homogeneous == 0 ? chart : homogeneous; };
  std::vector<std::vector<JetCell>> rows;
  for (int r = 0; r < size; ++r) {
    if (drop_row[static_cast<std::size_t>(r)]) continue;
    std::vector<JetCell> row;
    for (int c = 0; c < size; ++c) {
      if (drop_col[static_cast<std::size_t>(c)]) continue;
      JetCell cell = h.at(r, c);
      if (cell) {
        if (cell->var.coord == chart) {
          throw VerificationError("build_delta_j: X_j survived the row/column removal");
        }
        cell->var.coord = chart_coord(cell->var.coord);
      }
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw VerificationError("build_delta_j: non-square result");
  }
  JetMatrix m(VarSpace::affine(n, chart), std::move(rows));
  m.set_provenance(MatrixKind::DeltaJ, t, chart);
  return m;
}

namespace {

template <class CellFn>
Polynomial laplace_determinant(int n, const VarSpace& space, CellFn cell) {
  if (n == 0) return Polynomial(space, Scalar(1));
  if (n > 62) throw InvalidArgument("determinant: matrix too large");
  std::unordered_map<std::uint64_t, Polynomial> memo;
  // det of rows 0..|cols|-1 restricted to the column set `cols`.
  std::function<Polynomial(std::uint64_t)> det = [&](std::uint64_t cols) -> Polynomial {
    const int k = std::popcount(cols);
    if (k == 0) return Polynomial(space, Scalar(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const int row = k - 1;
    Polynomial acc(space);
    int after = k;  // columns of `cols` to the right of c, plus one
    for (int c = 0; c < n; ++c) {
      if (!(cols >> c & 1U)) continue;
      --after;
      const Polynomial* entry = cell(row, c);
      if (entry == nullptr || entry->is_zero()) continue;
      Polynomial minor = det(cols & ~(std::uint64_t{1} << c));
      if (minor.is_zero()) continue;
      Polynomial term = (*entry) * minor;
      if (after % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    memo.emplace(cols, acc);
    return acc;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return det(all);
}

}  // namespace

Polynomial determinant(const JetMatrix& m) {
  const int n = m.size();
  std::vector<Polynomial> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) cells.push_back(m.entry_polynomial(r, c));
  }
  return laplace_determinant(n, m.space(), [&](int r, int c) {
    return &cells[static_cast<std::size_t>(r * n + c)];
  });
}

Polynomial determinant(const PolyMatrix& m) {
  return laplace_determinant(m.size(), m.space(), [&](int r, int c) { return &m.at(r, c); });
}

std::pair<Monomial, Scalar> minth_check(const JetMatrix& m) {
  const int n = m.size();
  auto where = [](int r, int c) {
    return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
  };
  Scalar coeff(1);
  std::vector<Factor> diag;
  for (int i = 0; i < n; ++i) {
    const JetCell& d = m.at(i, i);
    if (!d) throw InvalidArgument("minth_check: zero diagonal entry at " + where(i, i));
    coeff *= d->coeff;
    diag.push_back({d->var, 1});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const JetCell& low = m.at(i, j);
      if (!low) continue;
      for (int l = 0; l <= i; ++l) {
        for (int k = j; k < n; ++k) {
          if (l == i && k == j) continue;
          const JetCell& high = m.at(l, k);
          if (high && var_cmp(low->var, high->var, m.space()) >= 0) {
            throw InvalidArgument("minth_check: entry " + where(i, j) + " = " +
                                  render_var(low->var, m.space()) +
                                  " is not smaller than entry " + where(l, k) + " = " +
                                  render_var(high->var, m.space()));
          }
        }
      }
    }
  }
  return {Monomial(std::move(diag)), coeff};
}

std::string render_matrix(const JetMatrix& m) {
  const int n = m.size();
  std::vector<std::string> text(static_cast<std::size_t>(n * n));
  std::vector<std::size_t> width(static_cast<std::size_t>(n), 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const JetCell& cell = m.at(r, c);
      std::string s = "0";
      if (cell) {
        s = render_var(cell->var, m.space());
        if (!cell->coeff.is_one()) s = cell->coeff.to_string() + "*" + s;
      }
      width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], s.size());
      text[static_cast<std::size_t>(r * n + c)] = std::move(s);
    }
  }
  std::string out;
  for (int r = 0; r < n; ++r) {
    out += "[ ";
    for (int c = 0; c < n; ++c) {
      const std::string& s = text[static_cast<std::size_t>(r * n + c)];
      out += s + std::string(width[static_cast<std::size_t>(c)] - s.size(), ' ');
      out += c + 1 < n ? "  " : " ]\n";
    }
  }
  return out;
}

}  // namespace jetsections
