#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace jetsections {

/// Where the variables of a polynomial live.
///
///  - Affine(chart j): coordinates x_{j1}..x_{jN}, indices 1..N. In chart j
///    the coordinate x_{jj} stands for X_0/X_j, every other x_{jc} for X_c/X_j.
///  - Homogeneous: X_0..X_N, indices 0..N.
///  - Mixed(chart j): the affine chart-j coordinates 1..N together with the
///    homogeneous jets of X_j, stored under index 0. Only the chart-change
///    identity check needs this space.
enum class SpaceKind : std::uint8_t { Affine, Homogeneous, Mixed };

class VarSpace {
 public:
  static VarSpace affine(int n, int chart);
  static VarSpace homogeneous(int n);
  static VarSpace mixed(int n, int chart);

  SpaceKind kind() const { return kind_; }
  int dimension() const { return n_; }
  /// Chart index for Affine/Mixed spaces, -1 for Homogeneous.
  int chart() const { return chart_; }

  bool valid_coord(int coord) const;
  int min_coord() const { return kind_ == SpaceKind::Affine ? 1 : 0; }
  int max_coord() const { return n_; }

  friend bool operator==(const VarSpace&, const VarSpace&) = default;

  std::string describe() const;

 private:
  VarSpace(SpaceKind kind, int n, int chart) : kind_(kind), n_(n), chart_(chart) {}

  SpaceKind kind_ = SpaceKind::Affine;
  int n_ = 1;
  int chart_ = 0;
};

/// Throws SpaceMismatch unless a == b.
void require_same_space(const VarSpace& a, const VarSpace& b, const char* what);

/// The jet variable chi^{(order)} of coordinate `coord`.
struct JetVar {
  int coord = 1;
  int order = 0;

  JetVar derivative() const { return {coord, order + 1}; }
  friend bool operator==(const JetVar&, const JetVar&) = default;
};

/// The variable order: coordinates form blocks, a higher coordinate index is
/// a smaller block, and inside a block a lower derivative order is smaller.
/// For affine chart 0 this reads x_{0N} < x_{0N}' < ... < x_{01} < x_{01}' < ...
inline std::strong_ordering var_order(const JetVar& a, const JetVar& b) {
  if (a.coord != b.coord) return b.coord <=> a.coord;
  return a.order <=> b.order;
}

/// var_order after checking that both variables belong to `space`.
std::strong_ordering var_cmp(const JetVar& a, const JetVar& b, const VarSpace& space);

struct Factor {
  JetVar var;
  int exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A product of jet variables. Factors are kept sorted from the largest
/// variable down, without repeats; the empty product is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  /// Accepts factors in any order; merges repeats and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(JetVar v, int exponent = 1) { return Monomial({{v, exponent}}); }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent_of(const JetVar& v) const;
  int max_order() const;

  /// Returns this monomial with v^e divided out; throws if not divisible.
  Monomial without(const JetVar& v, int e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Reads the variables of each monomial from the largest down, with
/// multiplicity, and compares position by position; a proper prefix is
/// smaller, so 1 is the global minimum.
std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b);

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) < 0; }
};

/// Sum over factors of exponent * (order + 1): the pole a monomial produces
/// under a change of chart.
int weight(const Monomial& m);
/// Sum over factors of exponent * order: the Green-Griffiths grading.
int gg_weight(const Monomial& m);

/// `x[c]^(l)` for affine coordinates, `X[c]^(l)` for homogeneous ones; order 0
/// omits the `^(0)`. In a mixed chart-j space index 0 renders as `X[j]`.
std::string render_var(const JetVar& v, const VarSpace& space);
/// Factors from the smallest variable up, joined by `*`, powers as `^e`.
std::string render_monomial(const Monomial& m, const VarSpace& space);

struct JetVarHash {
  std::size_t operator()(const JetVar& v) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(v.coord) << 32) ^ v.order);
  }
};

}  // namespace jetsections
