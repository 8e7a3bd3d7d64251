#pragma once

#include <vector>

#include "jetsections/error.hpp"
#include "jetsections/jet_matrix.hpp"
#include "jetsections/polynomial.hpp"

namespace jetsections {

/// numerator / (x^{(0)}_den)^pole over an affine chart, kept reduced: when the
/// pole is positive, some numerator term misses the denominator variable.
///
/// For images of chart-0 sections the denominator is x_{jj}. Images of other
/// charts (used for round trips) have denominator X_i / X_j, which is
/// coordinate i of chart j, or coordinate j when i = 0.
class RationalSection {
 public:
  RationalSection(Polynomial numerator, int denominator_coord, int pole);

  const VarSpace& space() const { return numerator_.space(); }
  int chart() const { return numerator_.space().chart(); }
  const Polynomial& numerator() const { return numerator_; }
  int denominator_coord() const { return denominator_; }
  JetVar denominator() const { return {denominator_, 0}; }
  int pole() const { return pole_; }

  friend bool operator==(const RationalSection&, const RationalSection&) = default;

 private:
  Polynomial numerator_;
  int denominator_;
  int pole_;
};

/// The section p of chart `from` (p's space) rewritten in chart `to`.
RationalSection change_chart(const Polynomial& p, int to);

/// change_chart from chart 0; requires 1 <= j <= N.
RationalSection to_chart(const Polynomial& p, int j);

int pole_order(const Polynomial& p, int j);

struct GlobalSectionReport {
  bool global = true;
  /// poles[j - 1] is the pole order in chart j.
  std::vector<int> poles;
};

GlobalSectionReport global_section_report(const Polynomial& p, int d);
bool is_global_section(const Polynomial& p, int d);

class PoleExceedsTwist : public VerificationError {
 public:
  PoleExceedsTwist(int pole, int twist, int chart);
  int pole() const { return pole_; }
  int twist() const { return twist_; }
  int chart() const { return chart_; }

 private:
  int pole_;
  int twist_;
  int chart_;
};

/// den^d times the chart-`to` image of p: a polynomial whenever the pole is
/// at most d. For chart-0 input, den = x_{jj}. Throws PoleExceedsTwist.
Polynomial twisted_transport(const Polynomial& p, int to, int d);

/// Substitutes X_i^{(l)} = sum_q C(l, q) x_{ji}^{(q)} X_j^{(l - q)} into the
/// homogeneous matrix and checks det = sign * det(Delta_j) * X_j^{M + 1}
/// exactly. Returns the sign; throws VerificationError with the residual.
int verify_main3(const TupleBNPlus& t, int j);

}  // namespace jetsections
