#ifndef INFOMASK_SIMPLEX_LP_H_
#define INFOMASK_SIMPLEX_LP_H_

#include <cstddef>
#include <utility>
#include <vector>

namespace infomask {

// maximize  sum_j w_j * objective[j]
// s.t.      sum_j w_j * coeff(j, i) <= rhs[i]   for each of the m rows
//           sum_j w_j = 1,  w >= 0
//
// i.e. the best mixture of n candidate columns under m linear budgets.
struct MixtureLp {
  int rows = 0;                     // m
  std::vector<double> coefficients; // n * m, column-major by candidate
  std::vector<double> objective;    // n
  std::vector<double> rhs;          // m, each >= 0

  std::size_t columns() const { return objective.size(); }
  double coeff(std::size_t column, int row) const {
    return coefficients[column * static_cast<std::size_t>(rows) +
                        static_cast<std::size_t>(row)];
  }
};

struct MixtureSolution {
  std::vector<std::pair<std::size_t, double>> weights;  // non-zero mixture weights
  double value = 0.0;
  int iterations = 0;
};

// Revised primal simplex started from the point mass on `start`, which must
// satisfy every budget on its own. Dantzig pricing with a switch to Bland's
// rule after a run of degenerate pivots. Throws kDegenerateLp if `start` is
// infeasible or the iteration limit is hit.
MixtureSolution SolveMixtureLp(const MixtureLp& lp, std::size_t start);

}  // namespace infomask

#endif  // INFOMASK_SIMPLEX_LP_H_
