#include "infomask/simplex_lp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "infomask/error.h"

namespace infomask {
namespace {

constexpr double kPriceTol = 1e-12;
constexpr double kPivotTol = 1e-12;
constexpr int kMaxIterations = 20'000;
constexpr int kDegenerateRunBeforeBland = 25;

// Solves M z = b (or M^T z = b) for a small dense square M, row-major.
std::vector<double> SolveDense(std::vector<double> m, std::vector<double> b, int n,
                               bool transpose) {
  if (transpose) {
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) std::swap(m[i * n + k], m[k * n + i]);
    }
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    }
    if (std::abs(m[piv * n + col]) < 1e-300) {
      throw Error(ErrorCode::kDegenerateLp, "singular basis");
    }
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(m[col * n + k], m[piv * n + k]);
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (int k = col; k < n; ++k) m[r * n + k] -= f * m[col * n + k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> z(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < n; ++k) s -= m[r * n + k] * z[k];
    z[r] = s / m[r * n + r];
  }
  return z;
}

}  // namespace

MixtureSolution SolveMixtureLp(const MixtureLp& lp, std::size_t start) {
  const int m = lp.rows;
  const int dim = m + 1;  // budgets plus the convexity row
  const std::size_t n = lp.columns();
  if (start >= n || lp.coefficients.size() != n * static_cast<std::size_t>(m) ||
      lp.rhs.size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorCode::kDegenerateLp, "malformed mixture LP");
  }
  for (int i = 0; i < m; ++i) {
    if (lp.coeff(start, i) > lp.rhs[i] + 1e-12) {
      throw Error(ErrorCode::kDegenerateLp, "start column violates budget " +
                                                std::to_string(i));
    }
  }

  // Variables 0..n-1 are mixture weights, n..n+m-1 are budget slacks.
  auto column = [&](std::size_t var, std::vector<double>& out) {
    out.assign(dim, 0.0);
    if (var < n) {
      for (int i = 0; i < m; ++i) out[i] = lp.coeff(var, i);
      out[m] = 1.0;
    } else {
      out[var - n] = 1.0;
    }
  };
  auto cost = [&](std::size_t var) { return var < n ? lp.objective[var] : 0.0; };

  std::vector<std::size_t> basis(dim);
  for (int i = 0; i < m; ++i) basis[i] = n + static_cast<std::size_t>(i);
  basis[m] = start;
  std::vector<bool> in_basis(n + m, false);
  for (auto v : basis) in_basis[v] = true;

  std::vector<double> b(lp.rhs);
  b.push_back(1.0);
  std::vector<double> bmat(dim * dim), col;
  std::vector<double> x_basic;
  int degenerate_run = 0;

  MixtureSolution sol;
  for (int iter = 0;; ++iter) {
    if (iter >= kMaxIterations) {
      throw Error(ErrorCode::kDegenerateLp, "simplex iteration limit reached");
    }
    for (int k = 0; k < dim; ++k) {
      column(basis[k], col);
      for (int i = 0; i < dim; ++i) bmat[i * dim + k] = col[i];
    }
    x_basic = SolveDense(bmat, b, dim, false);
    std::vector<double> c_basic(dim);
    for (int k = 0; k < dim; ++k) c_basic[k] = cost(basis[k]);
    const std::vector<double> duals = SolveDense(bmat, c_basic, dim, true);

    const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
    std::size_t entering = n + m;
    double best = kPriceTol;
    for (std::size_t v = 0; v < n + m; ++v) {
      if (in_basis[v]) continue;
      double reduced;
      if (v < n) {
        reduced = lp.objective[v] - duals[m];
        for (int i = 0; i < m; ++i) reduced -= duals[i] * lp.coeff(v, i);
      } else {
        reduced = -duals[v - n];
      }
      if (reduced > best) {
        best = reduced;
        entering = v;
        if (bland) break;
      }
    }
    if (entering == n + m) {
      sol.iterations = iter;
      break;
    }

    column(entering, col);
    const std::vector<double> alpha = SolveDense(bmat, col, dim, false);
    int leave = -1;
    double ratio = 0.0;
    for (int k = 0; k < dim; ++k) {
      if (alpha[k] <= kPivotTol) continue;
      const double t = std::max(x_basic[k], 0.0) / alpha[k];
      if (leave < 0 || t < ratio - 1e-15 ||
          (t <= ratio + 1e-15 && basis[k] < basis[leave])) {
        leave = k;
        ratio = t;
      }
    }
    if (leave < 0) throw Error(ErrorCode::kDegenerateLp, "unbounded direction");
    degenerate_run = ratio <= 1e-15 ? degenerate_run + 1 : 0;
    in_basis[basis[leave]] = false;
    in_basis[entering] = true;
    basis[leave] = entering;
  }

  double total = 0.0;
  for (int k = 0; k < dim; ++k) {
    if (basis[k] < n && x_basic[k] > 0.0) {
      sol.weights.emplace_back(basis[k], x_basic[k]);
      total += x_basic[k];
    }
  }
  // Clean rounding so the mixture is exactly a distribution.
  for (auto& [idx, w] : sol.weights) w /= total;
  std::sort(sol.weights.begin(), sol.weights.end());
  for (const auto& [idx, w] : sol.weights) sol.value += w * lp.objective[idx];
  return sol;
}

}  // namespace infomask
