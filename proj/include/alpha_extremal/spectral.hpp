#ifndef ALPHA_EXTREMAL_SPECTRAL_HPP
#define ALPHA_EXTREMAL_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alpha_extremal/graph.hpp"

namespace alpha_extremal {

/// Mixing parameter of A_alpha = alpha D + (1 - alpha) A, restricted to [0, 1).
class Alpha {
 public:
  explicit Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value < 1.0)) {
      throw std::invalid_argument("alpha must lie in [0, 1), got " + std::to_string(value));
    }
  }
  double value() const { return value_; }
  friend bool operator==(const Alpha&, const Alpha&) = default;
  friend auto operator<=>(const Alpha&, const Alpha&) = default;

 private:
  double value_;
};

/// Dense row-major symmetric matrix; only used for small n.
class DenseMatrix {
 public:
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}
  int rows() const { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<double> data_;
};

inline DenseMatrix alpha_matrix(const Graph& g, Alpha a) {
  const double alpha = a.value();
  DenseMatrix m(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    m(u, u) = alpha * g.degree(u);
    for (Vertex w : g.neighbors(u)) m(u, w) = 1.0 - alpha;
  }
  return m;
}

struct SolverOptions {
  double tolerance = 1e-12;
  int max_iterations = 200000;
  double shift = 1.0;
  /// Plain power steps before switching to shifted inverse steps.
  int power_budget = 1000;
};

struct SpectralResult {
  double rho = 0.0;
  /// Positive unit Perron vector.
  std::vector<double> perron;
  /// Infinity norm of A_alpha x - rho x.
  double residual = 0.0;
  int iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int iterations, double residual)
      : std::runtime_error("spectral solver did not converge after " + std::to_string(iterations) +
                           " iterations (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

namespace detail {

inline void apply_alpha(const Graph& g, double alpha, const std::vector<double>& x, std::vector<double>& y) {
  const double off = 1.0 - alpha;
  for (Vertex u = 0; u < g.order(); ++u) {
    double acc = 0.0;
    for (Vertex w : g.neighbors(u)) acc += x[w];
    y[u] = alpha * g.degree(u) * x[u] + off * acc;
  }
}

inline double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

/// Solves (sigma I - A_alpha) z = rhs by Gaussian elimination with partial
/// pivoting. Returns false on an exactly singular pivot.
inline bool solve_shifted(const Graph& g, double alpha, double sigma, const std::vector<double>& rhs,
                          std::vector<double>& z) {
  const int n = g.order();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (Vertex u = 0; u < n; ++u) {
    at(u, u) = sigma - alpha * g.degree(u);
    for (Vertex w : g.neighbors(u)) at(u, w) = alpha - 1.0;
  }
  z = rhs;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(at(r, c)) > std::abs(at(pivot, c))) pivot = r;
    }
    if (at(pivot, c) == 0.0) return false;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(at(c, j), at(pivot, j));
      std::swap(z[c], z[pivot]);
    }
    for (int r = c + 1; r < n; ++r) {
      const double f = at(r, c) / at(c, c);
      if (f == 0.0) continue;
      for (int j = c; j < n; ++j) at(r, j) -= f * at(c, j);
      z[r] -= f * z[c];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double acc = z[r];
    for (int j = r + 1; j < n; ++j) acc -= at(r, j) * z[j];
    z[r] = acc / at(r, r);
  }
  return true;
}

}  // namespace detail

/// A_alpha spectral radius and Perron vector of a connected graph.
///
/// Power iteration on A_alpha + shift * I from the all-ones vector. The shift
/// makes the Perron root dominant in modulus. Stops when both the
/// Rayleigh-quotient change and the residual drop below the tolerance.
///
/// Near alpha = 1 the top eigenvalues can crowd together and plain power
/// steps crawl. After opts.power_budget steps the solver switches to Noda
/// iteration: inverse steps shifted by the Collatz-Wielandt upper bound
/// max_i (A x)_i / x_i, which keep the iterate positive and converge
/// superlinearly to the same Perron pair.
inline SpectralResult spectral_radius(const Graph& g, Alpha a, const SolverOptions& opts = {}) {
  if (!is_connected(g)) throw std::invalid_argument("spectral_radius: graph is not connected");
  const int n = g.order();
  const double alpha = a.value();
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(x.size());
  std::vector<double> z;
  SpectralResult out;
  double previous = -1.0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    detail::apply_alpha(g, alpha, x, y);
    double rq = 0.0;
    for (int i = 0; i < n; ++i) rq += x[i] * y[i];
    double residual = 0.0;
    for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rq * x[i]));
    out.rho = rq;
    out.residual = residual;
    out.iterations = it;
    if (std::abs(rq - previous) <= opts.tolerance && residual <= opts.tolerance) {
      out.perron = x;
      return out;
    }
    previous = rq;
    if (it > opts.power_budget) {
      double sigma = 0.0;
      for (int i = 0; i < n; ++i) sigma = std::max(sigma, y[i] / x[i]);
      if (detail::solve_shifted(g, alpha, sigma, x, z)) {
        for (double& v : z) v = std::abs(v);
        const double norm = detail::norm2(z);
        if (norm > 0.0 && std::isfinite(norm)) {
          for (int i = 0; i < n; ++i) x[i] = z[i] / norm;
          continue;
        }
      }
    }
    for (int i = 0; i < n; ++i) y[i] += opts.shift * x[i];
    const double norm = detail::norm2(y);
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError(opts.max_iterations, out.residual);
}

inline double rho(const Graph& g, Alpha a) { return spectral_radius(g, a).rho; }

struct LowerBounds {
  /// 2m/n.
  double average_degree = 0.0;
  /// alpha(Delta+1) for alpha <= 1/2, alpha Delta + (1-alpha)^2/alpha otherwise.
  double max_degree = 0.0;
};

inline LowerBounds lower_bounds(const Graph& g, Alpha a) {
  if (!is_connected(g)) throw std::invalid_argument("lower_bounds: graph is not connected");
  const double alpha = a.value();
  const double delta = g.max_degree();
  LowerBounds out;
  out.average_degree = 2.0 * g.size() / g.order();
  out.max_degree = alpha <= 0.5 ? alpha * (delta + 1.0) : alpha * delta + (1.0 - alpha) * (1.0 - alpha) / alpha;
  return out;
}

struct UpperBounds {
  /// max over u of alpha d(u) + (1-alpha) m(u), m(u) the mean neighbour degree.
  double degree_average = 0.0;
  /// max over ordered edges (u,v) of alpha d(u) + (1-alpha) d(v).
  double edge_degree = 0.0;
};

inline UpperBounds upper_bounds(const Graph& g, Alpha a) {
  if (!is_connected(g) || g.order() < 2) {
    throw std::invalid_argument("upper_bounds: needs a connected graph with n >= 2");
  }
  const double alpha = a.value();
  UpperBounds out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const double du = g.degree(u);
    double sum = 0.0;
    for (Vertex v : g.neighbors(u)) {
      const double dv = g.degree(v);
      sum += dv;
      out.edge_degree = std::max(out.edge_degree, alpha * du + (1.0 - alpha) * dv);
    }
    out.degree_average = std::max(out.degree_average, alpha * du + (1.0 - alpha) * sum / du);
  }
  return out;
}

/// Explicit polynomials whose largest roots are the spectral radii of small
/// extremal graphs, plus the closed form for C(1,3,3).
enum class ExtremalPolynomial {
  kFC222,    ///< f: largest root is rho of C^1_{2,2,2}.
  kGC233,    ///< g: largest root is rho of C^1_{2,3,3}.
  kH1G5,     ///< h1: largest root is rho of G5.
  kH2G3,     ///< h2: largest root is rho of G3.
  kRhoC133,  ///< closed form (3a + 2 + sqrt(9a^2 - 16a + 8)) / 2; x ignored.
};

inline std::optional<ExtremalPolynomial> parse_polynomial(std::string_view name) {
  if (name == "f_C222") return ExtremalPolynomial::kFC222;
  if (name == "g_C233") return ExtremalPolynomial::kGC233;
  if (name == "h1_G5") return ExtremalPolynomial::kH1G5;
  if (name == "h2_G3") return ExtremalPolynomial::kH2G3;
  if (name == "rho_C133") return ExtremalPolynomial::kRhoC133;
  return std::nullopt;
}

inline double evaluate_polynomial(ExtremalPolynomial which, Alpha alpha, double x) {
  const double a = alpha.value();
  const double a2 = a * a;
  const double a3 = a2 * a;
  const double a4 = a3 * a;
  const double a5 = a4 * a;
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x4 = x3 * x;
  switch (which) {
    case ExtremalPolynomial::kFC222:
      return x4 - 10 * a * x3 + (28 * a2 + 14 * a - 7) * x2 - (18 * a3 + 64 * a2 - 32 * a) * x + 42 * a3 -
             9 * a2 - 12 * a + 3;
    case ExtremalPolynomial::kGC233: {
      const double x5 = x4 * x;
      const double x6 = x5 * x;
      return x6 - 14 * a * x5 + (71 * a2 + 16 * a - 8) * x4 - (160 * a3 + 140 * a2 - 70 * a) * x3 +
             (160 * a4 + 380 * a3 - 134 * a2 - 56 * a + 14) * x2 -
             (56 * a5 + 392 * a4 - 26 * a3 - 160 * a2 + 30 * a + 4) * x + 126 * a5 + 59 * a4 - 104 * a3 +
             6 * a2 + 10 * a - 1;
    }
    case ExtremalPolynomial::kH1G5:
      return x4 - 8 * a * x3 + (16 * a2 + 10 * a - 5) * x2 - (8 * a3 + 28 * a2 - 14 * a) * x +
             (14 * a3 - 3 * a2 - 4 * a + 1);
    case ExtremalPolynomial::kH2G3:
      return x4 - (8 * a + 1) * x3 + (17 * a2 + 17 * a - 5) * x2 - (8 * a3 + 44 * a2 - 10 * a - 3) * x +
             18 * a3 + 11 * a2 - 13 * a + 2;
    case ExtremalPolynomial::kRhoC133:
      return (3 * a + 2 + std::sqrt(9 * a2 - 16 * a + 8)) / 2;
  }
  throw std::invalid_argument("unknown polynomial");
}

inline double evaluate_polynomial(std::string_view name, Alpha alpha, double x) {
  auto which = parse_polynomial(name);
  if (!which) throw std::invalid_argument("unknown polynomial '" + std::string(name) + "'");
  return evaluate_polynomial(*which, alpha, x);
}

}  // namespace alpha_extremal

#endif  // ALPHA_EXTREMAL_SPECTRAL_HPP
