#pragma once

// Dense symmetric eigensolver and Rayleigh-quotient tools for adjacency
// matrices.
//
// The solver is the cyclic Jacobi method: rotations are applied to every
// off-diagonal pair in row order, sweep after sweep, until the off-diagonal
// Frobenius norm falls below 1e-12 times the matrix norm (at most 100
// sweeps). Row order is fixed, so results are bit-for-bit reproducible.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cspec/graph.hpp"

namespace cspec {

inline constexpr double kJacobiThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Absolute tolerance for every eigenvalue comparison between graphs.
inline constexpr double kEigenTolerance = 1e-9;

class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  double& operator()(int i, int j) { return a_[idx(i, j)]; }

  void set_symmetric(int i, int j, double value) {
    (*this)(i, j) = value;
    (*this)(j, i) = value;
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
      double row = 0.0;
      for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
      best = std::max(best, row);
    }
    return best;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

  int n_ = 0;
  std::vector<double> a_;
};

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set_symmetric(u, v, 1.0);
  return a;
}

/// Eigenvalues sorted descending; vectors[i] (unit length) belongs to values[i]
/// when vectors were requested. `residual` is max_i |A x_i - lambda_i x_i|_inf,
/// zero when no vectors were computed.
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  double residual = 0.0;
  int sweeps = 0;

  double largest() const { return values.empty() ? 0.0 : values.front(); }
  double smallest() const { return values.empty() ? 0.0 : values.back(); }
  bool has_vectors() const { return !vectors.empty(); }
};

inline Spectrum eigen_symmetric(const SymMatrix& input, bool want_vectors = true) {
  const int n = input.size();
  SymMatrix a = input;
  SymMatrix v;
  if (want_vectors) {
    v = SymMatrix(n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  }

  double norm2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm2 += a(i, j) * a(i, j);
  const double stop = kJacobiThreshold * std::max(1.0, std::sqrt(norm2));

  Spectrum out;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= stop) break;
    ++out.sweeps;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          const double np = arp - s * (arq + arp * tau);
          const double nq = arq + s * (arp - arq * tau);
          a.set_symmetric(r, p, np);
          a.set_symmetric(r, q, nq);
        }
        if (want_vectors) {
          for (int r = 0; r < n; ++r) {
            const double vrp = v(r, p);
            const double vrq = v(r, q);
            v(r, p) = vrp - s * (vrq + vrp * tau);
            v(r, q) = vrq + s * (vrp - vrq * tau);
          }
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  out.values.reserve(static_cast<std::size_t>(n));
  for (int i : order) out.values.push_back(a(i, i));
  if (want_vectors) {
    out.vectors.reserve(static_cast<std::size_t>(n));
    for (int i : order) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) x[static_cast<std::size_t>(r)] = v(r, i);
      out.vectors.push_back(std::move(x));
    }
    for (std::size_t k = 0; k < out.values.size(); ++k) {
      const auto& x = out.vectors[k];
      for (int r = 0; r < n; ++r) {
        double ax = 0.0;
        for (int c = 0; c < n; ++c) ax += input(r, c) * x[static_cast<std::size_t>(c)];
        out.residual = std::max(out.residual, std::abs(ax - out.values[k] * x[static_cast<std::size_t>(r)]));
      }
    }
  }
  return out;
}

inline Spectrum eigen_symmetric(const Graph& g, bool want_vectors = true) {
  return eigen_symmetric(adjacency_matrix(g), want_vectors);
}

inline double spectral_radius(const Graph& g) { return eigen_symmetric(g, false).largest(); }

inline double least_eigenvalue(const Graph& g) { return eigen_symmetric(g, false).smallest(); }

/// Deviations of a spectrum from the identities every adjacency spectrum satisfies.
struct SpectrumQuality {
  double trace_error = 0.0;         // |sum lambda_i - trace A|
  double square_trace_error = 0.0;  // |sum lambda_i^2 - sum a_ij^2|
  double residual = 0.0;
  double residual_budget = 0.0;     // 1e-9 * max(1, max row sum)

  bool acceptable() const {
    return trace_error <= 1e-8 && square_trace_error <= 1e-6 && residual <= residual_budget;
  }
};

inline SpectrumQuality spectrum_quality(const SymMatrix& a, const Spectrum& sp) {
  SpectrumQuality q;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double x : sp.values) {
    sum += x;
    sum_sq += x * x;
  }
  double frob = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) frob += a(i, j) * a(i, j);
  q.trace_error = std::abs(sum - a.trace());
  q.square_trace_error = std::abs(sum_sq - frob);
  q.residual = sp.residual;
  q.residual_budget = 1e-9 * std::max(1.0, a.max_abs_row_sum());
  return q;
}

// ---------------------------------------------------------------- Rayleigh machinery

namespace detail {
inline void require_dimension(const Graph& g, std::span<const double> x, const char* what) {
  if (x.size() != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument(std::string(what) + ": vector length " + std::to_string(x.size()) +
                                " does not match graph order " + std::to_string(g.order()));
  }
}
}  // namespace detail

/// x^T A(g) x accumulated edge by edge as 2 x_i x_j.
inline double rayleigh_quotient(const Graph& g, std::span<const double> x) {
  detail::require_dimension(g, x, "rayleigh_quotient");
  double sum = 0.0;
  for (auto [u, v] : g.edges()) sum += 2.0 * x[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(v)];
  return sum;
}

/// max_i |lambda x_i - sum over neighbours j of x_j|.
inline double eigen_equation_residual(const Graph& g, double lambda, std::span<const double> x) {
  detail::require_dimension(g, x, "eigen_equation_residual");
  double worst = 0.0;
  for (int i = 0; i < g.order(); ++i) {
    double sum = 0.0;
    for (int j : members(g.neighbors(i))) sum += x[static_cast<std::size_t>(j)];
    worst = std::max(worst, std::abs(lambda * x[static_cast<std::size_t>(i)] - sum));
  }
  return worst;
}

/// x^T A(g^c) x - x^T A(h^c) x. The all-ones and identity parts of the two
/// complements cancel, leaving x^T A(h) x - x^T A(g) x.
inline double complement_rayleigh_gap(const Graph& g, const Graph& h, std::span<const double> x) {
  if (g.order() != h.order()) throw std::invalid_argument("complement_rayleigh_gap: graphs differ in order");
  return rayleigh_quotient(h, x) - rayleigh_quotient(g, x);
}

// ---------------------------------------------------------------- audits

/// One evaluated claim. Audits report; they never throw on a failed claim.
struct AuditRecord {
  std::string claim;
  std::string instance;
  double left = 0.0;
  double right = 0.0;
  bool holds = false;

  double gap() const { return left - right; }
};

/// Checks lambda_1(g) >= 2 sigma(g) / n, where sigma is the transmission.
inline AuditRecord transmission_bound_audit(const Graph& g, std::string instance = {}) {
  require_connected(g, "transmission_bound_audit");
  AuditRecord r;
  r.claim = "radius-vs-transmission";
  r.instance = std::move(instance);
  r.left = spectral_radius(g);
  r.right = 2.0 * static_cast<double>(transmission(g)) / static_cast<double>(g.order());
  r.holds = r.left >= r.right - kEigenTolerance;
  return r;
}

}  // namespace cspec
