#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cspec/constructions.hpp"
#include "cspec/graph.hpp"
#include "cspec/spectra.hpp"
#include "oracles.hpp"

using namespace cspec;

namespace {

void expect_values(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-9) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

}  // namespace

TEST(Eigen, NamedSpectra) {
  expect_values(eigen_symmetric(complete_graph(2)).values, {1, -1});
  const double r3 = std::sqrt(3.0);
  expect_values(eigen_symmetric(complete_bipartite(1, 3)).values, {r3, 0, 0, -r3});
  expect_values(eigen_symmetric(complement(build_detached_join({1, 3, 2}))).values, {2, 1, 0, 0, -1, -2});
  EXPECT_NEAR(spectral_radius(complete_bipartite(2, 5)), std::sqrt(10.0), 1e-12);
  EXPECT_EQ(least_eigenvalue(empty_graph(4)), 0.0);
  EXPECT_NEAR(least_eigenvalue(complement(build_linked_cliques({3, 3, 1, LinkVariant::join}))), -(1 + r3), 1e-9);
  EXPECT_TRUE(eigen_symmetric(empty_graph(0)).values.empty());
}

TEST(Eigen, AgreesWithReferenceSolver) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto m = oracle::random_matrix(1 + i % 20, 0.2 + 0.6 * (i % 7) / 6.0, rng);
    const Graph g = oracle::to_graph(m);
    const Spectrum sp = eigen_symmetric(g);
    expect_values(sp.values, oracle::eigenvalues(m), 1e-9);
    const SpectrumQuality q = spectrum_quality(adjacency_matrix(g), sp);
    EXPECT_TRUE(q.acceptable()) << "trace " << q.trace_error << " sq " << q.square_trace_error << " res " << q.residual;
  }
}

TEST(Eigen, VectorsAreOrthonormalEigenpairs) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::to_graph(oracle::random_matrix(3 + i % 10, 0.5, rng));
    const Spectrum sp = eigen_symmetric(g);
    ASSERT_TRUE(sp.has_vectors());
    for (std::size_t a = 0; a < sp.vectors.size(); ++a) {
      EXPECT_LE(eigen_equation_residual(g, sp.values[a], sp.vectors[a]), 1e-9);
      for (std::size_t b = a; b < sp.vectors.size(); ++b) {
        const double dot = std::inner_product(sp.vectors[a].begin(), sp.vectors[a].end(), sp.vectors[b].begin(), 0.0);
        EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-9);
      }
    }
  }
}

TEST(Eigen, ValuesOnlyModeMatches) {
  const Graph g = complement(build_linked_cliques({5, 4, 2, LinkVariant::matching}));
  const Spectrum full = eigen_symmetric(g, true);
  const Spectrum bare = eigen_symmetric(g, false);
  EXPECT_FALSE(bare.has_vectors());
  expect_values(bare.values, full.values, 1e-12);
}

TEST(Rayleigh, Identities) {
  const Graph g = cycle_graph(5);
  EXPECT_EQ(rayleigh_quotient(g, std::vector<double>(5, 0.0)), 0.0);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(rayleigh_quotient(complete_graph(2), std::vector<double>{h, h}), 1.0, 1e-15);
  EXPECT_THROW(rayleigh_quotient(g, std::vector<double>(4, 0.0)), std::invalid_argument);
}

TEST(Rayleigh, BoundedBySpectrum) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 100; ++i) {
    const auto m = oracle::random_matrix(7, 0.5, rng);
    const Graph g = oracle::to_graph(m);
    std::vector<double> x(7);
    double norm = 0.0;
    for (double& v : x) {
      v = gauss(rng);
      norm += v * v;
    }
    for (double& v : x) v /= std::sqrt(norm);
    const auto ev = oracle::eigenvalues(m);
    const double q = rayleigh_quotient(g, x);
    EXPECT_LE(q, ev.front() + 1e-12);
    EXPECT_GE(q, ev.back() - 1e-12);
  }
}

TEST(Rayleigh, ResidualOfPerturbedVectorGrows) {
  const Graph g = complement(build_detached_join({1, 4, 2}));
  const Spectrum sp = eigen_symmetric(g);
  const auto& x = sp.vectors.front();
  const double exact = eigen_equation_residual(g, sp.largest(), x);
  EXPECT_LE(exact, 1e-9);
  std::vector<double> y = x;
  y[0] += 0.1;
  const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
  for (double& v : y) v /= norm;
  EXPECT_GT(eigen_equation_residual(g, sp.largest(), y), exact);
}

TEST(Rayleigh, LiftedQuotientEigenvector) {
  // classes S = {0}, T - v = {1, 2}, v = 3, C = {4, 5}; lambda = 2
  const Graph g = complement(build_detached_join({1, 3, 2}));
  // quotient rows: 2 x_s = 2 x_t + x_v, 2 x_t = x_s, 2 x_k = x_v, 2 x_v = x_s + 2 x_k
  const double xs = 2.0, xt = 1.0, xv = 2.0, xk = 1.0;
  std::vector<double> x{xs, xt, xt, xv, xk, xk};
  const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  for (double& v : x) v /= norm;
  EXPECT_LE(eigen_equation_residual(g, 2.0, x), 1e-9);
}

TEST(Rayleigh, ComplementGap) {
  const Graph g = path_graph(4);
  const std::vector<double> x{0.5, 0.5, 0.5, 0.5};
  EXPECT_EQ(complement_rayleigh_gap(g, g, x), 0.0);
  const Graph h = g.with_edge(0, 3);
  EXPECT_NEAR(complement_rayleigh_gap(g, h, x), 2 * x[0] * x[3], 1e-15);
  // the gap is x^T A(g^c) x - x^T A(h^c) x computed directly
  EXPECT_NEAR(complement_rayleigh_gap(g, h, x), rayleigh_quotient(complement(g), x) - rayleigh_quotient(complement(h), x),
              1e-15);
}

TEST(Audit, TransmissionBound) {
  const AuditRecord p3 = transmission_bound_audit(path_graph(3), "P3");
  EXPECT_FALSE(p3.holds);
  EXPECT_NEAR(p3.left, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3.right, 8.0 / 3.0, 1e-12);
  for (int n = 2; n <= 7; ++n) EXPECT_TRUE(transmission_bound_audit(complete_graph(n)).holds);
  const AuditRecord b = transmission_bound_audit(complement(build_detached_join({1, 4, 2})));
  EXPECT_FALSE(b.holds);
  EXPECT_NEAR(b.left, std::sqrt(3 + std::sqrt(3.0)), 1e-9);
  EXPECT_NEAR(b.right, 12.0, 1e-12);
  EXPECT_THROW(transmission_bound_audit(empty_graph(3)), std::invalid_argument);
}
