#pragma once

// 4x4 quotient matrices of the complements of the detached join and the
// linked cliques, their even characteristic quartics, and closed-form roots.
//
// Complement of the detached join, classes (S, T minus v, C, v):
//     [ 0  t-1  0  1 ]
//     [ s   0   0  0 ]      f(x) = x^4 - (k + st) x^2 + k s (t-1)
//     [ 0   0   0  1 ]
//     [ s   0   k  0 ]
//
// Complement of the linked cliques (join variant), classes
// (first clique minus U, U, second clique minus W, W):
//     [ 0     0   n2-k  k ]
//     [ 0     0   n2-k  0 ]   g(x) = x^4 + (k^2 - n1 n2) x^2
//     [ n1-k  k   0     0 ]          + k^4 - (n1 + n2) k^3 + n1 n2 k^2
//     [ n1-k  0   0     0 ]

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "cspec/constructions.hpp"

namespace cspec {

using Matrix4 = std::array<std::array<double, 4>, 4>;

enum class QuarticSource { detached_join, linked_cliques };

/// x^4 + c2 x^2 + c0 with exact integer coefficients.
struct Quartic {
  long long c2 = 0;
  long long c0 = 0;
  QuarticSource source = QuarticSource::detached_join;
  std::array<int, 3> params{};  // (s, t, k) or (n1, n2, k)

  double operator()(double x) const {
    const double x2 = x * x;
    return x2 * x2 + static_cast<double>(c2) * x2 + static_cast<double>(c0);
  }

  long long discriminant() const { return c2 * c2 - 4 * c0; }
};

class RootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Matrix4 detached_join_quotient(int s, int t, int k) {
  validate_detached(JoinParams{s, t, k});
  const double S = s, T = t, K = k;
  return Matrix4{{{0, T - 1, 0, 1}, {S, 0, 0, 0}, {0, 0, 0, 1}, {S, 0, K, 0}}};
}

inline Matrix4 linked_cliques_quotient(int n1, int n2, int k) {
  validate_linked(LinkParams{n1, n2, k, LinkVariant::join});
  const double a = n1 - k, b = n2 - k, K = k;
  return Matrix4{{{0, 0, b, K}, {0, 0, b, 0}, {a, K, 0, 0}, {a, 0, 0, 0}}};
}

/// Coefficients {1, c3, c2, c1, c0} of det(x I - M), by Faddeev-LeVerrier.
inline std::array<double, 5> characteristic_polynomial(const Matrix4& m) {
  std::array<double, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};
  Matrix4 mk{};  // M_k, starting from M_0 = 0
  for (int k = 1; k <= 4; ++k) {
    Matrix4 next{};
    // M_k = M (M_{k-1} + c_{k-1} I)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double sum = 0.0;
        for (int l = 0; l < 4; ++l) sum += m[i][l] * (mk[l][j] + (l == j ? c[k - 1] : 0.0));
        next[i][j] = sum;
      }
    mk = next;
    double tr = 0.0;
    for (int i = 0; i < 4; ++i) tr += mk[i][i];
    c[k] = -tr / k;
  }
  return c;
}

inline Quartic quartic_detached(int s, int t, int k) {
  if (s < 1 || t < 2 || k < 1) throw ParameterError("detached quartic needs s >= 1, t >= 2, kappa >= 1");
  Quartic q;
  q.c2 = -(static_cast<long long>(k) + static_cast<long long>(s) * t);
  q.c0 = static_cast<long long>(k) * s * (t - 1);
  q.source = QuarticSource::detached_join;
  q.params = {s, t, k};
  return q;
}

inline Quartic quartic_linked(int n1, int n2, int k) {
  if (k < 1 || n1 < k || n2 < k) throw ParameterError("linked quartic needs n1, n2 >= kappa >= 1");
  const long long K = k;
  const long long p = static_cast<long long>(n1) * n2;
  Quartic q;
  q.c2 = K * K - p;
  q.c0 = K * K * K * K - (n1 + n2) * K * K * K + p * K * K;
  q.source = QuarticSource::linked_cliques;
  q.params = {n1, n2, k};
  return q;
}

/// The two values of x^2, larger first. Throws when they are not both real and non-negative.
inline std::pair<double, double> squared_roots(const Quartic& q) {
  const long long disc = q.discriminant();
  if (disc < 0) throw RootError("quartic has a negative discriminant: " + std::to_string(disc));
  const double b = static_cast<double>(q.c2);
  const double c = static_cast<double>(q.c0);
  const double root = std::sqrt(static_cast<double>(disc));
  const double big = (-b + root) / 2.0;
  if (big < 0.0) throw RootError("quartic has no real roots");
  // the smaller value through the product c0 avoids cancellation
  const double small = big == 0.0 ? 0.0 : c / big;
  if (small < 0.0) throw RootError("quartic has a non-real root pair");
  return {big, small};
}

/// (largest root, smallest root); the smallest is the negative of the largest.
inline std::pair<double, double> quartic_extreme_roots(const Quartic& q) {
  const double top = std::sqrt(squared_roots(q).first);
  return {top, -top};
}

/// All four roots, descending.
inline std::array<double, 4> quartic_roots(const Quartic& q) {
  const auto [big, small] = squared_roots(q);
  const double a = std::sqrt(big);
  const double b = std::sqrt(small);
  return {a, b, -b, -a};
}

// ---------------------------------------------------------------- shift differences

/// f_{s,t}(x) - f_{s-1,t+1}(x) in closed form.
inline double detached_shift_difference(int s, int t, int k, double x) {
  if (s < 2) throw ParameterError("shift difference needs s >= 2");
  return static_cast<double>(s - t - 1) * x * x - static_cast<double>(k) * (s - t);
}

/// Positive root of the detached shift difference: sqrt(k (1 + 1 / (s - t - 1))).
inline double detached_shift_threshold(int s, int t, int k) {
  if (s < 2) throw ParameterError("shift threshold needs s >= 2");
  if (s - t - 1 == 0) throw ParameterError("shift threshold undefined for s = t + 1");
  const double radicand = k * (1.0 + 1.0 / static_cast<double>(s - t - 1));
  if (radicand < 0.0) throw RootError("shift threshold has no real value");
  return std::sqrt(radicand);
}

/// g_{n1,n2}(x) - g_{n1-1,n2+1}(x) in closed form.
inline double linked_shift_difference(int n1, int n2, int k, double x) {
  return static_cast<double>(n1 - n2 - 1) * (x * x - static_cast<double>(k) * k);
}

/// Smallest root of the linked shift difference.
inline double linked_shift_threshold(int k) { return -static_cast<double>(k); }

// ---------------------------------------------------------------- transmissions

inline long long transmission_formula_detached(int s, int t, int k) {
  const long long S = s, T = t, K = k;
  return K * K + (2 * S + 3 * T - 3) * K + S * S + T * T + S * T - S - T;
}

inline long long transmission_formula_linked(int n1, int n2, int k) {
  const long long a = n1, b = n2, K = k;
  return a * a + b * b + a * b - a - b + 2 * K * K;
}

/// Numerator of (2 sigma / n - sqrt(k)) scaled by n, for the detached complement.
inline double transmission_slack_detached(int s, int t, int k) {
  const double S = s, T = t, K = k, r = std::sqrt(K);
  return 2 * K * K + 2 * (2 * S + 3 * T - 3) * K + 2 * S * S + 2 * T * T + 2 * S * T - 2 * S - 2 * T - S * r - T * r -
         K * r;
}

/// Numerator of (2 sigma / n - k) scaled by n, for the linked-cliques complement.
inline double transmission_slack_linked(int n1, int n2, int k) {
  const double a = n1, b = n2, K = k;
  return 2 * a * a + 2 * b * b + 2 * a * b - 2 * (a + b) + 4 * K * K - (a + b) * K;
}

}  // namespace cspec
