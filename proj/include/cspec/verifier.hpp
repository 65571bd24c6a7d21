#pragma once

// Brute-force checks of the extremal statements about complements of graphs
// with given vertex connectivity, plus instance-level checks of the Rayleigh
// arguments behind them and audits of the intermediate inequalities.
//
// Every class scan visits each labeled connected graph G on n vertices with
// connectivity kappa once, solves the spectrum of A(G^c), and folds
// lambda_1(G^c) and lambda_n(G^c) into running minima. Minimal statements
// ("lambda(G^c) > lambda(extremal^c) for all G") are read as: the minimum
// is attained exactly by graphs isomorphic to the named construction and
// every other graph lies above it by more than the tolerance.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cspec/connectivity.hpp"
#include "cspec/constructions.hpp"
#include "cspec/enumeration.hpp"
#include "cspec/graph.hpp"
#include "cspec/io.hpp"
#include "cspec/quotient.hpp"
#include "cspec/spectra.hpp"

namespace cspec {

// ---------------------------------------------------------------- folding minima

struct Candidate {
  double value = 0.0;
  EdgeMask mask = 0;
};

/// Running minimum with every labeled graph within tolerance of it, and the
/// smallest value strictly beyond the tolerance window. Merging is
/// order-independent because candidate values are kept.
struct ExtremeFold {
  double minimum = std::numeric_limits<double>::infinity();
  double runner_up = std::numeric_limits<double>::infinity();
  std::vector<Candidate> witnesses;
  std::size_t count = 0;

  void offer(double value, EdgeMask mask) {
    ++count;
    place(Candidate{value, mask});
  }

  void merge(const ExtremeFold& other) {
    count += other.count;
    runner_up = std::min(runner_up, other.runner_up);
    for (const auto& c : other.witnesses) place(c);
  }

  bool empty() const { return count == 0; }

 private:
  void place(const Candidate& c) {
    if (c.value < minimum) {
      minimum = c.value;
      const double cap = minimum + kEigenTolerance;
      auto keep = std::stable_partition(witnesses.begin(), witnesses.end(),
                                        [&](const Candidate& w) { return w.value <= cap; });
      for (auto it = keep; it != witnesses.end(); ++it) runner_up = std::min(runner_up, it->value);
      witnesses.erase(keep, witnesses.end());
      witnesses.push_back(c);
    } else if (c.value <= minimum + kEigenTolerance) {
      witnesses.push_back(c);
    } else {
      runner_up = std::min(runner_up, c.value);
    }
  }
};

/// Worst deviations seen across every spectrum computed in a scan.
struct QualityStats {
  std::size_t matrices = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  double max_trace_error = 0.0;
  double max_square_trace_error = 0.0;

  void record(const SpectrumQuality& q) {
    ++matrices;
    if (!q.acceptable()) ++failures;
    max_residual = std::max(max_residual, q.residual);
    max_trace_error = std::max(max_trace_error, q.trace_error);
    max_square_trace_error = std::max(max_square_trace_error, q.square_trace_error);
  }

  void merge(const QualityStats& o) {
    matrices += o.matrices;
    failures += o.failures;
    max_residual = std::max(max_residual, o.max_residual);
    max_trace_error = std::max(max_trace_error, o.max_trace_error);
    max_square_trace_error = std::max(max_square_trace_error, o.max_square_trace_error);
  }
};

struct ScanOptions {
  int jobs = 1;
  int shards = 0;          // 0: one shard per job
  bool residuals = true;   // compute eigenvectors so residuals can be checked
  bool allow_large = false;  // permit n = 8
};

/// Spectral extremes of the complements over one connectivity class.
struct ClassScan {
  int n = 0;
  int kappa = 0;
  std::uint64_t masks_scanned = 0;
  std::size_t members = 0;
  std::size_t diameter_two = 0;
  std::size_t diameter_three_plus = 0;
  ExtremeFold radius_diameter_two;
  ExtremeFold radius_diameter_three_plus;
  ExtremeFold radius_all;
  ExtremeFold least_all;
  QualityStats quality;

  void fold_member(const Graph& g, EdgeMask mask, bool residuals) {
    ++members;
    const SymMatrix a = adjacency_matrix(complement(g));
    const Spectrum sp = eigen_symmetric(a, residuals);
    SpectrumQuality q = spectrum_quality(a, sp);
    if (!residuals) q.residual = 0.0;
    quality.record(q);
    const double top = sp.largest();
    const double bottom = sp.smallest();
    radius_all.offer(top, mask);
    least_all.offer(bottom, mask);
    if (is_complete(g)) return;
    if (diameter_at_most_two(g)) {
      ++diameter_two;
      radius_diameter_two.offer(top, mask);
    } else {
      ++diameter_three_plus;
      radius_diameter_three_plus.offer(top, mask);
    }
  }

  void merge(const ClassScan& o) {
    n = o.n;
    kappa = o.kappa;
    masks_scanned += o.masks_scanned;
    members += o.members;
    diameter_two += o.diameter_two;
    diameter_three_plus += o.diameter_three_plus;
    radius_diameter_two.merge(o.radius_diameter_two);
    radius_diameter_three_plus.merge(o.radius_diameter_three_plus);
    radius_all.merge(o.radius_all);
    least_all.merge(o.least_all);
    quality.merge(o.quality);
  }
};

namespace detail {
inline void check_scan_order(int n, const ScanOptions& opt) {
  if (n < 2 || n > kEnumerationMaxOrder) throw std::invalid_argument("class scans support 2 <= n <= 8");
  if (n == 8 && !opt.allow_large) {
    throw std::invalid_argument("n = 8 scans 268M edge masks; pass allow_large to confirm");
  }
}
inline int shard_count(const ScanOptions& opt) { return opt.shards > 0 ? opt.shards : std::max(opt.jobs, 1); }
}  // namespace detail

inline ClassScan scan_class(int n, int kappa, const ScanOptions& opt = {}) {
  detail::check_scan_order(n, opt);
  const ClassFilter filter{n, kappa, DiameterRule::any};
  validate_filter(filter);
  auto scan = parallel_fold<ClassScan>(
      split_masks(n, detail::shard_count(opt)), opt.jobs,
      [&](ClassScan& st, Shard shard) {
        st.n = n;
        st.kappa = kappa;
        st.masks_scanned = shard.hi - shard.lo;
        enumerate_shard(filter, shard, [&](const Graph& g, EdgeMask m) { st.fold_member(g, m, opt.residuals); });
      },
      [](ClassScan& into, const ClassScan& from) { into.merge(from); });
  scan.n = n;
  scan.kappa = kappa;
  return scan;
}

/// One pass over every edge mask, bucketing connected graphs by connectivity.
/// Entry kappa of the result is the scan of that class (entry 0 unused).
inline std::vector<ClassScan> scan_all_classes(int n, const ScanOptions& opt = {}) {
  detail::check_scan_order(n, opt);
  using Buckets = std::vector<ClassScan>;
  auto buckets = parallel_fold<Buckets>(
      split_masks(n, detail::shard_count(opt)), opt.jobs,
      [&](Buckets& st, Shard shard) {
        st.assign(static_cast<std::size_t>(n), ClassScan{});
        const MaskCodec codec(n);
        for (EdgeMask mask = shard.lo; mask < shard.hi; ++mask) {
          if (std::popcount(mask) < n - 1) continue;
          const Graph g = codec.decode(mask);
          if (!is_connected(g)) continue;
          const int kappa = vertex_connectivity_exhaustive(g);
          st[static_cast<std::size_t>(kappa)].fold_member(g, mask, opt.residuals);
        }
        for (auto& b : st) b.masks_scanned = shard.hi - shard.lo;
      },
      [n](Buckets& into, const Buckets& from) {
        if (into.empty()) into.assign(static_cast<std::size_t>(n), ClassScan{});
        for (std::size_t k = 0; k < from.size(); ++k) into[k].merge(from[k]);
      });
  for (std::size_t k = 0; k < buckets.size(); ++k) {
    buckets[k].n = n;
    buckets[k].kappa = static_cast<int>(k);
  }
  return buckets;
}

// ---------------------------------------------------------------- reports

enum class Verdict { confirmed, tie_within_tolerance, refuted, vacuous, no_prediction };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::tie_within_tolerance: return "tie-within-tolerance";
    case Verdict::refuted: return "refuted";
    case Verdict::vacuous: return "vacuous";
    case Verdict::no_prediction: return "no-prediction";
  }
  return "?";
}

/// Which statement a report checks; the token is the CLI selector.
enum class Claim { diameter_two_radius_bound, detached_radius_minimum, linked_least_minimum, cut_saturation };

inline const char* claim_token(Claim c) {
  switch (c) {
    case Claim::diameter_two_radius_bound: return "3.1";
    case Claim::detached_radius_minimum: return "3.4";
    case Claim::linked_least_minimum: return "4.3";
    case Claim::cut_saturation: return "lemma3.2";
  }
  return "?";
}

inline Claim parse_claim(const std::string& token) {
  for (Claim c : {Claim::diameter_two_radius_bound, Claim::detached_radius_minimum, Claim::linked_least_minimum,
                  Claim::cut_saturation})
    if (token == claim_token(c)) return c;
  throw std::invalid_argument("unknown theorem '" + token + "' (expected 3.1, 3.4, 4.3 or lemma3.2)");
}

struct VariantOutcome {
  LinkVariant variant = LinkVariant::join;
  std::string graph6;
  double value = 0.0;
  bool in_class = false;
  bool is_minimizer = false;
};

struct ExtremalReport {
  Claim claim = Claim::diameter_two_radius_bound;
  int n = 0;
  int kappa = 0;
  std::size_t class_size = 0;
  std::uint64_t masks_scanned = 0;
  std::optional<double> min_value;
  std::optional<double> runner_up;
  std::size_t labeled_witnesses = 0;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::string predicted_graph;         // graph6 in construction layout
  std::optional<double> predicted_value;
  std::optional<double> predicted_measured;  // eigensolver on the predicted graph
  std::optional<Quartic> predicted_quartic;
  bool predicted_in_class = false;
  bool predicted_is_witness = false;
  bool all_witnesses_predicted = false;
  std::optional<double> unrestricted_min;  // detached radius: minimum over all diameters
  std::optional<double> diameter_two_min;
  std::vector<VariantOutcome> variants;
  std::optional<LinkVariant> resolved_variant;
  QualityStats quality;
  Verdict verdict = Verdict::vacuous;
  std::vector<std::string> notes;
};

namespace detail {

inline std::vector<std::string> canonical_witnesses(int n, const ExtremeFold& fold) {
  const MaskCodec codec(n);
  std::set<EdgeMask> masks;
  for (const auto& c : fold.witnesses) masks.insert(c.mask);
  std::set<std::string> forms;
  for (EdgeMask m : masks) forms.insert(canonical_form(codec.decode(m)));
  return {forms.begin(), forms.end()};
}

inline void fill_from_fold(ExtremalReport& r, const ClassScan& scan, const ExtremeFold& fold) {
  r.n = scan.n;
  r.kappa = scan.kappa;
  r.class_size = fold.count;
  r.masks_scanned = scan.masks_scanned;
  r.quality = scan.quality;
  if (fold.empty()) return;
  r.min_value = fold.minimum;
  if (std::isfinite(fold.runner_up)) r.runner_up = fold.runner_up;
  r.labeled_witnesses = fold.witnesses.size();
  r.witnesses = canonical_witnesses(scan.n, fold);
}

inline void compare_with_prediction(ExtremalReport& r, const Graph& predicted) {
  r.predicted_graph = graph6_encode(predicted);
  const std::string canon = canonical_form(predicted);
  r.predicted_is_witness = std::find(r.witnesses.begin(), r.witnesses.end(), canon) != r.witnesses.end();
  r.all_witnesses_predicted = !r.witnesses.empty() &&
                              std::all_of(r.witnesses.begin(), r.witnesses.end(), [&](const std::string& w) { return w == canon; });
}

// Minimum-attainment verdict shared by the two minimizer statements.
inline Verdict minimizer_verdict(const ExtremalReport& r) {
  if (!r.min_value) return Verdict::vacuous;
  if (!r.predicted_value) return Verdict::no_prediction;
  if (std::abs(*r.min_value - *r.predicted_value) > kEigenTolerance) return Verdict::refuted;
  if (!r.predicted_is_witness) return Verdict::refuted;
  return r.all_witnesses_predicted ? Verdict::confirmed : Verdict::tie_within_tolerance;
}

}  // namespace detail

/// Diameter-2 members satisfy lambda_1(G^c) >= sqrt(n - kappa - 1), attained by
/// the three-clique join (1, n - kappa - 1, kappa), whose complement is
/// K_{1, n-kappa-1} plus kappa isolated vertices.
inline ExtremalReport verify_diameter_two_bound(const ClassScan& scan) {
  ExtremalReport r;
  r.claim = Claim::diameter_two_radius_bound;
  detail::fill_from_fold(r, scan, scan.radius_diameter_two);
  const int n = scan.n;
  const int kappa = scan.kappa;
  r.notes.push_back("class: members with diameter exactly 2");
  if (!r.min_value) {
    r.verdict = Verdict::vacuous;
    r.notes.push_back(kappa == n - 1 ? "degenerate: only the complete graph, diameter 1" : "empty class");
    return r;
  }
  const double bound = std::sqrt(static_cast<double>(n - kappa - 1));
  r.predicted_value = bound;
  const Graph predicted = build_three_clique_join(JoinParams{1, n - kappa - 1, kappa});
  r.predicted_in_class = validate_membership(predicted, n, kappa) && passes_diameter_rule(predicted, DiameterRule::exactly_two);
  r.predicted_measured = spectral_radius(complement(predicted));
  detail::compare_with_prediction(r, predicted);

  const bool holds = *r.min_value >= bound - kEigenTolerance;
  const bool attained = std::abs(*r.min_value - bound) <= kEigenTolerance;
  if (!holds) {
    r.verdict = Verdict::refuted;
    r.notes.push_back("bound violated");
  } else if (!attained || !r.predicted_is_witness) {
    r.verdict = Verdict::refuted;
    r.notes.push_back("bound holds but is not attained by the predicted construction");
  } else {
    r.verdict = r.all_witnesses_predicted ? Verdict::confirmed : Verdict::tie_within_tolerance;
    if (!r.all_witnesses_predicted) r.notes.push_back("bound also attained by non-isomorphic graphs");
  }
  return r;
}

/// Among members of diameter >= 3, lambda_1(G^c) is minimized exactly by the
/// detached join (1, n - kappa - 1, kappa).
inline ExtremalReport verify_detached_radius_minimum(const ClassScan& scan) {
  ExtremalReport r;
  r.claim = Claim::detached_radius_minimum;
  detail::fill_from_fold(r, scan, scan.radius_diameter_three_plus);
  const int n = scan.n;
  const int kappa = scan.kappa;
  r.notes.push_back("class: members with diameter at least 3");
  r.notes.push_back("strict inequality read as: minimum attained exactly at the construction, strict elsewhere");
  if (!scan.radius_all.empty()) r.unrestricted_min = scan.radius_all.minimum;
  if (!scan.radius_diameter_two.empty()) r.diameter_two_min = scan.radius_diameter_two.minimum;

  const JoinParams p{1, n - kappa - 1, kappa};
  try {
    validate_detached(p);
  } catch (const ParameterError& e) {
    r.notes.push_back(std::string("no prediction: ") + e.what());
    r.verdict = r.min_value ? Verdict::no_prediction : Verdict::vacuous;
    return r;
  }
  const Graph predicted = build_detached_join(p);
  r.predicted_quartic = quartic_detached(p.s, p.t, p.k);
  r.predicted_value = quartic_extreme_roots(*r.predicted_quartic).first;
  r.predicted_measured = spectral_radius(complement(predicted));
  r.predicted_in_class = validate_membership(predicted, n, kappa) && passes_diameter_rule(predicted, DiameterRule::at_least_three);
  if (r.min_value) detail::compare_with_prediction(r, predicted);
  else r.predicted_graph = graph6_encode(predicted);
  r.verdict = detail::minimizer_verdict(r);
  if (r.unrestricted_min && r.predicted_value && *r.unrestricted_min < *r.predicted_value - kEigenTolerance) {
    r.notes.push_back("diameter-2 members go below the prediction; the statement needs the diameter restriction");
  }
  return r;
}

/// Over the whole class, lambda_n(G^c) is minimized exactly by the linked
/// cliques (ceil(n/2), floor(n/2), kappa). The verdict is taken against the
/// join variant, whose quotient quartic gives the predicted value; the
/// matching variant is measured alongside and the report says which of the
/// two (if either) is the true minimizer.
inline ExtremalReport verify_linked_least_minimum(const ClassScan& scan) {
  ExtremalReport r;
  r.claim = Claim::linked_least_minimum;
  detail::fill_from_fold(r, scan, scan.least_all);
  const int n = scan.n;
  const int kappa = scan.kappa;
  r.notes.push_back("class: all members");
  r.notes.push_back("strict inequality read as: minimum attained exactly at the construction, strict elsewhere");
  const int n1 = (n + 1) / 2;
  const int n2 = n / 2;
  const LinkParams join{n1, n2, kappa, LinkVariant::join};
  try {
    validate_linked(join);
  } catch (const ParameterError& e) {
    r.notes.push_back(std::string("no prediction: ") + e.what());
    r.verdict = r.min_value ? Verdict::no_prediction : Verdict::vacuous;
    return r;
  }
  r.predicted_quartic = quartic_linked(n1, n2, kappa);
  r.predicted_value = quartic_extreme_roots(*r.predicted_quartic).second;
  const Graph predicted = build_linked_cliques(join);
  r.predicted_measured = least_eigenvalue(complement(predicted));
  r.predicted_in_class = validate_membership(predicted, n, kappa);
  if (r.min_value) detail::compare_with_prediction(r, predicted);
  else r.predicted_graph = graph6_encode(predicted);

  for (LinkVariant v : {LinkVariant::join, LinkVariant::matching}) {
    const Graph g = build_linked_cliques(LinkParams{n1, n2, kappa, v});
    VariantOutcome o;
    o.variant = v;
    o.graph6 = graph6_encode(g);
    o.value = least_eigenvalue(complement(g));
    o.in_class = validate_membership(g, n, kappa);
    const std::string canon = canonical_form(g);
    o.is_minimizer = r.min_value && std::abs(o.value - *r.min_value) <= kEigenTolerance &&
                     std::find(r.witnesses.begin(), r.witnesses.end(), canon) != r.witnesses.end();
    r.variants.push_back(o);
  }
  for (const auto& o : r.variants) {
    if (o.is_minimizer) {
      r.resolved_variant = o.variant;
      break;
    }
  }
  r.verdict = detail::minimizer_verdict(r);
  if (r.resolved_variant == LinkVariant::matching && !r.variants.front().is_minimizer) {
    r.notes.push_back("discrepancy: the matching variant is the true minimizer; the join-variant quartic does not predict it");
  } else if (!r.resolved_variant && r.min_value) {
    r.notes.push_back("neither variant attains the class minimum");
  }
  return r;
}

inline ExtremalReport verify_diameter_two_bound(int n, int kappa, const ScanOptions& opt = {}) {
  return verify_diameter_two_bound(scan_class(n, kappa, opt));
}
inline ExtremalReport verify_detached_radius_minimum(int n, int kappa, const ScanOptions& opt = {}) {
  return verify_detached_radius_minimum(scan_class(n, kappa, opt));
}
inline ExtremalReport verify_linked_least_minimum(int n, int kappa, const ScanOptions& opt = {}) {
  return verify_linked_least_minimum(scan_class(n, kappa, opt));
}

// ---------------------------------------------------------------- cut saturation

/// Saturating G around a minimum cut with a detached vertex yields a detached
/// join H containing G; with x the top eigenvector of A(H^c),
/// lambda_1(G^c) >= x^T A(G^c) x >= x^T A(H^c) x = lambda_1(H^c).
struct CutSaturationReport {
  int n = 0;
  int kappa = 0;
  std::size_t graphs = 0;
  std::size_t cuts = 0;
  std::size_t profiles_with_detached = 0;
  std::size_t graphs_without_detached_cut = 0;
  std::size_t profiles_with_valid_params = 0;
  std::size_t containment_failures = 0;
  std::size_t gap_violations = 0;        // x^T A(G^c) x < x^T A(H^c) x
  std::size_t radius_violations = 0;     // lambda_1(G^c) < lambda_1(H^c)
  std::size_t quartic_mismatches = 0;    // lambda_1(H^c) vs quotient quartic, valid params only
  std::size_t extremal_order_violations = 0;  // lambda_1(H^c) below the (1, n-kappa-1) construction
  double min_gap = std::numeric_limits<double>::infinity();
  std::optional<double> extremal_value;
  Verdict verdict = Verdict::vacuous;
  std::vector<std::string> notes;
};

inline CutSaturationReport verify_cut_saturation(int n, int kappa, const ScanOptions& opt = {}) {
  detail::check_scan_order(n, opt);
  std::optional<double> extremal_value;
  try {
    validate_detached(JoinParams{1, n - kappa - 1, kappa});
    extremal_value = quartic_extreme_roots(quartic_detached(1, n - kappa - 1, kappa)).first;
  } catch (const ParameterError&) {
  }

  const ClassFilter filter{n, kappa, DiameterRule::at_least_three};
  CutSaturationReport r = parallel_fold<CutSaturationReport>(
      split_masks(n, detail::shard_count(opt)), opt.jobs,
      [&](CutSaturationReport& st, Shard shard) {
        enumerate_shard(filter, shard, [&](const Graph& g, EdgeMask) {
          ++st.graphs;
          const double radius = spectral_radius(complement(g));
          bool any_detached = false;
          for (VertexSet cut : all_minimum_cuts(g)) {
            ++st.cuts;
            const CutProfile p = cut_profile(g, cut);
            if (!p.detached) continue;
            any_detached = true;
            ++st.profiles_with_detached;
            const Graph h = saturate_around_cut(g, p);
            for (auto [u, v] : g.edges())
              if (!h.adjacent(u, v)) {
                ++st.containment_failures;
                break;
              }
            const Spectrum sh = eigen_symmetric(complement(h), true);
            const double gap = complement_rayleigh_gap(g, h, sh.vectors.front());
            st.min_gap = std::min(st.min_gap, gap);
            if (gap < -kEigenTolerance) ++st.gap_violations;
            if (radius < sh.largest() - kEigenTolerance) ++st.radius_violations;
            if (p.s() >= 1 && p.t() >= 2) {
              const double q = quartic_extreme_roots(quartic_detached(p.s(), p.t(), kappa)).first;
              if (std::abs(q - sh.largest()) > kEigenTolerance) ++st.quartic_mismatches;
            }
            try {
              validate_detached(JoinParams{p.s(), p.t(), kappa});
              ++st.profiles_with_valid_params;
            } catch (const ParameterError&) {
            }
            if (extremal_value && sh.largest() < *extremal_value - kEigenTolerance) ++st.extremal_order_violations;
          }
          if (!any_detached) ++st.graphs_without_detached_cut;
        });
      },
      [](CutSaturationReport& into, const CutSaturationReport& from) {
        into.graphs += from.graphs;
        into.cuts += from.cuts;
        into.profiles_with_detached += from.profiles_with_detached;
        into.graphs_without_detached_cut += from.graphs_without_detached_cut;
        into.profiles_with_valid_params += from.profiles_with_valid_params;
        into.containment_failures += from.containment_failures;
        into.gap_violations += from.gap_violations;
        into.radius_violations += from.radius_violations;
        into.quartic_mismatches += from.quartic_mismatches;
        into.extremal_order_violations += from.extremal_order_violations;
        into.min_gap = std::min(into.min_gap, from.min_gap);
      });
  r.n = n;
  r.kappa = kappa;
  r.extremal_value = extremal_value;
  if (r.graphs == 0) {
    r.verdict = Verdict::vacuous;
    r.notes.push_back("no members with diameter at least 3");
    return r;
  }
  const bool ok = r.containment_failures == 0 && r.gap_violations == 0 && r.radius_violations == 0 &&
                  r.quartic_mismatches == 0 && r.extremal_order_violations == 0;
  r.verdict = ok ? Verdict::confirmed : Verdict::refuted;
  if (r.graphs_without_detached_cut > 0) {
    r.notes.push_back("some members have no minimum cut with a vertex outside the cut's neighbourhood");
  }
  return r;
}

// ---------------------------------------------------------------- perturbations

/// Vertices split by the sign of an eigenvector; zero entries go to `plus`.
struct SignPartition {
  VertexSet plus = 0;
  VertexSet minus = 0;

  SignPartition restricted(VertexSet part) const { return {plus & part, minus & part}; }
  bool same_sign(int u, int v) const {
    return (contains(plus, u) && contains(plus, v)) || (contains(minus, u) && contains(minus, v));
  }
};

inline SignPartition sign_partition(std::span<const double> x) {
  SignPartition s;
  for (std::size_t i = 0; i < x.size(); ++i) (x[i] >= 0.0 ? s.plus : s.minus) |= vertex_bit(static_cast<int>(i));
  return s;
}

enum class PerturbationKind { add_within_sign, delete_across_sign };

/// Products x_u x_v at or below this magnitude count as zero.
inline constexpr double kZeroProduct = 1e-9;

struct PerturbationReport {
  std::size_t pairs = 0;
  std::size_t skipped_disconnecting = 0;
  std::size_t strict_pairs = 0;
  std::size_t violations = 0;          // lambda_n rose by more than 1e-12
  std::size_t strict_violations = 0;   // x_u x_v != 0 but no strict decrease
  std::size_t rayleigh_violations = 0; // above the Rayleigh bound lambda_n - 2|x_u x_v|
  double max_increase = -std::numeric_limits<double>::infinity();

  bool vacuous() const { return pairs == 0; }
  bool passed() const { return violations == 0 && strict_violations == 0 && rayleigh_violations == 0; }

  void merge(const PerturbationReport& o) {
    pairs += o.pairs;
    skipped_disconnecting += o.skipped_disconnecting;
    strict_pairs += o.strict_pairs;
    violations += o.violations;
    strict_violations += o.strict_violations;
    rayleigh_violations += o.rayleigh_violations;
    max_increase = std::max(max_increase, o.max_increase);
  }
};

/// Adds each non-edge of g between same-sign vertices of the least eigenvector
/// of A(g^c) (or deletes each edge between opposite-sign vertices that keeps g
/// connected) and checks that lambda_n of the complement never rises.
inline PerturbationReport perturbation_check(const Graph& g, PerturbationKind kind) {
  require_connected(g, "perturbation_check");
  const Spectrum sp = eigen_symmetric(complement(g), true);
  const double base = sp.smallest();
  const std::vector<double>& x = sp.vectors.back();
  const SignPartition signs = sign_partition(x);
  PerturbationReport r;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      Graph h;
      if (kind == PerturbationKind::add_within_sign) {
        if (g.adjacent(u, v) || !signs.same_sign(u, v)) continue;
        h = g.with_edge(u, v);
      } else {
        if (!g.adjacent(u, v) || signs.same_sign(u, v)) continue;
        h = g.without_edge(u, v);
        if (!is_connected(h)) {
          ++r.skipped_disconnecting;
          continue;
        }
      }
      ++r.pairs;
      const double product = x[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(v)];
      const double moved = least_eigenvalue(complement(h));
      r.max_increase = std::max(r.max_increase, moved - base);
      if (moved > base + 1e-12) ++r.violations;
      // x^T A(h^c) x = lambda_n(g^c) - 2 |x_u x_v| for either move
      if (moved > base - 2.0 * std::abs(product) + 1e-12) ++r.rayleigh_violations;
      if (std::abs(product) > kZeroProduct) {
        ++r.strict_pairs;
        if (!(moved < base)) ++r.strict_violations;
      }
    }
  }
  return r;
}

inline PerturbationReport perturbation_check(const Graph& g) {
  PerturbationReport r = perturbation_check(g, PerturbationKind::add_within_sign);
  r.merge(perturbation_check(g, PerturbationKind::delete_across_sign));
  return r;
}

// ---------------------------------------------------------------- sweeps

/// One parameter tuple of the detached-join quartic sweep.
struct DetachedSweepRow {
  int s = 0;
  int t = 0;
  int k = 0;
  Quartic quartic;
  double max_root = 0.0;
  std::optional<double> shifted_max_root;  // (s-1, t+1), when s >= 2
  std::optional<bool> monotone;
  std::optional<double> threshold;
  std::optional<bool> above_threshold;
  double midpoint = 0.0;  // sqrt((k + st) / 2)
  bool above_midpoint = false;
  bool negative_at_midpoint = false;

  bool ok() const {
    return monotone.value_or(true) && above_threshold.value_or(true) && above_midpoint && negative_at_midpoint;
  }
};

/// All 1 <= s <= t, t >= 2, k >= 1 with s + t + k <= max_n.
inline std::vector<DetachedSweepRow> sweep_detached(int max_n) {
  std::vector<DetachedSweepRow> rows;
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      for (int s = 1; 2 * s <= n - k; ++s) {
        const int t = n - k - s;
        DetachedSweepRow row;
        row.s = s;
        row.t = t;
        row.k = k;
        row.quartic = quartic_detached(s, t, k);
        row.max_root = quartic_extreme_roots(row.quartic).first;
        if (s >= 2) {
          row.shifted_max_root = quartic_extreme_roots(quartic_detached(s - 1, t + 1, k)).first;
          row.monotone = row.max_root > *row.shifted_max_root;
          row.threshold = detached_shift_threshold(s, t, k);
          row.above_threshold = row.max_root > *row.threshold;
        }
        row.midpoint = std::sqrt((k + static_cast<double>(s) * t) / 2.0);
        row.above_midpoint = row.max_root > row.midpoint;
        row.negative_at_midpoint = row.quartic(row.midpoint) < 0.0;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

/// One parameter tuple of the linked-cliques quartic sweep.
struct LinkedSweepRow {
  int n1 = 0;
  int n2 = 0;
  int k = 0;
  Quartic quartic;
  double min_root = 0.0;
  std::optional<double> shifted_min_root;  // (n1-1, n2+1), when n1 > n2 + 1
  std::optional<bool> monotone;
  bool radius_above_k = false;
  double difference_at_threshold = 0.0;

  bool ok() const { return monotone.value_or(true) && radius_above_k && difference_at_threshold == 0.0; }
};

/// All n1 >= n2 >= k >= 1 with n1 + n2 > 2k and n1 + n2 <= max_n.
inline std::vector<LinkedSweepRow> sweep_linked(int max_n) {
  std::vector<LinkedSweepRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      for (int n2 = k; 2 * n2 <= n; ++n2) {
        const int n1 = n - n2;
        LinkedSweepRow row;
        row.n1 = n1;
        row.n2 = n2;
        row.k = k;
        row.quartic = quartic_linked(n1, n2, k);
        const auto [top, bottom] = quartic_extreme_roots(row.quartic);
        row.min_root = bottom;
        row.radius_above_k = top > k;
        if (n1 > n2 + 1) {
          row.shifted_min_root = quartic_extreme_roots(quartic_linked(n1 - 1, n2 + 1, k)).second;
          row.monotone = row.min_root > *row.shifted_min_root;
        }
        row.difference_at_threshold = linked_shift_difference(n1, n2, k, linked_shift_threshold(k));
        rows.push_back(row);
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------- audits

/// Evaluates the intermediate inequalities on small instances. Failures are
/// findings, not errors.
inline std::vector<AuditRecord> audit_suite(int max_n) {
  std::vector<AuditRecord> out;
  out.push_back(transmission_bound_audit(path_graph(3), "P3"));
  for (int n = 2; n <= std::min(max_n, 8); ++n) out.push_back(transmission_bound_audit(complete_graph(n), "K" + std::to_string(n)));

  for (int n = 4; n <= max_n; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      for (int s = 1; 2 * s <= n - k; ++s) {
        const JoinParams p{s, n - k - s, k};
        try {
          validate_detached(p);
        } catch (const ParameterError&) {
          continue;
        }
        const std::string tag = "B^c(" + std::to_string(p.s) + "," + std::to_string(p.t) + "," + std::to_string(k) + ")";
        const Graph gc = complement(build_detached_join(p));
        out.push_back(transmission_bound_audit(gc, tag));

        const double radius = spectral_radius(gc);
        AuditRecord slack{"detached-transmission-slack-positive", tag, transmission_slack_detached(p.s, p.t, k), 0.0, false};
        slack.holds = slack.left > 0.0;
        out.push_back(slack);

        AuditRecord above_root{"detached-radius-above-sqrt-kappa", tag, radius, std::sqrt(static_cast<double>(k)), false};
        above_root.holds = above_root.left > above_root.right + kEigenTolerance;
        out.push_back(above_root);

        if (p.s >= 2) {
          AuditRecord above_theta{"detached-radius-above-threshold", tag, radius, detached_shift_threshold(p.s, p.t, k), false};
          above_theta.holds = above_theta.left > above_theta.right + kEigenTolerance;
          out.push_back(above_theta);
        }
      }
    }
  }

  for (int n = 3; n <= max_n; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      for (int n2 = k; 2 * n2 <= n; ++n2) {
        const LinkParams p{n - n2, n2, k, LinkVariant::join};
        const std::string tag = "BB^c(" + std::to_string(p.n1) + "," + std::to_string(p.n2) + "," + std::to_string(k) + ")";
        const Graph gc = complement(build_linked_cliques(p));
        if (is_connected(gc)) out.push_back(transmission_bound_audit(gc, tag));

        AuditRecord slack{"linked-transmission-slack-positive", tag, transmission_slack_linked(p.n1, p.n2, k), 0.0, false};
        slack.holds = slack.left > 0.0;
        out.push_back(slack);

        AuditRecord above{"linked-radius-above-kappa", tag, spectral_radius(gc), static_cast<double>(k), false};
        above.holds = above.left > above.right + kEigenTolerance;
        out.push_back(above);
      }
    }
  }
  return out;
}

}  // namespace cspec
