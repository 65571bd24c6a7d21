#pragma once

// JSON and CSV serialization of spectra, reports, sweeps and audits.

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cspec/io.hpp"
#include "cspec/quotient.hpp"
#include "cspec/spectra.hpp"
#include "cspec/verifier.hpp"

namespace cspec {

using json = nlohmann::json;

/// Full precision unless a digit count is given.
inline constexpr int kFullPrecision = std::numeric_limits<double>::max_digits10;

inline double round_significant(double x, int digits) {
  if (digits >= kFullPrecision || !std::isfinite(x)) return x;
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return std::stod(s.str());
}

inline std::string format_number(double x, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

inline json quartic_json(const Quartic& q) {
  return json{{"coefficients", {1, 0, q.c2, 0, q.c0}},
              {"family", q.source == QuarticSource::detached_join ? "B" : "BB"},
              {"params", q.params}};
}

inline json spectrum_json(const Graph& g, const Spectrum& sp, int digits = kFullPrecision) {
  json values = json::array();
  for (double v : sp.values) values.push_back(round_significant(v, digits));
  return json{{"n", g.order()},
              {"graph6", g.order() <= kGraph6MaxOrder ? graph6_encode(g) : std::string{}},
              {"values", values},
              {"lambda_1", round_significant(sp.largest(), digits)},
              {"lambda_n", round_significant(sp.smallest(), digits)},
              {"residual", sp.residual}};
}

inline json report_json(const ExtremalReport& r, int digits = kFullPrecision) {
  auto num = [&](const std::optional<double>& v) -> json {
    return v ? json(round_significant(*v, digits)) : json(nullptr);
  };
  json j{{"theorem", claim_token(r.claim)},
         {"n", r.n},
         {"kappa", r.kappa},
         {"class_size", r.class_size},
         {"masks_scanned", r.masks_scanned},
         {"min_value", num(r.min_value)},
         {"runner_up", num(r.runner_up)},
         {"labeled_witnesses", r.labeled_witnesses},
         {"witnesses", r.witnesses},
         {"predicted_graph", r.predicted_graph},
         {"predicted_value", num(r.predicted_value)},
         {"predicted_measured", num(r.predicted_measured)},
         {"predicted_in_class", r.predicted_in_class},
         {"predicted_is_witness", r.predicted_is_witness},
         {"all_witnesses_predicted", r.all_witnesses_predicted},
         {"verdict", to_string(r.verdict)},
         {"audit_notes", r.notes},
         {"eigensolver", {{"matrices", r.quality.matrices},
                          {"failures", r.quality.failures},
                          {"max_residual", r.quality.max_residual},
                          {"max_trace_error", r.quality.max_trace_error},
                          {"max_square_trace_error", r.quality.max_square_trace_error}}}};
  if (r.predicted_quartic) j["predicted_quartic"] = quartic_json(*r.predicted_quartic);
  if (r.unrestricted_min) j["unrestricted_min"] = num(r.unrestricted_min);
  if (r.diameter_two_min) j["diameter_two_min"] = num(r.diameter_two_min);
  if (!r.variants.empty()) {
    json vs = json::array();
    for (const auto& v : r.variants) {
      vs.push_back({{"variant", to_string(v.variant)},
                    {"graph6", v.graph6},
                    {"value", round_significant(v.value, digits)},
                    {"in_class", v.in_class},
                    {"is_minimizer", v.is_minimizer}});
    }
    j["variants"] = vs;
    j["resolved_variant"] = r.resolved_variant ? json(to_string(*r.resolved_variant)) : json(nullptr);
  }
  return j;
}

inline json report_json(const CutSaturationReport& r, int digits = kFullPrecision) {
  json j{{"theorem", claim_token(Claim::cut_saturation)},
         {"n", r.n},
         {"kappa", r.kappa},
         {"class_size", r.graphs},
         {"minimum_cuts", r.cuts},
         {"profiles_with_detached_vertex", r.profiles_with_detached},
         {"graphs_without_detached_cut", r.graphs_without_detached_cut},
         {"profiles_with_valid_params", r.profiles_with_valid_params},
         {"containment_failures", r.containment_failures},
         {"gap_violations", r.gap_violations},
         {"radius_violations", r.radius_violations},
         {"quartic_mismatches", r.quartic_mismatches},
         {"extremal_order_violations", r.extremal_order_violations},
         {"min_gap", std::isfinite(r.min_gap) ? json(round_significant(r.min_gap, digits)) : json(nullptr)},
         {"predicted_value", r.extremal_value ? json(round_significant(*r.extremal_value, digits)) : json(nullptr)},
         {"verdict", to_string(r.verdict)},
         {"audit_notes", r.notes}};
  return j;
}

inline std::string detached_sweep_csv(const std::vector<DetachedSweepRow>& rows, int digits = 12) {
  std::ostringstream out;
  out << "s,t,kappa,c2,c0,max_root,shifted_max_root,monotone,threshold,above_threshold,midpoint,above_midpoint,"
         "negative_at_midpoint,ok\n";
  auto opt = [&](const std::optional<double>& v) { return v ? format_number(*v, digits) : std::string{}; };
  auto flag = [](const std::optional<bool>& b) { return b ? std::string(*b ? "1" : "0") : std::string{}; };
  for (const auto& r : rows) {
    out << r.s << ',' << r.t << ',' << r.k << ',' << r.quartic.c2 << ',' << r.quartic.c0 << ','
        << format_number(r.max_root, digits) << ',' << opt(r.shifted_max_root) << ',' << flag(r.monotone) << ','
        << opt(r.threshold) << ',' << flag(r.above_threshold) << ',' << format_number(r.midpoint, digits) << ','
        << (r.above_midpoint ? 1 : 0) << ',' << (r.negative_at_midpoint ? 1 : 0) << ',' << (r.ok() ? 1 : 0) << '\n';
  }
  return out.str();
}

inline std::string linked_sweep_csv(const std::vector<LinkedSweepRow>& rows, int digits = 12) {
  std::ostringstream out;
  out << "n1,n2,kappa,c2,c0,min_root,shifted_min_root,monotone,radius_above_kappa,difference_at_threshold,ok\n";
  for (const auto& r : rows) {
    out << r.n1 << ',' << r.n2 << ',' << r.k << ',' << r.quartic.c2 << ',' << r.quartic.c0 << ','
        << format_number(r.min_root, digits) << ','
        << (r.shifted_min_root ? format_number(*r.shifted_min_root, digits) : std::string{}) << ','
        << (r.monotone ? std::string(*r.monotone ? "1" : "0") : std::string{}) << ',' << (r.radius_above_k ? 1 : 0)
        << ',' << format_number(r.difference_at_threshold, digits) << ',' << (r.ok() ? 1 : 0) << '\n';
  }
  return out.str();
}

inline std::string audit_csv(const std::vector<AuditRecord>& records, int digits = 12) {
  std::ostringstream out;
  out << "claim,instance,left,right,gap,holds\n";
  for (const auto& r : records) {
    out << r.claim << ",\"" << r.instance << "\"," << format_number(r.left, digits) << ','
        << format_number(r.right, digits) << ',' << format_number(r.gap(), digits) << ','
        << (r.holds ? "yes" : "no") << '\n';
  }
  return out.str();
}

}  // namespace cspec
