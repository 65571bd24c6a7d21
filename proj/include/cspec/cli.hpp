#pragma once

// Command-line frontend. `run` is the whole program; the tools/ main only
// forwards argv and the standard streams.
//
// Exit codes: 0 all checks pass, 1 a verdict refuted or a sweep row failed,
// 2 usage or parameter error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cspec/constructions.hpp"
#include "cspec/enumeration.hpp"
#include "cspec/io.hpp"
#include "cspec/quotient.hpp"
#include "cspec/report.hpp"
#include "cspec/spectra.hpp"
#include "cspec/verifier.hpp"

namespace cspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kDigits = 12;

namespace detail {

struct ConstructArgs {
  std::string family;
  std::optional<int> s, t, k, n1, n2;
  std::string variant = "join";
  bool complement = false;
  std::string format = "graph6";
};

struct SpectrumArgs {
  std::string input = "-";
  std::string format = "graph6";
};

struct EnumerateArgs {
  int n = 0;
  int kappa = 0;
  std::string diameter = "any";
  bool count_only = false;
  bool dedup = false;
};

struct VerifyArgs {
  std::string theorem;
  int n = 0;
  int kappa = 0;
  std::string out;
};

struct SweepArgs {
  std::string lemma;
  int max_n = 0;
};

inline int need(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (!v) throw ParameterError(std::string(flag) + " is required for family " + family);
  return *v;
}

inline void reject(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (v) throw ParameterError(std::string(flag) + " does not apply to family " + family);
}

inline int construct(const ConstructArgs& a, std::ostream& out) {
  Graph g;
  json params;
  if (a.family == "calB" || a.family == "B") {
    reject(a.n1, "--n1", a.family);
    reject(a.n2, "--n2", a.family);
    const JoinParams p{need(a.s, "--s", a.family), need(a.t, "--t", a.family), need(a.k, "--k", a.family)};
    g = a.family == "B" ? build_detached_join(p) : build_three_clique_join(p);
    params = {{"s", p.s}, {"t", p.t}, {"k", p.k}};
  } else {
    reject(a.s, "--s", a.family);
    reject(a.t, "--t", a.family);
    const LinkParams p{need(a.n1, "--n1", a.family), need(a.n2, "--n2", a.family), need(a.k, "--k", a.family),
                       parse_link_variant(a.variant)};
    g = build_linked_cliques(p);
    params = {{"n1", p.n1}, {"n2", p.n2}, {"k", p.k}, {"variant", to_string(p.variant)}};
  }
  if (a.complement) g = complement(g);

  if (a.format == "graph6") {
    out << graph6_encode(g) << '\n';
  } else if (a.format == "edgelist") {
    out << edgelist_encode(g);
  } else {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    out << json{{"family", a.family}, {"params", params}, {"complement", a.complement}, {"n", g.order()},
                {"graph6", graph6_encode(g)}, {"edges", edges}}
               .dump(2)
        << '\n';
  }
  return kExitOk;
}

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline int spectrum(const SpectrumArgs& a, std::istream& in, std::ostream& out) {
  const std::string text = slurp(a.input, in);
  std::vector<Graph> graphs;
  if (a.format == "edgelist") {
    graphs.push_back(edgelist_decode(text));
  } else {
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) graphs.push_back(graph6_decode(line));
    }
    if (graphs.empty()) throw FormatError("no graph6 input");
  }
  json doc = json::array();
  for (const auto& g : graphs) doc.push_back(spectrum_json(g, eigen_symmetric(g, true), kDigits));
  out << (doc.size() == 1 ? doc.front() : doc).dump(2) << '\n';
  return kExitOk;
}

inline int enumerate(const EnumerateArgs& a, const ScanOptions& opt, std::ostream& out) {
  if (a.n == 8 && !opt.allow_large) throw std::invalid_argument("n = 8 scans 268M edge masks; pass --allow-large");
  const ClassFilter filter{a.n, a.kappa, parse_diameter_rule(a.diameter)};
  validate_filter(filter);
  using Found = std::vector<EdgeMask>;
  const Found masks = parallel_fold<Found>(
      split_masks(a.n, opt.shards > 0 ? opt.shards : std::max(opt.jobs, 1)), opt.jobs,
      [&](Found& st, Shard shard) { enumerate_shard(filter, shard, [&](const Graph&, EdgeMask m) { st.push_back(m); }); },
      [](Found& into, const Found& from) { into.insert(into.end(), from.begin(), from.end()); });
  const MaskCodec codec(a.n);
  std::vector<Graph> graphs;
  graphs.reserve(masks.size());
  for (EdgeMask m : masks) graphs.push_back(codec.decode(m));
  if (a.dedup) graphs = dedup_isomorphs(graphs);
  if (a.count_only) {
    out << graphs.size() << '\n';
  } else {
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
  }
  return kExitOk;
}

inline int verify(const VerifyArgs& a, const ScanOptions& opt, std::ostream& out) {
  const Claim claim = parse_claim(a.theorem);
  json doc;
  Verdict verdict = Verdict::vacuous;
  if (claim == Claim::cut_saturation) {
    const CutSaturationReport r = verify_cut_saturation(a.n, a.kappa, opt);
    verdict = r.verdict;
    doc = report_json(r, kDigits);
  } else {
    const ClassScan scan = scan_class(a.n, a.kappa, opt);
    ExtremalReport r;
    if (claim == Claim::diameter_two_radius_bound) r = verify_diameter_two_bound(scan);
    else if (claim == Claim::detached_radius_minimum) r = verify_detached_radius_minimum(scan);
    else r = verify_linked_least_minimum(scan);
    verdict = r.verdict;
    doc = report_json(r, kDigits);
  }
  const std::string text = doc.dump(2);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::invalid_argument("cannot write report file '" + a.out + "'");
    f << text << '\n';
  }
  out << text << '\n';
  return verdict == Verdict::refuted ? kExitRefuted : kExitOk;
}

inline int sweep(const SweepArgs& a, std::ostream& out) {
  if (a.max_n < 3 || a.max_n > kMaxVertices) throw std::invalid_argument("--max-n must lie in [3, 64]");
  bool ok = true;
  if (a.lemma == "3.3") {
    const auto rows = sweep_detached(a.max_n);
    for (const auto& r : rows) ok = ok && r.ok();
    out << detached_sweep_csv(rows, kDigits);
  } else {
    const auto rows = sweep_linked(a.max_n);
    for (const auto& r : rows) ok = ok && r.ok();
    out << linked_sweep_csv(rows, kDigits);
  }
  return ok ? kExitOk : kExitRefuted;
}

inline int audit(int max_n, std::ostream& out) {
  if (max_n < 2 || max_n > kMaxVertices) throw std::invalid_argument("--max-n must lie in [2, 64]");
  out << audit_csv(audit_suite(max_n), kDigits);
  return kExitOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal checks for complements of graphs with given vertex connectivity", "cspec"};
  app.require_subcommand(1, 1);

  ScanOptions scan;
  auto add_scan_flags = [&](CLI::App* sub) {
    sub->add_option("--jobs", scan.jobs, "worker threads for class scans")
        ->envname("SPECTRA_JOBS")
        ->check(CLI::Range(1, 256));
    sub->add_option("--shards", scan.shards, "mask ranges per scan (default: one per job)")->check(CLI::Range(0, 1 << 16));
    sub->add_flag("--allow-large", scan.allow_large, "permit n = 8 scans");
  };

  detail::ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "emit a member of a parametric family");
  construct->add_option("--family", ca.family, "calB (three-clique join), B (detached join) or BB (linked cliques)")
      ->required()
      ->check(CLI::IsMember({"calB", "B", "BB"}));
  auto* s_opt = construct->add_option("--s", ca.s);
  auto* t_opt = construct->add_option("--t", ca.t);
  construct->add_option("--k", ca.k, "cut size kappa");
  auto* n1_opt = construct->add_option("--n1", ca.n1);
  auto* n2_opt = construct->add_option("--n2", ca.n2);
  s_opt->excludes(n1_opt)->excludes(n2_opt);
  t_opt->excludes(n1_opt)->excludes(n2_opt);
  construct->add_option("--variant", ca.variant)->check(CLI::IsMember({"join", "matching"}));
  construct->add_flag("--complement", ca.complement);
  construct->add_option("--format", ca.format)->check(CLI::IsMember({"graph6", "edgelist", "json"}));

  detail::SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum of graphs read from a file or stdin");
  spectrum->add_option("--input", sa.input, "path, or - for stdin");
  spectrum->add_option("--format", sa.format)->check(CLI::IsMember({"graph6", "edgelist"}));

  detail::EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "list connected graphs with given order and connectivity");
  enumerate->add_option("--n", ea.n)->required();
  enumerate->add_option("--kappa", ea.kappa)->required();
  enumerate->add_option("--diameter", ea.diameter)->check(CLI::IsMember({"2", "ge3", "any"}));
  enumerate->add_flag("--count-only", ea.count_only);
  enumerate->add_flag("--dedup", ea.dedup, "one graph per isomorphism class");
  add_scan_flags(enumerate);

  detail::VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "brute-force check of an extremal statement");
  verify->add_option("--theorem", va.theorem)->required()->check(CLI::IsMember({"3.1", "3.4", "4.3", "lemma3.2"}));
  verify->add_option("--n", va.n)->required();
  verify->add_option("--kappa", va.kappa)->required();
  verify->add_option("--out", va.out, "also write the JSON report here");
  add_scan_flags(verify);

  detail::SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "CSV of quartic monotonicity and threshold checks");
  sweep->add_option("--lemma", wa.lemma)->required()->check(CLI::IsMember({"3.3", "4.2"}));
  sweep->add_option("--max-n", wa.max_n)->required();

  int audit_max_n = 0;
  auto* audit = app.add_subcommand("audit", "table of audited intermediate inequalities");
  audit->add_option("--max-n", audit_max_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*construct) return detail::construct(ca, out);
    if (*spectrum) return detail::spectrum(sa, in, out);
    if (*enumerate) return detail::enumerate(ea, scan, out);
    if (*verify) return detail::verify(va, scan, out);
    if (*sweep) return detail::sweep(wa, out);
    return detail::audit(audit_max_n, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const RootError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace cspec::cli
