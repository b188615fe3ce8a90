#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <bicycle/bicycle.hpp>

namespace bicycle::cli {

namespace {

using Json = nlohmann::ordered_json;

std::size_t parse_count(const std::string& text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a non-negative integer: '" + text + "'");
  }
  return value;
}

Json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(x));
  }
  return Json(x.str());
}

Json tutte_json(const TuttePointValue& v) {
  Json j;
  if (v.is_zero()) {
    j["zero"] = true;
    return j;
  }
  j["zero"] = false;
  j["d"] = v.sqrt2_power();
  j["octant"] = v.octant();
  if (v.is_gaussian_integer()) {
    const GaussianInteger z = v.to_gaussian();
    j["re"] = big_json(z.re());
    j["im"] = big_json(z.im());
  }
  j["symbolic"] = v.to_string();
  return j;
}

Json indices(const BitVector& set) { return Json(set.support()); }

Json graph_json(const SupportGraph& g) {
  Json edges = Json::array();
  Json loops = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (g.loops.test(a)) loops.push_back(g.vertices[a]);
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      if (g.has_edge(a, b)) edges.push_back({g.vertices[a], g.vertices[b]});
    }
  }
  Json j;
  j["vertices"] = g.vertices;
  j["edges"] = std::move(edges);
  j["loops"] = std::move(loops);
  return j;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct OracleMismatch : InvariantError {
  using InvariantError::InvariantError;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  Caps caps = Caps::defaults();

  Subspace load(const std::string& path) const {
    std::string text;
    if (path == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw InputError("cannot open '" + path + "'");
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    try {
      return parse_matrix_text(text);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
  }
};

void cmd_eval(Context& ctx, const std::string& path, bool oracle, const std::string& format) {
  const Subspace v = ctx.load(path);
  const QBasis qb = compute_q_basis(v);
  const TutteEvaluation e = evaluate_detailed(qb);
  std::optional<GaussianInteger> brute;
  if (oracle) {
    brute = brute_force_tutte_at_point(v, ctx.caps.tutte);
    if (!(e.value == *brute)) {
      throw OracleMismatch("closed form " + e.value.to_string() + " differs from brute force " +
                           brute->to_string());
    }
  }
  if (format == "json") {
    Json j;
    j["n"] = v.ground_size();
    j["dim"] = v.dim();
    j["d"] = e.bicycle_dim;
    j["rank"] = e.rank;
    j["sigma"] = e.sigma ? Json(*e.sigma) : Json(nullptr);
    j["tutte"] = tutte_json(e.value);
    if (brute) j["oracle"] = {{"re", big_json(brute->re())}, {"im", big_json(brute->im())}};
    emit_json(ctx.out, j);
    return;
  }
  ctx.out << "value: " << e.value.to_string() << '\n';
  if (e.value.is_gaussian_integer()) ctx.out << "exact: " << e.value.to_gaussian().to_string() << '\n';
  ctx.out << "n: " << v.ground_size() << '\n'
          << "rank: " << e.rank << '\n'
          << "d: " << e.bicycle_dim << '\n'
          << "sigma: " << (e.sigma ? std::to_string(*e.sigma) : "undefined") << '\n';
  if (brute) ctx.out << "oracle: " << brute->to_string() << " (match)\n";
}

Json analysis_json(const Subspace& v, const Analysis& a) {
  const InvariantProfile p = profile(a);
  Json j;
  j["n"] = v.ground_size();
  j["dim"] = v.dim();
  j["d"] = a.qbasis.bicycle_dim;
  j["tutte"] = tutte_json(a.tutte.value);
  j["tripartition"] = {indices(a.tripartition.minus), indices(a.tripartition.zero),
                       indices(a.tripartition.plus)};
  j["graph"] = graph_json(a.reduced);
  Json prof;
  prof["tripartition_sizes"] = p.tripartition_sizes;
  prof["edge_counts"] = p.edge_counts;
  prof["loop_counts"] = p.loop_counts;
  std::ostringstream digest;
  digest << std::hex << p.digest();
  prof["digest"] = digest.str();
  j["profile"] = std::move(prof);
  return j;
}

void cmd_profile(Context& ctx, const std::string& path, const std::string& format) {
  const Subspace v = ctx.load(path);
  const Analysis a = analyze(v);
  if (format == "json") {
    emit_json(ctx.out, analysis_json(v, a));
  } else {
    ctx.out << profile(a).to_text();
  }
}

void cmd_tripartition(Context& ctx, const std::string& path, bool oracle, const std::string& format) {
  const Subspace v = ctx.load(path);
  const Tripartition t = tripartition(v);
  if (oracle && !(tripartition_oracle(v) == t)) {
    throw OracleMismatch("fast tripartition differs from the contraction oracle");
  }
  if (format == "json") {
    Json j;
    j["n"] = v.ground_size();
    j["d"] = bicycle_dimension(v);
    j["tripartition"] = {indices(t.minus), indices(t.zero), indices(t.plus)};
    emit_json(ctx.out, j);
    return;
  }
  ctx.out << "F-1: " << join(t.minus.support()) << '\n'
          << "F0: " << join(t.zero.support()) << '\n'
          << "F1: " << join(t.plus.support()) << '\n';
  if (oracle) ctx.out << "oracle: match\n";
}

void cmd_graph(Context& ctx, const std::string& path, const std::string& format) {
  const Subspace v = ctx.load(path);
  const SupportGraph g = reduced_graph(v);
  if (format == "json") {
    emit_json(ctx.out, graph_json(g));
  } else if (format == "text") {
    ctx.out << "vertices: " << join(g.vertices) << '\n' << "edges:";
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = a + 1; b < g.order(); ++b) {
        if (g.has_edge(a, b)) ctx.out << ' ' << g.vertices[a] << '-' << g.vertices[b];
      }
    }
    std::vector<std::size_t> loops;
    for (auto i : g.loops.support()) loops.push_back(g.vertices[i]);
    ctx.out << "\nloops: " << join(loops) << '\n';
  } else {
    ctx.out << export_graph6(g) << '\n' << export_loop_line(g) << '\n';
  }
}

void cmd_iso(Context& ctx, const std::string& path_a, const std::string& path_b, bool brute,
             const std::string& format) {
  const Subspace a = ctx.load(path_a);
  const Subspace b = ctx.load(path_b);
  const PrefilterResult r = prefilter(a, b, ctx.caps.graph);
  std::optional<bool> exact;
  if (brute) {
    exact = brute_matroid_iso(a, b, ctx.caps.iso);
    if ((r.verdict == Verdict::DistinctCertain && *exact) ||
        (r.verdict == Verdict::IsomorphicCertain && !*exact)) {
      throw OracleMismatch(std::string("prefilter said ") + to_string(r.verdict) +
                           " but the permutation search disagrees");
    }
  }
  if (format == "json") {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    if (exact) j["brute"] = *exact;
    emit_json(ctx.out, j);
    return;
  }
  ctx.out << to_string(r.verdict) << '\n' << "reason: " << r.reason << '\n';
  if (exact) ctx.out << "brute: " << (*exact ? "isomorphic" : "not isomorphic") << '\n';
}

void cmd_census(Context& ctx, const std::string& path, const std::string& format) {
  const Subspace w = ctx.load(path);
  const Census c = extension_census(w, ctx.caps.census);
  if (format == "json") {
    Json j;
    j["n"] = w.ground_size();
    j["dim"] = w.dim();
    j["d"] = bicycle_dimension(w);
    j["census"] = {{"down", c.down}, {"same", c.same}, {"up", c.up}};
    emit_json(ctx.out, j);
    return;
  }
  ctx.out << "k: " << w.dim() << '\n'
          << "d: " << bicycle_dimension(w) << '\n'
          << "down: " << c.down << '\n'
          << "same: " << c.same << '\n'
          << "up: " << c.up << '\n';
}

void print_report(std::ostream& out, const ExperimentReport& r, bool exhaustive,
                  const std::string& format) {
  if (format == "json") {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["samples"] = r.samples;
    j["seed"] = exhaustive ? Json(nullptr) : Json(r.seed);
    j["pedestrian"] = {{"count", r.pedestrian.numerator}, {"fraction", r.pedestrian.value()}};
    j["pairs"] = r.pairs;
    j["resolved_by_invariants"] = r.resolved_by_invariants;
    j["resolved_by_graphs"] = r.resolved_by_graphs;
    j["isomorphic_pairs"] = r.isomorphic_pairs;
    j["unknown"] = r.unknown;
    j["profile_buckets"] = r.profile_buckets;
    j["resolved_share"] = r.resolved_share();
    emit_json(out, j);
    return;
  }
  char fraction[32];
  std::snprintf(fraction, sizeof fraction, "%.6f", r.pedestrian.value());
  char share[32];
  std::snprintf(share, sizeof share, "%.8f", r.resolved_share());
  out << "n: " << r.n << '\n'
      << "k: " << r.k << '\n'
      << "samples: " << r.samples << (exhaustive ? " (exhaustive)" : "") << '\n';
  if (!exhaustive) out << "seed: " << r.seed << '\n';
  out << "pedestrian: " << r.pedestrian.numerator << '/' << r.pedestrian.denominator << " = "
      << fraction << '\n'
      << "pairs: " << r.pairs << '\n'
      << "resolved_by_invariants: " << r.resolved_by_invariants << '\n'
      << "resolved_by_graphs: " << r.resolved_by_graphs << '\n'
      << "isomorphic_pairs: " << r.isomorphic_pairs << '\n'
      << "unknown: " << r.unknown << '\n'
      << "profile_buckets: " << r.profile_buckets << '\n'
      << "resolved_share: " << share << '\n';
}

void cmd_experiment(Context& ctx, std::size_t n, std::size_t k, std::optional<std::size_t> samples,
                    std::optional<std::uint64_t> seed, bool exhaustive, const std::string& format) {
  if (k > n) throw InputError("k must not exceed n");
  ExperimentReport r;
  if (exhaustive) {
    r = run_experiment(all_subspaces(n, k), ctx.caps.graph);
    r.n = n;
    r.k = k;
  } else {
    if (!samples || !seed) throw InputError("experiment needs --samples and --seed, or --exhaustive");
    r = run_experiment(n, k, *samples, *seed, ctx.caps.graph);
  }
  print_report(ctx.out, r, exhaustive, format);
}

// Exhaustive cross-checks over every subspace of GF(2)^n, n <= max_n.
void cmd_selftest(Context& ctx, std::size_t max_n) {
  struct Check {
    const char* name;
    std::function<bool(const Subspace&)> holds;
  };
  const std::vector<Check> checks = {
      {"closed form = brute force",
       [&](const Subspace& v) { return evaluate(v) == brute_force_tutte_at_point(v, ctx.caps.tutte); }},
      {"Greene identity",
       [&](const Subspace& v) {
         const GreeneCheck g = greene_sum_check(v, ctx.caps.brown, ctx.caps.tutte);
         return g.lhs == g.rhs;
       }},
      {"duality", [](const Subspace& v) { return evaluate_via_dual(v) == evaluate(v); }},
      {"modulus law",
       [](const Subspace& v) {
         const auto value = evaluate(v);
         return value.is_zero() || value.sqrt2_power() == bicycle_dimension(v);
       }},
      {"tripartition = oracle", [](const Subspace& v) { return tripartition(v) == tripartition_oracle(v); }},
      {"projector",
       [](const Subspace& v) {
         if (bicycle_dimension(v) != 0) return true;
         const BitMatrix q = projector(compute_q_basis(v)).matrix;
         if (!q.is_symmetric() || !(multiply(q, q) == q)) return false;
         for (const auto& x : v.basis().row_vectors()) {
           if (!(apply(q, x) == x)) return false;
         }
         const Subspace perp = dual(v);
         for (const auto& y : perp.basis().row_vectors()) {
           if (apply(q, y).any()) return false;
         }
         return true;
       }},
  };
  std::vector<Subspace> spaces;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (auto& v : all_subspaces(n)) spaces.push_back(std::move(v));
  }
  bool all_ok = true;
  for (const auto& c : checks) {
    std::size_t failed = 0;
    for (const auto& v : spaces) {
      if (!c.holds(v)) ++failed;
    }
    ctx.out << (failed == 0 ? "ok   " : "FAIL ") << c.name << " (" << spaces.size() << " spaces";
    if (failed) ctx.out << ", " << failed << " failed";
    ctx.out << ")\n";
    all_ok = all_ok && failed == 0;
  }
  if (!all_ok) throw OracleMismatch("selftest failed");
}

}  // namespace

Caps Caps::defaults() {
  return {kDefaultTutteCap, kDefaultBrownCap, kDefaultMatroidIsoCap, kDefaultCensusCap,
          kDefaultGraphIsoCap};
}

void apply_cap_spec(Caps& caps, const std::string& spec) {
  if (spec.find('=') == std::string::npos) {
    const std::size_t all = parse_count(spec);
    caps = {all, all, all, all, all};
    return;
  }
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=N in '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::size_t value = parse_count(item.substr(eq + 1));
    if (name == "tutte") {
      caps.tutte = value;
    } else if (name == "brown") {
      caps.brown = value;
    } else if (name == "iso") {
      caps.iso = value;
    } else if (name == "census") {
      caps.census = value;
    } else if (name == "graph") {
      caps.graph = value;
    } else {
      throw std::invalid_argument("unknown cap '" + name + "'");
    }
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const std::optional<std::string>& env_cap) {
  CLI::App app{"Exact Tutte evaluation at (-i, i) and isomorphism invariants of binary matroids",
               "bicycle"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cap_spec;
  app.add_option("--cap", cap_spec,
                 "Oracle limits: N for all, or name=N,... with names tutte, brown, iso, census, graph "
                 "(overrides BICYCLE_ORACLE_CAP)");

  Context ctx{in, out};
  std::string format = "text";
  auto add_format = [&format](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  std::string path_a;
  std::string path_b;
  bool oracle = false;
  bool brute = false;
  bool exhaustive = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::size_t max_n = 5;
  std::function<void()> action;

  const char* file_help = "Matrix text file ('-' for stdin)";

  auto* eval = app.add_subcommand("eval", "Evaluate T(-i, i) exactly");
  eval->add_option("file", path_a, file_help)->required();
  eval->add_flag("--oracle", oracle, "Also run the brute-force subset sum and require agreement");
  add_format(eval, {"text", "json"});
  eval->callback([&] { action = [&] { cmd_eval(ctx, path_a, oracle, format); }; });

  auto* prof = app.add_subcommand("profile", "Print the invariant profile");
  prof->add_option("file", path_a, file_help)->required();
  add_format(prof, {"text", "json"});
  prof->callback([&] { action = [&] { cmd_profile(ctx, path_a, format); }; });

  auto* tri = app.add_subcommand("tripartition", "Print the canonical tripartition");
  tri->add_option("file", path_a, file_help)->required();
  tri->add_flag("--oracle", oracle, "Also recompute it by contracting each element");
  add_format(tri, {"text", "json"});
  tri->callback([&] { action = [&] { cmd_tripartition(ctx, path_a, oracle, format); }; });

  auto* graph = app.add_subcommand("graph", "Export the reduced projection graph");
  graph->add_option("file", path_a, file_help)->required();
  format = "graph6";
  add_format(graph, {"graph6", "json", "text"});
  graph->callback([&] { action = [&] { cmd_graph(ctx, path_a, format); }; });

  auto* iso = app.add_subcommand("iso", "Run the isomorphism prefilter on two spaces");
  iso->add_option("first", path_a, file_help)->required();
  iso->add_option("second", path_b, file_help)->required();
  iso->add_flag("--brute", brute, "Also search all coordinate permutations");
  add_format(iso, {"text", "json"});
  iso->callback([&] { action = [&] { cmd_iso(ctx, path_a, path_b, brute, format); }; });

  auto* census = app.add_subcommand("census", "Count single-element coextensions by bicycle dimension");
  census->add_option("file", path_a, file_help)->required();
  add_format(census, {"text", "json"});
  census->callback([&] { action = [&] { cmd_census(ctx, path_a, format); }; });

  auto* experiment = app.add_subcommand("experiment", "Sample random spaces and run the prefilter on all pairs");
  experiment->add_option("n", n, "Ground set size")->required();
  experiment->add_option("k", k, "Dimension")->required();
  experiment->add_option("--samples", samples, "Number of random spaces");
  experiment->add_option("--seed", seed, "Seed for the sample stream");
  experiment->add_flag("--exhaustive", exhaustive, "Use every k-dimensional subspace instead");
  add_format(experiment, {"text", "json"});
  experiment->callback([&] {
    action = [&] { cmd_experiment(ctx, n, k, samples, seed, exhaustive, format); };
  });

  auto* selftest = app.add_subcommand("selftest", "Cross-check everything against the oracles on small spaces");
  selftest->add_option("--max-n", max_n, "Largest ground set")->check(CLI::Range(0, 6));
  selftest->callback([&] { action = [&] { cmd_selftest(ctx, max_n); }; });

  // The graph default must not leak into the other subcommands.
  for (auto* sub : {eval, prof, tri, iso, census, experiment}) {
    sub->preparse_callback([&format](std::size_t) { format = "text"; });
  }
  graph->preparse_callback([&format](std::size_t) { format = "graph6"; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (env_cap) apply_cap_spec(ctx.caps, *env_cap);
    if (!cap_spec.empty()) apply_cap_spec(ctx.caps, cap_spec);
  } catch (const std::invalid_argument& e) {
    err << "error: bad cap setting: " << e.what() << '\n';
    return kParseError;
  }

  try {
    action();
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapError& e) {
    err << "refused: " << e.what() << " (raise it with --cap or BICYCLE_ORACLE_CAP)\n";
    return kCapRefused;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kInvariantViolated;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace bicycle::cli
