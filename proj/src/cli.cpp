#include "hcover/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "hcover/canonical.hpp"
#include "hcover/construct.hpp"
#include "hcover/embedding.hpp"
#include "hcover/graph_io.hpp"
#include "hcover/report.hpp"

namespace hcover {

namespace {

// Exit-code carriers for failures that are not argument errors.
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ArgumentError("bad integer for " + what + ": '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ArgumentError("bad number for " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

// "k=v,k=v" after the colon of a named family.
std::map<std::string, std::string> params(const std::string& body, const std::string& family) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError(family + ": expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::string need(const std::map<std::string, std::string>& kv, const std::string& key, const std::string& family) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ArgumentError(family + ": missing parameter '" + key + "'");
  return it->second;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<Graph> named_graph(const std::string& spec) {
  if (spec.size() >= 2 && std::string("KCPE").find(spec[0]) != std::string::npos) {
    std::string digits = spec.substr(1), suffix;
    const auto cut = digits.find_first_not_of("0123456789");
    if (cut != std::string::npos) {
      suffix = digits.substr(cut);
      digits = digits.substr(0, cut);
    }
    if (all_digits(digits)) {
      const int n = parse_int(digits, spec);
      if (spec[0] == 'K' && suffix.empty()) return complete_graph(n);
      if (spec[0] == 'K' && suffix == "+pendant") return build_pendant_clique(n, n + 1);
      if (spec[0] == 'K' && suffix == "-e") {
        Graph g = complete_graph(n);
        if (n >= 2) g.remove_edge(n - 2, n - 1);
        return g;
      }
      if (suffix.empty() && spec[0] == 'C') return cycle_graph(n);
      if (suffix.empty() && spec[0] == 'P') return path_graph(n);
      if (suffix.empty() && spec[0] == 'E') return edgeless_graph(n);
    }
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string family = spec.substr(0, colon), body = spec.substr(colon + 1);
  if (family == "star") return star_graph(parse_int(body, spec));
  if (family == "tightness") {
    const auto kv = params(body, family);
    return build_tightness(parse_int(need(kv, "l", family), spec), parse_int(need(kv, "d", family), spec));
  }
  if (family == "circulant") {
    const auto kv = params(body, family);
    std::vector<int> jumps;
    for (const auto& j : split(need(kv, "jumps", family), '.')) jumps.push_back(parse_int(j, spec));
    return circulant(parse_int(need(kv, "m", family), spec), jumps);
  }
  if (family == "gnp") {
    const auto kv = params(body, family);
    const auto seed = kv.count("seed") ? std::stoull(kv.at("seed")) : 1ULL;
    return random_gnp(parse_int(need(kv, "n", family), spec), parse_double(need(kv, "p", family), spec), seed);
  }
  throw ArgumentError("unknown graph family '" + family + "'");
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string first;
  std::getline(is, first);
  while (!first.empty() && std::isspace(static_cast<unsigned char>(first.back()))) first.pop_back();
  if (first.find(' ') != std::string::npos) return parse_edge_list(text);
  return parse_graph6(first);
}

std::vector<int> parse_parts(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split(s, ',')) out.push_back(parse_int(x, "--parts"));
  if (out.empty()) throw ArgumentError("--parts needs at least one value");
  return out;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, "--eps"));
  const int den = parse_int(s.substr(slash + 1), "--eps");
  if (den == 0) throw ArgumentError("--eps denominator must be nonzero");
  return Rational(parse_int(s.substr(0, slash), "--eps"), den);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<PartMultiset>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

struct Common {
  std::string graph;
  int t = 2;
};

struct Outcome {
  int code = kExitOk;
  Json result = Json::object();
  std::vector<std::string> graphs;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--graph,-g", c.graph, "graph: shorthand, file path or graph6")->required();
  sub->add_option("-t,--order", c.t, "clique order t")->check(CLI::Range(1, kMaxVertices));
}

Graph load(const Common& c, Outcome& o) {
  Graph g = resolve_graph(c.graph);
  o.graphs.push_back(g.order() > 0 ? to_graph6(g) : "");
  return g;
}

// ---- subcommands ----

struct ProfileArgs {
  Common c;
  int exact_max = 0;
  int heuristic = -1;
  std::uint64_t seed = 1;
  int threads = 0;
};

Outcome cmd_profile(const ProfileArgs& a, std::ostream& out) {
  Outcome o;
  const Graph h = load(a.c, o);
  const CoverageProfile p = a.heuristic >= 0 ? profile_heuristic(h, a.c.t, a.heuristic, a.seed)
                                             : profile_exact(h, a.c.t, {a.exact_max, a.threads});
  o.result["profile"] = to_json(p);
  out << "n=" << p.n << " t=" << p.t << " total=" << p.total << " exact=" << yes(p.exact) << '\n';
  out << "k a e witness_a witness_e\n" << profile_table(p);
  if (p.n > 0) {
    const RatioMin rm = ratio_min(p);
    Json argmin = rm.argmin;
    o.result["ratio_min"] = {{"c", rm.c.str()}, {"argmin", argmin}};
    out << "ratio_min c=" << rm.c.str() << " argmin=" << argmin.dump() << '\n';
  }
  if (p.t == 2 && p.exact && p.n > 0) {
    const PredicateReport pr = check_profile_predicates(p, h);
    o.result["predicates"] = to_json(pr);
    auto line = [&](const char* name, const PredicateCheck& c) {
      out << name << ": " << (c.applies ? (c.holds ? "holds" : "fails") : "n/a");
      if (!c.failures.empty()) out << " first=(" << c.failures[0].first << "," << c.failures[0].second << ")";
      out << '\n';
    };
    line("regular_identity", pr.regular_identity);
    line("half_degree_bound", pr.half_degree_bound);
    line("e_superadditive", pr.e_superadditive);
    line("a_exchange", pr.a_exchange);
  }
  return o;
}

struct SolveArgs {
  Common c;
  long target = 0;
  std::size_t cap = kDefaultOptimaCap;
};

Outcome cmd_solve(const SolveArgs& a, std::ostream& out) {
  Outcome o;
  const Graph h = load(a.c, o);
  const CoverageProfile p = profile_exact(h, a.c.t);
  const IpSolution s = solve_ip(p, a.target, a.cap);
  const CovBounds b = cov_bounds(p, a.target);
  o.result["solution"] = to_json(s);
  o.result["bounds"] = to_json(b);
  out << "N=" << a.target << ' ' << format_solution(s) << '\n';
  out << "bounds c=" << b.c.str() << " lower=" << b.lower << " upper=" << b.upper << '\n';
  return o;
}

struct ConstructArgs {
  Common c;
  int target = 0;
  std::string family = "ideal";
  std::string parts;
  bool edge_list = false;
};

Outcome cmd_construct(const ConstructArgs& a, std::ostream& out) {
  Outcome o;
  const Graph h = load(a.c, o);
  const CoverageProfile p = profile_exact(h, a.c.t);
  Graph g;
  CoverAssignment cover;
  if (a.family == "ideal") {
    g = build_ideal_extremal(h, a.c.t, a.target, p);
    cover = ideal_extremal_cover(h, a.target, p);
  } else if (a.family == "elementary") {
    const auto parts = parse_parts(a.parts);
    g = build_elementary_extremal(h, a.target, parts);
    cover = elementary_extremal_cover(h, parts);
  } else if (a.family == "realization") {
    const auto parts = parse_parts(a.parts);
    g = build_realization(h, a.c.t, parts, p);
    cover = realization_cover(h, parts, p);
    if (g.order() != a.target) throw ArgumentError("realization parts must sum to N");
  } else {
    throw ArgumentError("unknown family '" + a.family + "' (ideal, elementary, realization)");
  }
  validate_cover(g, h, cover);
  const Count c = count_cliques(g, a.c.t);
  o.graphs.push_back(to_graph6(g));
  o.result["construction"] = {{"family", a.family}, {"graph6", to_graph6(g)}, {"order", g.order()},
                              {"edges", g.edge_count()}, {"cliques", c}, {"covered", true}};
  out << to_graph6(g) << '\n';
  out << "family=" << a.family << " order=" << g.order() << " edges=" << g.edge_count() << " K" << a.c.t
      << "=" << c << " covered=yes\n";
  if (a.edge_list) out << to_edge_list(g);
  return o;
}

struct ClassifyArgs {
  Common c;
  int q_max = kDefaultQMax;
  bool shape = false;
};

std::string evidence_summary(const RemainderVerdict& r) {
  const auto& c = r.certificate;
  std::string s;
  if (c.certified) {
    s = c.route == CertificateRoute::Exchange ? "certified by exchange inequalities"
                                              : "certified by class program (j <= " + std::to_string(c.residue_bound) + ")";
  } else {
    s = c.exchange_violation ? c.exchange_violation->str() : "";
    if (c.class_violation) s += "; " + c.class_violation->str();
    if (c.rival) s += "; rival " + c.rival->str();
    if (!c.note.empty()) s += "; " + c.note;
  }
  return s;
}

Outcome cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  Outcome o;
  const Graph h = load(a.c, o);
  const CoverageProfile p = profile_exact(h, a.c.t);
  const Classification cl = classify_remainders(p, a.q_max);
  o.result["classification"] = to_json(cl);
  if (cl.thresholds) {
    const auto& gb = *cl.thresholds;
    out << "gamma=" << gb.gamma << " beta'=" << (gb.beta_prime ? std::to_string(*gb.beta_prime) : "-")
        << " beta=" << (gb.beta ? std::to_string(*gb.beta) : "-") << '\n';
  }
  for (const auto& r : cl.per_r) {
    out << "r=" << r.r << ' ' << to_string(r.verdict) << " q_stable=" << yes(r.q_stable) << " q=1.." << cl.q_max
        << " | " << evidence_summary(r) << '\n';
    for (const auto& e : r.per_q) out << "    q=" << e.q << " N=" << e.target << ' ' << to_string(e.verdict) << ' '
                                     << join(e.optima) << (e.overflow ? " (truncated)" : "") << '\n';
  }
  if (a.shape) {
    const ShapeReport rep = check_theorem3_shape(p, std::min(a.q_max, 2));
    o.result["shape_report"] = to_json(rep);
    out << "shape " << (rep.passed() ? "pass" : "fail") << '\n';
    for (const auto& row : rep.rows) {
      out << "  r=" << row.r << " expected=" << row.expected << ' ' << (row.pass ? "pass" : "fail");
      for (const auto& d : row.deviations) out << " [q=" << d.q << ": " << join(d.optima) << ']';
      out << '\n';
    }
  }
  return o;
}

struct OracleArgs {
  Common c;
  int target = 0;
  int max_order = OracleBudget{}.max_order;
  std::uint64_t max_nodes = OracleBudget{}.max_nodes;
  bool compare = false;
};

OracleBudget budget_of(const OracleArgs& a) { return {a.max_order, a.max_nodes}; }

Outcome cmd_oracle(const OracleArgs& a, std::ostream& out) {
  Outcome o;
  const Graph h = load(a.c, o);
  OracleResult res;
  if (a.compare) {
    const UniquenessReport rep = uniqueness_check(h, a.c.t, a.target, budget_of(a));
    o.result["uniqueness"] = to_json(rep);
    res = rep.oracle;
  } else {
    res = min_cover_exhaustive(h, a.c.t, a.target, budget_of(a));
  }
  o.result["oracle"] = to_json(res);
  out << "N=" << res.N << " t=" << res.t << " min=" << res.min_count << " extremal=" << res.extremal.size()
      << " complete=" << yes(res.complete) << " nodes=" << res.nodes_explored << '\n';
  for (const auto& g : res.extremal) out << g << '\n';
  if (a.compare) {
    const auto& u = o.result["uniqueness"];
    out << "ideal_exact=" << yes(u["ideal_exact"]) << " elementary_exact=" << yes(u["elementary_exact"])
        << " outside=" << u["outside"].size() << " non_extremal=" << u["non_extremal"].size() << '\n';
  }
  if (!res.complete) o.code = kExitResource;
  return o;
}

Outcome cmd_verify(const OracleArgs& a, std::ostream& out) {
  Outcome o;
  const Graph h = load(a.c, o);
  const CoverageProfile p = profile_exact(h, a.c.t);
  const IpSolution sol = solve_ip(p, a.target);
  const UniquenessReport rep = uniqueness_check(h, a.c.t, a.target, budget_of(a));

  const PartMultiset& best = sol.optima.front();
  const Graph g = build_realization(h, a.c.t, best.parts, p);
  validate_cover(g, h, realization_cover(h, best.parts, p));
  const Count built = count_cliques(g, a.c.t);
  const std::string key = canonical_key(g);
  const bool built_extremal =
      std::find(rep.oracle.extremal.begin(), rep.oracle.extremal.end(), key) != rep.oracle.extremal.end();
  const bool agree = rep.oracle.complete && sol.value == rep.oracle.min_count && built == sol.value && built_extremal;

  o.result["solution"] = to_json(sol);
  o.result["uniqueness"] = to_json(rep);
  o.result["construction"] = {{"parts", best.parts}, {"graph6", to_graph6(g)}, {"cliques", built},
                              {"extremal", built_extremal}};
  o.result["agreement"] = agree;
  out << "ip " << format_solution(sol) << '\n';
  out << "oracle min=" << rep.oracle.min_count << " extremal=" << rep.oracle.extremal.size()
      << " complete=" << yes(rep.oracle.complete) << '\n';
  out << "construction " << best.str() << ' ' << to_graph6(g) << " K" << a.c.t << '=' << built
      << " extremal=" << yes(built_extremal) << '\n';
  out << "ideal family " << rep.ideal_family.size() << ", elementary family " << rep.elementary_family.size()
      << ", extremal outside both " << rep.outside.size() << '\n';
  for (const auto& m : rep.non_extremal) out << "non-extremal family member " << m << '\n';
  out << "agreement=" << yes(agree) << " value=" << sol.value << '\n';
  if (!rep.oracle.complete)
    o.code = kExitResource;
  else if (!agree)
    o.code = kExitAssertion;
  return o;
}

struct RandomArgs {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  int trials = 1;
  int q_max = 2;
  std::string eps = "1/2";
  std::string out_path;
  std::string scaling;
};

Outcome cmd_random(const RandomArgs& a, std::ostream& out) {
  Outcome o;
  if (!a.scaling.empty()) {
    std::vector<int> ns;
    for (const auto& s : split(a.scaling, ',')) ns.push_back(parse_int(s, "--scaling"));
    const ScalingReport rep = scaling_report(ns, a.p, a.trials, a.seed);
    o.result["scaling"] = to_json(rep);
    out << rep.table();
    return o;
  }
  if (a.n < 1) throw ArgumentError("--n is required and must be positive");
  if (a.trials < 1) throw ArgumentError("--trials must be positive");
  const Rational eps = parse_rational(a.eps);
  std::ofstream sink;
  if (!a.out_path.empty()) {
    sink.open(a.out_path, std::ios::app);
    if (!sink) throw ArgumentError("cannot open " + a.out_path + " for appending");
  }
  Json records = Json::array();
  bool ok = true;
  for (int i = 0; i < a.trials; ++i) {
    const ExperimentRecord rec = run_experiment(a.n, a.p, a.seed + static_cast<std::uint64_t>(i), a.q_max, eps);
    const Json j = to_json(rec);
    if (sink) sink << j.dump() << '\n';
    records.push_back(j);
    o.graphs.push_back(rec.graph6);
    const auto& gb = rec.thresholds;
    if (gb.beta && (*gb.beta - gb.gamma < 1 || *gb.beta - gb.gamma > 2)) ok = false;
    out << "seed=" << rec.seed << " gamma=" << gb.gamma
        << " beta'=" << (gb.beta_prime ? std::to_string(*gb.beta_prime) : "-")
        << " beta=" << (gb.beta ? std::to_string(*gb.beta) : "-") << " shape=" << (rec.shape.passed() ? "pass" : "fail")
        << " predicates=" << (rec.shape.predicates.all_hold() ? "hold" : "fail")
        << " gap=" << (rec.gap.holds ? "pass" : "fail at k=" + std::to_string(*rec.gap.first_violation)) << '\n';
  }
  o.result["records"] = records;
  if (!ok) o.code = kExitAssertion;
  return o;
}

}  // namespace

Graph resolve_graph(const std::string& spec) {
  if (spec.empty()) throw ArgumentError("empty graph specification");
  if (spec.find('|') != std::string::npos) {
    std::vector<Graph> parts;
    for (const auto& s : split(spec, '|')) parts.push_back(resolve_graph(s));
    return disjoint_union(parts);
  }
  if (auto g = named_graph(spec)) return *g;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_text(buf.str());
  }
  return parse_graph6(spec);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hcover: extremal H-covered graphs, coverage profiles and integer programs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path;
  bool json_out = false;
  app.add_option("--report", report_path, "write the JSON run report to this file");
  app.add_flag("--json", json_out, "print the JSON run report instead of text");
  app.set_version_flag("--version", std::string(kToolVersion));

  ProfileArgs pa;
  auto* sp = app.add_subcommand("profile", "coverage and density tables");
  add_common(sp, pa.c);
  sp->add_option("--exact-max", pa.exact_max, "largest n for the exact sweep")->check(CLI::Range(1, kMaxVertices));
  sp->add_option("--heuristic", pa.heuristic, "use local search with this many restarts")->check(CLI::NonNegativeNumber);
  sp->add_option("--seed", pa.seed, "heuristic seed");
  sp->add_option("--threads", pa.threads, "sweep workers (default HCOVER_THREADS)")->check(CLI::NonNegativeNumber);

  SolveArgs sa;
  auto* ss = app.add_subcommand("solve", "integer program value and optimal part multisets");
  add_common(ss, sa.c);
  ss->add_option("-N,--target", sa.target, "number of vertices N")->required();
  ss->add_option("--cap", sa.cap, "maximum optima listed")->check(CLI::PositiveNumber);

  ConstructArgs ca;
  auto* sc = app.add_subcommand("construct", "build an extremal candidate");
  add_common(sc, ca.c);
  sc->add_option("-N,--target", ca.target, "number of vertices N")->required();
  sc->add_option("--family", ca.family, "ideal, elementary or realization");
  sc->add_option("--parts", ca.parts, "comma-separated parts for elementary or realization");
  sc->add_flag("--edge-list", ca.edge_list, "also print the edge list");

  ClassifyArgs cla;
  auto* scl = app.add_subcommand("classify", "per-remainder verdicts with certificates");
  add_common(scl, cla.c);
  scl->add_option("--q-max", cla.q_max, "largest q sampled")->check(CLI::Range(1, 64));
  scl->add_flag("--shape", cla.shape, "also run the gamma/beta shape check (t = 2)");

  OracleArgs oa;
  auto* so = app.add_subcommand("oracle", "exhaustive minimum over N-vertex H-covered graphs");
  auto* sv = app.add_subcommand("verify", "three-way agreement of construction, program and oracle");
  for (auto* sub : {so, sv}) {
    add_common(sub, oa.c);
    sub->add_option("-N,--target", oa.target, "number of vertices N")->required();
    sub->add_option("--max-order", oa.max_order, "refuse N above this")->check(CLI::Range(1, kMaxVertices));
    sub->add_option("--max-nodes", oa.max_nodes, "search node budget");
  }
  so->add_flag("--compare", oa.compare, "compare with the ideal and elementary families");

  RandomArgs ra;
  auto* sr = app.add_subcommand("random", "seeded G(n, p) experiments");
  sr->add_option("--n", ra.n, "number of vertices");
  sr->add_option("--p", ra.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  sr->add_option("--seed", ra.seed, "first seed");
  sr->add_option("--trials", ra.trials, "consecutive seeds");
  sr->add_option("--q-max", ra.q_max, "largest q in the shape check")->check(CLI::Range(1, 16));
  sr->add_option("--eps", ra.eps, "gap-check constant, e.g. 1/2");
  sr->add_option("--out", ra.out_path, "append one JSON record per line to this file");
  sr->add_option("--scaling", ra.scaling, "comma-separated n list: print the gamma scaling table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream text;
  Outcome o;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "profile") o = cmd_profile(pa, text);
    if (command == "solve") o = cmd_solve(sa, text);
    if (command == "construct") o = cmd_construct(ca, text);
    if (command == "classify") o = cmd_classify(cla, text);
    if (command == "oracle") o = cmd_oracle(oa, text);
    if (command == "verify") o = cmd_verify(oa, text);
    if (command == "random") o = cmd_random(ra, text);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json echo = Json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
  Json report = {{"schema", kReportSchema},
                 {"tool", {{"name", "hcover"}, {"version", kToolVersion}}},
                 {"command", command},
                 {"argv", echo},
                 {"graphs", o.graphs},
                 {"result", o.result},
                 {"exit_code", o.code},
                 {"timing_ms", ms}};
  if (json_out)
    out << report.dump(2) << '\n';
  else
    out << text.str();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) {
      err << "error: cannot write report to " << report_path << '\n';
      return kExitUsage;
    }
    f << report.dump(2) << '\n';
  }
  return o.code;
}

}  // namespace hcover
