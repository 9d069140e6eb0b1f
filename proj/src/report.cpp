#include "hcover/report.hpp"

namespace hcover {

namespace {

Json parts_list(const std::vector<PartMultiset>& v) {
  Json out = Json::array();
  for (const auto& m : v) out.push_back(to_json(m));
  return out;
}

Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

const char* route_name(CertificateRoute r) {
  switch (r) {
    case CertificateRoute::Exchange: return "exchange";
    case CertificateRoute::ClassProgram: return "class-program";
    case CertificateRoute::None: break;
  }
  return "none";
}

}  // namespace

Json to_json(const VertexSet& s) { return s.members(); }

Json to_json(const CoverageProfile& p) {
  Json wa = Json::array(), we = Json::array();
  for (const auto& s : p.witness_a) wa.push_back(to_json(s));
  for (const auto& s : p.witness_e) we.push_back(to_json(s));
  return {{"n", p.n}, {"t", p.t}, {"total", p.total}, {"exact", p.exact}, {"a", p.a},
          {"e", p.e}, {"witness_a", wa}, {"witness_e", we}};
}

Json to_json(const PredicateCheck& c) {
  Json f = Json::array();
  for (auto [k, l] : c.failures) f.push_back({k, l});
  return {{"applies", c.applies}, {"holds", c.holds}, {"failures", f}};
}

Json to_json(const PredicateReport& r) {
  return {{"regular_degree", r.regular_degree},
          {"regular_identity", to_json(r.regular_identity)},
          {"half_degree_bound", to_json(r.half_degree_bound)},
          {"e_superadditive", to_json(r.e_superadditive)},
          {"a_exchange", to_json(r.a_exchange)}};
}

Json to_json(const PartMultiset& m) { return m.parts; }

Json to_json(const IpSolution& s) {
  return {{"n", s.n}, {"N", s.target}, {"value", s.value}, {"optima", parts_list(s.optima)}, {"overflow", s.overflow}};
}

Json to_json(const CovBounds& b) { return {{"c", b.c.str()}, {"lower", b.lower}, {"upper", b.upper}}; }

Json to_json(const GammaBeta& gb) {
  return {{"gamma", gb.gamma}, {"beta_prime", opt_int(gb.beta_prime)}, {"beta", opt_int(gb.beta)}};
}

Json to_json(const Violation& v) {
  return {{"rule", v.rule}, {"k", v.k}, {"l", v.l}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

Json to_json(const IdealCertificate& c) {
  Json fails = Json::array();
  for (const auto& v : c.exchange_failures) fails.push_back(to_json(v));
  return {{"r", c.r},
          {"certified", c.certified},
          {"route", route_name(c.route)},
          {"exchange_violation", c.exchange_violation ? to_json(*c.exchange_violation) : Json(nullptr)},
          {"exchange_failures", fails},
          {"class_violation", c.class_violation ? to_json(*c.class_violation) : Json(nullptr)},
          {"rival", c.rival ? to_json(*c.rival) : Json(nullptr)},
          {"residue_bound", c.residue_bound},
          {"note", c.note}};
}

Json to_json(const QEvidence& e) {
  return {{"q", e.q},
          {"N", e.target},
          {"verdict", to_string(e.verdict)},
          {"optima", parts_list(e.optima)},
          {"overflow", e.overflow}};
}

Json to_json(const Classification& c) {
  Json rows = Json::array();
  for (const auto& r : c.per_r) {
    Json per_q = Json::array();
    for (const auto& e : r.per_q) per_q.push_back(to_json(e));
    rows.push_back({{"r", r.r},
                    {"verdict", to_string(r.verdict)},
                    {"q_stable", r.q_stable},
                    {"q_range", {1, c.q_max}},
                    {"certificate", to_json(r.certificate)},
                    {"per_q", per_q}});
  }
  return {{"n", c.n},
          {"t", c.t},
          {"q_max", c.q_max},
          {"thresholds", c.thresholds ? to_json(*c.thresholds) : Json(nullptr)},
          {"per_r", rows}};
}

Json to_json(const ShapeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json dev = Json::array();
    for (const auto& e : row.deviations) dev.push_back(to_json(e));
    rows.push_back({{"r", row.r}, {"expected", row.expected}, {"pass", row.pass}, {"deviations", dev}});
  }
  return {{"thresholds", to_json(r.thresholds)},
          {"q_max", r.q_max},
          {"passed", r.passed()},
          {"predicates",
           {{"single", to_json(r.predicates.single)},
            {"mid", to_json(r.predicates.mid)},
            {"merge", to_json(r.predicates.merge)},
            {"exchange", to_json(r.predicates.exchange)}}},
          {"rows", rows}};
}

Json to_json(const OracleResult& r) {
  return {{"N", r.N},
          {"t", r.t},
          {"min_count", r.min_count},
          {"start_level", r.start_level},
          {"extremal", r.extremal},
          {"nodes_explored", r.nodes_explored},
          {"complete", r.complete}};
}

Json to_json(const UniquenessReport& r) {
  return {{"oracle", to_json(r.oracle)},
          {"ideal_family", r.ideal_family},
          {"elementary_family", r.elementary_family},
          {"extremal_ideal", r.extremal_ideal},
          {"extremal_elementary", r.extremal_elementary},
          {"outside", r.outside},
          {"non_extremal", r.non_extremal},
          {"ideal_exact", r.ideal_exact()},
          {"elementary_exact", r.elementary_exact()}};
}

Json to_json(const GapCheck& g) {
  return {{"holds", g.holds}, {"k_max", g.k_max}, {"first_violation", opt_int(g.first_violation)}};
}

Json to_json(const ExperimentRecord& r) {
  return {{"n", r.n},
          {"p", r.p},
          {"seed", r.seed},
          {"q_max", r.q_max},
          {"graph6", r.graph6},
          {"degree_sequence", r.degree_sequence},
          {"a", r.a},
          {"thresholds", to_json(r.thresholds)},
          {"shape_report", to_json(r.shape)},
          {"gap_check", to_json(r.gap)}};
}

Json to_json(const ScalingReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"trials", row.trials},
                    {"with_beta_prime", row.with_beta},
                    {"gamma_mean", row.gamma_mean},
                    {"gamma_sd", row.gamma_sd},
                    {"gamma_min", row.gamma_min},
                    {"gamma_max", row.gamma_max},
                    {"sqrt_n_log_n", row.sqrt_n_log_n}});
  return {{"p", r.p}, {"seed0", r.seed0}, {"rows", rows}};
}

}  // namespace hcover
