#pragma once

#include "json.hpp"

#include "hcover/classify.hpp"
#include "hcover/ip.hpp"
#include "hcover/oracle.hpp"
#include "hcover/profile.hpp"
#include "hcover/rand_lab.hpp"

namespace hcover {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "hcover-report/1";

using Json = nlohmann::json;

Json to_json(const VertexSet& s);
Json to_json(const CoverageProfile& p);
Json to_json(const PredicateReport& r);
Json to_json(const PredicateCheck& c);
Json to_json(const PartMultiset& m);
Json to_json(const IpSolution& s);
Json to_json(const CovBounds& b);
Json to_json(const GammaBeta& gb);
Json to_json(const Violation& v);
Json to_json(const IdealCertificate& c);
Json to_json(const QEvidence& e);
Json to_json(const Classification& c);
Json to_json(const ShapeReport& r);
Json to_json(const OracleResult& r);
Json to_json(const UniquenessReport& r);
Json to_json(const GapCheck& g);
Json to_json(const ExperimentRecord& r);
Json to_json(const ScalingReport& r);

}  // namespace hcover
