#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcover/ip.hpp"
#include "hcover/profile.hpp"

namespace hcover {

// beta' = min k in [2, n] with a(k) <= k a(1); gamma = beta' - 1; beta = beta' + 1
// when a(beta') = beta' a(1), else beta'. Without beta', gamma = n and beta is absent.
struct GammaBeta {
  int gamma = 0;
  std::optional<int> beta_prime;
  std::optional<int> beta;
};

GammaBeta gamma_beta(const CoverageProfile& p);

// A failed strict inequality lhs > rhs.
struct Violation {
  std::string rule;  // "merge", "exchange", "ratio", "residue"
  int k = 0;
  int l = 0;
  Count lhs = 0;
  Count rhs = 0;
  std::string str() const;
};

enum class CertificateRoute { None, Exchange, ClassProgram };

// Certificate that the IP optimum for N = q n + r is exactly {n^q, r} for every q >= 1.
//  Exchange: a(k) + a(l) > a(k + l) for k + l <= n, and
//            a(k) + a(l) > a(n) + a(k + l - n) for k, l < n <= k + l.
//  ClassProgram (fallback, exact for the class): min_{k<n} a(k)/k > a(n)/n and,
//            for j up to a computed bound, every multiset of parts below n summing
//            to j n + r other than {r} costs more than j a(n) + a(r).
struct IdealCertificate {
  int r = 0;
  bool certified = false;
  CertificateRoute route = CertificateRoute::None;
  std::optional<Violation> exchange_violation;  // first in (merge, exchange) x (k, l) order
  std::vector<Violation> exchange_failures;     // at most kMaxReportedFailures
  std::optional<Violation> class_violation;
  std::string note;
  std::optional<PartMultiset> rival;  // tying or cheaper solution at N = (j + 1) n + r
  long residue_bound = 0;             // largest j examined by the class program
};

IdealCertificate certify_ideal(const CoverageProfile& p, int r);

enum class Verdict { IdealCertified, IdealPattern, ElementaryPattern, BothPatterns, Other };

std::string to_string(Verdict v);

struct QEvidence {
  int q = 0;
  long target = 0;
  Verdict verdict = Verdict::Other;
  std::vector<PartMultiset> optima;
  bool overflow = false;
};

struct RemainderVerdict {
  int r = 0;
  Verdict verdict = Verdict::Other;
  bool q_stable = false;
  std::vector<QEvidence> per_q;
  IdealCertificate certificate;
};

struct Classification {
  int n = 0;
  int t = 0;
  int q_max = 0;
  std::optional<GammaBeta> thresholds;  // t = 2 only
  std::vector<RemainderVerdict> per_r;
};

inline constexpr int kDefaultQMax = 4;

// {n^q, r} and {n^q, 1^r}; they coincide for r <= 1.
PartMultiset ideal_shape(int n, int q, int r);
PartMultiset elementary_shape(int n, int q, int r);

Classification classify_remainders(const CoverageProfile& p, int q_max = kDefaultQMax);

struct ShapePredicates {
  PredicateCheck single;    // a(k) > k a(1),            2 <= k <= gamma
  PredicateCheck mid;       // a(k) < k a(1),            min(beta, n) <= k <= n
  PredicateCheck merge;     // a(k) + a(l) > a(k + l),   beta <= k + l <= n
  PredicateCheck exchange;  // a(k) + a(l) > a(n) + a(k + l - n), k, l < n <= k + l
  bool all_hold() const { return single.holds && mid.holds && merge.holds && exchange.holds; }
};

struct ShapeRow {
  int r = 0;
  std::string expected;  // "elementary", "ideal" or "both"
  bool pass = true;
  std::vector<QEvidence> deviations;
};

struct ShapeReport {
  GammaBeta thresholds;
  ShapePredicates predicates;
  int q_max = 0;
  std::vector<ShapeRow> rows;
  bool passed() const;
};

// Compares IP optima for q = 1..q_max with the elementary regime r <= gamma,
// the ideal regime r >= beta and the doubly optimal r in between.
ShapeReport check_theorem3_shape(const CoverageProfile& p, int q_max = 2);

}  // namespace hcover
