#include "hcover/classify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hcover {

namespace {

constexpr Count kInf = std::numeric_limits<Count>::max() / 4;
constexpr long kMaxClassSpan = 1L << 22;

void require_exact(const CoverageProfile& p) {
  if (!p.exact) throw ArgumentError("classification needs an exact profile");
  if (p.n < 1) throw ArgumentError("profile of an empty graph");
}

void require_edges(const CoverageProfile& p) {
  require_exact(p);
  if (p.t != 2) throw ArgumentError("thresholds are defined for the edge profile (t = 2)");
}

PartMultiset sorted_desc(std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  return PartMultiset{std::move(parts)};
}

// f[s] = minimum cost of parts in [1, n - 1] summing to s, with one optimal part per s.
struct SmallParts {
  std::vector<Count> f;
  std::vector<int> choice;

  SmallParts(const CoverageProfile& p, long span) : f(span + 1, kInf), choice(span + 1, 0) {
    f[0] = 0;
    for (long s = 1; s <= span; ++s)
      for (int k = 1; k < p.n && k <= s; ++k)
        if (f[s - k] < kInf && p.a[k] + f[s - k] < f[s]) {
          f[s] = p.a[k] + f[s - k];
          choice[s] = k;
        }
  }

  void unwind(long s, std::vector<int>& out) const {
    for (; s > 0; s -= choice[s]) out.push_back(choice[s]);
  }
};

void class_program(const CoverageProfile& p, int r, IdealCertificate& cert) {
  const int n = p.n;
  const auto& a = p.a;
  if (n == 1) {
    cert.certified = true;
    cert.route = CertificateRoute::ClassProgram;
    return;
  }

  // c' = min over small parts of a(k)/k must beat a(n)/n strictly.
  int kmin = 1;
  for (int k = 2; k < n; ++k)
    if (Rational(a[k], k) < Rational(a[kmin], kmin)) kmin = k;
  const Rational cmin(a[kmin], kmin);
  const Rational whole(a[n], n);
  if (!(cmin > whole)) {
    cert.class_violation = Violation{"ratio", kmin, n, a[kmin] * n, a[n] * kmin};
    std::vector<int> rival{n};
    rival.insert(rival.end(), static_cast<std::size_t>(n), kmin);
    if (r > 0) rival.push_back(r);
    cert.rival = sorted_desc(std::move(rival));
    return;
  }

  // For j > J, cost(P) >= c'(j n + r) > j a(n) + a(r), so only j <= J needs the table.
  const Rational slack = Rational(a[r]) - cmin * r;
  const Rational step = (cmin - whole) * n;
  const __int128 num = static_cast<__int128>(slack.num()) * step.den();
  const __int128 den = static_cast<__int128>(slack.den()) * step.num();
  const long bound = num <= 0 ? 0 : static_cast<long>(num / den);
  cert.residue_bound = bound;
  const long span = bound * n + r;
  if (span > kMaxClassSpan) {
    cert.note = "class program span " + std::to_string(span) + " exceeds the table limit";
    return;
  }
  const SmallParts dp(p, span);

  if (r >= 2) {
    Count best = kInf;
    int first = 0;
    for (int k = 1; k < r; ++k)
      if (dp.f[r - k] < kInf && a[k] + dp.f[r - k] < best) {
        best = a[k] + dp.f[r - k];
        first = k;
      }
    if (best <= a[r]) {
      cert.class_violation = Violation{"residue", 0, r, best, a[r]};
      std::vector<int> rival{n, first};
      dp.unwind(r - first, rival);
      cert.rival = sorted_desc(std::move(rival));
      return;
    }
  }
  for (long j = 1; j <= bound; ++j) {
    const long s = j * n + r;
    const Count ideal = j * a[n] + a[r];
    if (dp.f[s] <= ideal) {
      cert.class_violation = Violation{"residue", static_cast<int>(j), r, dp.f[s], ideal};
      std::vector<int> rival{n};
      dp.unwind(s, rival);
      cert.rival = sorted_desc(std::move(rival));
      return;
    }
  }
  cert.certified = true;
  cert.route = CertificateRoute::ClassProgram;
}

Verdict match(const std::vector<PartMultiset>& optima, bool overflow, const PartMultiset& ideal,
              const PartMultiset& elem) {
  if (overflow) return Verdict::Other;
  if (optima.size() == 1) {
    if (optima[0] == ideal && optima[0] == elem) return Verdict::BothPatterns;
    if (optima[0] == ideal) return Verdict::IdealPattern;
    if (optima[0] == elem) return Verdict::ElementaryPattern;
    return Verdict::Other;
  }
  if (optima.size() == 2 && ideal != elem) {
    const bool has_ideal = std::find(optima.begin(), optima.end(), ideal) != optima.end();
    const bool has_elem = std::find(optima.begin(), optima.end(), elem) != optima.end();
    if (has_ideal && has_elem) return Verdict::BothPatterns;
  }
  return Verdict::Other;
}

QEvidence evidence(const CoverageProfile& p, int q, int r) {
  QEvidence ev;
  ev.q = q;
  ev.target = static_cast<long>(q) * p.n + r;
  const OptimaList opt = enumerate_optima(p, ev.target);
  ev.optima = opt.optima;
  ev.overflow = opt.overflow;
  ev.verdict = match(ev.optima, ev.overflow, ideal_shape(p.n, q, r), elementary_shape(p.n, q, r));
  return ev;
}

void fail(PredicateCheck& c, int k, int l) {
  c.holds = false;
  if (c.failures.size() < kMaxReportedFailures) c.failures.emplace_back(k, l);
}

}  // namespace

GammaBeta gamma_beta(const CoverageProfile& p) {
  require_edges(p);
  const int n = p.n;
  const auto& a = p.a;
  GammaBeta gb;
  for (int k = 2; k <= n; ++k)
    if (a[k] <= k * a[1]) {
      gb.beta_prime = k;
      break;
    }
  if (!gb.beta_prime) {
    gb.gamma = n;
    return gb;
  }
  const int bp = *gb.beta_prime;
  gb.gamma = bp - 1;
  gb.beta = a[bp] == bp * a[1] ? bp + 1 : bp;
  return gb;
}

std::string Violation::str() const {
  std::ostringstream os;
  os << rule << "(" << k << "," << l << "): " << lhs << " <= " << rhs;
  return os.str();
}

IdealCertificate certify_ideal(const CoverageProfile& p, int r) {
  require_exact(p);
  const int n = p.n;
  if (r < 0 || r >= n) throw ArgumentError("remainder must lie in [0, n)");
  const auto& a = p.a;
  IdealCertificate cert;
  cert.r = r;

  auto record = [&](Violation v) {
    if (!cert.exchange_violation) cert.exchange_violation = v;
    if (cert.exchange_failures.size() < kMaxReportedFailures) cert.exchange_failures.push_back(std::move(v));
  };
  for (int k = 1; k <= n; ++k)
    for (int l = k; k + l <= n; ++l)
      if (a[k] + a[l] <= a[k + l]) record({"merge", k, l, a[k] + a[l], a[k + l]});
  // Every remainder b, not just r: a solution may carry several small parts whose
  // pairwise sums land in other classes.
  for (int k = 1; k < n; ++k)
    for (int l = std::max(k, n - k); l < n; ++l)
      if (a[k] + a[l] <= a[n] + a[k + l - n]) record({"exchange", k, l, a[k] + a[l], a[n] + a[k + l - n]});

  if (!cert.exchange_violation) {
    cert.certified = true;
    cert.route = CertificateRoute::Exchange;
    return cert;
  }
  class_program(p, r, cert);
  return cert;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IdealCertified: return "IdealCertified";
    case Verdict::IdealPattern: return "IdealPattern";
    case Verdict::ElementaryPattern: return "ElementaryPattern";
    case Verdict::BothPatterns: return "BothPatterns";
    case Verdict::Other: return "Other";
  }
  return "Other";
}

PartMultiset ideal_shape(int n, int q, int r) {
  std::vector<int> parts(static_cast<std::size_t>(q), n);
  if (r > 0) parts.push_back(r);
  return PartMultiset{parts};
}

PartMultiset elementary_shape(int n, int q, int r) {
  std::vector<int> parts(static_cast<std::size_t>(q), n);
  parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
  return PartMultiset{parts};
}

Classification classify_remainders(const CoverageProfile& p, int q_max) {
  require_exact(p);
  if (q_max < 1) throw ArgumentError("q_max must be at least 1");
  Classification c;
  c.n = p.n;
  c.t = p.t;
  c.q_max = q_max;
  if (p.t == 2) c.thresholds = gamma_beta(p);
  for (int r = 0; r < p.n; ++r) {
    RemainderVerdict rv;
    rv.r = r;
    rv.certificate = certify_ideal(p, r);
    for (int q = 1; q <= q_max; ++q) rv.per_q.push_back(evidence(p, q, r));
    rv.q_stable = std::all_of(rv.per_q.begin(), rv.per_q.end(),
                              [&](const QEvidence& e) { return e.verdict == rv.per_q.front().verdict; });
    if (rv.certificate.certified)
      rv.verdict = Verdict::IdealCertified;
    else
      rv.verdict = rv.q_stable ? rv.per_q.front().verdict : Verdict::Other;
    c.per_r.push_back(std::move(rv));
  }
  return c;
}

bool ShapeReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ShapeRow& r) { return r.pass; });
}

ShapeReport check_theorem3_shape(const CoverageProfile& p, int q_max) {
  require_edges(p);
  if (q_max < 1) throw ArgumentError("q_max must be at least 1");
  const int n = p.n;
  const auto& a = p.a;
  ShapeReport rep;
  rep.q_max = q_max;
  rep.thresholds = gamma_beta(p);
  const int gamma = rep.thresholds.gamma;
  const int beta = rep.thresholds.beta.value_or(n + 1);

  auto& pr = rep.predicates;
  pr.single.applies = pr.mid.applies = pr.merge.applies = pr.exchange.applies = true;
  for (int k = 2; k <= std::min(gamma, n); ++k)
    if (a[k] <= k * a[1]) fail(pr.single, k, 0);
  // k = n is always checked: without a(n) < n a(1) whole copies trade for single vertices.
  for (int k = std::min(beta, n); k <= n; ++k)
    if (a[k] >= k * a[1]) fail(pr.mid, k, 0);
  for (int k = 1; k <= n; ++k)
    for (int l = k; k + l <= n; ++l)
      if (k + l >= beta && a[k] + a[l] <= a[k + l]) fail(pr.merge, k, l);
  for (int k = 1; k < n; ++k)
    for (int l = std::max(k, n - k); l < n; ++l)
      if (a[k] + a[l] <= a[n] + a[k + l - n]) fail(pr.exchange, k, l);

  for (int r = 0; r < n; ++r) {
    ShapeRow row;
    row.r = r;
    if (r <= gamma)
      row.expected = "elementary";
    else if (r >= beta)
      row.expected = "ideal";
    else
      row.expected = "both";
    for (int q = 1; q <= q_max; ++q) {
      QEvidence ev = evidence(p, q, r);
      std::vector<PartMultiset> want;
      if (row.expected != "ideal") want.push_back(elementary_shape(n, q, r));
      if (row.expected != "elementary") want.push_back(ideal_shape(n, q, r));
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      if (ev.overflow || ev.optima != want) {
        row.pass = false;
        row.deviations.push_back(std::move(ev));
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace hcover
