#include "abelsq/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "abelsq/continued_fraction.hpp"
#include "abelsq/sturmian.hpp"

namespace abelsq {

namespace {

using QI = QuadraticIrrational;

const QI kZero = QI::integer(0);
const QI kOne = QI::integer(1);

QI abs_value(const QI& x) { return x.sign() < 0 ? -x : x; }

std::vector<QI> sorted_points(const PointSequence& seq) {
  std::vector<QI> xs = seq.points;
  std::sort(xs.begin(), xs.end());
  return xs;
}

void require_unit_angle(const QI& alpha) {
  if (alpha.is_rational()) throw std::invalid_argument("angle must be irrational");
  if (!(alpha > kZero && alpha < kOne)) throw std::invalid_argument("angle must lie in (0, 1)");
}

}  // namespace

void PointSequence::validate() const {
  for (const auto& x : points) {
    if (x < kZero || x >= kOne) throw std::invalid_argument("point " + x.str() + " is outside [0, 1)");
  }
}

PointSequence nalpha_points(const QI& alpha, std::size_t N) {
  PointSequence seq;
  seq.origin = "({n*alpha}), n=1.." + std::to_string(N);
  seq.points.reserve(N);
  const QI step = frac(alpha);
  QI x = kZero;
  for (std::size_t n = 1; n <= N; ++n) {
    x = x + step;
    if (x >= kOne) x = x - kOne;
    seq.points.push_back(x);
  }
  return seq;
}

std::size_t count_in_interval(const PointSequence& seq, const QI& gamma, const QI& delta) {
  if (gamma < kZero || !(gamma < delta) || delta > kOne) {
    throw std::invalid_argument("interval must satisfy 0 <= gamma < delta <= 1");
  }
  return static_cast<std::size_t>(
      std::count_if(seq.points.begin(), seq.points.end(), [&](const QI& x) { return x >= gamma && x < delta; }));
}

std::string Interval::str(int precision) const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << (lower_closed ? '[' : '(') << lower.to_long_double() << ", "
     << upper.to_long_double() << (upper_closed ? ']' : ')');
  return os.str();
}

DiscrepancyReport discrepancy(const PointSequence& seq) {
  if (seq.points.empty()) throw std::invalid_argument("discrepancy needs at least one point");
  seq.validate();
  const auto xs = sorted_points(seq);
  const auto N = static_cast<std::int64_t>(xs.size());

  // Ties: the latest index for the max, the earliest for the min, so that
  // duplicate points land inside a closed witness.
  std::size_t imax = 0, jmin = 0;
  QI vmax, vmin;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const QI v = QI::rational(static_cast<std::int64_t>(k) + 1, N) - xs[k];
    if (k == 0 || v >= vmax) {
      vmax = v;
      imax = k;
    }
    if (k == 0 || v < vmin) {
      vmin = v;
      jmin = k;
    }
  }

  DiscrepancyReport report;
  report.N = xs.size();
  report.D = QI::rational(1, N) + vmax - vmin;
  if (jmin <= imax) {
    report.witness = Interval{xs[jmin], xs[imax], true, true};
  } else {
    report.witness = Interval{xs[imax], xs[jmin], false, false};
  }
  return report;
}

QI discrepancy_bruteforce(const PointSequence& seq) {
  if (seq.points.empty()) throw std::invalid_argument("discrepancy needs at least one point");
  seq.validate();
  const auto xs = sorted_points(seq);
  const auto N = static_cast<std::int64_t>(xs.size());

  std::vector<QI> ends{kZero};
  for (const auto& x : xs) {
    if (!(x == ends.back())) ends.push_back(x);
  }
  ends.push_back(kOne);

  auto lb = [&](const QI& v) { return std::lower_bound(xs.begin(), xs.end(), v) - xs.begin(); };
  auto ub = [&](const QI& v) { return std::upper_bound(xs.begin(), xs.end(), v) - xs.begin(); };

  QI best = kZero;
  auto consider = [&](std::ptrdiff_t count, const QI& length) {
    const QI dev = abs_value(QI::rational(count, N) - length);
    if (dev > best) best = dev;
  };
  for (std::size_t s = 0; s < ends.size(); ++s) {
    const QI& a = ends[s];
    for (std::size_t t = s; t < ends.size(); ++t) {
      const QI& b = ends[t];
      const QI length = b - a;
      consider(ub(b) - lb(a), length);  // [a, b]
      if (s == t) continue;
      consider(lb(b) - lb(a), length);  // [a, b)
      consider(ub(b) - ub(a), length);  // (a, b]
      consider(lb(b) - ub(a), length);  // (a, b)
    }
  }
  return best;
}

long double kn2_bound(std::size_t N, std::int64_t K) {
  if (N < 1) throw std::invalid_argument("bound needs N >= 1");
  if (K < 1) throw std::invalid_argument("bound needs a partial-quotient bound K >= 1");
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  const long double k = static_cast<long double>(K);
  return 3.0L + (1.0L / std::log(phi) + k / std::log(k + 1.0L)) * std::log(static_cast<long double>(N));
}

DiscrepancyReport check_kn2(const QI& alpha, std::size_t N) {
  require_unit_angle(alpha);
  const auto cf = cf_expand(alpha);
  const std::int64_t K = cf.bound();
  DiscrepancyReport report = discrepancy(nalpha_points(alpha, N));
  report.K = K;
  report.bound = kn2_bound(N, K);
  const long double scaled = static_cast<long double>(N) * report.D.to_long_double();
  report.check_kn2 = scaled <= *report.bound;
  return report;
}

std::vector<CertificateReport> theorem4_certificates(const QI& alpha, std::size_t max_n) {
  require_unit_angle(alpha);
  const QI half_alpha = alpha * QI::rational(1, 2);
  const QI quarter = QI::rational(1, 4);
  const QI half = QI::rational(1, 2);

  // in_a[i], in_b[i] for i = 0..max_n, from {i*alpha/2}.
  std::vector<std::uint64_t> in_a(max_n + 1, 0), in_b(max_n + 1, 0);
  QI y = kZero;
  for (std::size_t i = 1; i <= max_n; ++i) {
    y = y + half_alpha;
    if (y >= kOne) y = y - kOne;
    in_a[i] = (y >= quarter && y < half) ? 1 : 0;
    in_b[i] = y <= quarter ? 1 : 0;
  }
  std::vector<std::uint64_t> pre_a(max_n + 2, 0), pre_b(max_n + 2, 0);
  for (std::size_t i = 0; i <= max_n; ++i) {
    pre_a[i + 1] = pre_a[i] + in_a[i];
    pre_b[i + 1] = pre_b[i] + in_b[i];
  }

  const auto table = asf_arith_table(alpha, max_n);
  std::vector<CertificateReport> out;
  std::uint64_t sum = 0;
  for (std::size_t n = 2; n <= max_n; n += 2) {
    sum += table[n / 2];
    CertificateReport c;
    c.n = n;
    c.count_A = pre_a[n / 2 + 1] - pre_a[1];
    c.count_B = pre_b[n + 1] - pre_b[n / 2];
    c.product = c.count_A * c.count_B;
    c.asf_sum = sum;
    out.push_back(c);
  }
  return out;
}

CertificateReport theorem4_certificate(const QI& alpha, std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("certificate needs an even n");
  if (n == 0) {
    require_unit_angle(alpha);
    return CertificateReport{0, 0, 1, 0, 0};  // m = 0 gives {0} <= 1/4
  }
  return theorem4_certificates(alpha, n).back();
}

}  // namespace abelsq
