#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelsq/quadratic.hpp"

namespace abelsq {

/// Finite list of exact points in [0, 1).
struct PointSequence {
  std::vector<QuadraticIrrational> points;
  std::string origin;

  std::size_t size() const noexcept { return points.size(); }
  /// Throws std::invalid_argument if some point lies outside [0, 1).
  void validate() const;
};

/// ({n*alpha}) for n = 1..N.
PointSequence nalpha_points(const QuadraticIrrational& alpha, std::size_t N);

/// Number of points in [gamma, delta). Requires 0 <= gamma < delta <= 1,
/// otherwise std::invalid_argument.
std::size_t count_in_interval(const PointSequence& seq, const QuadraticIrrational& gamma,
                              const QuadraticIrrational& delta);

/// Sub-interval of [0, 1] with explicit end types. A closed upper end stands
/// for the limit of [lower, upper + eps), an open lower end for (lower + eps).
struct Interval {
  QuadraticIrrational lower;
  QuadraticIrrational upper;
  bool lower_closed = true;
  bool upper_closed = false;
  std::string str(int precision = 6) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct DiscrepancyReport {
  std::size_t N = 0;
  QuadraticIrrational D;
  /// An interval whose count deviation equals D.
  Interval witness;
  /// Right-hand side of the log bound, when an angle was supplied.
  std::optional<long double> bound;
  std::int64_t K = 0;
  bool check_kn2 = false;
};

/// Exact D_N from the sorted points:
///   D = 1/N + max_i (i/N - x_i) - min_j (j/N - x_j),
/// dividing by the number of points. Throws std::invalid_argument if empty.
DiscrepancyReport discrepancy(const PointSequence& seq);

/// Scans every pair of candidate endpoints (0, 1 and the points) with all
/// open/closed combinations. Quadratic; meant as an oracle for small N.
QuadraticIrrational discrepancy_bruteforce(const PointSequence& seq);

/// 3 + (1/log(phi) + K/log(K+1)) * log(N), natural logarithms.
/// Throws std::invalid_argument unless N >= 1 and K >= 1.
long double kn2_bound(std::size_t N, std::int64_t K);

/// Discrepancy of ({n*alpha}), n = 1..N, together with the bound for the
/// partial-quotient bound K of alpha. Throws std::invalid_argument when alpha
/// is rational or not in (0, 1).
DiscrepancyReport check_kn2(const QuadraticIrrational& alpha, std::size_t N);

struct CertificateReport {
  std::size_t n = 0;
  std::uint64_t count_A = 0;
  std::uint64_t count_B = 0;
  std::uint64_t product = 0;
  std::uint64_t asf_sum = 0;
  bool holds() const noexcept { return product <= asf_sum; }
};

/// count_A = #{1 <= i <= n/2 : {i*alpha/2} in [1/4, 1/2)},
/// count_B = #{n/2 <= m <= n : {m*alpha/2} <= 1/4},
/// asf_sum = sum of the arithmetic ASF counts for m <= n.
/// Throws std::invalid_argument for odd n or an unsuitable alpha.
CertificateReport theorem4_certificate(const QuadraticIrrational& alpha, std::size_t n);

/// Certificates for every even n in [2, max_n], sharing one pass.
std::vector<CertificateReport> theorem4_certificates(const QuadraticIrrational& alpha, std::size_t max_n);

}  // namespace abelsq
