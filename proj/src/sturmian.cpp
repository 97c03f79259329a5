#include "abelsq/sturmian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace abelsq {

namespace {

using QI = QuadraticIrrational;

const QI kZero = QI::integer(0);
const QI kOne = QI::integer(1);

void require_angle(const QI& angle) {
  if (angle.is_rational()) throw std::invalid_argument("angle must be irrational");
  if (!(angle > kZero && angle < kOne)) throw std::invalid_argument("angle must lie in (0, 1)");
}

// x + angle reduced mod 1, for x in [0, 1) and angle in (0, 1).
QI rotate(const QI& x, const QI& angle) {
  QI y = x + angle;
  if (y >= kOne) y = y - kOne;
  return y;
}

// {-i*angle} for i = 1..n.
std::vector<QI> backward_orbit(const QI& angle, std::size_t n) {
  std::vector<QI> out;
  out.reserve(n);
  QI y = kZero;
  for (std::size_t i = 1; i <= n; ++i) {
    y = y - angle;
    if (y < kZero) y = y + kOne;
    out.push_back(y);
  }
  return out;
}

}  // namespace

void SturmianSpec::validate() const {
  require_angle(angle);
  if (start < kZero || start >= kOne) throw std::invalid_argument("initial point must lie in [0, 1)");
}

const Alphabet& sturmian_alphabet() {
  static const Alphabet ab = Alphabet::from_symbols("ab");
  return ab;
}

Letter rotation_letter(const QI& x, const QI& angle, Convention convention) {
  constexpr Letter a = 0;
  constexpr Letter b = 1;
  const QI cut = kOne - angle;
  if (convention == Convention::left) return x < cut ? b : a;
  return (x > kZero && x <= cut) ? b : a;
}

Word sturmian_prefix(const SturmianSpec& spec, std::size_t length) {
  spec.validate();
  std::vector<Letter> letters;
  letters.reserve(length);
  QI x = spec.start;
  for (std::size_t j = 0; j < length; ++j) {
    letters.push_back(rotation_letter(x, spec.angle, spec.convention));
    x = rotate(x, spec.angle);
  }
  return Word(sturmian_alphabet(), std::move(letters));
}

IntervalPartition interval_partition(const QI& angle, std::size_t n) {
  require_angle(angle);
  if (n == 0) throw std::invalid_argument("partition needs n >= 1");
  IntervalPartition out;
  out.n = n;
  auto orbit = backward_orbit(angle, n);
  out.threshold = orbit.back();
  std::sort(orbit.begin(), orbit.end());
  out.points.reserve(n + 2);
  out.points.push_back(kZero);
  out.points.insert(out.points.end(), orbit.begin(), orbit.end());
  out.points.push_back(kOne);

  const QI half = QI::rational(1, 2);
  for (std::size_t k = 0; k + 1 < out.points.size(); ++k) {
    PartitionInterval iv;
    iv.lower = out.points[k];
    iv.upper = out.points[k + 1];
    QI x = (iv.lower + iv.upper) * half;
    std::vector<Letter> letters;
    letters.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      letters.push_back(rotation_letter(x, angle, Convention::left));
      x = rotate(x, angle);
    }
    iv.factor = Word(sturmian_alphabet(), std::move(letters));
    iv.heavy = iv.lower >= out.threshold;
    out.intervals.push_back(std::move(iv));
  }
  return out;
}

std::vector<ParikhVector> classify_parikh(const IntervalPartition& partition, const QI& angle) {
  const QI n_angle = QI::integer(static_cast<std::int64_t>(partition.n)) * angle;
  const auto light = static_cast<std::uint32_t>(floor(n_angle));
  const auto heavy = static_cast<std::uint32_t>(ceil(n_angle));
  const auto n = static_cast<std::uint32_t>(partition.n);
  std::vector<ParikhVector> out;
  for (const auto& iv : partition.intervals) {
    const std::uint32_t a = iv.heavy ? heavy : light;
    out.push_back(ParikhVector{{a, n - a}});
  }
  return out;
}

std::vector<ParikhVector> classify_parikh(const QI& angle, std::size_t n) {
  return classify_parikh(interval_partition(angle, n), angle);
}

std::vector<std::uint64_t> asf_arith_table(const QI& angle, std::size_t max_n) {
  require_angle(angle);
  const auto orbit = backward_orbit(angle, max_n);
  std::vector<std::uint64_t> out(max_n / 2 + 1, 0);
  for (std::size_t n = 2; n <= max_n; n += 2) {
    const QI& threshold = orbit[n - 1];
    const bool even_floor = floor(QI::integer(static_cast<std::int64_t>(n)) * angle) % 2 == 0;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += even_floor ? orbit[i] <= threshold : orbit[i] >= threshold;
    out[n / 2] = count;
  }
  return out;
}

std::uint64_t asf_arith(const QI& angle, std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("asf_arith is defined for even n");
  return asf_arith_table(angle, n)[n / 2];
}

}  // namespace abelsq
