#include <set>
#include <stdexcept>
#include <vector>

#include "abelsq/abelian.hpp"

namespace abelsq::reference {

namespace {

template <typename Visit>
void for_each_distinct_square(const Word& w, std::size_t max_length, Visit&& visit) {
  if (max_length > w.size()) throw std::out_of_range("max_length exceeds word length");
  const auto letters = w.letters();
  const std::size_t sigma = w.alphabet().size();
  for (std::size_t m = 2; m <= max_length; m += 2) {
    std::set<std::vector<Letter>> seen;
    for (std::size_t i = 0; i + m <= w.size(); ++i) {
      std::vector<Letter> f(letters.begin() + static_cast<std::ptrdiff_t>(i),
                            letters.begin() + static_cast<std::ptrdiff_t>(i + m));
      if (!seen.insert(f).second) continue;
      std::vector<std::uint32_t> left(sigma, 0);
      std::vector<std::uint32_t> right(sigma, 0);
      for (std::size_t j = 0; j < m / 2; ++j) ++left[f[j]];
      for (std::size_t j = m / 2; j < m; ++j) ++right[f[j]];
      if (left == right) {
        for (auto& c : left) c *= 2;
        visit(m, ParikhVector{std::move(left)});
      }
    }
  }
}

}  // namespace

ASFProfile asf_profile(const Word& w, std::size_t max_length) {
  ASFProfile out;
  out.max_length = max_length - max_length % 2;
  out.by_half.assign(out.max_length / 2 + 1, 0);
  for_each_distinct_square(w, max_length, [&](std::size_t m, const ParikhVector&) {
    ++out.by_half[m / 2];
    ++out.total;
  });
  return out;
}

InequivalentProfile inequivalent_profile(const Word& w, std::size_t max_length) {
  InequivalentProfile out;
  out.max_length = max_length - max_length % 2;
  out.by_half.assign(out.max_length / 2 + 1, 0);
  std::vector<std::set<ParikhVector>> per(out.max_length / 2 + 1);
  std::set<ParikhVector> all;
  for_each_distinct_square(w, max_length, [&](std::size_t m, const ParikhVector& pv) {
    per[m / 2].insert(pv);
    all.insert(pv);
  });
  for (std::size_t k = 0; k < per.size(); ++k) out.by_half[k] = per[k].size();
  out.total = all.size();
  return out;
}

}  // namespace abelsq::reference
